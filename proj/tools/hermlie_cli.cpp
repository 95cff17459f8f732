#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermlie/branching.hpp"
#include "hermlie/checks.hpp"
#include "hermlie/e6data.hpp"
#include "hermlie/errors.hpp"
#include "hermlie/ktypes.hpp"
#include "hermlie/orbits.hpp"
#include "hermlie/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace hermlie;

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& j) const {
        std::string text = render(j);
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::filesystem::path p(path);
        if (const char* dir = std::getenv("HERMLIE_OUT_DIR"); dir && p.is_relative())
            p = std::filesystem::path(dir) / p;
        std::ofstream out(p);
        if (!out) throw std::runtime_error("cannot open output path " + p.string());
        out << text;
    }

    std::string render(const json& j) const {
        if (format == "json") return j.dump(2) + "\n";
        if (format == "markdown") return render_markdown(j);
        if (format == "csv") return render_csv(j);
        throw CLI::ValidationError("format", "unknown format " + format);
    }

    static std::string render_markdown(const json& j) {
        std::string s;
        if (j.contains("checks")) {
            s += "| id | name | pass | detail |\n|---|---|---|---|\n";
            for (const auto& c : j["checks"])
                s += "| " + c["id"].get<std::string>() + " | " + c["name"].get<std::string>() +
                     " | " + (c["pass"].get<bool>() ? "pass" : "FAIL") + " | " +
                     c["detail"].get<std::string>() + " |\n";
            s += "\noverall: " + std::string(j["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
            return s;
        }
        return "```json\n" + j.dump(2) + "\n```\n";
    }

    static std::string render_csv(const json& j) {
        std::string s;
        auto quote = [](std::string v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] == '"') v.insert(i++, 1, '"');
            return '"' + v + '"';
        };
        if (j.contains("checks")) {
            s += "id,name,pass,detail\n";
            for (const auto& c : j["checks"])
                s += c["id"].get<std::string>() + "," + c["name"].get<std::string>() + "," +
                     (c["pass"].get<bool>() ? "pass" : "fail") + "," +
                     quote(c["detail"].get<std::string>()) + "\n";
            return s;
        }
        s += "key,value\n";
        for (const auto& [key, value] : j.flatten().items())
            s += quote(key) + "," + quote(value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        return s;
    }
};

GroupDatum datum_from(const std::string& label, const std::vector<int>& params) {
    return group_datum(label, params);
}

json datum_json(const GroupDatum& d) {
    json j{{"case", d.name()}, {"a1", d.a1}, {"d1", d.d1}, {"rho", d.rho}};
    if (d.is_su())
        j["b1"] = {d.b1_su.first, d.b1_su.second};
    else
        j["b1"] = d.b1;
    if (d.nu0) j["nu0"] = *d.nu0;
    return j;
}

int emit_checks(const Output& out, const std::vector<checks::CheckResult>& results) {
    json j = checks::to_json(results);
    out.emit(j);
    return j["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational verification for Heisenberg-parabolic representation data"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a TOML config file");

    Output out;
    app.add_option("--format", out.format, "json | markdown | csv")->capture_default_str();
    app.add_option("-o,--output", out.path,
                   "output path (relative paths honor HERMLIE_OUT_DIR)");

    int exit_code = 0;

    auto* table1 = app.add_subcommand("table1", "structure-constant sweep and identities");
    table1->callback([&] {
        auto res = checks::table1_consistency();
        json j = checks::to_json({res});
        json rows = json::array();
        for (const auto& d : table1_sweep()) rows.push_back(datum_json(d));
        j["table"] = rows;
        out.emit(j);
        exit_code = res.pass ? 0 : 1;
    });

    auto* gk = app.add_subcommand("gkdim", "growth exponent of the filtration dimensions");
    static std::string gk_case;
    static std::vector<int> gk_params;
    static int gk_fit = 0;
    gk->add_option("case", gk_case, "su | so2n | sostar | e6 | e7")->required();
    gk->add_option("params", gk_params, "case parameters (p q | n)");
    gk->add_option("--fit-range", gk_fit, "override the fit range");
    gk->callback([&] {
        GroupDatum d = datum_from(gk_case, gk_params);
        int g = ktypes::gk_dimension(d, gk_fit);
        json j = datum_json(d);
        j["gk_dimension"] = g;
        j["orbit_dimension"] = 2 * g;
        out.emit(j);
    });

    auto* orb = app.add_subcommand("orbits", "orbit poset, next-to-minimal list, variety match");
    static std::string orb_type;
    static long orb_N = 0;
    orb->add_option("type", orb_type, "sl | so | sp")->required();
    orb->add_option("N", orb_N, "ambient size")->required();
    orb->callback([&] {
        orbits::Ambient amb = orb_type == "sl"   ? orbits::Ambient::sl
                              : orb_type == "so" ? orbits::Ambient::so
                              : orb_type == "sp" ? orbits::Ambient::sp
                                                 : throw CLI::ValidationError("type", orb_type);
        json j = orbits::poset_json(amb, orb_N);
        json ntm = json::array();
        for (const auto& r : orbits::next_to_minimal_orbits(amb, orb_N)) {
            json e{{"label", r.label}, {"dim", r.dim}};
            if (r.very_even_pair) e["very_even_pair"] = true;
            ntm.push_back(e);
        }
        j["next_to_minimal"] = ntm;
        // associated-variety matches for the data with this complexification
        json matches = json::array();
        auto try_match = [&](const GroupDatum& d) {
            json m{{"case", d.name()}};
            try {
                auto rec = orbits::match_associated_variety(d);
                m["orbit"] = rec.label;
                m["dim"] = rec.dim;
            } catch (const std::exception& e) {
                m["error"] = e.what();
                exit_code = 1;
            }
            matches.push_back(m);
        };
        if (amb == orbits::Ambient::so) {
            if (orb_N - 2 >= 5) try_match(datum_so2n(static_cast<int>(orb_N - 2)));
            if (orb_N % 2 == 0 && orb_N >= 8) try_match(datum_sostar(static_cast<int>(orb_N / 2)));
        } else if (amb == orbits::Ambient::sl && orb_N >= 4 && orb_N % 2 == 0) {
            try_match(datum_su(static_cast<int>(orb_N / 2), static_cast<int>(orb_N / 2)));
        }
        j["associated_variety_matches"] = matches;
        out.emit(j);
    });

    auto* spec = app.add_subcommand("spectrum", "intertwining eigenvalue analysis");
    static std::string sp_case;
    static std::vector<int> sp_params;
    static int sp_kmax = 12;
    static std::string sp_step = "1/4";
    spec->add_option("case", sp_case, "so2n | sostar | e6 | e7")->required();
    spec->add_option("params", sp_params, "case parameters");
    spec->add_option("--kmax", sp_kmax, "largest Fock-layer index")->capture_default_str();
    spec->add_option("--step", sp_step, "grid step, exact rational")->capture_default_str();
    spec->callback([&] {
        GroupDatum d = datum_from(sp_case, sp_params);
        auto rep = spectrum::complementary_window(d, sp_kmax, parse_rat(sp_step));
        json j = rep.to_json();
        auto fe = spectrum::fourier_exponents(d, Rat(*d.nu0));
        j["exponents"] = {{"plancherel", fe.plancherel},
                          {"form_at_nu0", rat_string(fe.form)},
                          {"ntm", fe.ntm ? rat_string(*fe.ntm) : "absent"},
                          {"h_action_at_nu0", rat_string(fe.h_action)}};
        out.emit(j);
        if (!rep.positive_inside || rep.max_float_mismatch > 1e-10) exit_code = 1;
    });

    auto* bso = app.add_subcommand("branch-so2n", "branching of the endpoint representation");
    static int bso_n = 6, bso_kmax = 10;
    bso->add_option("n", bso_n, "so(2,n)")->required();
    bso->add_option("kmax", bso_kmax, "truncation")->required();
    bso->callback([&] {
        json j = branching::so2n_ntm_branching(bso_n, bso_kmax).to_json();
        j["regrouping_equivalent"] = branching::regrouping_equivalence(bso_n, bso_kmax);
        out.emit(j);
        if (!j["regrouping_equivalent"].get<bool>()) exit_code = 1;
    });

    auto* be6 = app.add_subcommand("branch-e6", "branching of the e6 endpoint representation");
    static int be6_kmax = 6;
    be6->add_option("kmax", be6_kmax, "truncation")->required();
    be6->callback([&] {
        json j = branching::e6_ntm_branching(be6_kmax).to_json();
        json excl = json::array();
        for (int k = 1; k <= be6_kmax; ++k) {
            auto rep = branching::e6_discrete_exclusion(k);
            json e{{"k", rep.k},
                   {"consistent", rep.consistent_count},
                   {"closed_form", rep.matches_closed_form},
                   {"no_discrete_spectrum", rep.final_pair_inverted && !rep.dominant_found}};
            excl.push_back(e);
            if (rep.consistent_count != 1 || rep.dominant_found) exit_code = 1;
        }
        j["discrete_exclusion"] = excl;
        out.emit(j);
    });

    auto* ve6 = app.add_subcommand("verify-e6-roots", "exact e6 root-data identities");
    ve6->callback([&] {
        json arr = json::array();
        bool all = true;
        for (const auto& idc : verify_e6_identities()) {
            arr.push_back({{"name", idc.name}, {"pass", idc.pass}, {"detail", idc.detail}});
            all = all && idc.pass;
        }
        out.emit(json{{"identities", arr}, {"pass", all}});
        exit_code = all ? 0 : 1;
    });

    auto* all = app.add_subcommand("all", "full verification suite");
    static unsigned all_seed = 20240801;
    static int all_cases = 200;
    all->add_option("--seed", all_seed, "property-suite seed")->capture_default_str();
    all->add_option("--cases", all_cases, "random cases per property")->capture_default_str();
    all->callback([&] { exit_code = emit_checks(out, checks::run_all(all_seed, all_cases)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
