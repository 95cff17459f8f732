#include "hermlie/branching.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hermlie/e6data.hpp"
#include "hermlie/errors.hpp"
#include "hermlie/linalg.hpp"

namespace hermlie::branching {

namespace {

nlohmann::json rat_array(const std::vector<Rat>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(rat_string(x));
    return a;
}

}  // namespace

nlohmann::json label_json(const RepLabel& r) {
    nlohmann::json j;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Sl2Principal>) {
                j["type"] = "sl2_principal";
                j["eps"] = x.eps;
                j["mu"] = "mu";
            } else if constexpr (std::is_same_v<T, Sl2Discrete>) {
                j["type"] = "sl2_discrete";
                j["ell"] = x.ell;
            } else if constexpr (std::is_same_v<T, Sl2DiscreteSym>) {
                j["type"] = "sl2_discrete_symbolic";
                j["sign"] = x.sign;
                j["symbol"] = x.sym;
                j["min"] = x.min;
            } else if constexpr (std::is_same_v<T, SigmaB>) {
                j["type"] = "sigma_B";
                j["sign"] = x.sign;
            } else if constexpr (std::is_same_v<T, SigmaBSum>) {
                j["type"] = "sigma_B_sum";
            } else if constexpr (std::is_same_v<T, SoHarmonic>) {
                j["type"] = "so_harmonic";
                j["m"] = x.m;
                j["k"] = x.k;
            } else if constexpr (std::is_same_v<T, UnHighestWeight>) {
                j["type"] = "u_highest_weight";
                j["n"] = x.n;
                j["w"] = rat_array(x.w);
            } else if constexpr (std::is_same_v<T, Su51Principal>) {
                j["type"] = "su51_principal";
                j["nu"] = rat_array({x.nu.begin(), x.nu.end()});
                j["mu"] = x.mu_sign > 0 ? "mu" : "-mu";
            } else if constexpr (std::is_same_v<T, HwModule>) {
                j["type"] = x.lowest ? "lowest_weight_module" : "highest_weight_module";
                j["algebra"] = x.algebra;
                j["w"] = rat_array(x.w.coords());
            }
        },
        r);
    return j;
}

namespace {

std::string word_key(const TensorWord& w) {
    std::string s;
    for (const auto& f : w.factors) s += label_json(f).dump() + "|";
    return s;
}

}  // namespace

void Decomposition::canonicalize() {
    // merge equal discrete words
    std::map<std::string, std::pair<TensorWord, long>> merged;
    for (auto& s : discrete) {
        auto key = word_key(s.word);
        auto it = merged.find(key);
        if (it == merged.end())
            merged.emplace(key, std::make_pair(s.word, s.mult));
        else
            it->second.second += s.mult;
    }
    discrete.clear();
    for (auto& [key, val] : merged) discrete.push_back({val.first, val.second});
    std::sort(continuous.begin(), continuous.end(),
              [](const ContinuousFamily& a, const ContinuousFamily& b) {
                  return std::tuple(a.domain, word_key(a.word), a.undetermined) <
                         std::tuple(b.domain, word_key(b.word), b.undetermined);
              });
}

nlohmann::json Decomposition::to_json() const {
    nlohmann::json j;
    j["discrete"] = nlohmann::json::array();
    j["continuous"] = nlohmann::json::array();
    for (const auto& s : discrete) {
        nlohmann::json e;
        e["word"] = nlohmann::json::array();
        for (const auto& f : s.word.factors) e["word"].push_back(label_json(f));
        e["mult"] = s.mult;
        j["discrete"].push_back(e);
    }
    for (const auto& c : continuous) {
        nlohmann::json e;
        e["domain"] = c.domain;
        e["variable"] = c.variable;
        e["word"] = nlohmann::json::array();
        for (const auto& f : c.word.factors) e["word"].push_back(label_json(f));
        if (c.undetermined) e["undetermined"] = true;
        j["continuous"].push_back(e);
    }
    return j;
}

bool Decomposition::operator==(const Decomposition& o) const {
    Decomposition a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    return a.to_json() == b.to_json();
}

BigInt harmonic_dim(int m, int k) {
    if (m < 1 || k < 0) throw PreconditionError("harmonic_dim: need m >= 1, k >= 0");
    return binomial(k + m - 1, m - 1) - binomial(k + m - 3, m - 1);
}

Decomposition metaplectic_restriction(const GroupDatum& d, int sign, int kmax) {
    if (kmax < 0) throw PreconditionError("metaplectic_restriction: k-max must be >= 0");
    if (sign != 1 && sign != -1) throw PreconditionError("sign must be +1 or -1");
    Decomposition dec;
    if (d.cs == Case::so2n) {
        for (int k = 0; k <= kmax; ++k) {
            int ell = -(k + d.n - 2);
            if (sign < 0) ell = -ell;  // contragredient flips the weight direction
            dec.discrete.push_back({TensorWord{{Sl2Discrete{ell}, SoHarmonic{d.n - 2, k}}}, 1});
        }
    } else if (d.cs == Case::e6) {
        const auto& e6 = e6_structure();
        for (int k = 0; k <= kmax; ++k) {
            Weight w = Rat(-k) * e6.delta0 - Rat(3) * e6.lambda[4];
            if (sign < 0)
                dec.discrete.push_back({TensorWord{{HwModule{"su(5,1)", true, -w}}}, 1});
            else
                dec.discrete.push_back({TensorWord{{HwModule{"su(5,1)", false, w}}}, 1});
        }
    } else {
        throw UnsupportedCase("metaplectic_restriction: supported for so(2,n) and e6 only");
    }
    dec.canonicalize();
    return dec;
}

Decomposition sl2_tensor_opposite(int k1, int k2) {
    // one lowest-weight (negative), one highest-weight (positive) parameter
    if (k1 > k2) std::swap(k1, k2);
    if (k1 > -2 || k2 < 2)
        throw PreconditionError("sl2_tensor_opposite: need one parameter <= -2, one >= 2");
    Decomposition dec;
    int diff = -k1 - k2;  // |k1| - |k2|
    dec.continuous.push_back(
        {"iR>=0", "mu", TensorWord{{Sl2Principal{std::abs(diff) % 2}}}, false});
    int s = diff > 0 ? -1 : 1;  // discrete part carries the dominant factor's sign
    for (int l = std::abs(diff); l >= 2; l -= 2)
        dec.discrete.push_back({TensorWord{{Sl2Discrete{s * l}}}, 1});
    dec.canonicalize();
    return dec;
}

Decomposition tensor_lemma(const GroupDatum& d, int sign, int kmax) {
    if (d.cs != Case::so2n) throw UnsupportedCase("tensor_lemma: so(2,n) only");
    if (kmax < 0) throw PreconditionError("tensor_lemma: k-max must be >= 0");
    Decomposition dec;
    int m = d.n - 2;
    for (int k = 0; k <= kmax; ++k)
        dec.continuous.push_back(
            {"iR>=0", "mu", TensorWord{{Sl2Principal{k % 2}, SoHarmonic{m, k}}}, false});
    for (int l = 2; l <= kmax; ++l)
        for (int k = l; k <= kmax; k += 2)
            dec.discrete.push_back(
                {TensorWord{{Sl2Discrete{-sign * l}, SoHarmonic{m, k}}}, 1});
    dec.canonicalize();
    return dec;
}

std::vector<SigmaB> restrict_to_B(const RepLabel& r) {
    if (std::holds_alternative<Sl2Principal>(r)) return {SigmaB{1}, SigmaB{-1}};
    if (const auto* ds = std::get_if<Sl2Discrete>(&r)) {
        if (ds->ell <= -1) return {SigmaB{1}};
        if (ds->ell >= 1) return {SigmaB{-1}};
    }
    throw ConstraintError("restrict_to_B: defined on SL(2,R) principal and discrete labels");
}

Decomposition so2n_ntm_branching(int n, int kmax) {
    if (n <= 4) throw RangeError("so2n_ntm_branching: need n > 4");
    if (kmax < 0) throw PreconditionError("so2n_ntm_branching: k-max must be >= 0");
    Decomposition dec;
    int m = n - 2;
    for (int k = 0; k <= kmax; ++k) {
        dec.continuous.push_back(
            {"iR>=0", "mu",
             TensorWord{{Sl2Principal{k % 2}, Sl2Principal{k % 2}, SoHarmonic{m, k}}},
             false});
        for (int l = -k; l <= k; ++l) {
            if (std::abs(l) < 2 || (l - k) % 2 != 0) continue;
            dec.discrete.push_back(
                {TensorWord{{Sl2Discrete{l}, Sl2Discrete{l}, SoHarmonic{m, k}}}, 1});
        }
    }
    dec.canonicalize();
    return dec;
}

bool regrouping_equivalence(int n, int kmax) {
    // route 1: both metaplectic tensor products, discrete (ell, k) pairs
    std::multiset<std::pair<int, int>> tensor_side;
    GroupDatum d = datum_so2n(n);
    for (int sign : {1, -1})
        for (const auto& s : tensor_lemma(d, sign, kmax).discrete) {
            int ell = std::get<Sl2Discrete>(s.word.factors[0]).ell;
            int k = std::get<SoHarmonic>(s.word.factors[1]).k;
            for (long c = 0; c < s.mult; ++c) tensor_side.insert({ell, k});
        }
    // route 2: regrouped branching with the first SL(2,R) slot projected away
    std::multiset<std::pair<int, int>> branching_side;
    for (const auto& s : so2n_ntm_branching(n, kmax).discrete) {
        int ell = std::get<Sl2Discrete>(s.word.factors[1]).ell;
        int k = std::get<SoHarmonic>(s.word.factors[2]).k;
        if (std::abs(ell) > kmax || k > kmax) continue;
        for (long c = 0; c < s.mult; ++c) branching_side.insert({ell, k});
    }
    return tensor_side == branching_side;
}

std::vector<std::vector<Rat>> gt_branch(const std::vector<Rat>& mu) {
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
        if (mu[i] < mu[i + 1])
            throw PreconditionError("gt_branch: tuple must be weakly decreasing");
        if (!is_integer(mu[i] - mu[i + 1]))
            throw PreconditionError("gt_branch: entries must lie in one congruence class");
    }
    if (mu.size() < 2) return {{}};
    std::vector<std::vector<Rat>> out;
    std::vector<Rat> cur(mu.size() - 1);
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i + 1 == mu.size()) {
            out.push_back(cur);
            return;
        }
        for (Rat v = mu[i]; v >= mu[i + 1]; v -= 1) {
            cur[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Decomposition e6_l2_decomposition(int k, bool dual) {
    if (k < 0) throw PreconditionError("e6_l2_decomposition: k must be >= 0");
    // branch the U(5)-type (k/2)(1,1,-1,-1,-1) to U(4) by interlacing
    std::vector<Rat> top = {Rat(k, 2), Rat(k, 2), Rat(-k, 2), Rat(-k, 2), Rat(-k, 2)};
    Decomposition dec;
    for (const auto& nu : gt_branch(top)) {
        std::array<Rat, 4> tuple{nu[0], nu[1], nu[2], nu[3]};
        int mu_sign = 1;
        if (dual) {
            // contragredient: negate, reverse, and flip the continuous parameter
            std::array<Rat, 4> rev{-tuple[3], -tuple[2], -tuple[1], -tuple[0]};
            tuple = rev;
            mu_sign = -1;
        }
        dec.continuous.push_back(
            {"iR>=0", "mu", TensorWord{{Su51Principal{tuple, mu_sign}}}, false});
    }
    dec.canonicalize();
    return dec;
}

ExclusionReport e6_discrete_exclusion(int k) {
    if (k < 0) throw PreconditionError("e6_discrete_exclusion: k must be >= 0");
    ExclusionReport rep;
    rep.k = k;

    // lowest-K-type shift: rho(sl6) - 2 rho(compact gl5)
    const std::array<Rat, 6> shift = {Rat(-3, 2), Rat(-1, 2), Rat(1, 2),
                                      Rat(3, 2),  Rat(5, 2),  Rat(-5, 2)};
    // entries of the permuted level weight: three +k/2, three -k/2
    std::array<Rat, 6> base = {Rat(k, 2),  Rat(k, 2),  Rat(-k, 2),
                               Rat(-k, 2), Rat(-k, 2), Rat(k, 2)};
    std::sort(base.begin(), base.end());

    std::set<std::vector<Rat>> seen, consistent;
    std::vector<Rat> closed = {Rat(k + 3, 2),  Rat(k + 1, 2),  Rat(k - 1, 2),
                               Rat(-k - 3, 2), Rat(-k - 5, 2), Rat(-k + 5, 2)};
    do {
        std::vector<Rat> mu(6);
        for (int i = 0; i < 6; ++i) mu[i] = base[i] - shift[i];
        if (!seen.insert(mu).second) continue;
        rep.patterns_checked++;
        bool dominant = true;
        for (int i = 0; i < 5; ++i)
            if (!(mu[i] > mu[i + 1])) dominant = false;
        if (dominant) rep.dominant_found = true;
        // consistency: compact part strictly decreasing, noncompact slot not leading
        bool compact_dominant = true;
        for (int i = 0; i < 4; ++i)
            if (!(mu[i] > mu[i + 1])) compact_dominant = false;
        if (compact_dominant && mu[5] <= mu[0]) consistent.insert(mu);
    } while (std::next_permutation(base.begin(), base.end()));

    rep.consistent_count = static_cast<int>(consistent.size());
    {
        Rat sum = 0;
        for (const auto& x : closed) sum += x;
        rep.sum_zero = (sum == 0);
        rep.final_pair_inverted = closed[4] < closed[5];
    }
    if (rep.consistent_count == 1) {
        rep.candidate = *consistent.begin();
        rep.matches_closed_form = (rep.candidate == closed);
    }
    if (rep.dominant_found)
        throw ConsistencyError("e6_discrete_exclusion: a dominant parameter exists at k = " +
                               std::to_string(k));
    return rep;
}

Decomposition e6_ntm_branching(int kmax) {
    if (kmax < 1) throw PreconditionError("e6_ntm_branching: k-max must be >= 1");
    Decomposition dec;
    for (int k = 0; k <= kmax; ++k) {
        // m = 0 stratum: the two dual families coincide; the SL(2,R)-action on
        // the sigma_B^+ (+) sigma_B^- slot is undetermined
        std::array<Rat, 4> diag{Rat(k, 2), Rat(k, 2), Rat(-k, 2), Rat(-k, 2)};
        dec.continuous.push_back(
            {"iR>=0", "mu", TensorWord{{SigmaBSum{}, Su51Principal{diag, 1}}}, true});
        for (int m = 1; m <= k; ++m) {
            std::array<Rat, 4> primal{Rat(k, 2), Rat(k, 2) - m, Rat(-k, 2), Rat(-k, 2)};
            std::array<Rat, 4> dual_t{Rat(k, 2), Rat(k, 2), Rat(m) - Rat(k, 2), Rat(-k, 2)};
            dec.continuous.push_back(
                {"iR>=0", "mu",
                 TensorWord{{Sl2DiscreteSym{-1, "l", 1}, Su51Principal{primal, 1}}},
                 false});
            dec.continuous.push_back(
                {"iR>=0", "mu",
                 TensorWord{{Sl2DiscreteSym{+1, "l", 1}, Su51Principal{dual_t, 1}}},
                 false});
        }
    }
    dec.canonicalize();
    return dec;
}

}  // namespace hermlie::branching
