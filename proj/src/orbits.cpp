#include "hermlie/orbits.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hermlie/errors.hpp"
#include "hermlie/ktypes.hpp"

namespace hermlie::orbits {

std::string ambient_name(Ambient a) {
    switch (a) {
        case Ambient::sl: return "sl";
        case Ambient::so: return "so";
        case Ambient::sp: return "sp";
    }
    return "?";
}

std::string Partition::str() const {
    std::string s = "(";
    std::size_t i = 0;
    bool first = true;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!first) s += ",";
        first = false;
        s += std::to_string(parts[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s + ")";
}

bool parts_valid(const std::vector<long>& parts, Ambient amb) {
    std::map<long, long> mult;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i && parts[i] > parts[i - 1]) return false;
        ++mult[parts[i]];
    }
    if (amb == Ambient::so) {
        for (auto [part, m] : mult)
            if (part % 2 == 0 && m % 2 != 0) return false;
    } else if (amb == Ambient::sp) {
        for (auto [part, m] : mult)
            if (part % 2 != 0 && m % 2 != 0) return false;
    }
    return true;
}

Partition make_partition(std::vector<long> parts, Ambient amb) {
    if (!parts_valid(parts, amb))
        throw PartitionError("invalid " + ambient_name(amb) + " partition");
    long N = 0;
    for (long p : parts) N += p;
    return {std::move(parts), amb, N};
}

Partition transpose(const Partition& p) {
    std::vector<long> t;
    if (!p.parts.empty()) {
        for (long i = 0; i < p.parts[0]; ++i) {
            long count = 0;
            for (long x : p.parts)
                if (x > i) ++count;
            t.push_back(count);
        }
    }
    // the transpose of an so-partition is generally only an sl-partition;
    // keep the parts, remember the original ambient for callers that care
    return {std::move(t), p.amb, p.N};
}

long orbit_dim(const Partition& p) {
    if (!parts_valid(p.parts, p.amb))
        throw PartitionError("orbit_dim: invalid partition " + p.str());
    Partition q = transpose(p);
    long sq = 0;
    for (long x : q.parts) sq += x * x;
    long odd = 0;
    for (long x : p.parts)
        if (x % 2 != 0) ++odd;
    long N = p.N;
    long dim = 0;
    switch (p.amb) {
        case Ambient::sl: dim = N * N - sq; break;
        case Ambient::so: dim = (N * N - N) / 2 - (sq - odd) / 2; break;
        case Ambient::sp: dim = (N * N + N) / 2 - (sq + odd) / 2; break;
    }
    if (dim % 2 != 0) throw ConsistencyError("orbit dimension came out odd for " + p.str());
    return dim;
}

bool closure_leq(const Partition& p, const Partition& q) {
    if (p.amb != q.amb || p.N != q.N)
        throw AmbientMismatch("closure_leq: partitions live in different ambients");
    long sp = 0, sq = 0;
    std::size_t len = std::max(p.parts.size(), q.parts.size());
    for (std::size_t i = 0; i < len; ++i) {
        sp += i < p.parts.size() ? p.parts[i] : 0;
        sq += i < q.parts.size() ? q.parts[i] : 0;
        if (sp > sq) return false;
    }
    return true;
}

namespace {

void gen_partitions(long n, long maxp, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(n, maxp); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> valid_partitions(Ambient amb, long N, Execution ex) {
    std::vector<std::vector<long>> raw;
#ifdef _OPENMP
    if (ex == Execution::parallel && N > 1) {
        // split by first part; chunks joined in decreasing-first-part order
        std::vector<std::vector<std::vector<long>>> chunks(N);
#pragma omp parallel for schedule(dynamic)
        for (long first = N; first >= 1; --first) {
            std::vector<long> cur{first};
            gen_partitions(N - first, first, cur, chunks[N - first]);
        }
        for (auto& c : chunks)
            for (auto& p : c) raw.push_back(std::move(p));
    } else
#else
    (void)ex;
#endif
    {
        std::vector<long> cur;
        gen_partitions(N, N, cur, raw);
    }
    std::vector<Partition> out;
    for (auto& parts : raw)
        if (parts_valid(parts, amb)) out.push_back({std::move(parts), amb, N});
    return out;
}

Partition minimal_orbit(Ambient amb, long N) {
    auto all = valid_partitions(amb, N);
    const std::vector<long> trivial(N, 1);
    Partition best{{}, amb, N};
    long best_dim = -1;
    for (const auto& p : all) {
        if (p.parts == trivial) continue;
        long d = orbit_dim(p);
        if (best_dim < 0 || d < best_dim) {
            best = p;
            best_dim = d;
        }
    }
    if (best_dim < 0)
        throw RangeError("minimal_orbit: " + ambient_name(amb) + "(" + std::to_string(N) +
                         ") has no nonzero nilpotent orbit");
    long count = 0;
    for (const auto& p : all)
        if (p.parts != trivial && orbit_dim(p) == best_dim) ++count;
    if (count != 1)
        throw ConsistencyError("minimal_orbit: minimal dimension is not unique in " +
                               ambient_name(amb) + "(" + std::to_string(N) + ")");
    return best;
}

namespace {

bool very_even(const std::vector<long>& parts, Ambient amb) {
    if (amb != Ambient::so) return false;
    for (long x : parts)
        if (x % 2 != 0) return false;
    return true;
}

OrbitRecord record_for(const Partition& p, bool covers_min) {
    return {p.str(), p.parts, orbit_dim(p), covers_min, very_even(p.parts, p.amb)};
}

}  // namespace

std::vector<OrbitRecord> next_to_minimal_orbits(Ambient amb, long N) {
    auto all = valid_partitions(amb, N);
    const std::vector<long> trivial(N, 1);
    Partition min = minimal_orbit(amb, N);  // raises on degenerate ambients

    std::vector<OrbitRecord> out;
    for (const auto& p : all) {
        if (p.parts == trivial || p.parts == min.parts) continue;
        // closure = {p, minimal, zero} iff those are exactly the partitions below p
        bool ok = true;
        long below = 0;
        for (const auto& v : all) {
            if (v.parts == p.parts) continue;
            if (closure_leq(v, p)) {
                ++below;
                if (v.parts != trivial && v.parts != min.parts) ok = false;
            }
        }
        if (ok && below == 2) out.push_back(record_for(p, true));
    }
    std::sort(out.begin(), out.end(),
              [](const OrbitRecord& a, const OrbitRecord& b) { return a.dim < b.dim; });
    return out;
}

std::vector<OrbitRecord> exceptional_orbits(Case cs) {
    // partial tables: zero, minimal and next-to-minimal only
    if (cs == Case::e6)
        return {{"0", {}, 0, false, false},
                {"A1", {}, 22, false, false},
                {"2A1", {}, 32, true, false}};
    if (cs == Case::e7)
        return {{"0", {}, 0, false, false},
                {"A1", {}, 34, false, false},
                {"2A1", {}, 52, true, false}};
    throw UnsupportedCase("exceptional_orbits: only e6 and e7 carry tables");
}

std::vector<OrbitRecord> next_to_minimal_exceptional(Case cs) {
    std::vector<OrbitRecord> out;
    for (const auto& r : exceptional_orbits(cs))
        if (r.label == "2A1") out.push_back(r);
    return out;
}

OrbitRecord match_associated_variety(const GroupDatum& d, int fit_range) {
    long target = 2L * ktypes::gk_dimension(d, fit_range);

    if (d.cs == Case::e6 || d.cs == Case::e7) {
        std::vector<OrbitRecord> hits;
        for (const auto& r : exceptional_orbits(d.cs))
            if (r.dim == target) hits.push_back(r);
        if (hits.size() != 1)
            throw ConsistencyError("match_associated_variety: " + std::to_string(hits.size()) +
                                   " orbits of dimension " + std::to_string(target) + " for " +
                                   d.name() + " (partial table)");
        return hits[0];
    }

    Ambient amb = d.cs == Case::su ? Ambient::sl : Ambient::so;
    long N = d.cs == Case::su ? d.p + d.q : (d.cs == Case::so2n ? d.n + 2 : 2L * d.n);
    long orbit_count = 0;
    std::vector<Partition> hits;
    for (const auto& p : valid_partitions(amb, N))
        if (orbit_dim(p) == target) {
            hits.push_back(p);
            orbit_count += very_even(p.parts, amb) ? 2 : 1;
        }
    if (orbit_count != 1) {
        std::string what = "match_associated_variety: " + std::to_string(orbit_count) +
                           " orbits of dimension " + std::to_string(target) + " in " +
                           ambient_name(amb) + "(" + std::to_string(N) + ") for " + d.name() + ":";
        for (const auto& p : hits) what += " " + p.str();
        throw ConsistencyError(what);
    }
    return record_for(hits[0], true);
}

nlohmann::json poset_json(Ambient amb, long N) {
    auto all = valid_partitions(amb, N);
    std::sort(all.begin(), all.end(), [](const Partition& a, const Partition& b) {
        long da = orbit_dim(a), db = orbit_dim(b);
        return da != db ? da < db : a.parts < b.parts;
    });
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& p : all) {
        nlohmann::json n;
        n["label"] = p.str();
        n["dim"] = orbit_dim(p);
        if (very_even(p.parts, amb)) n["very_even_pair"] = true;
        nodes.push_back(n);
    }
    // covering relations of the dominance order
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i == j || !closure_leq(all[i], all[j]) || all[i] == all[j]) continue;
            bool covering = true;
            for (std::size_t k = 0; k < all.size() && covering; ++k) {
                if (k == i || k == j) continue;
                if (closure_leq(all[i], all[k]) && closure_leq(all[k], all[j]) &&
                    !(all[k] == all[i]) && !(all[k] == all[j]))
                    covering = false;
            }
            if (covering) edges.push_back({i, j});
        }
    nlohmann::json out;
    out["ambient"] = ambient_name(amb) + "(" + std::to_string(N) + ")";
    out["nodes"] = nodes;
    out["edges"] = edges;
    return out;
}

}  // namespace hermlie::orbits
