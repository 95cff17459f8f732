#include "hermlie/e6data.hpp"

#include <algorithm>

#include "hermlie/errors.hpp"
#include "hermlie/linalg.hpp"

namespace hermlie {

namespace {

E6Data build() {
    E6Data d;
    d.sys = build_root_system(RootType::E6, 6, SplitKind::hermitian_e6);

    auto low = hc_cascade(d.sys, CascadeDirection::lowest);
    auto high = hc_cascade(d.sys, CascadeDirection::highest);
    if (low.size() != 2 || high.size() != 2)
        throw ConsistencyError("e6 cascade does not have length 2");
    d.gamma1 = low[0];
    d.gamma2 = low[1];
    d.tgamma2 = high[0];
    d.tgamma1 = high[1];

    // beta_1..beta_4 are the compact simple roots alpha_2, alpha_4..alpha_6;
    // beta_5 = gamma_2 completes a simple system for the Levi sl(6).
    d.beta = {d.sys.simple[1], d.sys.simple[3], d.sys.simple[4], d.sys.simple[5], d.gamma2};
    d.lambda = fundamental_weights(d.beta);

    // weights of V_1: noncompact positive roots pairing to 1 with gamma_1
    for (const auto& r : d.sys.noncompact_positive())
        if (inner(r, d.gamma1) == 1) d.v1_weights.push_back(r);
    if (d.v1_weights.size() != 10) throw ConsistencyError("V_1 does not have ten weights");

    d.delta0 = Weight{Rat(-1, 2), Rat(1, 2),  Rat(-1, 2), Rat(-1, 2),
                      Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
    return d;
}

bool pairings_equal(const std::vector<Weight>& basis, const Weight& a, const Weight& b) {
    for (const auto& v : basis)
        if (inner(a, v) != inner(b, v)) return false;
    return true;
}

}  // namespace

const E6Data& e6_structure() {
    static const E6Data d = build();
    return d;
}

std::array<Rat, 6> to_sl6_standard(const Weight& w) {
    const auto& d = e6_structure();
    std::array<Rat, 6> std_coords{};
    for (std::size_t j = 0; j < 5; ++j) {
        Rat c = Rat(2) * inner(w, d.beta[j]) / inner(d.beta[j], d.beta[j]);
        // Lambda_j = (1,..,1,0,..,0) - (j+1)/6 * (1,..,1), j+1 leading ones
        for (std::size_t t = 0; t < 6; ++t)
            std_coords[t] += c * ((t <= j ? Rat(1) : Rat(0)) - Rat(j + 1, 6));
    }
    return std_coords;
}

std::vector<IdentityCheck> verify_e6_identities() {
    const auto& d = e6_structure();
    std::vector<IdentityCheck> out;
    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok, detail});
    };

    {
        Weight g1{Rat(1, 2),  Rat(-1, 2), Rat(-1, 2), Rat(-1, 2),
                  Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
        Weight g2{Rat(-1, 2), Rat(1, 2),  Rat(1, 2),  Rat(1, 2),
                  Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
        Weight tg2{Rat(1, 2),  Rat(1, 2),  Rat(1, 2), Rat(1, 2),
                   Rat(1, 2),  Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
        Weight tg1{Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2),
                   Rat(1, 2),  Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
        add("cascade-lowest", d.gamma1 == g1 && d.gamma2 == g2,
            "gamma1 = " + d.gamma1.str() + ", gamma2 = " + d.gamma2.str());
        add("cascade-highest", d.tgamma2 == tg2 && d.tgamma1 == tg1,
            "~gamma2 = " + d.tgamma2.str() + ", ~gamma1 = " + d.tgamma1.str());
    }

    {
        // delta0 is a weight of V_1 and the lowest one: every other weight
        // exceeds it by a nonnegative combination of beta_1..beta_4.
        bool in_v1 = std::find(d.v1_weights.begin(), d.v1_weights.end(), d.delta0) !=
                     d.v1_weights.end();
        bool lowest = in_v1;
        std::vector<Weight> compact_simple(d.beta.begin(), d.beta.begin() + 4);
        for (const auto& w : d.v1_weights) {
            Weight diff = w - d.delta0;
            if (!in_span(compact_simple, diff)) {
                lowest = false;
                break;
            }
            for (const auto& c : span_coefficients(compact_simple, diff))
                if (c < 0) lowest = false;
        }
        add("delta0-lowest-weight-of-V1", lowest, "delta0 = " + d.delta0.str());
    }

    {
        // -k delta0 = k(-lambda5 + lambda2) as functionals on the Levi Cartan
        Weight target = d.lambda[1] - d.lambda[4];
        bool ok = pairings_equal(d.beta, -d.delta0, target);
        bool zero_case = pairings_equal(d.beta, Rat(0) * d.delta0, Rat(0) * target);
        add("minus-delta0-equals-lambda2-minus-lambda5", ok && zero_case,
            "checked via pairings with beta_1..beta_5 (k = 0 and k = 1)");
    }

    {
        bool ok = true;
        for (int k = 0; k <= 4 && ok; ++k) {
            auto std_coords = to_sl6_standard(Rat(-k) * d.delta0);
            std::array<int, 6> signs = {1, 1, -1, -1, -1, 1};
            for (int t = 0; t < 6; ++t)
                if (std_coords[t] != Rat(k * signs[t], 2)) ok = false;
        }
        add("minus-kdelta0-standard-coordinates", ok, "(k/2)(1,1,-1,-1,-1,1) for k = 0..4");
    }

    {
        // noncompact roots of the Levi: noncompact positives orthogonal to gamma1,
        // forming the chain beta5 < beta5+beta4 < ... < ~gamma2
        std::vector<Weight> chain;
        for (const auto& r : d.sys.noncompact_positive())
            if (inner(r, d.gamma1) == 0) chain.push_back(r);
        bool ok = chain.size() == 5;
        if (ok) {
            std::sort(chain.begin(), chain.end(), [&](const Weight& a, const Weight& b) {
                return root_height(d.sys, a) < root_height(d.sys, b);
            });
            std::vector<Weight> expect = {d.beta[4],
                                          d.beta[4] + d.beta[3],
                                          d.beta[4] + d.beta[3] + d.beta[2],
                                          d.beta[4] + d.beta[3] + d.beta[2] + d.beta[1],
                                          d.tgamma2};
            ok = chain == expect;
        }
        add("noncompact-levi-chain", ok,
            "three roots strictly between beta5 and the highest noncompact root");
    }

    {
        // half the V_1 trace character equals 3 lambda5; recompute the trace by
        // brute-force summation of the ten weights
        Weight total(d.sys.ambient);
        for (const auto& w : d.v1_weights) total += w;
        bool restricted = pairings_equal(d.beta, total, Rat(6) * d.lambda[4]);
        Weight comb(d.sys.ambient);
        int coef[5] = {1, 2, 3, 4, 5};
        for (int j = 0; j < 5; ++j) comb += Rat(coef[j]) * d.beta[j];
        bool exact = (Rat(6) * d.lambda[4] == comb);
        add("half-trace-V1-equals-3-lambda5", restricted && exact,
            "sum of the ten V_1 weights restricts to 6 lambda5; 6 lambda5 = "
            "beta1+2beta2+3beta3+4beta4+5beta5 exactly");
    }

    {
        // fundamental-weight displays for lambda2, lambda5
        Weight l2(d.sys.ambient), l5(d.sys.ambient);
        int c2[5] = {2, 4, 3, 2, 1};
        int c5[5] = {1, 2, 3, 4, 5};
        for (int j = 0; j < 5; ++j) {
            l2 += Rat(c2[j], 3) * d.beta[j];
            l5 += Rat(c5[j], 6) * d.beta[j];
        }
        add("fundamental-weight-combinations", d.lambda[1] == l2 && d.lambda[4] == l5,
            "lambda2 = (2b1+4b2+3b3+2b4+b5)/3, lambda5 = (b1+2b2+3b3+4b4+5b5)/6");
    }

    return out;
}

}  // namespace hermlie
