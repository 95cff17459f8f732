#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "hermlie/branching.hpp"
#include "hermlie/e6data.hpp"
#include "hermlie/errors.hpp"

using namespace hermlie;
using namespace hermlie::branching;

namespace {

std::vector<std::pair<int, int>> discrete_pairs(const Decomposition& dec) {
    // (ell, k) pairs of two-factor words
    std::vector<std::pair<int, int>> out;
    for (const auto& s : dec.discrete) {
        int ell = std::get<Sl2Discrete>(s.word.factors[0]).ell;
        int k = std::get<SoHarmonic>(s.word.factors[1]).k;
        for (long c = 0; c < s.mult; ++c) out.emplace_back(ell, k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("harmonic polynomial dimensions") {
    CHECK(harmonic_dim(7, 0) == 1);
    CHECK(harmonic_dim(4, 2) == 9);
    for (int k = 0; k <= 12; ++k) CHECK(harmonic_dim(3, k) == (k == 0 ? 1 : 2 * k + 1));
    CHECK_THROWS_AS(harmonic_dim(0, 1), PreconditionError);
}

TEST_CASE("metaplectic restriction for so(2,6)") {
    auto dec = metaplectic_restriction(datum_so2n(6), +1, 2);
    REQUIRE(dec.discrete.size() == 3);
    std::vector<std::pair<int, int>> got = discrete_pairs(dec);
    std::vector<std::pair<int, int>> want = {{-6, 2}, {-5, 1}, {-4, 0}};
    CHECK(got == want);
    CHECK(dec.continuous.empty());

    auto zero = metaplectic_restriction(datum_so2n(9), +1, 0);
    REQUIRE(zero.discrete.size() == 1);
    CHECK(std::get<Sl2Discrete>(zero.discrete[0].word.factors[0]).ell == -7);

    auto dual = metaplectic_restriction(datum_so2n(6), -1, 0);
    CHECK(std::get<Sl2Discrete>(dual.discrete[0].word.factors[0]).ell == 4);
}

TEST_CASE("metaplectic restriction for e6 produces exact weights") {
    const auto& e6 = e6_structure();
    auto dec = metaplectic_restriction(datum_e6(), +1, 1);
    REQUIRE(dec.discrete.size() == 2);
    Weight w0 = Rat(-3) * e6.lambda[4];
    Weight w1 = -e6.delta0 - Rat(3) * e6.lambda[4];
    std::vector<Weight> got;
    for (const auto& s : dec.discrete) got.push_back(std::get<HwModule>(s.word.factors[0]).w);
    CHECK(std::count(got.begin(), got.end(), w0) == 1);
    CHECK(std::count(got.begin(), got.end(), w1) == 1);
    // frozen coordinates for the k = 0 weight
    CHECK(w0 == Weight{Rat(3, 4), Rat(-3, 4), Rat(-3, 4), Rat(-3, 4), Rat(-3, 4), Rat(5, 4),
                       Rat(5, 4), Rat(-5, 4)});
    CHECK_THROWS_AS(metaplectic_restriction(datum_sostar(5), 1, 2), UnsupportedCase);
}

TEST_CASE("opposite-pair tensor product") {
    auto dec = sl2_tensor_opposite(-6, 4);
    REQUIRE(dec.continuous.size() == 1);
    CHECK(std::get<Sl2Principal>(dec.continuous[0].word.factors[0]).eps == 0);
    REQUIRE(dec.discrete.size() == 1);
    CHECK(std::get<Sl2Discrete>(dec.discrete[0].word.factors[0]).ell == -2);

    CHECK(sl2_tensor_opposite(-4, 4).discrete.empty());

    auto anti = sl2_tensor_opposite(-2, 6);
    std::vector<int> ells;
    for (const auto& s : anti.discrete)
        ells.push_back(std::get<Sl2Discrete>(s.word.factors[0]).ell);
    std::sort(ells.begin(), ells.end());
    CHECK(ells == std::vector<int>{2, 4});

    CHECK_THROWS_AS(sl2_tensor_opposite(-1, 4), PreconditionError);
    CHECK_THROWS_AS(sl2_tensor_opposite(3, 5), PreconditionError);
}

TEST_CASE("assembled tensor decomposition") {
    auto dec = tensor_lemma(datum_so2n(6), +1, 4);
    // discrete part at l = 2: harmonic degrees 2 and 4
    std::vector<std::pair<int, int>> got = discrete_pairs(dec);
    std::vector<std::pair<int, int>> want = {{-4, 4}, {-3, 3}, {-2, 2}, {-2, 4}};
    CHECK(got == want);
    // truncation below the first discrete threshold
    CHECK(tensor_lemma(datum_so2n(6), +1, 1).discrete.empty());
    // parity of the continuous part at k = 3
    bool found = false;
    for (const auto& f : tensor_lemma(datum_so2n(6), +1, 4).continuous) {
        if (std::get<SoHarmonic>(f.word.factors[1]).k == 3)
            found = std::get<Sl2Principal>(f.word.factors[0]).eps == 1;
    }
    CHECK(found);
}

TEST_CASE("Borel restriction rules") {
    auto pr = restrict_to_B(Sl2Principal{0});
    REQUIRE(pr.size() == 2);
    CHECK(pr[0].sign + pr[1].sign == 0);
    auto hol = restrict_to_B(Sl2Discrete{-3});
    REQUIRE(hol.size() == 1);
    CHECK(hol[0].sign == 1);
    auto anti = restrict_to_B(Sl2Discrete{2});
    REQUIRE(anti.size() == 1);
    CHECK(anti[0].sign == -1);
    CHECK_THROWS_AS(restrict_to_B(SoHarmonic{4, 2}), ConstraintError);
}

TEST_CASE("branching discrete slots follow the index conditions") {
    auto slots = [](int n, int k) {
        std::vector<int> out;
        for (const auto& s : so2n_ntm_branching(n, k).discrete) {
            int kk = std::get<SoHarmonic>(s.word.factors[2]).k;
            if (kk == k) out.push_back(std::get<Sl2Discrete>(s.word.factors[0]).ell);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(slots(6, 3) == std::vector<int>{-3, 3});
    CHECK(slots(6, 1).empty());
    CHECK(slots(6, 6) == std::vector<int>{-6, -4, -2, 2, 4, 6});
    CHECK_THROWS_AS(so2n_ntm_branching(4, 3), RangeError);
    // both slots carry the same parameter
    for (const auto& s : so2n_ntm_branching(7, 8).discrete)
        CHECK(std::get<Sl2Discrete>(s.word.factors[0]).ell ==
              std::get<Sl2Discrete>(s.word.factors[1]).ell);
}

TEST_CASE("regrouping equivalence") {
    CHECK(regrouping_equivalence(6, 10));
    CHECK(regrouping_equivalence(6, 1));
    CHECK(regrouping_equivalence(8, 20));
}

TEST_CASE("branching golden files") {
    auto n6 = so2n_ntm_branching(6, 10).to_json().dump(2) + "\n";
    CHECK(n6 == slurp(std::string(GOLDEN_DIR) + "/branch_so2n_n6_k10.json"));
    auto n8 = so2n_ntm_branching(8, 12).to_json().dump(2) + "\n";
    CHECK(n8 == slurp(std::string(GOLDEN_DIR) + "/branch_so2n_n8_k12.json"));
}

TEST_CASE("interlacing enumeration") {
    auto got = gt_branch({Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(-1)});
    REQUIRE(got.size() == 3);
    for (int m = 0; m <= 2; ++m)
        CHECK(got[m] == std::vector<Rat>{Rat(1), Rat(1 - m), Rat(-1), Rat(-1)});

    CHECK(gt_branch({Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)}) ==
          std::vector<std::vector<Rat>>{{Rat(0), Rat(0), Rat(0), Rat(0)}});
    auto two = gt_branch({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(two.size() == 2);
    CHECK_THROWS_AS(gt_branch({Rat(0), Rat(1)}), PreconditionError);
    CHECK_THROWS_AS(gt_branch({Rat(1), Rat(1, 2)}), PreconditionError);
}

TEST_CASE("level decompositions and their duals") {
    auto k1 = e6_l2_decomposition(1);
    REQUIRE(k1.continuous.size() == 2);
    std::set<std::array<Rat, 4>> tuples;
    for (const auto& f : k1.continuous)
        tuples.insert(std::get<Su51Principal>(f.word.factors[0]).nu);
    CHECK(tuples.count({Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(-1, 2)}) == 1);
    CHECK(tuples.count({Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}) == 1);

    auto k0 = e6_l2_decomposition(0);
    REQUIRE(k0.continuous.size() == 1);
    CHECK(std::get<Su51Principal>(k0.continuous[0].word.factors[0]).nu ==
          std::array<Rat, 4>{Rat(0), Rat(0), Rat(0), Rat(0)});

    auto d3 = e6_l2_decomposition(3, true);
    std::set<std::array<Rat, 4>> dual_tuples;
    for (const auto& f : d3.continuous) {
        auto su = std::get<Su51Principal>(f.word.factors[0]);
        CHECK(su.mu_sign == -1);
        dual_tuples.insert(su.nu);
    }
    for (int m = 0; m <= 3; ++m)
        CHECK(dual_tuples.count({Rat(3, 2), Rat(3, 2), Rat(m) - Rat(3, 2), Rat(-3, 2)}) == 1);
}

TEST_CASE("discrete-spectrum exclusion search") {
    auto r2 = e6_discrete_exclusion(2);
    CHECK(r2.consistent_count == 1);
    CHECK(r2.candidate[4] == Rat(-7, 2));
    CHECK(r2.candidate[5] == Rat(3, 2));
    CHECK(r2.final_pair_inverted);
    CHECK(r2.sum_zero);
    CHECK(!r2.dominant_found);

    auto r4 = e6_discrete_exclusion(4);
    CHECK(r4.consistent_count == 1);
    CHECK(r4.matches_closed_form);
    CHECK(e6_discrete_exclusion(0).sum_zero);
}

TEST_CASE("e6 endpoint branching") {
    CHECK_THROWS_AS(e6_ntm_branching(0), PreconditionError);
    auto dec = e6_ntm_branching(1);
    // (k,m) = (1,1) pair plus the two undetermined m = 0 strata (k = 0, 1)
    int undetermined = 0, primal = 0, dual = 0;
    for (const auto& f : dec.continuous) {
        if (f.undetermined) {
            ++undetermined;
            CHECK(std::holds_alternative<SigmaBSum>(f.word.factors[0]));
            continue;
        }
        auto sym = std::get<Sl2DiscreteSym>(f.word.factors[0]);
        auto su = std::get<Su51Principal>(f.word.factors[1]);
        CHECK(sym.min == 1);
        if (sym.sign < 0) {
            ++primal;
            CHECK(su.nu == std::array<Rat, 4>{Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)});
        } else {
            ++dual;
            CHECK(su.nu == std::array<Rat, 4>{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(-1, 2)});
        }
    }
    CHECK(undetermined == 2);
    CHECK(primal == 1);
    CHECK(dual == 1);
}

TEST_CASE("decomposition json is canonical and byte-stable") {
    auto a = so2n_ntm_branching(6, 5);
    auto b = so2n_ntm_branching(6, 5);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a == b);
}
