#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hermlie/errors.hpp"
#include "hermlie/ktypes.hpp"

using namespace hermlie;
using namespace hermlie::ktypes;

TEST_CASE("endpoint K-type enumeration") {
    auto d = datum_so2n(6);
    auto got = enumerate_ktypes(d, Rep::pi_ntm, 2);
    std::vector<KType> want = {{0, 0, 0}, {1, 1, -1}, {1, 1, 1}, {2, 2, -2}, {2, 2, 0}, {2, 2, 2}};
    CHECK(got == want);

    CHECK(enumerate_ktypes(datum_e7(), Rep::pi_ntm, 0) == std::vector<KType>{{0, 0, 0}});
}

TEST_CASE("su endpoint K-types carry the fixed weight gap") {
    auto d = datum_su(4, 2);
    auto got = enumerate_ktypes(d, Rep::pi_ntm, 4);
    std::vector<KType> want = {{0, 2, 0}, {1, 3, -1}, {1, 3, 1}, {2, 4, -2}, {2, 4, 0}, {2, 4, 2}};
    CHECK(got == want);
    CHECK_THROWS_AS(enumerate_ktypes(datum_su(4, 3), Rep::pi_ntm, 4), UnsupportedCase);
    CHECK_THROWS_AS(enumerate_ktypes(d, Rep::pi_ntm, -1), PreconditionError);
}

TEST_CASE("full principal-series K-types satisfy the constraints once each") {
    auto d = datum_sostar(5);
    auto got = enumerate_ktypes(d, Rep::pi_nu, 6);
    std::set<std::tuple<long, long, long>> seen;
    for (const auto& kt : got) {
        CHECK(valid_ktype(d, Rep::pi_nu, kt));
        CHECK(seen.insert({kt.mu1, kt.mu2, kt.ell}).second);
    }
    // brute-force count
    long count = 0;
    for (long m1 = 0; m1 <= 6; ++m1)
        for (long m2 = 0; m2 <= m1; ++m2)
            for (long l = -m2; l <= m2; ++l)
                if ((m1 - m2) % 2 == 0 && (m1 - l) % 2 == 0) ++count;
    CHECK(static_cast<long>(got.size()) == count);
}

TEST_CASE("weyl dimension values") {
    CHECK(weyl_dim(build_root_system(RootType::D, 5), Weight(5)) == 1);
    Weight adj_d5(5);
    adj_d5[0] = 1;
    adj_d5[1] = 1;
    CHECK(weyl_dim(build_root_system(RootType::D, 5), adj_d5) == 45);
    Weight adj_a4(5);
    adj_a4[0] = 1;
    adj_a4[4] = -1;
    CHECK(weyl_dim(build_root_system(RootType::A, 4), adj_a4) == 24);
}

TEST_CASE("weyl dimension rejects non-dominant weights naming the root") {
    auto sys = build_root_system(RootType::A, 2);
    Weight w(3);
    w[0] = -1;
    w[1] = 0;
    w[2] = 1;
    try {
        weyl_dim(sys, w);
        FAIL("expected DominanceError");
    } catch (const DominanceError& e) {
        CHECK(e.simple_root == sys.simple[0].str());
    }
}

TEST_CASE("harmonic K-type dimension for so(2,6)") {
    CHECK(ktype_dim(datum_so2n(6), {2, 2, 0}) == 20);
    CHECK(ktype_dim(datum_so2n(6), {0, 0, 0}) == 1);
    CHECK(ktype_dim(datum_e7(), {0, 0, 0}) == 1);
}

TEST_CASE("su dimensions agree with the product of two type-A Weyl dimensions") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pq(2, 6), mus(0, 14);
    for (int it = 0; it < 250; ++it) {
        int p = pq(rng), q = pq(rng);
        long m1 = mus(rng), m2 = mus(rng);
        if ((m1 + m2) % 2 != 0) ++m2;
        long mn = std::min(m1, m2);
        std::vector<long> ls;
        for (long l = -mn; l <= mn; ++l)
            if ((l - m1) % 2 == 0) ls.push_back(l);
        if (ls.empty()) continue;
        long l = ls[std::uniform_int_distribution<std::size_t>(0, ls.size() - 1)(rng)];

        GroupDatum d = datum_su(p, q);
        BigInt closed = ktype_dim(d, {m1, m2, l});

        auto ap = build_root_system(RootType::A, p - 1);
        auto aq = build_root_system(RootType::A, q - 1);
        Weight wp(p), wq(q);
        wp[0] = Rat(m1 + l, 2);
        wp[p - 1] = Rat(-(m1 - l), 2);
        wq[0] = Rat(m2 + l, 2);
        wq[q - 1] = Rat(-(m2 - l), 2);
        CHECK(closed == weyl_dim(ap, wp) * weyl_dim(aq, wq));
    }
}

TEST_CASE("invalid K-types are rejected") {
    CHECK_THROWS_AS(ktype_dim(datum_so2n(6), {1, 2, 0}), ConstraintError);   // parity
    CHECK_THROWS_AS(ktype_dim(datum_so2n(6), {2, 4, 0}), ConstraintError);   // ordering
    CHECK_THROWS_AS(ktype_dim(datum_su(3, 3), {2, 2, 4}), ConstraintError);  // |ell| too big
}

TEST_CASE("odd parity class of so* is flagged as out of dictionary range") {
    CHECK_THROWS_AS(ktype_dim(datum_sostar(5), {1, 1, 1}), UnsupportedCase);
    CHECK_THROWS_AS(ktype_dim(datum_e6(), {3, 3, 1}), UnsupportedCase);
    CHECK(ktype_dim(datum_sostar(5), {2, 2, 0}) > 0);  // even class is fine
}

TEST_CASE("dimension polynomial degrees") {
    CHECK(dim_poly_degree(datum_so2n(10)) == 8);
    CHECK(dim_poly_degree(datum_e6()) == 14);
    CHECK(dim_poly_degree(datum_sostar(6)) == 12);
    CHECK_THROWS_AS(dim_poly_degree(datum_su(3, 3)), PreconditionError);
}

TEST_CASE("growth exponents match the closed forms") {
    CHECK(gk_dimension(datum_so2n(10)) == 10);
    CHECK(gk_dimension(datum_su(3, 3)) == 8);
    CHECK(gk_dimension(datum_e7()) == 26);
    CHECK_THROWS_AS(gk_dimension(datum_so2n(10), 4), PreconditionError);
}

TEST_CASE("filtration dimension is monotone and matches a direct sum") {
    auto d = datum_so2n(5);
    // direct evaluation of the K-type sum at small n
    Rat direct = 0;
    for (long mu = 0; mu <= 6; ++mu)
        direct += Rat(mu + 1) * Rat(ktype_dim(d, {mu, mu, mu % 2}));
    CHECK(filtration_dim(d, 6) == direct);
    CHECK(filtration_dim(d, 6) < filtration_dim(d, 7));
}
