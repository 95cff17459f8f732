#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermlie/e6data.hpp"
#include "hermlie/errors.hpp"
#include "hermlie/groups.hpp"
#include "hermlie/json_io.hpp"
#include "hermlie/linalg.hpp"
#include "hermlie/rootsys.hpp"

using namespace hermlie;

namespace {

Weight half(std::initializer_list<int> signs) {
    std::vector<Rat> c;
    for (int s : signs) c.emplace_back(s, 2);
    return Weight(std::move(c));
}

}  // namespace

TEST_CASE("positive root counts") {
    CHECK(build_root_system(RootType::A, 1).positive.size() == 1);
    CHECK(build_root_system(RootType::A, 4).positive.size() == 10);
    CHECK(build_root_system(RootType::B, 3).positive.size() == 9);
    CHECK(build_root_system(RootType::C, 4).positive.size() == 16);
    CHECK(build_root_system(RootType::D, 5).positive.size() == 20);
    CHECK(build_root_system(RootType::E6, 6).positive.size() == 36);
    CHECK(build_root_system(RootType::E7, 7).positive.size() == 63);
}

TEST_CASE("rank-1 system") {
    auto sys = build_root_system(RootType::A, 1);
    CHECK(sys.positive[0] == Weight{Rat(1), Rat(-1)});
    auto lam = fundamental_weights(sys.simple);
    CHECK(lam[0] == Rat(1, 2) * sys.positive[0]);
}

TEST_CASE("unsupported ranks") {
    CHECK_THROWS_AS(build_root_system(RootType::E6, 7), UnsupportedCase);
    CHECK_THROWS_AS(build_root_system(RootType::A, 0), UnsupportedCase);
    CHECK_THROWS_AS(build_root_system(RootType::D, 1), UnsupportedCase);
}

TEST_CASE("every positive root is a nonnegative combination of simple roots") {
    for (auto type : {RootType::A, RootType::D, RootType::E6, RootType::E7}) {
        int rank = type == RootType::A ? 4 : type == RootType::D ? 5 : type == RootType::E6 ? 6 : 7;
        auto sys = build_root_system(type, rank);
        for (const auto& r : sys.positive)
            for (const auto& c : simple_coefficients(sys, r)) CHECK(c >= 0);
    }
}

TEST_CASE("e6 split matches the classical description") {
    auto sys = build_root_system(RootType::E6, 6, SplitKind::hermitian_e6);
    std::size_t nonc = 0;
    for (bool b : *sys.noncompact) nonc += b;
    CHECK(nonc == 16);
    CHECK(sys.positive.size() - nonc == 20);
    for (const auto& r : sys.positive) CHECK(inner(r, r) == 2);
}

TEST_CASE("e7 split from the grading by the central element") {
    auto sys = build_root_system(RootType::E7, 7, SplitKind::hermitian_e7);
    std::size_t nonc = 0;
    for (bool b : *sys.noncompact) nonc += b;
    CHECK(nonc == 27);  // dim of the minuscule piece
}

TEST_CASE("e6 cascades reproduce the strongly orthogonal pairs") {
    const auto& d = e6_structure();
    CHECK(d.gamma1 == half({1, -1, -1, -1, -1, -1, -1, 1}));
    CHECK(d.gamma2 == half({-1, 1, 1, 1, -1, -1, -1, 1}));
    CHECK(d.tgamma2 == half({1, 1, 1, 1, 1, -1, -1, 1}));
    CHECK(d.tgamma1 == half({-1, -1, -1, -1, 1, -1, -1, 1}));
}

TEST_CASE("cascade requires a split") {
    auto sys = build_root_system(RootType::D, 5);
    CHECK_THROWS_AS(hc_cascade(sys, CascadeDirection::lowest), PreconditionError);
}

TEST_CASE("d5 cascade with the u(5) marking") {
    auto sys = build_root_system(RootType::D, 5, SplitKind::d_u_n);
    auto low = hc_cascade(sys, CascadeDirection::lowest);
    REQUIRE(low.size() == 2);
    // pairwise strongly orthogonal, and no root equals half their sum
    CHECK(!sys.is_root(low[0] + low[1]));
    CHECK(!sys.is_root(low[0] - low[1]));
    CHECK(!sys.is_root(Rat(1, 2) * (low[0] + low[1])));
    auto high = hc_cascade(sys, CascadeDirection::highest);
    CHECK(high[0] == Weight{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)});
    CHECK(high[1] == Weight{Rat(0), Rat(0), Rat(1), Rat(1), Rat(0)});
}

TEST_CASE("fundamental weights of the e6 Levi part") {
    const auto& d = e6_structure();
    Weight l2(8), l5(8);
    int c2[5] = {2, 4, 3, 2, 1}, c5[5] = {1, 2, 3, 4, 5};
    for (int j = 0; j < 5; ++j) {
        l2 += Rat(c2[j], 3) * d.beta[j];
        l5 += Rat(c5[j], 6) * d.beta[j];
    }
    CHECK(d.lambda[1] == l2);
    CHECK(d.lambda[4] == l5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(Rat(2) * inner(d.lambda[i], d.beta[j]) / inner(d.beta[j], d.beta[j]) ==
                  (i == j ? Rat(1) : Rat(0)));
}

TEST_CASE("dependent simple set is rejected") {
    Weight a{Rat(1), Rat(-1), Rat(0)};
    Weight b{Rat(2), Rat(-2), Rat(0)};
    CHECK_THROWS_AS(fundamental_weights({a, b}), PreconditionError);
}

TEST_CASE("e6 identities all pass") {
    for (const auto& idc : verify_e6_identities()) {
        INFO(idc.name, ": ", idc.detail);
        CHECK(idc.pass);
    }
}

TEST_CASE("group data from the structure-constant table") {
    auto d = datum_so2n(10);
    CHECK(d.a1 == 6);
    CHECK(d.b1 == 0);
    CHECK(d.d1 == 8);
    CHECK(d.rho == 9);
    CHECK(*d.nu0 == 7);

    auto e6 = datum_e6();
    CHECK(e6.a1 == 4);
    CHECK(e6.b1 == 2);
    CHECK(e6.d1 == 10);
    CHECK(e6.rho == 11);
    CHECK(*e6.nu0 == 5);

    auto su33 = datum_su(3, 3);
    CHECK(su33.d1 == 4);
    CHECK(*su33.nu0 == 1);
    CHECK(!datum_su(4, 3).nu0);

    auto e7 = datum_e7();
    CHECK(e7.d1 == 16);
    CHECK(e7.d1 == e7.a1 + 2 * e7.b1 + 2);
}

TEST_CASE("parameter range errors") {
    CHECK_THROWS_AS(datum_so2n(4), RangeError);
    CHECK_THROWS_AS(datum_sostar(3), RangeError);
    CHECK_THROWS_AS(datum_su(1, 5), RangeError);
    CHECK_THROWS_AS(group_datum("sp", {4}), UnsupportedCase);
    CHECK_THROWS_AS(group_datum("f4", {}), UnsupportedCase);
}

TEST_CASE("weight json round trip uses exact fraction strings") {
    Weight w{Rat(1, 2), Rat(-5, 12), Rat(3)};
    auto j = weight_json(w);
    CHECK(j[0] == "1/2");
    CHECK(j[1] == "-5/12");
    CHECK(j[2] == "3");
    CHECK(weight_from_json(j) == w);
}

TEST_CASE("sl6 standard coordinates of the V1 lowest weight") {
    const auto& d = e6_structure();
    auto std_coords = to_sl6_standard(Rat(-2) * d.delta0);
    int signs[6] = {1, 1, -1, -1, -1, 1};
    for (int t = 0; t < 6; ++t) CHECK(std_coords[t] == Rat(signs[t]));
}
