#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermlie/errors.hpp"
#include "hermlie/orbits.hpp"

using namespace hermlie;
using namespace hermlie::orbits;

TEST_CASE("transpose is column counting") {
    auto p = make_partition({2, 2, 2, 2, 1, 1, 1, 1}, Ambient::sl);
    CHECK(transpose(p).parts == std::vector<long>{8, 4});
    CHECK(transpose(make_partition({1}, Ambient::sl)).parts == std::vector<long>{1});
    CHECK(transpose(make_partition({3, 1, 1, 1}, Ambient::sl)).parts ==
          std::vector<long>{4, 1, 1});
    CHECK(transpose(transpose(p)).parts == p.parts);
}

TEST_CASE("orbit dimensions from the transpose formulas") {
    CHECK(orbit_dim(make_partition({3, 1, 1, 1, 1, 1, 1, 1, 1, 1}, Ambient::so)) == 20);
    CHECK(orbit_dim(make_partition({2, 2, 2, 2, 1, 1, 1, 1}, Ambient::so)) == 28);
    CHECK(orbit_dim(make_partition({2, 2, 1, 1, 1, 1}, Ambient::sl)) == 24);
}

TEST_CASE("validity per ambient type") {
    CHECK_THROWS_AS(make_partition({2, 1, 1}, Ambient::so), PartitionError);  // even part, odd mult
    CHECK_THROWS_AS(make_partition({3, 1}, Ambient::sp), PartitionError);     // odd part, odd mult
    CHECK_THROWS_AS(make_partition({1, 2}, Ambient::sl), PartitionError);     // not decreasing
    CHECK(parts_valid({2, 2, 1, 1}, Ambient::so));
    CHECK(parts_valid({2, 2, 1, 1}, Ambient::sp));
}

TEST_CASE("dominance order") {
    auto a = make_partition({2, 1, 1}, Ambient::sl);
    auto b = make_partition({2, 2}, Ambient::sl);
    CHECK(closure_leq(a, b));
    CHECK(!closure_leq(b, a));
    CHECK(closure_leq(a, a));
    auto c = make_partition({2, 2, 1, 1, 1, 1, 1, 1}, Ambient::so);
    auto d = make_partition({3, 1, 1, 1, 1, 1, 1, 1, 1}, Ambient::so);
    CHECK(closure_leq(c, d));
    CHECK_THROWS_AS(closure_leq(a, c), AmbientMismatch);
}

TEST_CASE("next-to-minimal lists") {
    auto so12 = next_to_minimal_orbits(Ambient::so, 12);
    REQUIRE(so12.size() == 2);
    CHECK(so12[0].parts == std::vector<long>{3, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(so12[0].dim == 20);
    CHECK(so12[1].parts == std::vector<long>{2, 2, 2, 2, 1, 1, 1, 1});
    CHECK(so12[1].dim == 28);

    auto sl8 = next_to_minimal_orbits(Ambient::sl, 8);
    REQUIRE(sl8.size() == 1);
    CHECK(sl8[0].parts == std::vector<long>{2, 2, 1, 1, 1, 1});
    CHECK(sl8[0].dim == 24);

    auto e6 = next_to_minimal_exceptional(Case::e6);
    REQUIRE(e6.size() == 1);
    CHECK(e6[0].label == "2A1");
    CHECK(e6[0].dim == 32);
    auto e7 = next_to_minimal_exceptional(Case::e7);
    CHECK(e7[0].dim == 52);
}

TEST_CASE("degenerate ambients raise") {
    CHECK_THROWS_AS(minimal_orbit(Ambient::so, 2), RangeError);
    CHECK(minimal_orbit(Ambient::so, 7).parts == std::vector<long>{2, 2, 1, 1, 1});
    CHECK(minimal_orbit(Ambient::sl, 4).parts == std::vector<long>{2, 1, 1});
}

TEST_CASE("associated-variety matching") {
    auto so = match_associated_variety(datum_so2n(10));
    CHECK(so.parts == std::vector<long>{3, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(so.dim == 20);
    CHECK(so.covers_minimal);

    auto star = match_associated_variety(datum_sostar(6));
    CHECK(star.parts == std::vector<long>{2, 2, 2, 2, 1, 1, 1, 1});
    CHECK(star.dim == 28);

    auto su = match_associated_variety(datum_su(4, 2));
    CHECK(su.parts == std::vector<long>{2, 2, 1, 1});
    CHECK(su.dim == 16);

    CHECK(match_associated_variety(datum_e6()).dim == 32);
    CHECK(match_associated_variety(datum_e7()).label == "2A1");
}

TEST_CASE("the triality boundary is detected, not silently resolved") {
    CHECK_THROWS_AS(match_associated_variety(datum_so2n(6)), ConsistencyError);
}

TEST_CASE("poset export") {
    auto j = poset_json(Ambient::so, 8);
    CHECK(j["nodes"].size() == valid_partitions(Ambient::so, 8).size());
    // the very even partition is flagged
    bool flagged = false;
    for (const auto& n : j["nodes"])
        if (n.contains("very_even_pair")) flagged = true;
    CHECK(flagged);
    CHECK(j["edges"].size() > 0);
}
