// The OpenMP kernels must agree with the serial references bit for bit.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermlie/ktypes.hpp"
#include "hermlie/orbits.hpp"
#include "hermlie/spectrum.hpp"

using namespace hermlie;

TEST_CASE("filtration sums") {
    for (const auto& d : {datum_e7(), datum_so2n(12), datum_sostar(7), datum_su(6, 6)}) {
        auto s = ktypes::filtration_dim(d, 96, ktypes::Execution::serial);
        auto p = ktypes::filtration_dim(d, 96, ktypes::Execution::parallel);
        CHECK(s == p);
    }
}

TEST_CASE("window sweeps") {
    for (const auto& d : {datum_so2n(10), datum_e6()}) {
        auto s = spectrum::complementary_window(d, 16, Rat(1, 8), spectrum::Execution::serial);
        auto p = spectrum::complementary_window(d, 16, Rat(1, 8), spectrum::Execution::parallel);
        REQUIRE(s.sign_table.size() == p.sign_table.size());
        for (std::size_t i = 0; i < s.sign_table.size(); ++i) {
            CHECK(s.sign_table[i].nu == p.sign_table[i].nu);
            CHECK(s.sign_table[i].k == p.sign_table[i].k);
            CHECK(s.sign_table[i].sign == p.sign_table[i].sign);
        }
        CHECK(s.kernel_at_endpoint == p.kernel_at_endpoint);
    }
}

TEST_CASE("partition enumeration") {
    for (long N : {18L, 27L, 34L}) {
        auto s = orbits::valid_partitions(orbits::Ambient::so, N, orbits::Execution::serial);
        auto p = orbits::valid_partitions(orbits::Ambient::so, N, orbits::Execution::parallel);
        REQUIRE(s.size() == p.size());
        auto key = [](const orbits::Partition& x) { return x.parts; };
        std::vector<std::vector<long>> sk, pk;
        for (const auto& x : s) sk.push_back(key(x));
        for (const auto& x : p) pk.push_back(key(x));
        std::sort(sk.begin(), sk.end());
        std::sort(pk.begin(), pk.end());
        CHECK(sk == pk);
    }
}
