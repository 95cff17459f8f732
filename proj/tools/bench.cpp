// Wall-clock comparison of the serial reference kernels against the
// OpenMP paths.  Not a correctness gate; equality is covered in the tests.
#include <chrono>
#include <cstdio>

#include "hermlie/ktypes.hpp"
#include "hermlie/orbits.hpp"
#include "hermlie/spectrum.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f) {
    auto t0 = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
    using namespace hermlie;
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "openmp");

    {
        GroupDatum d = datum_e7();
        Rat a, b;
        double ts = time_ms([&] { a = ktypes::filtration_dim(d, 384, ktypes::Execution::serial); });
        double tp = time_ms([&] { b = ktypes::filtration_dim(d, 384, ktypes::Execution::parallel); });
        if (a != b) std::printf("!! filtration mismatch\n");
        row("filtration-sum e7 n=384", ts, tp);
    }
    {
        GroupDatum d = datum_su(6, 6);
        Rat a, b;
        double ts = time_ms([&] { a = ktypes::filtration_dim(d, 256, ktypes::Execution::serial); });
        double tp = time_ms([&] { b = ktypes::filtration_dim(d, 256, ktypes::Execution::parallel); });
        if (a != b) std::printf("!! filtration mismatch\n");
        row("filtration-sum su66 n=256", ts, tp);
    }
    {
        GroupDatum d = datum_so2n(10);
        double ts = time_ms([&] {
            spectrum::complementary_window(d, 48, Rat(1, 64), spectrum::Execution::serial);
        });
        double tp = time_ms([&] {
            spectrum::complementary_window(d, 48, Rat(1, 64), spectrum::Execution::parallel);
        });
        row("window-sweep so(2,10)", ts, tp);
    }
    {
        std::size_t a = 0, b = 0;
        double ts = time_ms(
            [&] { a = orbits::valid_partitions(orbits::Ambient::so, 52, orbits::Execution::serial).size(); });
        double tp = time_ms(
            [&] { b = orbits::valid_partitions(orbits::Ambient::so, 52, orbits::Execution::parallel).size(); });
        if (a != b) std::printf("!! partition count mismatch\n");
        row("partitions so(52)", ts, tp);
    }
    return 0;
}
