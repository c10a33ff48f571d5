// Compares the serial reference kernels against the OpenMP variants.

#include <cstdio>
#include <string>

#include "kc/enumerate.hpp"

#ifdef _OPENMP
#include <omp.h>
static double now() { return omp_get_wtime(); }
#else
#include <chrono>
static double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
#endif

using namespace kc;

template <typename F>
static double timed(const F& f) {
    double t0 = now();
    f();
    return now() - t0;
}

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

    {
        RoundTripReport a, b;
        double ts = timed([&] { a = roundtrip_admissible_serial(9); });
        double tp = timed([&] { b = roundtrip_admissible_parallel(9); });
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "roundtrip sum<=9", ts, tp, ts / tp,
                    a == b ? "" : "MISMATCH");
    }
    {
        IdentityReport a, b;
        double ts = timed([&] { a = identity_suite_serial(4000000, 0x5eed, 9); });
        double tp = timed([&] { b = identity_suite_parallel(4000000, 0x5eed, 9); });
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "identities 4e6", ts, tp, ts / tp,
                    a == b ? "" : "MISMATCH");
    }
    {
        SweepInput in = sweep_input_from_fixtures();
        SweepReport a, b;
        double ts = timed([&] { a = bound_sweep_serial(in, true); });
        double tp = timed([&] { b = bound_sweep_parallel(in, true); });
        std::printf("%-28s %10.3f %10.3f %8.2f %s\n", "bound sweep pairs+triples", ts, tp,
                    ts / tp, a == b ? "" : "MISMATCH");
    }
    return 0;
}
