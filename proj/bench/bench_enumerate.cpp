// Serial reference vs the OpenMP kernel for the rank 2 census.
// usage: bench_enumerate [conductor_max = 30] [threads = all]

#include "hypcert/enumerate.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace {

template <class F>
double seconds(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const long n = argc > 1 ? std::atol(argv[1]) : 30;
    const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
    if (n < 1 || threads < 1) {
        std::fprintf(stderr, "usage: bench_enumerate [conductor_max >= 1] [threads >= 1]\n");
        return 2;
    }

    std::vector<hypcert::EnumerationRow> ref, one, many;
    const double t_ref = seconds([&] { ref = hypcert::enumerate_rank2_reference(n); });
    const double t_one = seconds([&] { one = hypcert::enumerate_rank2(n, 1); });
    const double t_many = seconds([&] { many = hypcert::enumerate_rank2(n, threads); });

    const bool same = ref == one && ref == many;
    std::printf("conductor_max %ld, %zu rows\n", n, ref.size());
    std::printf("%-22s %10.3f s\n", "reference (serial)", t_ref);
    std::printf("%-22s %10.3f s  x%.1f\n", "kernel, 1 thread", t_one, t_ref / t_one);
    std::printf("kernel, %-2d threads     %10.3f s  x%.1f\n", threads, t_many, t_ref / t_many);
    std::printf("outputs identical: %s\n", same ? "yes" : "NO");
    return same ? 0 : 1;
}
