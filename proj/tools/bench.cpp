// bench.cpp - serial vs OpenMP timings for the bulk sweep kernels.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "vedanga/names.hpp"
#include "vedanga/tally.hpp"
#include "vedanga/yuga.hpp"

namespace {

double time_best_of(int repetitions, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < repetitions; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void report(const std::string& kernel, double serial_s, double parallel_s) {
    std::printf("%-28s  %10.3f ms  %10.3f ms  %6.2fx\n", kernel.c_str(), serial_s * 1e3,
                parallel_s * 1e3, serial_s / parallel_s);
}

}  // namespace

int main() {
    using namespace vedanga;

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-28s  %13s  %13s  %7s\n", "kernel", "serial", "openmp", "speedup");

    {
        const auto serial = time_best_of(3, [] { yuga::yuga_table_serial(0, 1829); });
        const auto parallel = time_best_of(3, [] { yuga::yuga_table(0, 1829); });
        report("yuga_table (1830 days)", serial, parallel);
    }
    {
        const auto rv = names::RadixVector::yuga_default();
        const auto serial = time_best_of(3, [&] { names::verify_bijection_serial(rv); });
        const auto parallel = time_best_of(3, [&] { names::verify_bijection(rv); });
        report("bijection (810k indices)", serial, parallel);
    }
    {
        const auto serial = time_best_of(3, [] { tally::enumerate_splits_serial(7200, 720); });
        const auto parallel = time_best_of(3, [] { tally::enumerate_splits(7200, 720); });
        report("enumerate_splits (7200)", serial, parallel);
    }
    {
        const auto serial = time_best_of(2, [] { tally::check_product_grid_serial(120, 120); });
        const auto parallel = time_best_of(2, [] { tally::check_product_grid(120, 120); });
        report("product grid (120x120)", serial, parallel);
    }
    {
        const auto serial = time_best_of(2, [] { tally::check_split_divisibility_serial(600, 40); });
        const auto parallel = time_best_of(2, [] { tally::check_split_divisibility(600, 40); });
        report("split divisibility (600x40)", serial, parallel);
    }
    return 0;
}
