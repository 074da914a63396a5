// Compares the parallel kernels against their serial reference twins on
// inputs large enough to show the difference.

#include "wk/model.hpp"
#include "wk/series.hpp"
#include "wk/walks.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

wk::TruncSeries random_series(int order, unsigned seed) {
    wk::TruncSeries s(order);
    unsigned state = seed;
    auto next = [&state]() {
        state = state * 1664525u + 1013904223u;
        return state;
    };
    for (int n = 0; n <= order; ++n) {
        wk::LaurentPoly p;
        for (int k = 0; k < 40; ++k) {
            const int i = static_cast<int>(next() % 21) - 10;
            const int j = static_cast<int>(next() % 21) - 10;
            p.add_term(i, j, wk::rat(static_cast<long>(next() % 2001) - 1000,
                                     static_cast<long>(next() % 97) + 1));
        }
        s.set_coeff(n, std::move(p));
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("WALK_KERNEL_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
    const int order = argc > 1 ? std::atoi(argv[1]) : 140;
    std::cout << "threads: " << omp_get_max_threads() << "\n";

    const auto model = wk::builtin_model("simple-ne");
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = wk::enumerate_reference(model, order);
    const double t_serial = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto parallel = wk::enumerate(model, order);
    const double t_parallel = seconds_since(t0);
    const bool same_counts =
        serial.layer(order) == parallel.layer(order) && serial.rows() == parallel.rows();
    std::cout << "enumerate simple-ne n=" << order << ": serial " << t_serial << " s, parallel "
              << t_parallel << " s, speedup " << t_serial / t_parallel
              << (same_counts ? "" : "  [MISMATCH]") << "\n";

    const int sorder = 48;
    const auto a = random_series(sorder, 17);
    const auto b = random_series(sorder, 91);
    t0 = std::chrono::steady_clock::now();
    const auto ref = wk::series_mul_reference(a, b);
    const double t_sref = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto par = wk::series_mul(a, b);
    const double t_spar = seconds_since(t0);
    std::cout << "series_mul order=" << sorder << ": serial " << t_sref << " s, parallel "
              << t_spar << " s, speedup " << t_sref / t_spar
              << (ref == par ? "" : "  [MISMATCH]") << "\n";
    return same_counts && ref == par ? 0 : 1;
}
