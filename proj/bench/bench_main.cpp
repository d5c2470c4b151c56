// Timings for the threaded kernels against their serial references, plus
// the max pointwise difference between the two (should be rounding-level).
// Not part of the test suite; run directly, optionally under
// FRACWAVE_THREADS / OMP_NUM_THREADS.

#include "fracwave/differint.hpp"
#include "fracwave/grid.hpp"
#include "fracwave/wave_uv.hpp"
#include "fracwave/wave_xt.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fw = fracwave;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename Fn>
double best_of(int runs, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < runs; ++r) {
        const double t0 = now_seconds();
        fn();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

double max_diff(const fw::GridFunction& a, const fw::GridFunction& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    }
    return m;
}

double max_diff(const fw::Field2D& a, const fw::Field2D& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.mask[i] != b.mask[i]) return 1e300;
        if (a.mask[i]) continue;
        m = std::max(m, std::abs(a.values[i] - b.values[i]));
    }
    return m;
}

void report(const char* name, double serial, double parallel, double diff) {
    std::printf("%-28s serial %8.1f ms   parallel %8.1f ms   speedup %5.2fx   max|diff| %.3g\n",
                name, serial * 1e3, parallel * 1e3, serial / parallel, diff);
}

} // namespace

int main() {
#ifdef _OPENMP
    const char* env = std::getenv("FRACWAVE_THREADS");
    if (env != nullptr) {
        const int n = std::atoi(env);
        if (n >= 1) omp_set_num_threads(n);
    }
    int threads = 1;
#pragma omp parallel
    {
#pragma omp single
        threads = omp_get_num_threads();
    }
    std::printf("worker pool: %d thread(s)\n", threads);
#else
    std::printf("worker pool: OpenMP disabled at build time\n");
#endif

    {
        const std::size_t n = 4000;
        const auto f = fw::sample_grid([](double x) { return fw::cplx{std::sin(x), 0.0}; }, 0.0,
                                       fw::two_pi / static_cast<double>(n - 1), n);
        const fw::Order alpha{0.5};
        fw::GridFunction par, ser;
        const double tp = best_of(3, [&] { par = fw::frac_integral(f, alpha); });
        const double ts = best_of(3, [&] { ser = fw::ref::frac_integral(f, alpha); });
        report("frac_integral n=4000", ts, tp, max_diff(par, ser));
    }

    {
        const fw::Axis ax{0.0, 4.0 * fw::pi / 300.0, 301};
        const fw::Order a{0.75}, b{0.75};
        fw::Field2D par, ser;
        const double tp = best_of(3, [&] { par = fw::sincos_field(a, b, ax, ax); });
        const double ts = best_of(3, [&] { ser = fw::ref::sincos_field(a, b, ax, ax); });
        report("sincos_field 301x301", ts, tp, max_diff(par, ser));
    }

    {
        const fw::Axis ax{0.0, 4.0 * fw::pi / 300.0, 301};
        const fw::Order a{0.5}, b{1.0};
        fw::Field2D par, ser;
        const double tp = best_of(3, [&] { par = fw::sin_field(a, b, ax, ax); });
        const double ts = best_of(3, [&] { ser = fw::ref::sin_field(a, b, ax, ax); });
        report("sin_field 301x301", ts, tp, max_diff(par, ser));
    }

    return 0;
}
