// Compares the serial and OpenMP kernels on synthetic data and checks that
// both modes produce identical results (all merges are exact, so the
// parallel schedule cannot change a single bit).

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "boxline/oracle.hpp"
#include "boxline/seeding.hpp"

using namespace boxline;

namespace {

Dataset synthetic_line(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> noise(-0.3, 0.3);
    std::vector<std::pair<Interval, Interval>> boxes;
    boxes.reserve(n);
    for (int i = 0; i < n; ++i) {
        double x = 0.05 * i;
        double y = 0.75 * x + 2.0 + noise(rng);
        boxes.emplace_back(Interval::make(x - 0.01, x + 0.01),
                           Interval::make(y - 0.5, y + 0.5));
    }
    return Dataset::from_boxes(boxes);
}

template <typename F>
double time_of(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("openmp: unavailable (serial build)\n");
#endif

    {
        Dataset big = synthetic_line(1600, 7);
        ParamBox serial_box, parallel_box;
        double ts = time_of([&] { serial_box = initial_union_box(big, 1e40, Exec::serial); });
        double tp = time_of([&] { parallel_box = initial_union_box(big, 1e40, Exec::parallel); });
        std::printf("pair enumeration (n=1600, %d pairs): serial %.3fs  parallel %.3fs  %s\n",
                    1600 * 1599 / 2, ts, tp,
                    serial_box == parallel_box ? "identical" : "DIFFER");
    }

    {
        Dataset d = synthetic_line(24, 11);
        ParamBox seed = initial_union_box(d, 1e40);
        GridResult gs, gp;
        double ts = time_of([&] { gs = grid_hull(SolutionKind::united, d, seed, 900, Exec::serial); });
        double tp = time_of([&] { gp = grid_hull(SolutionKind::united, d, seed, 900, Exec::parallel); });
        bool same = gs.accepted == gp.accepted && gs.hull == gp.hull;
        std::printf("grid scan (n=24, 900x900): serial %.3fs  parallel %.3fs  %s\n", ts, tp,
                    same ? "identical" : "DIFFER");
    }

    {
        Dataset d = synthetic_line(24, 13);
        ParamBox seed = initial_union_box(d, 1e40);
        GridResult gs, gp;
        double ts = time_of([&] { gs = crude_grid(d, seed, 900, 2, Exec::serial); });
        double tp = time_of([&] { gp = crude_grid(d, seed, 900, 2, Exec::parallel); });
        bool same = gs.accepted == gp.accepted && gs.hull == gp.hull;
        std::printf("crude grid (n=24, 900x900, k=2): serial %.3fs  parallel %.3fs  %s\n", ts,
                    tp, same ? "identical" : "DIFFER");
    }
    return 0;
}
