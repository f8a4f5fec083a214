// Compares the serial reference kernel with the OpenMP kernel on the matrix
// shapes the library actually produces: Gram matrices of tower floors and
// dense products over a small cyclotomic field.

#include <chrono>
#include <cstdio>
#include <vector>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "subfac/coxeter.hpp"
#include "subfac/linalg.hpp"
#include "subfac/subalgebra.hpp"
#include "subfac/tower.hpp"

using namespace subfac;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

Mat dense_matrix(int n) {
    // deterministic entries in Q(zeta_8): small integers plus a sqrt(2) part
    Mat m(n, n);
    Cyc s2 = Cyc::sqrt_of(2);
    long seed = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            seed = (seed * 1103515245 + 12345) % 2048;
            m.at(i, j) = Cyc(seed % 7 - 3) + s2 * Cyc(seed % 5 - 2);
        }
    return m;
}

void bench_product(int n, int reps) {
    Mat x = dense_matrix(n);
    Mat y = dense_matrix(n);

    auto t0 = std::chrono::steady_clock::now();
    Mat serial;
    for (int r = 0; r < reps; ++r) serial = mul_serial(x, y);
    double t_serial = ms_since(t0) / reps;

    t0 = std::chrono::steady_clock::now();
    Mat parallel;
    for (int r = 0; r < reps; ++r) parallel = mul_parallel(x, y);
    double t_parallel = ms_since(t0) / reps;

    bool same = serial == parallel;
    std::printf("dense %3d x %-3d  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n", n,
                n, t_serial, t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0,
                same ? "identical" : "MISMATCH");
    if (!same) std::exit(1);
}

void bench_floor(int level) {
    PointedCoxeterGraph p = parse_pointed("D5,2");

    par::set_enabled(false);
    Tower ts = Tower::from_pointed(p, level + 1);
    auto t0 = std::chrono::steady_clock::now();
    Subspace fs = tl_floor(ts, level);
    double t_serial = ms_since(t0);

    par::set_enabled(true);
    Tower tp = Tower::from_pointed(p, level + 1);
    t0 = std::chrono::steady_clock::now();
    Subspace fp = tl_floor(tp, level);
    double t_parallel = ms_since(t0);

    bool same = fs.dim() == fp.dim();
    std::printf("tl_floor D5,2 level %d  serial %8.2f ms  parallel %8.2f ms  speedup %5.2fx  %s\n",
                level, t_serial, t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0,
                same ? "same dim" : "MISMATCH");
    if (!same) std::exit(1);
    par::set_enabled(true);
}

}  // namespace

int main() {
    std::printf("exact-arithmetic kernel benchmark (results must be bit-identical)\n");
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n\n");
#endif
    for (int n : {16, 32, 64}) bench_product(n, n <= 32 ? 3 : 1);
    std::printf("\n");
    for (int level : {4, 5}) bench_floor(level);
    return 0;
}
