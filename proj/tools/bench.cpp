// Benchmark comparing the OpenMP elimination kernels against the serial
// reference on random exact-rational instances.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "rankcrit/linalg.hpp"

using namespace rankcrit;

namespace {

template <typename F>
double time_it(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 160;
    int64_t height = argc > 2 ? std::atoll(argv[2]) : 30;
    uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 42;
    std::printf("threads=%d  n=%d  height=%lld  seed=%llu\n", omp_get_max_threads(), n,
                (long long)height, (unsigned long long)seed);

    Matrix a = random_rational_matrix(n, n, height, seed);
    Matrix b = random_rational_matrix(n, n, height, seed + 1);

    RrefResult r_par, r_ser;
    double t_par = time_it([&] { r_par = rref(a); });
    double t_ser = time_it([&] { r_ser = serial::rref(a); });
    bool same = r_par.rref == r_ser.rref && r_par.rank == r_ser.rank;
    std::printf("rref     parallel %.3fs   serial %.3fs   speedup %.2fx   match=%s\n", t_par,
                t_ser, t_ser / t_par, same ? "yes" : "NO");

    Matrix m_par, m_ser;
    double tm_par = time_it([&] { m_par = a * b; });
    double tm_ser = time_it([&] { m_ser = serial::mul(a, b); });
    std::printf("matmul   parallel %.3fs   serial %.3fs   speedup %.2fx   match=%s\n", tm_par,
                tm_ser, tm_ser / tm_par, m_par == m_ser ? "yes" : "NO");

    uint64_t p = random_prime62(seed);
    int rank_p = 0;
    double tp = time_it([&] { rank_p = rank_mod_p(a, p); });
    std::printf("rank mod p (screening): %d in %.3fs (exact rank %d)\n", rank_p, tp, r_par.rank);
    return same && m_par == m_ser ? 0 : 1;
}
