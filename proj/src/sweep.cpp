#include "hookpath/sweep.hpp"

#include "hookpath/eulerian.hpp"
#include "hookpath/stats.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hookpath {

namespace {

constexpr long long kSweepCap = 2'000'000;

long long offsets_on_floor(int p, int k, int s, bool odd) {
    if (!is_odd_prime(p) || k < 0 || s < (odd ? 2 : 1))
        throw std::invalid_argument("floor sweep: bad parameters");
    BigInt n = ipow(p, odd ? k + 1 : k);
    if (n > kSweepCap) throw std::length_error("floor sweep too large");
    return static_cast<long long>(n);
}

VertexLabel vertex_at(int p, int k, int s, bool odd, long long l) {
    return odd ? make_odd_vertex(p, k, s, l) : make_even_vertex(p, k, s, l);
}

template <typename T, typename Fn>
std::vector<T> run_serial(int p, int k, int s, bool odd, Fn per_vertex) {
    const long long n = offsets_on_floor(p, k, s, odd);
    std::vector<T> out(n);
    for (long long l = 0; l < n; ++l) out[l] = per_vertex(vertex_at(p, k, s, odd, l));
    return out;
}

template <typename T, typename Fn>
std::vector<T> run_parallel(int p, int k, int s, bool odd, Fn per_vertex) {
    const long long n = offsets_on_floor(p, k, s, odd);
    std::vector<T> out(n);
#pragma omp parallel for schedule(dynamic)
    for (long long l = 0; l < n; ++l) out[l] = per_vertex(vertex_at(p, k, s, odd, l));
    return out;
}

}  // namespace

std::vector<IntPolynomial> eulerian_floor_sweep_serial(int p, int k, int s, bool odd) {
    return run_serial<IntPolynomial>(p, k, s, odd, eulerian_bruteforce);
}

std::vector<IntPolynomial> eulerian_floor_sweep_parallel(int p, int k, int s, bool odd) {
    return run_parallel<IntPolynomial>(p, k, s, odd, eulerian_bruteforce);
}

std::vector<BigInt> fib_floor_sweep_serial(int p, int k, int s) {
    return run_serial<BigInt>(p, k, s, false, fib_bruteforce);
}

std::vector<BigInt> fib_floor_sweep_parallel(int p, int k, int s) {
    return run_parallel<BigInt>(p, k, s, false, fib_bruteforce);
}

std::vector<BigInt> sign_balance_floor_sweep_serial(int p, int k, int s, bool odd) {
    return run_serial<BigInt>(p, k, s, odd, sign_balance);
}

std::vector<BigInt> sign_balance_floor_sweep_parallel(int p, int k, int s, bool odd) {
    return run_parallel<BigInt>(p, k, s, odd, sign_balance);
}

int sweep_thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_sweep_thread_count(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace hookpath
