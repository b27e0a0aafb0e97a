#pragma once

#include "hookpath/fibonacci.hpp"
#include "hookpath/poly.hpp"

#include <vector>

namespace hookpath {

// Per-vertex floor sweeps (one independent brute-force computation per
// offset), each in two forms: a serial reference and an OpenMP kernel.
// The parallel variants fall back to serial when built without OpenMP.
//
// `odd` selects the odd floor 2(k+s)-1 (offsets l1 in [0, p^{k+1}), s >= 2)
// instead of the even floor 2(k+s) (offsets l in [0, p^k), s >= 1).

std::vector<IntPolynomial> eulerian_floor_sweep_serial(int p, int k, int s, bool odd);
std::vector<IntPolynomial> eulerian_floor_sweep_parallel(int p, int k, int s, bool odd);

std::vector<BigInt> fib_floor_sweep_serial(int p, int k, int s);
std::vector<BigInt> fib_floor_sweep_parallel(int p, int k, int s);

std::vector<BigInt> sign_balance_floor_sweep_serial(int p, int k, int s, bool odd);
std::vector<BigInt> sign_balance_floor_sweep_parallel(int p, int k, int s, bool odd);

// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int sweep_thread_count();
// Request a thread count (no-op without OpenMP; n <= 0 leaves the default).
void set_sweep_thread_count(int n);

}  // namespace hookpath
