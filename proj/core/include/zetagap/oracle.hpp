#pragma once

#include <cstdint>
#include <vector>

#include "zetagap/arith.hpp"
#include "zetagap/functionals.hpp"
#include "zetagap/poly.hpp"

namespace zetagap {

/// Finite-T evaluation parameters; K = floor(T (log T)^-2).
struct OracleParams {
    double T = 0;
    std::uint64_t K = 0;
    double c = 0;
    double r = 1;
    Poly f1, f2;
    Mode mode = Mode::Plain;

    static OracleParams make(double T, double c, double r, Poly f1, Poly f2, Mode mode);
};

/// g_c(n) = 2 sin(pi c log n / log T) / (pi log n), n >= 2.
double g_c(std::uint64_t n, double c, double T);

/// b_k = a_k sqrt(k): d_r(k) [f1(x_k) + S2(k)/log^2 K * f2(x_k)], times
/// lambda(k) in Liouville mode; x_k = log(K/k)/log K.
double coefficient_b(std::uint64_t k, const OracleParams& params, const SpfSieve& sieve);

struct OracleOptions {
    int threads = 1;
    /// Drop prime powers p^m with m >= 2 from the numerator (tail study).
    bool primes_only = false;
};

/// Exact finite-T h(c) from the defining sums; deterministic summation
/// order with compensated accumulation.
double h_direct(const OracleParams& params, const SpfSieve& sieve,
                const OracleOptions& opts = {});

/// The three denominator sums exactly as displayed (f1^2 term, cross
/// term, double-S2 term).
std::array<double, 3> d_parts_direct(const OracleParams& params, const SpfSieve& sieve);

}  // namespace zetagap
