#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace zetagap {

struct PrimePower {
    std::uint64_t prime;
    int exponent;
};

/// Canonical factorization, primes strictly increasing.
struct Factorization {
    std::vector<PrimePower> factors;

    int omega() const { return static_cast<int>(factors.size()); }
    int big_omega() const {
        int s = 0;
        for (const auto& f : factors) s += f.exponent;
        return s;
    }
};

/// Smallest-prime-factor table for 2..limit. Immutable once built;
/// safe to share across threads.
class SpfSieve {
public:
    /// Default memory cap 2^25 entries; raise explicitly up to 2^31.
    static constexpr std::uint64_t kDefaultCap = 1ull << 25;
    static constexpr std::uint64_t kHardCap = 1ull << 31;

    explicit SpfSieve(std::uint64_t limit, std::uint64_t cap = kDefaultCap);

    std::uint64_t limit() const { return limit_; }
    std::uint32_t spf(std::uint64_t n) const { return table_[n]; }
    bool is_prime(std::uint64_t n) const { return n >= 2 && table_[n] == n; }

    std::span<const std::uint32_t> table() const { return table_; }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> table_;
};

Factorization factorize(std::uint64_t n, const SpfSieve& sieve);

/// log p if n = p^m, else 0.
double von_mangoldt(std::uint64_t n, const SpfSieve& sieve);

/// (-1)^Omega(n).
int liouville(std::uint64_t n, const SpfSieve& sieve);

/// Generalized divisor function, multiplicative with
/// d_r(p^m) = r(r+1)...(r+m-1)/m!. Requires r >= 1.
double d_r(std::uint64_t n, double r, const SpfSieve& sieve);
double d_r(const Factorization& fac, double r);

/// Sum over ordered tuples of pairwise-distinct primes (p_1,...,p_t)
/// with every p_i | n, of prod_i log^{exps[i]} p_i. Tuple length 1..4.
double ordered_tuple_sum(std::uint64_t n, std::span<const int> exps, const SpfSieve& sieve);
double ordered_tuple_sum(const Factorization& fac, std::span<const int> exps);

}  // namespace zetagap
