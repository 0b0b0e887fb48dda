#include "zetagap/arith.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zetagap {

SpfSieve::SpfSieve(std::uint64_t limit, std::uint64_t cap) : limit_(limit) {
    if (limit < 2)
        throw std::invalid_argument("SpfSieve: limit must be at least 2, got " +
                                    std::to_string(limit));
    if (cap > kHardCap) cap = kHardCap;
    if (limit > cap)
        throw std::invalid_argument(
            "SpfSieve: limit " + std::to_string(limit) + " exceeds memory cap " +
            std::to_string(cap) + " (4 bytes per entry; raise cap up to 2^31 if intended)");

    table_.assign(limit + 1, 0);
    for (std::uint64_t i = 2; i <= limit; i += 2) table_[i] = 2;
    for (std::uint64_t i = 3; i * i <= limit; i += 2) {
        if (table_[i] != 0) continue;
        for (std::uint64_t j = i * i; j <= limit; j += 2 * i)
            if (table_[j] == 0) table_[j] = static_cast<std::uint32_t>(i);
    }
    for (std::uint64_t i = 3; i <= limit; i += 2)
        if (table_[i] == 0) table_[i] = static_cast<std::uint32_t>(i);
}

Factorization factorize(std::uint64_t n, const SpfSieve& sieve) {
    if (n == 0 || n > sieve.limit())
        throw std::invalid_argument("factorize: n=" + std::to_string(n) +
                                    " outside sieve range [1, " +
                                    std::to_string(sieve.limit()) + "]");
    Factorization fac;
    while (n > 1) {
        const std::uint64_t p = sieve.spf(n);
        int m = 0;
        while (n % p == 0) {
            n /= p;
            ++m;
        }
        fac.factors.push_back({p, m});
    }
    return fac;
}

double von_mangoldt(std::uint64_t n, const SpfSieve& sieve) {
    if (n == 1) return 0.0;
    const Factorization fac = factorize(n, sieve);
    if (fac.omega() != 1) return 0.0;
    return std::log(static_cast<double>(fac.factors[0].prime));
}

int liouville(std::uint64_t n, const SpfSieve& sieve) {
    if (n == 1) return 1;
    return (factorize(n, sieve).big_omega() % 2) ? -1 : 1;
}

double d_r(const Factorization& fac, double r) {
    if (r < 1.0)
        throw std::domain_error("d_r: requires r >= 1, got " + std::to_string(r));
    double v = 1.0;
    for (const auto& f : fac.factors) {
        double t = 1.0;
        for (int j = 0; j < f.exponent; ++j) t *= (r + j) / (j + 1);
        v *= t;
    }
    return v;
}

double d_r(std::uint64_t n, double r, const SpfSieve& sieve) {
    if (r < 1.0)
        throw std::domain_error("d_r: requires r >= 1, got " + std::to_string(r));
    if (n == 1) return 1.0;
    return d_r(factorize(n, sieve), r);
}

double ordered_tuple_sum(const Factorization& fac, std::span<const int> exps) {
    if (exps.empty() || exps.size() > 4)
        throw std::invalid_argument("ordered_tuple_sum: tuple length must be 1..4");
    const int t = static_cast<int>(exps.size());
    const int w = fac.omega();
    if (w < t) return 0.0;

    double logs[64];
    for (int i = 0; i < w; ++i)
        logs[i] = std::log(static_cast<double>(fac.factors[i].prime));

    // ordered tuples of distinct prime indices, weight prod log^{exps[pos]}
    double total = 0.0;
    bool used[64] = {};
    auto rec = [&](auto&& self, int pos, double acc) -> void {
        if (pos == t) {
            total += acc;
            return;
        }
        for (int i = 0; i < w; ++i) {
            if (used[i]) continue;
            used[i] = true;
            double term = acc;
            for (int e = 0; e < exps[pos]; ++e) term *= logs[i];
            self(self, pos + 1, term);
            used[i] = false;
        }
    };
    rec(rec, 0, 1.0);
    return total;
}

double ordered_tuple_sum(std::uint64_t n, std::span<const int> exps, const SpfSieve& sieve) {
    if (exps.empty() || exps.size() > 4)
        throw std::invalid_argument("ordered_tuple_sum: tuple length must be 1..4");
    if (n == 1) return 0.0;
    return ordered_tuple_sum(factorize(n, sieve), exps);
}

}  // namespace zetagap
