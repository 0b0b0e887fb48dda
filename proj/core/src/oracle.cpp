#include "zetagap/oracle.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace zetagap {

namespace {

struct KahanSum {
    double s = 0.0, comp = 0.0;
    void add(double x) {
        const double y = x - comp;
        const double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
};

void check_sieve(const OracleParams& p, const SpfSieve& sieve) {
    if (sieve.limit() < p.K)
        throw std::invalid_argument("oracle: sieve limit " + std::to_string(sieve.limit()) +
                                    " below K=" + std::to_string(p.K));
}

// b_k for all k in [1, K], one linear pass over the sieve.
std::vector<double> build_b(const OracleParams& p, const SpfSieve& sieve) {
    const std::uint64_t K = p.K;
    const double log_K = std::log(static_cast<double>(K));
    std::vector<double> dr(K + 1), slog(K + 1, 0.0), slog2(K + 1, 0.0);
    std::vector<signed char> sign(K + 1, 1);
    dr[0] = 0.0;
    dr[1] = 1.0;
    for (std::uint64_t k = 2; k <= K; ++k) {
        const std::uint64_t prime = sieve.spf(k);
        std::uint64_t n = k;
        int m = 0;
        while (n % prime == 0) {
            n /= prime;
            ++m;
        }
        double t = 1.0;
        for (int j = 0; j < m; ++j) t *= (p.r + j) / (j + 1);
        const double lp = std::log(static_cast<double>(prime));
        dr[k] = dr[n] * t;
        slog[k] = slog[n] + lp;
        slog2[k] = slog2[n] + lp * lp;
        sign[k] = (m % 2) ? static_cast<signed char>(-sign[n]) : sign[n];
    }
    std::vector<double> b(K + 1, 0.0);
    const bool twist = (p.mode == Mode::Liouville);
    for (std::uint64_t k = 1; k <= K; ++k) {
        const double x = std::log(static_cast<double>(K) / static_cast<double>(k)) / log_K;
        const double s2 = slog[k] * slog[k] - slog2[k];
        double bk = dr[k] * (p.f1(x) + s2 / (log_K * log_K) * p.f2(x));
        if (twist && sign[k] < 0) bk = -bk;
        b[k] = bk;
    }
    return b;
}

}  // namespace

OracleParams OracleParams::make(double T, double c, double r, Poly f1, Poly f2,
                                Mode mode) {
    if (!(T > 1.0)) throw std::invalid_argument("OracleParams: requires T > 1");
    const double lt = std::log(T);
    const double kf = T / (lt * lt);
    OracleParams p;
    p.T = T;
    p.K = static_cast<std::uint64_t>(kf);
    if (p.K < 2)
        throw std::invalid_argument("OracleParams: K = floor(T (log T)^-2) = " +
                                    std::to_string(p.K) + " < 2; T too small");
    p.c = c;
    p.r = r;
    p.f1 = std::move(f1);
    p.f2 = std::move(f2);
    p.mode = mode;
    return p;
}

double g_c(std::uint64_t n, double c, double T) {
    if (n < 2) throw std::invalid_argument("g_c: requires n >= 2 (Lambda(1)=0)");
    const double ln = std::log(static_cast<double>(n));
    return 2.0 * std::sin(M_PI * c * ln / std::log(T)) / (M_PI * ln);
}

double coefficient_b(std::uint64_t k, const OracleParams& params, const SpfSieve& sieve) {
    if (k < 1 || k > params.K)
        throw std::invalid_argument("coefficient_b: k=" + std::to_string(k) +
                                    " outside [1, K=" + std::to_string(params.K) + "]");
    check_sieve(params, sieve);
    const double log_K = std::log(static_cast<double>(params.K));
    const double x =
        std::log(static_cast<double>(params.K) / static_cast<double>(k)) / log_K;
    const Factorization fac = (k == 1) ? Factorization{} : factorize(k, sieve);
    double slog = 0.0, slog2 = 0.0;
    for (const auto& f : fac.factors) {
        const double lp = std::log(static_cast<double>(f.prime));
        slog += lp;
        slog2 += lp * lp;
    }
    const double s2 = slog * slog - slog2;
    double bk = d_r(fac, params.r) * (params.f1(x) + s2 / (log_K * log_K) * params.f2(x));
    if (params.mode == Mode::Liouville && fac.big_omega() % 2) bk = -bk;
    return bk;
}

double h_direct(const OracleParams& params, const SpfSieve& sieve,
                const OracleOptions& opts) {
    check_sieve(params, sieve);
    if (params.f1.is_zero() && params.f2.is_zero())
        throw std::invalid_argument("h_direct: f1 and f2 are both zero (denominator vanishes)");
    const std::uint64_t K = params.K;
    const std::vector<double> b = build_b(params, sieve);

    KahanSum den;
    for (std::uint64_t k = 1; k <= K; ++k) den.add(b[k] * b[k] / static_cast<double>(k));
    if (den.s == 0.0) throw std::invalid_argument("h_direct: denominator is zero");

    std::vector<std::uint64_t> primes;
    for (std::uint64_t n = 2; n <= K; ++n)
        if (sieve.is_prime(n)) primes.push_back(n);

    // fixed chunking over primes keeps the combine order independent of
    // the thread count
    const std::size_t n_chunks = 256;
    std::vector<double> chunk_sum(n_chunks, 0.0);
    auto run_chunk = [&](std::size_t ci) {
        const std::size_t lo = primes.size() * ci / n_chunks;
        const std::size_t hi = primes.size() * (ci + 1) / n_chunks;
        KahanSum acc;
        for (std::size_t pi = lo; pi < hi; ++pi) {
            const std::uint64_t p = primes[pi];
            const double log_p = std::log(static_cast<double>(p));
            for (std::uint64_t n = p; n <= K; n *= p) {
                if (opts.primes_only && n != p) break;
                const double gc = g_c(n, params.c, params.T);
                KahanSum inner;
                const std::uint64_t kmax = K / n;
                for (std::uint64_t k = 1; k <= kmax; ++k)
                    inner.add(b[k] * b[n * k] / static_cast<double>(k));
                acc.add(inner.s / static_cast<double>(n) * gc * log_p);
                if (n > K / p) break;  // overflow guard on n *= p
            }
        }
        chunk_sum[ci] = acc.s;
    };

    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (std::size_t ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t ci = next.fetch_add(1); ci < n_chunks;
                     ci = next.fetch_add(1))
                    run_chunk(ci);
            });
        for (auto& th : pool) th.join();
    }
    KahanSum num;
    for (std::size_t ci = 0; ci < n_chunks; ++ci) num.add(chunk_sum[ci]);

    // the Liouville twist lives in the coefficients; h is c - N/D either way
    return params.c - num.s / den.s;
}

std::array<double, 3> d_parts_direct(const OracleParams& params, const SpfSieve& sieve) {
    check_sieve(params, sieve);
    const std::uint64_t K = params.K;
    const double log_K = std::log(static_cast<double>(K));
    KahanSum s1, s2sum, s3;
    for (std::uint64_t k = 1; k <= K; ++k) {
        const Factorization fac = (k == 1) ? Factorization{} : factorize(k, sieve);
        double slog = 0.0, slog2 = 0.0;
        for (const auto& f : fac.factors) {
            const double lp = std::log(static_cast<double>(f.prime));
            slog += lp;
            slog2 += lp * lp;
        }
        const double s2k = (slog * slog - slog2) / (log_K * log_K);
        const double x =
            std::log(static_cast<double>(K) / static_cast<double>(k)) / log_K;
        const double dr2 = d_r(fac, params.r) * d_r(fac, params.r);
        const double w = dr2 / static_cast<double>(k);
        const double v1 = params.f1(x), v2 = params.f2(x);
        s1.add(w * v1 * v1);
        s2sum.add(2.0 * w * v1 * v2 * s2k);
        s3.add(w * v2 * v2 * s2k * s2k);
    }
    return {s1.s, s2sum.s, s3.s};
}

}  // namespace zetagap
