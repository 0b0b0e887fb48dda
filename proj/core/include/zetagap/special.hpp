#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace zetagap {

/// log Gamma(x) for x > 0, relative error <= 1e-13.
double ln_gamma(double x);

/// B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
double beta(double a, double b);

/// Thrown when the subdivision budget runs out; carries the best
/// estimate and its error bound.
struct QuadratureError : std::runtime_error {
    QuadratureError(double est, double err_bound, const char* what_arg)
        : std::runtime_error(what_arg), estimate(est), error_bound(err_bound) {}
    double estimate;
    double error_bound;
};

/// Adaptive Gauss-Kronrod (G7,K15) with interval halving; absolute
/// tolerance. Throws QuadratureError on budget exhaustion.
double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_panels = 4000);

/// int_0^1 sin(pi c w) / w * (1-w)^beta dw, integrand extended by
/// continuity to pi*c at w=0. Absolute tolerance 1e-11.
double kernel_I(double beta, double c);

/// int_0^1 sin(pi c w) * (1-w)^beta dw. Absolute tolerance 1e-11.
double kernel_J(double beta, double c);

/// Memoizes kernel_I/kernel_J values; concurrent reads behind a mutex.
/// Cached and uncached evaluation agree exactly (values stored verbatim).
class KernelCache {
public:
    enum class Kind { I, J };

    double get(Kind kind, double beta, double c) {
        const Key key{beta, c, kind};
        {
            std::lock_guard lock(mu_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        const double v = (kind == Kind::I) ? kernel_I(beta, c) : kernel_J(beta, c);
        std::lock_guard lock(mu_);
        cache_.emplace(key, v);
        return v;
    }

    std::size_t size() const {
        std::lock_guard lock(mu_);
        return cache_.size();
    }

private:
    using Key = std::tuple<double, double, Kind>;
    mutable std::mutex mu_;
    std::map<Key, double> cache_;
};

}  // namespace zetagap
