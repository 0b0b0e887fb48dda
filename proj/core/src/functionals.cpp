#include "zetagap/functionals.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace zetagap {

namespace {

// int_0^1 (1-v)^beta p(v) dv, term-wise after expansion about 1.
double weighted_moment(const Poly& p, double beta_exp) {
    double s = 0.0;
    const auto F = p.about_one();
    for (std::size_t i = 0; i < F.size(); ++i) s += F[i] / (beta_exp + i + 1);
    return s;
}

// sum_m gamma_m * K(a+1+m, c) with K = kernel_I or kernel_J.
double collapse_sum(const Poly& f, const Poly& g, double a, double c,
                    KernelCache::Kind kind, KernelCache& cache) {
    const auto gamma = rebase_pair(f, g, a);
    double s = 0.0;
    for (std::size_t m = 0; m < gamma.size(); ++m)
        if (gamma[m] != 0.0) s += gamma[m] * cache.get(kind, a + 1 + m, c);
    return s;
}

void check_r(double r) {
    if (!(r >= 1.0))
        throw std::domain_error("functionals: requires r >= 1, got " + std::to_string(r));
}

}  // namespace

std::vector<double> rebase_pair(const Poly& f, const Poly& g, double a) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto F = f.about_one();
    const auto& G = g.coeffs();
    std::vector<double> gamma(F.size() + G.size() - 1, 0.0);
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (F[i] == 0.0) continue;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (G[j] == 0.0) continue;
            // g(v-w) term: G_j ((1-w)-(1-v))^j, expanded binomially;
            // each (1-v)^{a+i+s} integrates to (1-w)^{a+i+s+1}/(a+i+s+1)
            double binom = 1.0;
            double acc = 0.0;
            for (std::size_t s = 0; s <= j; ++s) {
                acc += ((s % 2) ? -binom : binom) / (a + i + s + 1);
                binom = binom * static_cast<double>(j - s) / static_cast<double>(s + 1);
            }
            gamma[i + j] += F[i] * G[j] * acc;
        }
    }
    return gamma;
}

std::array<double, 3> d_parts(const Poly& f1, const Poly& f2, double r) {
    check_r(r);
    const double r2 = r * r;
    const double d1 = r2 * weighted_moment(f1 * f1, r2 - 1);
    double d2 = 0.0, d3 = 0.0;
    if (!f2.is_zero()) {
        if (!f1.is_zero())
            d2 = 2 * std::pow(r, 6) * beta(2, r2) * weighted_moment(f1 * f2, r2 + 1);
        const double c3 =
            std::pow(r, 10) / 6 + 2 * std::pow(r, 8) / 3 + std::pow(r, 6) / 3;
        d3 = c3 * beta(4, r2) * weighted_moment(f2 * f2, r2 + 3);
    }
    return {d1, d2, d3};
}

std::array<double, 4> n_parts(const Poly& f1, const Poly& f2, double r, double c,
                              KernelCache& cache) {
    check_r(r);
    if (!(c > 0.0))
        throw std::domain_error("n_parts: requires c > 0, got " + std::to_string(c));
    const double r2 = r * r;
    using K = KernelCache::Kind;

    double n1 = 0.0, n2 = 0.0, n3 = 0.0, n4 = 0.0;
    if (!f1.is_zero())
        n1 = 2 * std::pow(r, 3) / M_PI * collapse_sum(f1, f1, r2 - 1, c, K::I, cache);
    if (!f1.is_zero() && !f2.is_zero()) {
        n2 = 2 * std::pow(r, 7) / M_PI * beta(2, r2) *
             collapse_sum(f2, f1, r2 + 1, c, K::I, cache);
        const double n31 = 2 * std::pow(r, 7) / M_PI * beta(2, r2) *
                           collapse_sum(f1, f2, r2 + 1, c, K::I, cache);
        const double n32 = 4 * std::pow(r, 5) / (M_PI * r2) *
                           collapse_sum(f1, f2, r2, c, K::J, cache);
        n3 = n31 + n32;
    }
    if (!f2.is_zero()) {
        const double c4a =
            std::pow(r, 11) / 3 + 4 * std::pow(r, 9) / 3 + 2 * std::pow(r, 7) / 3;
        const double n4a = c4a / M_PI * beta(4, r2) *
                           collapse_sum(f2, f2, r2 + 3, c, K::I, cache);
        const double n4b = (2 * std::pow(r, 9) + 4 * std::pow(r, 7)) / M_PI *
                           beta(3, r2) * collapse_sum(f2, f2, r2 + 2, c, K::J, cache);
        n4 = n4a + n4b;
    }
    return {n1, n2, n3, n4};
}

namespace {

// Nested quadrature of  prefac * int_0^1 (1-u)^q [ int_0^u (u-v)^{r^2-1}
// mid(v) * inner_w(v) dv ] du,  where inner_w is either the identity-free
// product mid(v)*inner(v) pattern of the triple integrals, or absent.
double sine_over(double x, double pic) { return x < 1e-300 ? pic : std::sin(pic * x) / x; }

double triple_nested(const Poly& mid, const Poly& inner, double r2, double c,
                     double u_weight_pow, bool over_w) {
    const double pic = M_PI * c;
    auto inner_int = [&](double v) {
        if (v <= 0.0) return 0.0;
        return adaptive_quad(
            [&](double w) {
                const double k = over_w ? sine_over(w, pic) : std::sin(pic * w);
                return k * inner(v - w);
            },
            0.0, v, 1e-12);
    };
    auto mid_int = [&](double u) {
        if (u <= 0.0) return 0.0;
        return adaptive_quad(
            [&](double v) { return std::pow(u - v, r2 - 1) * mid(v) * inner_int(v); },
            0.0, u, 1e-11, 8000);
    };
    return adaptive_quad(
        [&](double u) { return std::pow(1.0 - u, u_weight_pow) * mid_int(u); }, 0.0,
        1.0, 1e-10, 8000);
}

double double_nested(const Poly& prod, double r2, double u_weight_pow) {
    auto inner = [&](double u) {
        if (u <= 0.0) return 0.0;
        return adaptive_quad(
            [&](double v) { return std::pow(u - v, r2 - 1) * prod(v); }, 0.0, u, 1e-12);
    };
    return adaptive_quad(
        [&](double u) { return std::pow(1.0 - u, u_weight_pow) * inner(u); }, 0.0, 1.0,
        1e-11, 8000);
}

}  // namespace

double nested_reference(const Poly& f1, const Poly& f2, double r, double c,
                        NestedPart which) {
    check_r(r);
    const double r2 = r * r;
    const double pic = M_PI * c;
    switch (which) {
        case NestedPart::D1:
            return r2 * adaptive_quad(
                            [&](double u) {
                                const double v = f1(u);
                                return std::pow(1.0 - u, r2 - 1) * v * v;
                            },
                            0.0, 1.0, 1e-12);
        case NestedPart::D2:
            return 2 * std::pow(r, 6) * double_nested(f1 * f2, r2, 1.0);
        case NestedPart::D3:
            return (std::pow(r, 10) / 6 + 2 * std::pow(r, 8) / 3 + std::pow(r, 6) / 3) *
                   double_nested(f2 * f2, r2, 3.0);
        case NestedPart::N1:
            return 2 * std::pow(r, 3) / M_PI *
                   adaptive_quad(
                       [&](double u) {
                           if (u <= 0.0) return 0.0;
                           const double in = adaptive_quad(
                               [&](double v) { return sine_over(v, pic) * f1(u - v); },
                               0.0, u, 1e-12);
                           return std::pow(1.0 - u, r2 - 1) * f1(u) * in;
                       },
                       0.0, 1.0, 1e-11, 8000);
        case NestedPart::N2:
            return 2 * std::pow(r, 7) / M_PI * triple_nested(f2, f1, r2, c, 1.0, true);
        case NestedPart::N31:
            return 2 * std::pow(r, 7) / M_PI * triple_nested(f1, f2, r2, c, 1.0, true);
        case NestedPart::N32:
            return 4 * std::pow(r, 5) / M_PI * triple_nested(f1, f2, r2, c, 0.0, false);
        case NestedPart::N4a:
            return (std::pow(r, 11) / 3 + 4 * std::pow(r, 9) / 3 +
                    2 * std::pow(r, 7) / 3) /
                   M_PI * triple_nested(f2, f2, r2, c, 3.0, true);
        case NestedPart::N4b:
            return (2 * std::pow(r, 9) + 4 * std::pow(r, 7)) / M_PI *
                   triple_nested(f2, f2, r2, c, 2.0, false);
    }
    throw std::logic_error("nested_reference: bad part");
}

HcBreakdown h_value(const Poly& f1, const Poly& f2, double r, double c, Mode mode,
                    KernelCache& cache) {
    if (f1.is_zero() && f2.is_zero())
        throw std::invalid_argument("h_value: f1 and f2 are both zero (denominator vanishes)");
    const auto d = d_parts(f1, f2, r);
    const auto n = n_parts(f1, f2, r, c, cache);
    HcBreakdown out;
    out.d1 = d[0];
    out.d2 = d[1];
    out.d3 = d[2];
    out.n1 = n[0];
    out.n2 = n[1];
    out.n3 = n[2];
    out.n4 = n[3];
    out.mode = mode;
    const double ratio = out.numerator() / out.denominator();
    out.h = (mode == Mode::Plain) ? c - ratio : c + ratio;
    return out;
}

}  // namespace zetagap
