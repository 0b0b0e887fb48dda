#pragma once

#include <array>
#include <vector>

#include "zetagap/poly.hpp"
#include "zetagap/special.hpp"

namespace zetagap {

enum class Mode { Plain, Liouville };

/// Normalized leading-term values: each entry is the coefficient of
/// A_r (log T)^{r^2} in the corresponding D/N quantity. The common
/// factor cancels in h, so A_r itself is never needed.
struct HcBreakdown {
    double d1 = 0, d2 = 0, d3 = 0;
    double n1 = 0, n2 = 0, n3 = 0, n4 = 0;
    double h = 0;
    Mode mode = Mode::Plain;

    double denominator() const { return d1 + d2 + d3; }
    double numerator() const { return n1 + n2 + n3 + n4; }
};

/// gamma_m with  int_w^1 (1-v)^a f(v) g(v-w) dv = sum_m gamma_m (1-w)^{a+1+m},
/// m = 0 .. deg f + deg g.
std::vector<double> rebase_pair(const Poly& f, const Poly& g, double a);

/// (d1, d2, d3): the three denominator parts, in closed form.
std::array<double, 3> d_parts(const Poly& f1, const Poly& f2, double r);

/// (n1, n2, n3, n4): the four numerator parts via Beta-collapse to
/// one-dimensional sine-kernel integrals.
std::array<double, 4> n_parts(const Poly& f1, const Poly& f2, double r, double c,
                              KernelCache& cache);

/// Which nested integral to evaluate directly (cross-check oracle).
enum class NestedPart { D1, D2, D3, N1, N2, N31, N32, N4a, N4b };

/// Direct adaptive quadrature of the nested integral forms, including
/// their r- and pi-prefactors; no collapse. Test oracle only.
double nested_reference(const Poly& f1, const Poly& f2, double r, double c,
                        NestedPart which);

HcBreakdown h_value(const Poly& f1, const Poly& f2, double r, double c, Mode mode,
                    KernelCache& cache);

}  // namespace zetagap
