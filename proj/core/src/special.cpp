#include "zetagap/special.hpp"

#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace zetagap {

namespace {

// Lanczos, g = 607/128, 15 terms (Godfrey's coefficients).
constexpr double kLanczosG = 4.7421875;
constexpr double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};
constexpr double kHalfLog2Pi = 0.91893853320467274178;

// Gauss-Kronrod (G7, K15) on [-1,1]: abscissa, Gauss weight, Kronrod weight.
constexpr double kGK[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Panel {
    double a, b, value, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g7 = kGK[0][1] * y0;
    double k15 = kGK[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK[i][0];
        const double ys = f(mid + dx) + f(mid - dx);
        g7 += kGK[i][1] * ys;
        k15 += kGK[i][2] * ys;
    }
    g7 *= half;
    k15 *= half;
    return {a, b, k15, std::abs(k15 - g7)};
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("ln_gamma: requires x > 0, got " + std::to_string(x));
    double a = kLanczos[0];
    for (int k = 1; k < 15; ++k) a += kLanczos[k] / (x - 1.0 + k);
    const double t = x + kLanczosG - 0.5;
    return kHalfLog2Pi + std::log(a) + (x - 0.5) * std::log(t) - t;
}

double beta(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("beta: requires a, b > 0");
    return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double adaptive_quad(const std::function<double(double)>& f, double a, double b,
                     double tol, int max_panels) {
    if (!(a < b)) throw std::invalid_argument("adaptive_quad: requires a < b");
    if (!(tol > 0.0)) throw std::invalid_argument("adaptive_quad: requires tol > 0");

    std::priority_queue<Panel> heap;
    Panel p0 = evaluate_panel(f, a, b);
    double total = p0.value;
    double total_err = p0.err;
    heap.push(p0);
    int panels = 1;

    while (total_err > tol) {
        if (panels >= max_panels)
            throw QuadratureError(total, total_err,
                                  "adaptive_quad: subdivision budget exhausted");
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = evaluate_panel(f, worst.a, mid);
        const Panel right = evaluate_panel(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    return total;
}

double kernel_I(double beta_exp, double c) {
    const double pic = M_PI * c;
    auto f = [beta_exp, pic](double w) {
        const double base = (w < 1e-300) ? pic : std::sin(pic * w) / w;
        return base * std::pow(1.0 - w, beta_exp);
    };
    return adaptive_quad(f, 0.0, 1.0, 1e-11);
}

double kernel_J(double beta_exp, double c) {
    const double pic = M_PI * c;
    auto f = [beta_exp, pic](double w) {
        return std::sin(pic * w) * std::pow(1.0 - w, beta_exp);
    };
    return adaptive_quad(f, 0.0, 1.0, 1e-11);
}

}  // namespace zetagap
