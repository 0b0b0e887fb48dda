#include "zetagap/optimizer.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zetagap {

namespace {

Poly poly_from(const Eigen::VectorXd& a, int offset, int deg) {
    if (deg < 0) return Poly::zero();
    std::vector<double> c(deg + 1);
    for (int i = 0; i <= deg; ++i) c[i] = a[offset + i];
    return Poly(std::move(c));
}

double target_of(Mode mode, double c) { return mode == Mode::Plain ? c - 1.0 : 1.0 - c; }

}  // namespace

std::pair<Poly, Poly> QuadForm::split(const Eigen::VectorXd& a) const {
    return {poly_from(a, 0, deg1), poly_from(a, deg1 + 1, deg2)};
}

QuadForm assemble_forms(int deg1, int deg2, double r, double c, KernelCache& cache) {
    if (deg1 < 0) throw std::invalid_argument("assemble_forms: deg1 must be >= 0");
    QuadForm q;
    q.deg1 = deg1;
    q.deg2 = deg2;
    q.r = r;
    q.c = c;
    const int n = q.dim();

    auto quad_d = [&](const Eigen::VectorXd& a) {
        const auto [f1, f2] = q.split(a);
        const auto d = d_parts(f1, f2, r);
        return d[0] + d[1] + d[2];
    };
    auto quad_n = [&](const Eigen::VectorXd& a) {
        const auto [f1, f2] = q.split(a);
        const auto v = n_parts(f1, f2, r, c, cache);
        return v[0] + v[1] + v[2] + v[3];
    };

    // polarization: M[i][j] = (Q(e_i+e_j) - Q(e_i) - Q(e_j)) / 2
    q.m_d.resize(n, n);
    q.m_n.resize(n, n);
    std::vector<double> diag_d(n), diag_n(n);
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        e[i] = 1.0;
        diag_d[i] = quad_d(e);
        diag_n[i] = quad_n(e);
        q.m_d(i, i) = diag_d[i];
        q.m_n(i, i) = diag_n[i];
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
            e[i] = 1.0;
            e[j] = 1.0;
            const double md = 0.5 * (quad_d(e) - diag_d[i] - diag_d[j]);
            const double mn = 0.5 * (quad_n(e) - diag_n[i] - diag_n[j]);
            q.m_d(i, j) = q.m_d(j, i) = md;
            q.m_n(i, j) = q.m_n(j, i) = mn;
        }
    }
    return q;
}

std::pair<double, Eigen::VectorXd> max_rayleigh(const QuadForm& q) {
    Eigen::LLT<Eigen::MatrixXd> llt(q.m_d);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("max_rayleigh: M_D is not positive definite");
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        q.m_n, q.m_d, Eigen::ComputeEigenvectors | Eigen::Ax_lBx);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("max_rayleigh: eigensolver failed to converge");
    const int last = q.dim() - 1;  // eigenvalues sorted ascending
    return {solver.eigenvalues()[last], solver.eigenvectors().col(last)};
}

OptResult threshold_c(double r, int deg1, int deg2, Mode mode,
                      std::optional<CBracket> bracket, double tol, KernelCache& cache) {
    const CBracket br = bracket.value_or(
        mode == Mode::Plain ? CBracket{1.05, 3.45} : CBracket{0.05, 0.95});
    auto g = [&](double c) {
        const QuadForm q = assemble_forms(deg1, deg2, r, c, cache);
        return max_rayleigh(q).first - target_of(mode, c);
    };

    // coarse scan, step 0.01
    constexpr double kStep = 0.01;
    std::vector<std::pair<double, double>> samples;
    for (double c = br.lo; c < br.hi + kStep / 2; c += kStep)
        samples.emplace_back(std::min(c, br.hi), g(std::min(c, br.hi)));

    std::vector<std::size_t> crossings;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i)
        if ((samples[i].second > 0) != (samples[i + 1].second > 0)) crossings.push_back(i);

    if (crossings.empty()) {
        std::ostringstream msg;
        msg << "threshold_c: no sign change of g(c) in [" << br.lo << ", " << br.hi
            << "] at r=" << r << "; g(lo)=" << samples.front().second
            << " g(hi)=" << samples.back().second;
        throw std::runtime_error(msg.str());
    }
    if (crossings.size() > 1)
        std::cerr << "threshold_c: " << crossings.size()
                  << " sign changes of g(c) in bracket at r=" << r
                  << "; using mode-appropriate extreme crossing\n";

    // Plain: last crossing (largest achievable c); Liouville: first.
    const std::size_t ci = (mode == Mode::Plain) ? crossings.back() : crossings.front();
    double lo = samples[ci].first, hi = samples[ci + 1].first;
    double glo = samples[ci].second;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm > 0) == (glo > 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    const double c_star = 0.5 * (lo + hi);

    // polynomials taken just inside the certified region
    const double delta = 1e-4;
    const double c_eval = (mode == Mode::Plain) ? c_star - delta : c_star + delta;
    const QuadForm q = assemble_forms(deg1, deg2, r, c_eval, cache);
    const auto [val, vec] = max_rayleigh(q);
    (void)val;

    OptResult out;
    out.mode = mode;
    out.r = r;
    out.c_star = c_star;
    std::tie(out.f1, out.f2) = q.split(vec);
    out.bound_kind = (mode == Mode::Plain) ? BoundKind::LambdaLower : BoundKind::MuUpper;
    out.h_at_c_star = h_value(out.f1, out.f2, r, c_star, mode, cache).h;
    return out;
}

ScanOutcome scan_r(const std::vector<double>& r_grid, int deg1, int deg2, Mode mode,
                   KernelCache& cache, double tol, int threads) {
    if (r_grid.empty()) throw std::invalid_argument("scan_r: empty r grid");

    const std::size_t n = r_grid.size();
    std::vector<std::optional<OptResult>> results(n);
    std::vector<std::string> errors(n);

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < n; i += stride) {
            try {
                results[i] = threshold_c(r_grid[i], deg1, deg2, mode, std::nullopt, tol, cache);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
        for (auto& th : pool) th.join();
    }

    ScanOutcome out;
    bool have_best = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!results[i]) continue;
        out.per_r.push_back({r_grid[i], *results[i]});
        const double c = results[i]->c_star;
        if (!have_best) {
            out.best = *results[i];
            have_best = true;
            continue;
        }
        const double bc = out.best.c_star;
        // ties (to 1e-6) break toward the smaller r already seen first,
        // grids being scanned in increasing order
        const bool better = (mode == Mode::Plain) ? (c > bc + 1e-6) : (c < bc - 1e-6);
        if (better) out.best = *results[i];
    }
    if (!have_best) {
        std::ostringstream msg;
        msg << "scan_r: every grid point failed; first error: ";
        for (const auto& e : errors)
            if (!e.empty()) {
                msg << e;
                break;
            }
        throw std::runtime_error(msg.str());
    }
    return out;
}

std::vector<double> default_r_grid(Mode mode) {
    std::vector<double> grid;
    if (mode == Mode::Plain)
        for (double r = 2.0; r <= 3.2 + 1e-9; r += 0.05) grid.push_back(r);
    else
        for (double r = 1.0; r <= 1.6 + 1e-9; r += 0.02) grid.push_back(r);
    return grid;
}

}  // namespace zetagap
