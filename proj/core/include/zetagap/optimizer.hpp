#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "zetagap/functionals.hpp"
#include "zetagap/poly.hpp"

namespace zetagap {

/// N and D as quadratic forms over the joint coefficient vector
/// (f1 coeffs, then f2 coeffs). deg2 < 0 means f2 disabled.
struct QuadForm {
    int deg1 = 0;
    int deg2 = -1;
    double r = 0;
    double c = 0;
    Eigen::MatrixXd m_d;
    Eigen::MatrixXd m_n;

    int dim() const { return deg1 + 1 + (deg2 >= 0 ? deg2 + 1 : 0); }
    /// Split a joint coefficient vector back into (f1, f2).
    std::pair<Poly, Poly> split(const Eigen::VectorXd& a) const;
};

enum class BoundKind { LambdaLower, MuUpper };

struct OptResult {
    Mode mode = Mode::Plain;
    double r = 0;
    double c_star = 0;
    Poly f1, f2;
    double h_at_c_star = 0;
    BoundKind bound_kind = BoundKind::LambdaLower;
};

QuadForm assemble_forms(int deg1, int deg2, double r, double c, KernelCache& cache);

/// Largest generalized eigenvalue of (M_N, M_D) with an eigenvector;
/// M_D must be positive definite.
std::pair<double, Eigen::VectorXd> max_rayleigh(const QuadForm& q);

struct CBracket {
    double lo, hi;
};

/// Root of g(c) = maxRayleigh(c) - target(c), target = c-1 (Plain) or
/// 1-c (Liouville). Coarse scan at step 0.01, then bisection to tol.
/// Plain takes the last sign change in the bracket, Liouville the first.
OptResult threshold_c(double r, int deg1, int deg2, Mode mode,
                      std::optional<CBracket> bracket, double tol, KernelCache& cache);

struct ScanEntry {
    double r;
    OptResult result;
};

struct ScanOutcome {
    OptResult best;
    std::vector<ScanEntry> per_r;
};

/// threshold_c over an r grid; best = max c_star (Plain) / min (Liouville),
/// ties broken toward smaller r. Grid points run on up to `threads` workers.
ScanOutcome scan_r(const std::vector<double>& r_grid, int deg1, int deg2, Mode mode,
                   KernelCache& cache, double tol = 1e-5, int threads = 1);

/// Default r grid per mode: Plain 2.0..3.2 step 0.05, Liouville 1.0..1.6
/// step 0.02.
std::vector<double> default_r_grid(Mode mode);

}  // namespace zetagap
