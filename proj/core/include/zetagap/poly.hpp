#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace zetagap {

/// Dense real polynomial on [0,1]; coeffs[m] multiplies x^m.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<double> c) : coeffs_(c) { trim(); }
    explicit Poly(std::vector<double> c) : coeffs_(std::move(c)) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly{1.0}; }

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    double operator()(double x) const {
        double v = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
        return v;
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<double> out(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * o.coeffs_[j];
        return Poly(std::move(out));
    }

    Poly scaled(double t) const {
        std::vector<double> out = coeffs_;
        for (double& c : out) c *= t;
        return Poly(std::move(out));
    }

    /// Coefficients F_i with p(x) = sum_i F_i (1-x)^i.
    std::vector<double> about_one() const {
        // x^j = (1-(1-x))^j expanded binomially
        std::vector<double> F(coeffs_.size(), 0.0);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            double binom = 1.0;
            for (std::size_t s = 0; s <= j; ++s) {
                F[s] += coeffs_[j] * ((s % 2) ? -binom : binom);
                binom = binom * static_cast<double>(j - s) / static_cast<double>(s + 1);
            }
        }
        return F;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
    }
    std::vector<double> coeffs_;
};

}  // namespace zetagap
