#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "zetagap/functionals.hpp"

using namespace zetagap;

namespace {

const Poly kF1Lambda{-3.54, -42.94, 88.05, -34.33};
const Poly kF2Lambda{4.56, 63.02, 42.72, 34.45};

// (2/pi)(Si(pi) - 2/pi); Si(pi) = 1.85193705198246617
constexpr double kN1UnitValue = 0.77369500990281604;

Poly random_poly(std::mt19937_64& rng, int deg) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> c(deg + 1);
    for (auto& x : c) x = dist(rng);
    return Poly(std::move(c));
}

double rebased_value(const Poly& f, const Poly& g, double a, double w) {
    const auto gamma = rebase_pair(f, g, a);
    double s = 0.0;
    for (std::size_t m = 0; m < gamma.size(); ++m)
        s += gamma[m] * std::pow(1.0 - w, a + 1 + m);
    return s;
}

}  // namespace

TEST_CASE("rebase_pair hand-checked cases") {
    // int_w^1 (1-v)^2 dv = (1-w)^3/3
    auto g1 = rebase_pair(Poly::one(), Poly::one(), 2.0);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));

    // int_w^1 (1-v)(v-w) dv = (1-w)^3/6
    auto g2 = rebase_pair(Poly::one(), Poly{0, 1}, 1.0);
    REQUIRE(g2.size() == 2);
    CHECK(g2[0] == doctest::Approx(0.0));
    CHECK(g2[1] == doctest::Approx(1.0 / 6).epsilon(1e-14));
}

TEST_CASE("rebase_pair matches quadrature at w=0.37") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> adist(0.1, 9.0);
    for (int t = 0; t < 20; ++t) {
        const Poly f = random_poly(rng, 3), g = random_poly(rng, 3);
        const double a = adist(rng);
        const double w = 0.37;
        const double direct = adaptive_quad(
            [&](double v) { return std::pow(1.0 - v, a) * f(v) * g(v - w); }, w, 1.0,
            1e-12);
        CHECK(rebased_value(f, g, a, w) == doctest::Approx(direct).epsilon(1e-10));
    }
}

TEST_CASE("d_parts closed forms at r=1") {
    auto d = d_parts(Poly::one(), Poly::zero(), 1.0);
    CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d[1] == 0.0);
    CHECK(d[2] == 0.0);

    d = d_parts(Poly::one(), Poly::one(), 1.0);
    CHECK(d[1] == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(d[2] == doctest::Approx(7.0 / 120).epsilon(1e-13));

    CHECK_THROWS_AS(d_parts(Poly::one(), Poly::one(), 0.5), std::domain_error);
}

TEST_CASE("n_parts base cases") {
    KernelCache cache;
    auto n = n_parts(Poly::one(), Poly::zero(), 1.0, 1.0, cache);
    CHECK(n[0] == doctest::Approx(kN1UnitValue).epsilon(1e-10));
    CHECK(n[1] == 0.0);
    CHECK(n[2] == 0.0);
    CHECK(n[3] == 0.0);

    n = n_parts(Poly::zero(), Poly::zero(), 2.0, 1.5, cache);
    CHECK(n == std::array<double, 4>{0, 0, 0, 0});

    CHECK_THROWS_AS(n_parts(Poly::one(), Poly::one(), 1.0, 0.0, cache),
                    std::domain_error);
    CHECK_THROWS_AS(n_parts(Poly::one(), Poly::one(), 0.3, 1.0, cache),
                    std::domain_error);
}

TEST_CASE("n_parts vanish as c -> 0") {
    KernelCache cache;
    const auto n = n_parts(kF1Lambda, kF2Lambda, 2.6, 1e-8, cache);
    for (double v : n) CHECK(std::abs(v) < 1e-4);
}

TEST_CASE("nested_reference hand values") {
    CHECK(nested_reference(Poly::one(), Poly::one(), 1.0, 1.0, NestedPart::D2) ==
          doctest::Approx(1.0 / 3).epsilon(1e-8));
    CHECK(nested_reference(Poly::one(), Poly::zero(), 1.0, 1.0, NestedPart::N1) ==
          doctest::Approx(kN1UnitValue).epsilon(1e-8));
}

TEST_CASE("nested_reference D1 equals collapsed d1") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> rdist(1.0, 3.0);
    for (int t = 0; t < 5; ++t) {
        const Poly f1 = random_poly(rng, 3);
        const double r = rdist(rng);
        const double collapsed = d_parts(f1, Poly::zero(), r)[0];
        CHECK(nested_reference(f1, Poly::zero(), r, 1.0, NestedPart::D1) ==
              doctest::Approx(collapsed).epsilon(1e-9));
    }
}

TEST_CASE("dual-route agreement on a few random tuples") {
    // the full 20-tuple sweep over all nine parts runs in the acceptance suite
    KernelCache cache;
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> rdist(1.1, 3.0), cdist(0.3, 3.0);
    for (int t = 0; t < 3; ++t) {
        const Poly f1 = random_poly(rng, 3), f2 = random_poly(rng, 2);
        const double r = rdist(rng), c = cdist(rng);
        const auto n = n_parts(f1, f2, r, c, cache);
        const double n2_ref = nested_reference(f1, f2, r, c, NestedPart::N2);
        CHECK(n[1] == doctest::Approx(n2_ref).epsilon(1e-8));
        const auto d = d_parts(f1, f2, r);
        CHECK(d[1] == doctest::Approx(nested_reference(f1, f2, r, c, NestedPart::D2))
                          .epsilon(1e-8));
    }
}

TEST_CASE("h_value witness cases and sign flip") {
    KernelCache cache;
    const auto plain = h_value(Poly::one(), Poly::zero(), 1.0, 1.0, Mode::Plain, cache);
    CHECK(plain.h == doctest::Approx(1.0 - kN1UnitValue).epsilon(1e-10));
    const auto twisted =
        h_value(Poly::one(), Poly::zero(), 1.0, 1.0, Mode::Liouville, cache);
    CHECK(twisted.h == doctest::Approx(1.0 + kN1UnitValue).epsilon(1e-10));

    const auto witness =
        h_value(kF1Lambda, kF2Lambda, 2.6, 2.7327, Mode::Plain, cache);
    CHECK(witness.h < 1.0);

    CHECK_THROWS_AS(h_value(Poly::zero(), Poly::zero(), 1.0, 1.0, Mode::Plain, cache),
                    std::invalid_argument);
}

TEST_CASE("h is invariant under joint scaling") {
    KernelCache cache;
    const double h0 = h_value(kF1Lambda, kF2Lambda, 2.6, 2.7327, Mode::Plain, cache).h;
    for (double t : {-2.0, 0.5, 10.0}) {
        const double ht =
            h_value(kF1Lambda.scaled(t), kF2Lambda.scaled(t), 2.6, 2.7327, Mode::Plain,
                    cache)
                .h;
        CHECK(ht == doctest::Approx(h0).epsilon(1e-10));
    }
}

TEST_CASE("f2 = 0 decouples every f2-carrying part") {
    KernelCache cache;
    std::mt19937_64 rng(43);
    const Poly f1 = random_poly(rng, 3);
    const auto d = d_parts(f1, Poly::zero(), 2.2);
    CHECK(d[1] == 0.0);
    CHECK(d[2] == 0.0);
    const auto n = n_parts(f1, Poly::zero(), 2.2, 1.7, cache);
    CHECK(n[1] == 0.0);
    CHECK(n[2] == 0.0);
    CHECK(n[3] == 0.0);
}

TEST_CASE("sign structure of the denominator parts") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> rdist(1.0, 3.0);
    for (int t = 0; t < 30; ++t) {
        const Poly f1 = random_poly(rng, 3), f2 = random_poly(rng, 3);
        const auto d = d_parts(f1, f2, rdist(rng));
        CHECK(d[0] >= 0.0);
        CHECK(d[2] >= 0.0);
        if (!f2.is_zero()) CHECK(d[2] > 0.0);
    }
}

TEST_CASE("nested log-integral identity (D = 100, cosine test function)") {
    // m-fold nested log-moment integrals collapse to a single weighted
    // integral with coefficient prod (a_i - 1)! / (sum a_i)!
    const double D = 100.0;
    const double logD = std::log(D);
    auto f = [&](double x) { return std::cos(M_PI * std::log(x) / logD); };
    auto fact = [](int n) { return n <= 1 ? 1.0 : n == 2 ? 2.0 : n == 3 ? 6.0 : 24.0; };

    auto closed_form = [&](int asum, double coef) {
        return coef * adaptive_quad(
                          [&](double x) {
                              return f(x) * std::pow(std::log(x), asum) / x;
                          },
                          1.0, D, 1e-10, 20000);
    };

    for (int a1 : {1, 2}) {
        // m = 1
        const double nested = adaptive_quad(
            [&](double x1) {
                const double inner = adaptive_quad(
                    [&](double x) { return f(x1 * x) / x; }, 1.0, D / x1, 1e-11, 20000);
                return std::pow(std::log(x1), a1 - 1) / x1 * inner;
            },
            1.0, D, 1e-9, 20000);
        const double expect = closed_form(a1, fact(a1 - 1) / fact(a1));
        CHECK(nested == doctest::Approx(expect).epsilon(1e-6));
    }
    for (int a1 : {1, 2}) {
        for (int a2 : {1, 2}) {
            // m = 2
            const double nested = adaptive_quad(
                [&](double x1) {
                    const double mid = adaptive_quad(
                        [&](double x2) {
                            const double inner = adaptive_quad(
                                [&](double x) { return f(x1 * x2 * x) / x; }, 1.0,
                                D / (x1 * x2), 1e-11, 20000);
                            return std::pow(std::log(x2), a2 - 1) / x2 * inner;
                        },
                        1.0, D / x1, 1e-10, 20000);
                    return std::pow(std::log(x1), a1 - 1) / x1 * mid;
                },
                1.0, D, 1e-8, 20000);
            const int asum = a1 + a2;
            const double coef = fact(a1 - 1) * fact(a2 - 1) / fact(asum);
            const double expect = closed_form(asum, coef);
            CHECK(nested == doctest::Approx(expect).epsilon(1e-6));
        }
    }
}
