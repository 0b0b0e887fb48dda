#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "zetagap/special.hpp"

using namespace zetagap;

TEST_CASE("ln_gamma against high-precision references") {
    CHECK(std::abs(ln_gamma(1.0)) < 1e-14);
    CHECK(std::abs(ln_gamma(2.0)) < 1e-14);
    CHECK(ln_gamma(0.5) == doctest::Approx(0.572364942924700087).epsilon(1e-13));
    CHECK(ln_gamma(6.76) == doctest::Approx(6.13426030442388041).epsilon(1e-13));
    CHECK(ln_gamma(23.4) == doctest::Approx(49.7201544822112790).epsilon(1e-13));
    CHECK(ln_gamma(0.0013) == doctest::Approx(6.64464202324002619).epsilon(1e-13));
    CHECK(ln_gamma(49.99) == doctest::Approx(144.526725059745289).epsilon(1e-13));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.5), std::domain_error);
}

TEST_CASE("beta values") {
    CHECK(beta(1, 1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(beta(2, 4) == doctest::Approx(0.05).epsilon(1e-13));
    CHECK(beta(2, 6.76) == doctest::Approx(0.0190630147013969377).epsilon(1e-13));
    CHECK_THROWS_AS(beta(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(beta(1.0, -2.0), std::domain_error);
}

TEST_CASE("beta symmetry and recurrence") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> dist(0.05, 10.0);
    for (int t = 0; t < 100; ++t) {
        const double a = dist(rng), b = dist(rng);
        CHECK(beta(a, b) == doctest::Approx(beta(b, a)).epsilon(1e-12));
        CHECK(beta(a, b) == doctest::Approx(beta(a + 1, b) * (a + b) / a).epsilon(1e-12));
    }
}

TEST_CASE("adaptive_quad closed forms") {
    CHECK(adaptive_quad([](double x) { return x; }, 0, 1, 1e-12) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(adaptive_quad([](double x) { return std::sin(M_PI * x); }, 0, 1, 1e-12) ==
          doctest::Approx(2.0 / M_PI).epsilon(1e-12));
    CHECK(adaptive_quad([](double x) { return std::pow(1 - x, 5.76); }, 0, 1, 1e-12) ==
          doctest::Approx(0.147928994082840237).epsilon(1e-11));
}

TEST_CASE("adaptive_quad argument checks and budget exhaustion") {
    CHECK_THROWS_AS(adaptive_quad([](double) { return 0.0; }, 1, 0, 1e-9),
                    std::invalid_argument);
    CHECK_THROWS_AS(adaptive_quad([](double) { return 0.0; }, 0, 1, 0.0),
                    std::invalid_argument);
    try {
        // |x|^-0.9 is integrable but brutal; 4 panels cannot resolve it
        adaptive_quad([](double x) { return std::pow(std::abs(x) + 1e-306, -0.9); },
                      0, 1, 1e-14, 4);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.estimate > 0.0);
        CHECK(e.error_bound > 1e-14);
    }
}

TEST_CASE("kernel_I reference values") {
    // beta=0, c=1 is the sine integral at pi
    CHECK(kernel_I(0, 1) == doctest::Approx(1.85193705198246617).epsilon(1e-11));
    // small-c limit: kernel_I(0,c)/(pi c) -> 1
    CHECK(kernel_I(0, 1e-6) / (M_PI * 1e-6) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(kernel_I(5, 2) == doctest::Approx(0.854097756239745958).epsilon(1e-10));
}

TEST_CASE("kernel_J reference values") {
    CHECK(kernel_J(0, 1) == doctest::Approx(2.0 / M_PI).epsilon(1e-11));
    CHECK(std::abs(kernel_J(0, 2)) < 1e-11);
    CHECK(kernel_J(6.76, 2.7327) == doctest::Approx(0.0689791622080950685).epsilon(1e-10));
}

TEST_CASE("kernels decrease in beta for c <= 1") {
    for (double c : {0.3, 0.7, 1.0}) {
        double prev_i = kernel_I(0, c), prev_j = kernel_J(0, c);
        for (double b : {0.5, 1.0, 2.0, 4.0, 8.0}) {
            const double ki = kernel_I(b, c), kj = kernel_J(b, c);
            CHECK(ki < prev_i);
            CHECK(kj < prev_j);
            CHECK(ki > 0.0);
            CHECK(kj > 0.0);
            prev_i = ki;
            prev_j = kj;
        }
    }
}

TEST_CASE("kernel_I pointwise bound") {
    // |sin(pi c w)/w| <= pi c, so |kernel_I| <= pi c/(beta+1)
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> bdist(0.0, 12.0), cdist(0.01, 1.0);
    for (int t = 0; t < 50; ++t) {
        const double b = bdist(rng), c = cdist(rng);
        CHECK(std::abs(kernel_I(b, c)) <= M_PI * c / (b + 1) + 1e-11);
    }
}

TEST_CASE("kernel cache agrees with direct evaluation") {
    KernelCache cache;
    const double v1 = cache.get(KernelCache::Kind::I, 5.76, 2.7327);
    const double v2 = cache.get(KernelCache::Kind::I, 5.76, 2.7327);
    CHECK(v1 == v2);
    CHECK(v1 == kernel_I(5.76, 2.7327));
    CHECK(cache.get(KernelCache::Kind::J, 5.76, 2.7327) == kernel_J(5.76, 2.7327));
    CHECK(cache.size() == 2);
}
