#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lrgap/trigpoly.hpp"

using namespace lrgap;

namespace {
double fejer_closed_form(int m, double x) {
    const double s = std::sin(std::numbers::pi * x);
    const double sm = std::sin(std::numbers::pi * m * x);
    return (sm * sm) / (s * s) / m;
}
}  // namespace

TEST_CASE("fejer kernel coefficients and values") {
    const TrigPoly k4 = fejer(4);
    CHECK(k4.degree() == 3);
    CHECK(k4.coeff(0) == doctest::Approx(1.0));
    CHECK(k4.coeff(1) == doctest::Approx(0.75));
    CHECK(k4.coeff(2) == doctest::Approx(0.5));
    CHECK(k4.coeff(3) == doctest::Approx(0.25));
    CHECK(k4.eval(0.0) == doctest::Approx(4.0));
    CHECK(std::abs(k4.eval(0.25)) < 1e-12);
    CHECK(std::abs(fejer(3).eval(1.0 / 3.0)) < 1e-12);
    CHECK(fejer(1).degree() == 0);
    CHECK(fejer(1).eval(0.37) == doctest::Approx(1.0));
    CHECK_THROWS_AS(fejer(0), std::invalid_argument);
}

TEST_CASE("fejer matches the closed form at random points") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int m : {2, 5, 13, 50}) {
        const TrigPoly K = fejer(m);
        int tested = 0;
        while (tested < 250) {
            const double x = uni(rng);
            if (std::abs(std::sin(std::numbers::pi * x)) < 1e-3) continue;
            CHECK(std::abs(K.eval(x) - fejer_closed_form(m, x)) < 1e-9);
            ++tested;
        }
    }
}

TEST_CASE("cos_sq") {
    const TrigPoly f = cos_sq(3);
    CHECK(f.coeff(0) == doctest::Approx(0.5));
    CHECK(f.coeff(3) == doctest::Approx(0.25));
    CHECK(f.coeff(1) == 0.0);
    CHECK(f.coeff(2) == 0.0);
    CHECK(f.eval(0.0) == doctest::Approx(1.0));
    CHECK(f.mass() == doctest::Approx(0.5));
    CHECK(std::abs(f.eval(0.5)) < 1e-12);  // cos(3 pi / 2)^2 = 0
    const TrigPoly g = cos_sq(1);
    CHECK(g.coeff(0) == doctest::Approx(0.5));
    CHECK(g.coeff(1) == doctest::Approx(0.25));
}

TEST_CASE("dilate relabels coefficients and is pointwise f(ax)") {
    CHECK(dilate(TrigPoly({1.0}), 5).eval(0.3) == doctest::Approx(1.0));
    const TrigPoly d = dilate(fejer(3), 2);
    CHECK(d.degree() == 4);
    CHECK(d.coeff(0) == doctest::Approx(1.0));
    CHECK(d.coeff(2) == doctest::Approx(2.0 / 3.0));
    CHECK(d.coeff(4) == doctest::Approx(1.0 / 3.0));
    CHECK(d.coeff(1) == 0.0);
    CHECK(d.coeff(3) == 0.0);

    CHECK(dilate(fejer(4), 2).eval(0.125) == doctest::Approx(fejer(4).eval(0.25)));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double x = uni(rng);
        CHECK(std::abs(dilate(fejer(5), 3).eval(x) - fejer(5).eval(3 * x)) < 1e-10);
    }
}

TEST_CASE("shift_const") {
    CHECK(shift_const(TrigPoly({0.0}), 1.0).eval(0.2) == doctest::Approx(1.0));
    const TrigPoly s = shift_const(fejer(4), -1.0);
    CHECK(s.coeff(0) == doctest::Approx(0.0));
    CHECK(s.eval(0.1) == doctest::Approx(fejer(4).eval(0.1) - 1.0));
    CHECK(s.mass() == doctest::Approx(fejer(4).mass() - 1.0));
}

TEST_CASE("dft round trips") {
    const TrigPoly k4 = fejer(4);
    const TrigPoly r = dft_coeffs([&](double x) { return k4.eval(x); }, 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(r.coeff(k) == doctest::Approx(k4.coeff(k)).epsilon(1e-10));

    const TrigPoly c = dft_coeffs([](double) { return 7.0; }, 0);
    CHECK(c.coeff(0) == doctest::Approx(7.0));

    const TrigPoly cs = dft_coeffs([](double x) { return cos_sq(2).eval(x); }, 2);
    CHECK(cs.coeff(0) == doctest::Approx(0.5));
    CHECK(cs.coeff(1) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(cs.coeff(2) == doctest::Approx(0.25));

    // round trip at higher degree bound than needed, plus offset grid
    const TrigPoly r2 = dft_coeffs([&](double x) { return k4.eval(x); }, 9, 0.25);
    for (int k = 0; k <= 9; ++k)
        CHECK(std::abs(r2.coeff(k) - k4.coeff(k)) < 1e-10);
}

TEST_CASE("dft rejects non-even input") {
    CHECK_THROWS_AS(
        dft_coeffs([](double x) { return std::sin(2 * std::numbers::pi * x); }, 3),
        std::domain_error);
}

TEST_CASE("rigorous_min certificates") {
    const CertifiedExtremum c1 = rigorous_min(TrigPoly({1.0}), 0.0, 0.5);
    CHECK(c1.bound <= 1.0);
    CHECK(c1.bound >= 1.0 - 1e-8);

    const CertifiedExtremum c2 = rigorous_min(fejer(4), 0.0, 0.5);
    CHECK(c2.bound <= 0.0 + 1e-15);
    CHECK(c2.bound >= -1e-8 * c2.sup_norm_bound);

    const CertifiedExtremum c3 = rigorous_min(shift_const(cos_sq(1), -1.0), 0.0, 0.5);
    CHECK(c3.bound <= -1.0);
    CHECK(c3.bound >= -1.0 - 1e-6);

    CHECK_THROWS_AS(rigorous_min(fejer(2), 0.3, 0.3), std::invalid_argument);
}

TEST_CASE("rigorous_min is a true lower bound for random polynomials") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<double> c(8);
        for (double& x : c) x = uni(rng);
        const TrigPoly f(c);
        const CertifiedExtremum cert = rigorous_min(f, 0.1, 0.5);
        double dense = 1e300;
        for (int j = 0; j <= 20000; ++j)
            dense = std::min(dense, f.eval(0.1 + 0.4 * j / 20000.0));
        CHECK(cert.bound <= dense + 1e-15);
        CHECK(cert.bound >= dense - 1e-6 * std::max(1.0, cert.sup_norm_bound));
    }
}

TEST_CASE("hat function and coefficients") {
    CHECK(hat(0.25, 0.0) == doctest::Approx(0.25));
    CHECK(hat(0.25, 0.25) == doctest::Approx(0.0));
    CHECK(hat(0.25, 0.75) == doctest::Approx(0.0));
    CHECK(hat(0.25, 1.1) == doctest::Approx(0.15));
    CHECK(hat_coeff(0.25, 0) == doctest::Approx(1.0 / 16.0));
    CHECK(hat_coeff(0.5, 1) ==
          doctest::Approx(1.0 / (std::numbers::pi * std::numbers::pi)));
    CHECK_THROWS_AS(hat(0.7, 0.1), std::invalid_argument);
}

TEST_CASE("hat Fourier synthesis converges slowly to the hat") {
    for (const double delta : {0.25, 1.0 / 3.0}) {
        for (const double x : {0.0, 0.1, 0.3, 0.49}) {
            double s = hat_coeff(delta, 0);
            for (int k = 1; k <= 1000; ++k)
                s += 2.0 * hat_coeff(delta, k) *
                     std::cos(2.0 * std::numbers::pi * k * x);
            CHECK(std::abs(s - hat(delta, x)) < 1e-3);
        }
    }
}

TEST_CASE("thm31_poly") {
    const TrigPoly f = thm31_poly(1, 4);
    CHECK(f.eval(0.0) == doctest::Approx(4.0));
    CHECK(f.mass() == doctest::Approx(1.0));
    for (int j = 1; j <= 3; ++j)
        CHECK(std::abs(f.eval(j / 4.0)) < 1e-9);

    // condition (II'): f <= 0 on [1/5, 1/2] for q = 5
    const TrigPoly f5 = thm31_poly(1, 5);
    for (int j = 0; j <= 10000; ++j) {
        const double x = 0.2 + 0.3 * j / 10000.0;
        CHECK(f5.eval(x) <= 1e-9);
    }

    // support: coefficients live on {0} + a*{1..q-1} for a = 1
    for (int q : {4, 5, 7}) {
        const TrigPoly g = thm31_poly(1, q);
        CHECK(g.degree() <= q - 1);
    }

    CHECK_THROWS_AS(thm31_poly(2, 4), std::invalid_argument);  // gcd != 1
    CHECK_THROWS_AS(thm31_poly(1, 2), std::invalid_argument);

    // dilated variant still passes its internal checks
    const TrigPoly f3a2 = thm31_poly(2, 5);
    CHECK(f3a2.eval(0.0) == doctest::Approx(5.0));
    CHECK(f3a2.mass() == doctest::Approx(1.0));
}

TEST_CASE("round trip for every constructed polynomial") {
    const std::vector<TrigPoly> polys = {fejer(6), cos_sq(4), dilate(fejer(3), 3),
                                         thm31_poly(1, 5)};
    for (const TrigPoly& f : polys) {
        const TrigPoly r =
            dft_coeffs([&](double x) { return f.eval(x); }, f.degree());
        for (int k = 0; k <= f.degree(); ++k)
            CHECK(std::abs(r.coeff(k) - f.coeff(k)) < 1e-10);
    }
}
