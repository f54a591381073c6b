#include <doctest.h>

#include <cmath>

#include "boppana/alpha.hpp"
#include "support.hpp"

using namespace boppana;

namespace {

// Long-double bisection oracles, independent of the interval code.
double alpha_oracle(double k) {
    const long double kl = k;
    return static_cast<double>(
        testing::bisect([kl](long double a) { return a * std::pow(1 + a, kl - 1) - 1; }, 0.0L, 1.0L));
}

double equality_oracle(double k) {
    const long double kl = k;
    return static_cast<double>(testing::bisect([kl](long double x) { return std::pow(x, kl) + x - 1; }, 0.0L, 1.0L));
}

const double kGrid[] = {1.01, 1.1, 1.5, 2, 3, 4, 5, 10, 20, 100};

}  // namespace

TEST_CASE("alpha_defining_fn examples") {
    CHECK(std::abs(alpha_defining_fn(Exponent(2), (std::sqrt(5.0) - 1.0) / 2.0)) < 1e-15);
    CHECK(alpha_defining_fn(Exponent(3), 1e-300) == doctest::Approx(-1.0));
    CHECK(std::abs(alpha_defining_fn(Exponent(3), 0.4655712319)) < 1e-9);
    CHECK_THROWS_AS(alpha_defining_fn(Exponent(2), 0.0), DomainError);
    CHECK_THROWS_AS(alpha_defining_fn(Exponent(2), -1.0), DomainError);
}

TEST_CASE("alpha_defining_fn is increasing") {
    for (double k : kGrid) {
        double prev = -1.0;
        for (int i = 1; i <= 1000; ++i) {
            const double v = alpha_defining_fn(Exponent(k), i / 500.0);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("solve_alpha examples") {
    const AlphaCertificate a2 = solve_alpha(Exponent(2), 1e-12);
    CHECK(a2.enclosure.contains(0.6180339887498949));
    CHECK(a2.width <= 1e-12);
    CHECK(a2.status == SolveStatus::converged);

    const AlphaCertificate a3 = solve_alpha(Exponent(3), 1e-12);
    CHECK(a3.enclosure.contains(alpha_oracle(3)));
    CHECK(a3.enclosure.lo() == doctest::Approx(0.46557123187676803).epsilon(1e-11));

    const AlphaCertificate a20 = solve_alpha(Exponent(20), 1e-12);
    CHECK(a20.enclosure.lo() > 0.05);
    CHECK(a20.enclosure.contains(alpha_oracle(20)));

    CHECK_THROWS_AS(solve_alpha(Exponent(2), 1e-15), DomainError);
    CHECK_THROWS_AS(solve_alpha(Exponent(2), 0.0), DomainError);
}

TEST_CASE("certificates bracket the root and respect alpha > 1/k") {
    for (double k : kGrid) {
        const AlphaCertificate c = solve_alpha(Exponent(k));
        CHECK(c.enclosure.lo() > 0.0);
        CHECK(c.enclosure.hi() < 1.0);
        CHECK(c.enclosure.lo() > 1.0 / k);
        CHECK(c.width <= 1e-12);
        CHECK(alpha_defining_fn_enclosure(Exponent(k), c.enclosure.lo()).hi() <= 0.0);
        CHECK(alpha_defining_fn_enclosure(Exponent(k), c.enclosure.hi()).lo() >= 0.0);
        CHECK(c.residual_sign_lo <= 0);
        CHECK(c.residual_sign_hi >= 0);
        CHECK(c.enclosure.contains(alpha_oracle(k)));
    }
}

TEST_CASE("tightest tolerance still certifies or reports precision limits") {
    const AlphaCertificate c = solve_alpha(Exponent(2), 1e-14);
    CHECK(c.enclosure.contains(0.6180339887498949));
    if (c.status == SolveStatus::converged) {
        CHECK(c.width <= 1e-14);
    } else {
        CHECK(c.width > 1e-14);
    }
}

TEST_CASE("refinement is nested") {
    for (double k : {1.5, 2.0, 7.0}) {
        Interval previous = solve_alpha(Exponent(k), 1e-2).enclosure;
        for (double tol = 5e-3; tol >= 1e-14; tol /= 2) {
            const Interval current = solve_alpha(Exponent(k), tol).enclosure;
            CHECK(previous.contains(current));
            previous = current;
        }
    }
}

TEST_CASE("equality_point examples") {
    CHECK(equality_point(Exponent(2)).contains(0.6180339887498949));
    const Interval e3 = equality_point(Exponent(3));
    CHECK(e3.contains(equality_oracle(3)));
    CHECK(std::abs(e3.mid() - 0.6823278038) < 1e-9);
    for (double k : {1.5, 2.0, 7.0}) {
        const Interval via_alpha = equality_point_from_alpha(solve_alpha(Exponent(k)).enclosure);
        CHECK(equality_point(Exponent(k)).intersects(via_alpha));
    }
    for (double k : kGrid) {
        CHECK(equality_point(Exponent(k)).contains(equality_oracle(k)));
    }
}

TEST_CASE("frequency_threshold examples") {
    CHECK(frequency_threshold(Exponent(2)).contains((3.0 - std::sqrt(5.0)) / 2.0));
    const double a3 = alpha_oracle(3);
    CHECK(frequency_threshold(Exponent(3)).contains(a3 / (1.0 + a3)));
    CHECK(frequency_threshold(Exponent(3)).mid() == doctest::Approx(0.31767219617198067).epsilon(1e-11));
    for (double k : {2.0, 3.0, 5.0, 20.0}) {
        const Interval t = frequency_threshold(Exponent(k));
        CHECK(t.lo() > 0.0);
        CHECK(t.hi() < 0.5);
    }
}
