#pragma once

// Point evaluations (64-bit) of the scalar functions in the generalized
// Boppana inequality  alpha_k * h(x^k) >= x^(k-1) * h(x).

#include "boppana/errors.hpp"

namespace boppana {

// A point of the closed unit interval.
class UnitPoint {
public:
    explicit UnitPoint(double x);
    double value() const noexcept { return x_; }
    operator double() const noexcept { return x_; }

private:
    double x_;
};

// The exponent k, strictly greater than one.
class Exponent {
public:
    explicit Exponent(double k);
    double value() const noexcept { return k_; }
    operator double() const noexcept { return k_; }

private:
    double k_;
};

// Binary entropy in nats, with h(0) = h(1) = 0.
double entropy(UnitPoint x);

// h'(x) = log(1-x) - log(x), defined on the open interval only.
double entropy_deriv(double x);

// x^k on [0,1], evaluated as exp(k log x) with exact endpoints.
double unit_pow(double x, double k);

// q(x) = x^(k-1) h(x) / h(x^k), extended by its limit 1/k at x = 0 and x = 1.
double q(Exponent k, UnitPoint x);

// Derivative of q by the quotient rule.
double q_deriv(Exponent k, double x);

// U(x) = log(x) log(1-x) / h(x) on (0,1). U tends to 1 at both ends but the
// endpoints themselves are rejected.
double u_fn(double x);

// U(x) - U(x^k). Vanishes on (0,1) exactly at the critical point of q.
double u_residual(Exponent k, double x);

// Logarithmic mean (a - b) / (log a - log b), with L(a, a) = a.
double log_mean(double a, double b);

// d/dx [1/U(x)] = f'(x) - f'(1-x) where f(t) = L(1, t).
double u_recip_deriv(double x);

// alpha * h(x^k) - x^(k-1) * h(x).
double defect(Exponent k, double alpha, UnitPoint x);

}  // namespace boppana
