#pragma once

// Certified enclosures of alpha_k, the positive root of x (1 + x)^(k-1) = 1,
// and of the derived constants 1/(1 + alpha_k) and alpha_k/(1 + alpha_k).

#include "boppana/interval.hpp"
#include "boppana/scalar.hpp"

namespace boppana {

inline constexpr double kDefaultAlphaTol = 1e-12;
inline constexpr double kMinAlphaTol = 1e-14;

enum class SolveStatus {
    converged,
    // Interval sign tests could no longer separate the midpoint from the
    // root before the width reached the requested tolerance. The bracket
    // is still certified.
    precision_limited,
};

const char* to_string(SolveStatus s) noexcept;

struct AlphaCertificate {
    Exponent k;
    Interval enclosure;
    double width;
    int iterations;
    // Certified signs of f at the enclosure endpoints: -1 / 0 / +1.
    int residual_sign_lo;
    int residual_sign_hi;
    SolveStatus status;
    double requested_tol;
};

// x (1 + x)^(k-1) - 1, strictly increasing on (0, inf).
double alpha_defining_fn(Exponent k, double x);
Interval alpha_defining_fn_enclosure(Exponent k, double x);

// Bisection on [1/k, 1] with every sign decided by an interval evaluation.
AlphaCertificate solve_alpha(Exponent k, double tol = kDefaultAlphaTol);

// Certified root of x^k + x - 1 on (0,1). Also checks that the result meets
// 1/(1 + alpha_k) and throws CertificationError otherwise.
Interval equality_point(Exponent k, double tol = kDefaultAlphaTol);

// 1 / (1 + alpha) over an alpha enclosure.
Interval equality_point_from_alpha(const Interval& alpha);

// alpha_k / (1 + alpha_k).
Interval frequency_threshold(Exponent k, double tol = kDefaultAlphaTol);
Interval frequency_threshold(const AlphaCertificate& alpha);

}  // namespace boppana
