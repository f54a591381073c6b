#include "boppana/alpha.hpp"

#include <cmath>
#include <string>

namespace boppana {

namespace {

void require_tol(double tol) {
    if (!(tol >= kMinAlphaTol) || !std::isfinite(tol)) {
        throw DomainError("tolerance must be a finite value >= 1e-14, got " + std::to_string(tol));
    }
}

int certified_sign(const Interval& v) {
    if (v.hi() < 0.0) {
        return -1;
    }
    if (v.lo() > 0.0) {
        return 1;
    }
    return 0;
}

struct Bracket {
    double lo;
    double hi;
    Interval f_lo;
    Interval f_hi;
    int iterations = 0;
    SolveStatus status = SolveStatus::converged;
};

// Bisection for an increasing function whose value at a point is given as an
// enclosure. The invariant f(lo) <= 0 <= f(hi) is only ever advanced by
// sign tests that the enclosure decides.
template <typename F>
Bracket certified_bisection(F&& f, double lo, double hi, double tol, const char* what) {
    Bracket b{lo, hi, f(lo), f(hi)};
    if (!(b.f_lo.hi() <= 0.0) || !(b.f_hi.lo() >= 0.0)) {
        throw CertificationError(std::string(what) + ": initial bracket does not certify a sign change");
    }
    while (b.hi - b.lo > tol) {
        const double mid = b.lo + (b.hi - b.lo) / 2.0;
        if (mid <= b.lo || mid >= b.hi) {
            b.status = SolveStatus::precision_limited;
            break;
        }
        const Interval fm = f(mid);
        if (fm.hi() <= 0.0) {
            b.lo = mid;
            b.f_lo = fm;
        } else if (fm.lo() >= 0.0) {
            b.hi = mid;
            b.f_hi = fm;
        } else {
            b.status = SolveStatus::precision_limited;
            break;
        }
        ++b.iterations;
    }
    return b;
}

}  // namespace

const char* to_string(SolveStatus s) noexcept {
    switch (s) {
        case SolveStatus::converged:
            return "converged";
        case SolveStatus::precision_limited:
            return "precision_limited";
    }
    return "unknown";
}

double alpha_defining_fn(Exponent k, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("alpha_defining_fn: x must be positive, got " + std::to_string(x));
    }
    return x * std::exp((k.value() - 1.0) * std::log1p(x)) - 1.0;
}

Interval alpha_defining_fn_enclosure(Exponent k, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("alpha_defining_fn_enclosure: x must be positive, got " + std::to_string(x));
    }
    const Interval xi(x);
    const Interval km1 = Interval(k.value()) - Interval(1.0);
    return xi * iv_exp(km1 * iv_log1p(xi)) - Interval(1.0);
}

AlphaCertificate solve_alpha(Exponent k, double tol) {
    require_tol(tol);
    const auto f = [k](double x) { return alpha_defining_fn_enclosure(k, x); };
    const Bracket b = certified_bisection(f, 1.0 / k.value(), 1.0, tol, "solve_alpha");
    const Interval enclosure(b.lo, b.hi);
    return AlphaCertificate{
        .k = k,
        .enclosure = enclosure,
        .width = enclosure.width(),
        .iterations = b.iterations,
        .residual_sign_lo = certified_sign(b.f_lo),
        .residual_sign_hi = certified_sign(b.f_hi),
        .status = b.status,
        .requested_tol = tol,
    };
}

Interval equality_point_from_alpha(const Interval& alpha) {
    return Interval(1.0) / (Interval(1.0) + alpha);
}

Interval equality_point(Exponent k, double tol) {
    require_tol(tol);
    const auto g = [k](double x) {
        const Interval xi(x);
        return iv_pow(xi, k) + xi - Interval(1.0);
    };
    const Bracket b = certified_bisection(g, 0.0, 1.0, tol, "equality_point");
    const Interval root(b.lo, b.hi);
    const Interval via_alpha = equality_point_from_alpha(solve_alpha(k, tol).enclosure);
    if (!root.intersects(via_alpha)) {
        throw CertificationError("equality_point: root of x^k = 1 - x does not meet 1/(1 + alpha_k)");
    }
    return root;
}

Interval frequency_threshold(const AlphaCertificate& alpha) {
    // a / (1 + a) is increasing, so bound each end separately.
    const auto ratio = [](double a) { return Interval(a) / (Interval(1.0) + Interval(a)); };
    return Interval(ratio(alpha.enclosure.lo()).lo(), ratio(alpha.enclosure.hi()).hi());
}

Interval frequency_threshold(Exponent k, double tol) { return frequency_threshold(solve_alpha(k, tol)); }

}  // namespace boppana
