#include "boppana/interval.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <string>

namespace boppana {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude an FMA residual may itself be rounded.
constexpr double kResidualExactFloor = 0x1p-960;

double next_up(double x) { return std::nextafter(x, kInf); }
double next_down(double x) { return std::nextafter(x, -kInf); }

[[maybe_unused]] double step_up(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) {
        x = next_up(x);
    }
    return x;
}

[[maybe_unused]] double step_down(double x, int ulps) {
    for (int i = 0; i < ulps; ++i) {
        x = next_down(x);
    }
    return x;
}

struct Bounds {
    double lo;
    double hi;
};

// Directed bounds of a rounded result r given the sign of (exact - r).
Bounds from_error_sign(double r, double err) {
    if (err > 0.0) {
        return {r, next_up(r)};
    }
    if (err < 0.0) {
        return {next_down(r), r};
    }
    return {r, r};
}

Bounds add_bounds(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return from_error_sign(s, err);
}

Bounds mul_bounds(double a, double b) {
    if (a == 0.0 || b == 0.0) {
        return {0.0, 0.0};
    }
    const double p = a * b;
    if (std::abs(p) < kResidualExactFloor) {
        return {next_down(p), next_up(p)};
    }
    return from_error_sign(p, std::fma(a, b, -p));
}

Bounds div_bounds(double a, double b) {
    if (a == 0.0) {
        return {0.0, 0.0};
    }
    const double r = a / b;
    if (std::abs(r) < kResidualExactFloor || std::abs(a) < kResidualExactFloor) {
        return {next_down(r), next_up(r)};
    }
    // a - r*b has the sign of (a/b - r) times the sign of b.
    const double rem = std::fma(-r, b, a);
    return from_error_sign(r, b > 0.0 ? rem : -rem);
}

using Wide = long double;
constexpr bool kWideIsWider = LDBL_MANT_DIG > DBL_MANT_DIG;

double round_down(Wide v) {
    double d = static_cast<double>(v);
    if (static_cast<Wide>(d) > v) {
        d = next_down(d);
    }
    return d;
}

double round_up(Wide v) {
    double d = static_cast<double>(v);
    if (static_cast<Wide>(d) < v) {
        d = next_up(d);
    }
    return d;
}

// Widens [f(lo), f(hi)] for a monotone increasing libm function f.
template <typename DoubleFn, typename WideFn>
Interval widen_transcendental(double lo, double hi, DoubleFn f, WideFn wide_f) {
    if constexpr (kWideIsWider) {
        Wide lo_value = wide_f(static_cast<Wide>(lo));
        Wide hi_value = wide_f(static_cast<Wide>(hi));
        for (int i = 0; i < kTranscendentalUlps; ++i) {
            lo_value = std::nextafter(lo_value, -static_cast<Wide>(kInf));
            hi_value = std::nextafter(hi_value, static_cast<Wide>(kInf));
        }
        return Interval(round_down(lo_value), round_up(hi_value));
    } else {
        return Interval(step_down(f(lo), kTranscendentalUlps), step_up(f(hi), kTranscendentalUlps));
    }
}

Interval clamp_to(const Interval& a, double lo, double hi) {
    return Interval(std::clamp(a.lo(), lo, hi), std::clamp(a.hi(), lo, hi));
}

bool is_small_integer(double k) { return k == std::floor(k) && k >= 1.0 && k <= 64.0; }

Interval integer_power(const Interval& base, long n) {
    Interval result(1.0);
    Interval square = base;
    while (n > 0) {
        if (n & 1) {
            result = result * square;
        }
        n >>= 1;
        if (n > 0) {
            square = square * square;
        }
    }
    return result;
}

// Enclosure of t^p at a single point t >= 0.
Interval point_power(double t, double p) {
    if (t == 0.0) {
        return Interval(0.0);
    }
    if (t == 1.0) {
        return Interval(1.0);
    }
    if (is_small_integer(p)) {
        return integer_power(Interval(t), static_cast<long>(p));
    }
    return iv_exp(Interval(p) * iv_log(Interval(t)));
}

// Enclosure of h(s) at a single point s in [0, 1/2].
Interval small_side_entropy(double s) {
    if (s == 0.0) {
        return Interval(0.0);
    }
    if constexpr (kWideIsWider) {
        // Both terms are nonnegative and each carries a few long double
        // roundings plus libm error, well inside 32 LDBL_EPSILON relative.
        const Wide ws = s;
        const Wide t1 = -ws * std::log(ws);
        const Wide t2 = -(1.0L - ws) * std::log1p(-ws);
        const Wide h = t1 + t2;
        const Wide err = 32.0L * LDBL_EPSILON * h;
        return clamp_to(Interval(round_down(h - err), round_up(h + err)), 0.0, ln2_upper());
    } else {
        const Interval si(s);
        const Interval ci = Interval(1.0) - si;
        const Interval h = -(si * iv_log(si)) - ci * iv_log1p(-si);
        return clamp_to(h, 0.0, ln2_upper());
    }
}

// Enclosure of h(t) at a single point t in [0,1].
Interval point_entropy(double t) {
    if (t == 1.0) {
        return Interval(0.0);
    }
    // 1 - t is exact for t >= 1/2.
    return small_side_entropy(t <= 0.5 ? t : 1.0 - t);
}

// Enclosure of h(x^k), keeping 1 - x^k to full relative precision when x^k
// is close to 1.
Interval power_entropy(const Interval& x, Exponent k) {
    const Interval p = iv_pow(x, k);
    if (p.lo() < 0.5 || x.lo() == 0.0) {
        return iv_entropy(p);
    }
    const Interval c = clamp_to(-iv_expm1(Interval(k.value()) * iv_log(x)), 0.0, 0.5);
    // h is increasing in the complement on [0, 1/2]. Both enclosures are
    // valid, so keep their intersection.
    const Interval direct = iv_entropy(p);
    return Interval(std::max(small_side_entropy(c.lo()).lo(), direct.lo()),
                    std::min(small_side_entropy(c.hi()).hi(), direct.hi()));
}

void require_unit(const Interval& x, const char* op) {
    if (x.lo() < 0.0 || x.hi() > 1.0) {
        throw DomainError(std::string(op) + ": interval must lie within [0,1]");
    }
}

}  // namespace

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("Interval: endpoints must be finite");
    }
    if (!(lo <= hi)) {
        throw DomainError("Interval: lo must not exceed hi");
    }
}

double ln2_upper() noexcept { return next_up(std::numbers::ln2); }

Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(add_bounds(a.lo(), b.lo()).lo, add_bounds(a.hi(), b.hi()).hi);
}

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

Interval operator*(const Interval& a, const Interval& b) {
    const Bounds p[4] = {mul_bounds(a.lo(), b.lo()), mul_bounds(a.lo(), b.hi()),
                         mul_bounds(a.hi(), b.lo()), mul_bounds(a.hi(), b.hi())};
    double lo = p[0].lo;
    double hi = p[0].hi;
    for (const Bounds& q : p) {
        lo = std::min(lo, q.lo);
        hi = std::max(hi, q.hi);
    }
    return Interval(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains(0.0)) {
        throw DomainError("Interval division: divisor contains zero");
    }
    const Bounds p[4] = {div_bounds(a.lo(), b.lo()), div_bounds(a.lo(), b.hi()),
                         div_bounds(a.hi(), b.lo()), div_bounds(a.hi(), b.hi())};
    double lo = p[0].lo;
    double hi = p[0].hi;
    for (const Bounds& q : p) {
        lo = std::min(lo, q.lo);
        hi = std::max(hi, q.hi);
    }
    return Interval(lo, hi);
}

Interval iv_log(const Interval& a) {
    if (!(a.lo() > 0.0)) {
        throw DomainError("iv_log: interval must be strictly positive");
    }
    if (a.is_point() && a.lo() == 1.0) {
        return Interval(0.0);
    }
    return widen_transcendental(
        a.lo(), a.hi(), [](double v) { return std::log(v); }, [](Wide v) { return std::log(v); });
}

Interval iv_log1p(const Interval& a) {
    if (!(a.lo() > -1.0)) {
        throw DomainError("iv_log1p: interval must lie above -1");
    }
    if (a.is_point() && a.lo() == 0.0) {
        return Interval(0.0);
    }
    return widen_transcendental(
        a.lo(), a.hi(), [](double v) { return std::log1p(v); }, [](Wide v) { return std::log1p(v); });
}

Interval iv_exp(const Interval& a) {
    if (a.is_point() && a.lo() == 0.0) {
        return Interval(1.0);
    }
    const Interval r = widen_transcendental(
        a.lo(), a.hi(), [](double v) { return std::exp(v); }, [](Wide v) { return std::exp(v); });
    return Interval(std::max(r.lo(), 0.0), r.hi());
}

Interval iv_expm1(const Interval& a) {
    if (a.is_point() && a.lo() == 0.0) {
        return Interval(0.0);
    }
    const Interval r = widen_transcendental(
        a.lo(), a.hi(), [](double v) { return std::expm1(v); }, [](Wide v) { return std::expm1(v); });
    return Interval(std::max(r.lo(), -1.0), r.hi());
}

Interval iv_pow_real(const Interval& x, double p) {
    if (x.lo() < 0.0) {
        throw DomainError("iv_pow_real: base must be nonnegative");
    }
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError("iv_pow_real: exponent must be positive and finite");
    }
    const Interval lo = point_power(x.lo(), p);
    const Interval hi = point_power(x.hi(), p);
    return Interval(std::max(lo.lo(), 0.0), hi.hi());
}

Interval iv_pow(const Interval& x, Exponent k) {
    require_unit(x, "iv_pow");
    return clamp_to(iv_pow_real(x, k.value()), 0.0, 1.0);
}

Interval iv_entropy(const Interval& x) {
    require_unit(x, "iv_entropy");
    const Interval at_lo = point_entropy(x.lo());
    if (x.is_point()) {
        return at_lo;
    }
    const Interval at_hi = point_entropy(x.hi());
    if (x.hi() <= 0.5) {
        return Interval(at_lo.lo(), at_hi.hi());
    }
    if (x.lo() >= 0.5) {
        return Interval(at_hi.lo(), at_lo.hi());
    }
    return Interval(std::min(at_lo.lo(), at_hi.lo()), ln2_upper());
}

Interval iv_defect(Exponent k, const Interval& alpha, const Interval& x) {
    require_unit(x, "iv_defect");
    const Interval lhs = alpha * power_entropy(x, k);
    const Interval rhs = clamp_to(iv_pow_real(x, k.value() - 1.0), 0.0, 1.0) * iv_entropy(x);
    return lhs - rhs;
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
    const auto old = os.precision(17);
    os << '[' << iv.lo() << ", " << iv.hi() << ']';
    os.precision(old);
    return os;
}

}  // namespace boppana
