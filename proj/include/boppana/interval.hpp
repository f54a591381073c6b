#pragma once

// Outward-rounded interval arithmetic over IEEE doubles.
//
// No rounding-mode switching: the four basic operations recover the exact
// rounding error with TwoSum / FMA residuals and step one ulp outward only
// when the rounded result is inexact in that direction. Transcendentals are
// assumed faithfully rounded and are widened by kTranscendentalUlps on each
// side. Where long double carries more mantissa bits than double they are
// evaluated and widened in long double, then rounded outward to double.

#include <iosfwd>

#include "boppana/errors.hpp"
#include "boppana/scalar.hpp"

namespace boppana {

// Worst-case libm error absorbed around log, log1p and exp results.
inline constexpr int kTranscendentalUlps = 2;

class Interval {
public:
    // Throws DomainError unless lo <= hi and both are finite.
    Interval(double lo, double hi);
    explicit Interval(double value) : Interval(value, value) {}

    static Interval point(double value) { return Interval(value); }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    double mid() const noexcept { return lo_ + (hi_ - lo_) / 2.0; }

    bool contains(double v) const noexcept { return lo_ <= v && v <= hi_; }
    bool contains(const Interval& other) const noexcept { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool intersects(const Interval& other) const noexcept { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    bool is_point() const noexcept { return lo_ == hi_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double lo_;
    double hi_;
};

Interval hull(const Interval& a, const Interval& b);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Throws DomainError if the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

inline Interval iv_add(const Interval& a, const Interval& b) { return a + b; }
inline Interval iv_sub(const Interval& a, const Interval& b) { return a - b; }
inline Interval iv_mul(const Interval& a, const Interval& b) { return a * b; }
inline Interval iv_div(const Interval& a, const Interval& b) { return a / b; }
inline Interval iv_neg(const Interval& a) { return -a; }

// Requires a.lo() > 0.
Interval iv_log(const Interval& a);
// Requires a.lo() > -1.
Interval iv_log1p(const Interval& a);
Interval iv_exp(const Interval& a);
Interval iv_expm1(const Interval& a);

// t^p for t >= 0 and real p > 0 (monotone increasing in t).
Interval iv_pow_real(const Interval& x, double p);

// t^k on a subinterval of [0,1]. Integer exponents up to 64 are evaluated by
// repeated multiplication, others as exp(k log t). Endpoints 0 and 1 map
// exactly to 0 and 1.
Interval iv_pow(const Interval& x, Exponent k);

// Enclosure of the binary entropy over x, using monotonicity on either side
// of the peak at 1/2. The result always lies within [0, up(log 2)].
Interval iv_entropy(const Interval& x);

// Enclosure of alpha * h(t^k) - t^(k-1) * h(t) over alpha and t in x. Where
// t^k >= 1/2, h(t^k) is evaluated from 1 - t^k = -expm1(k log t).
Interval iv_defect(Exponent k, const Interval& alpha, const Interval& x);

// Smallest double above log 2.
double ln2_upper() noexcept;

std::ostream& operator<<(std::ostream& os, const Interval& iv);

}  // namespace boppana
