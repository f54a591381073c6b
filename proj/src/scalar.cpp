#include "boppana/scalar.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

namespace boppana {

namespace {

void require_open_unit(double x, const char* op) {
    if (!(x > 0.0 && x < 1.0)) {
        throw DomainError(std::string(op) + ": argument must lie in (0,1), got " + std::to_string(x));
    }
}

// Pieces of t = exp(log_t) for log_t < 0: t itself, 1 - t and log(1 - t),
// all without cancellation near t = 1 or underflow trouble near t = 0.
struct PowerParts {
    double t;
    double complement;
    double log_complement;
};

PowerParts power_parts(double log_t) {
    PowerParts p{};
    p.t = std::exp(log_t);
    if (p.t < 0.5) {
        p.complement = 1.0 - p.t;
        p.log_complement = std::log1p(-p.t);
    } else {
        p.complement = -std::expm1(log_t);
        p.log_complement = std::log(p.complement);
    }
    return p;
}

// h(t) for t = exp(log_t).
double entropy_at_log(double log_t) {
    const PowerParts p = power_parts(log_t);
    if (p.t == 0.0 || p.complement == 0.0) {
        return 0.0;
    }
    return -p.t * log_t - p.complement * p.log_complement;
}

// h(t) / t for t = exp(log_t). Stays finite when t underflows, where it
// tends to 1 - log_t.
double entropy_ratio_at_log(double log_t) {
    const PowerParts p = power_parts(log_t);
    if (p.t < DBL_MIN) {
        return 1.0 - log_t;
    }
    return -log_t - p.complement * (p.log_complement / p.t);
}

// U(t) for t = exp(log_t).
double u_at_log(double log_t) {
    const PowerParts p = power_parts(log_t);
    const double h = -p.t * log_t - p.complement * p.log_complement;
    return log_t * p.log_complement / h;
}

// f'(t) for f(t) = L(1, t) = (t - 1) / log t, given log_t = log t.
double log_mean_unit_deriv(double t, double log_t) {
    if (std::abs(log_t) < 1e-2) {
        // (t log t - t + 1) / (t log^2 t) = (1/t) sum_{m>=2} (m-1)/m! * l^(m-2)
        double sum = 0.0;
        double factorial = 1.0;
        double power = 1.0;
        for (int m = 2; m <= 10; ++m) {
            factorial *= m;
            sum += (m - 1) / factorial * power;
            power *= log_t;
        }
        return sum / t;
    }
    return (t * log_t - t + 1.0) / (t * log_t * log_t);
}

}  // namespace

UnitPoint::UnitPoint(double x) : x_(x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("UnitPoint: value must lie in [0,1], got " + std::to_string(x));
    }
}

Exponent::Exponent(double k) : k_(k) {
    if (!(k > 1.0) || !std::isfinite(k)) {
        throw DomainError("Exponent: k must be a finite real > 1, got " + std::to_string(k));
    }
}

double entropy(UnitPoint x) {
    const double v = x.value();
    if (v == 0.0 || v == 1.0) {
        return 0.0;
    }
    // Evaluate on the half nearer zero; 1 - v is exact for v >= 1/2 so the
    // result is symmetric bit for bit whenever the complement is representable.
    const double s = v <= 0.5 ? v : 1.0 - v;
    const double h = -s * std::log(s) - (1.0 - s) * std::log1p(-s);
    return std::min(h, std::numbers::ln2);
}

double entropy_deriv(double x) {
    require_open_unit(x, "entropy_deriv");
    return std::log1p(-x) - std::log(x);
}

double unit_pow(double x, double k) {
    if (x == 0.0) {
        return 0.0;
    }
    if (x == 1.0) {
        return 1.0;
    }
    return std::exp(k * std::log(x));
}

double q(Exponent k, UnitPoint x) {
    const double v = x.value();
    if (v == 0.0 || v == 1.0) {
        return 1.0 / k.value();
    }
    // x^(k-1) h(x) / h(x^k) = (h(x)/x) / (h(x^k)/x^k).
    const double log_x = std::log(v);
    return (entropy(x) / v) / entropy_ratio_at_log(k.value() * log_x);
}

double q_deriv(Exponent k, double x) {
    require_open_unit(x, "q_deriv");
    const double kv = k.value();
    const double log_x = std::log(x);
    const double hx = entropy(UnitPoint(x));
    const double dhx = entropy_deriv(x);
    const double log_t = kv * log_x;
    const PowerParts t = power_parts(log_t);
    const double ht = entropy_at_log(log_t);
    const double dht = t.log_complement - log_t;
    const double x_km2 = std::exp((kv - 2.0) * log_x);
    const double x_km1 = std::exp((kv - 1.0) * log_x);

    const double first = ((kv - 1.0) * x_km2 * hx + x_km1 * dhx) / ht;
    const double second = (x_km1 * hx / ht) * (dht * kv * x_km1 / ht);
    return first - second;
}

double u_fn(double x) {
    require_open_unit(x, "u_fn");
    const double s = x <= 0.5 ? x : 1.0 - x;
    return std::log(s) * std::log1p(-s) / entropy(UnitPoint(s));
}

double u_residual(Exponent k, double x) {
    require_open_unit(x, "u_residual");
    const double log_t = k.value() * std::log(x);
    if (std::exp(log_t) == 0.0) {
        throw DomainError("u_residual: x^k underflows for x = " + std::to_string(x));
    }
    return u_fn(x) - u_at_log(log_t);
}

double log_mean(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("log_mean: arguments must be positive and finite");
    }
    if (a == b) {
        return a;
    }
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    const double diff = hi - lo;
    const double mean = diff / std::log1p(diff / lo);
    return std::clamp(mean, lo, hi);
}

double u_recip_deriv(double x) {
    require_open_unit(x, "u_recip_deriv");
    if (x == 0.5) {
        return 0.0;
    }
    return log_mean_unit_deriv(x, std::log(x)) - log_mean_unit_deriv(1.0 - x, std::log1p(-x));
}

double defect(Exponent k, double alpha, UnitPoint x) {
    const double v = x.value();
    if (v == 0.0 || v == 1.0) {
        return 0.0;
    }
    const double log_x = std::log(v);
    const double lhs = alpha * entropy_at_log(k.value() * log_x);
    const double rhs = std::exp((k.value() - 1.0) * log_x) * entropy(x);
    return lhs - rhs;
}

}  // namespace boppana
