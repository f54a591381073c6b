#include "boppana/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "parallel.hpp"

namespace boppana {

namespace {

constexpr double kMinExclusion = 1e-6;
constexpr double kMaxExclusion = 1e-2;
constexpr int kMaxDepthLimit = 60;
// Decades covered by the endpoint-zone sample grid.
constexpr double kEndpointDecades = 12.0;
// Smallest distance from 1 sampled on the right; 1 - s must stay distinct from 1.
constexpr double kRightFloor = 1e-15;

void require_radius(double radius, const char* op) {
    if (!(radius > 0.0) || !(radius <= kMaxExclusion)) {
        throw DomainError(std::string(op) + ": radius must lie in (0, 1e-2]");
    }
}

void require_samples(int samples, const char* op) {
    if (samples < 2) {
        throw DomainError(std::string(op) + ": need at least 2 samples");
    }
}

struct Node {
    double lo;
    double hi;
    int depth;
};

Interval shifted_defect(Exponent k, const Interval& alpha, const Node& node, double shift) {
    const Interval d = iv_defect(k, alpha, Interval(node.lo, node.hi));
    return shift == 0.0 ? d : d - Interval(shift);
}

// Adaptive bisection of the core segments, processed one depth level at a
// time. Whether a node splits depends only on the node itself, so the leaf
// set is the same as for widest-first processing and for any worker count.
std::vector<RegionStatus> certify_core(Exponent k, const Interval& alpha, const std::vector<Node>& roots,
                                       const CertifyOptions& options) {
    std::vector<RegionStatus> leaves;
    std::vector<Node> frontier = roots;
    std::vector<Interval> values;
    while (!frontier.empty()) {
        values.assign(frontier.size(), Interval(0.0));
        detail::parallel_for(frontier.size(), options.workers, [&](std::size_t i) {
            values[i] = shifted_defect(k, alpha, frontier[i], options.defect_shift);
        });

        std::vector<Node> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            const Node& node = frontier[i];
            const Interval& d = values[i];
            RegionStatus leaf{Interval(node.lo, node.hi), RegionKind::core, Status::inconclusive, d.lo(), node.depth};
            if (d.lo() > 0.0) {
                leaf.status = Status::certified_positive;
            } else if (d.hi() < 0.0) {
                leaf.status = Status::failed;
            } else {
                const double mid = node.lo + (node.hi - node.lo) / 2.0;
                if (node.depth < options.max_depth && mid > node.lo && mid < node.hi) {
                    next.push_back({node.lo, mid, node.depth + 1});
                    next.push_back({mid, node.hi, node.depth + 1});
                    continue;
                }
            }
            leaves.push_back(leaf);
        }
        frontier = std::move(next);
    }
    return leaves;
}

int count_sign_changes(const std::vector<double>& values) {
    int changes = 0;
    int last = 0;
    for (double v : values) {
        const int s = (v > 0.0) - (v < 0.0);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

}  // namespace

const char* to_string(RegionKind kind) noexcept {
    switch (kind) {
        case RegionKind::core:
            return "core";
        case RegionKind::endpoint_zone:
            return "endpoint_zone";
        case RegionKind::equality_zone:
            return "equality_zone";
    }
    return "unknown";
}

const char* to_string(Status status) noexcept {
    switch (status) {
        case Status::certified_positive:
            return "certified_positive";
        case Status::heuristic_pass:
            return "heuristic_pass";
        case Status::inconclusive:
            return "inconclusive";
        case Status::failed:
            return "failed";
    }
    return "unknown";
}

const char* to_string(Overall overall) noexcept {
    switch (overall) {
        case Overall::certified:
            return "certified";
        case Overall::certified_except_zones:
            return "certified_except_zones";
        case Overall::falsified:
            return "falsified";
        case Overall::inconclusive:
            return "inconclusive";
    }
    return "unknown";
}

RegionStatus zone_check_endpoint(const AlphaCertificate& alpha, Side side, double radius, int samples) {
    require_radius(radius, "zone_check_endpoint");
    require_samples(samples, "zone_check_endpoint");
    const Exponent k = alpha.k;
    const double gap_mid = (1.0 / k.value() + alpha.enclosure.lo()) / 2.0;

    double decades = kEndpointDecades;
    if (side == Side::right) {
        decades = std::min(decades, std::log10(radius / kRightFloor));
    }
    double max_q = 1.0 / k.value();
    for (int i = 0; i < samples; ++i) {
        const double offset = radius * std::pow(10.0, -decades * i / (samples - 1));
        const double x = side == Side::left ? offset : 1.0 - offset;
        max_q = std::max(max_q, q(k, UnitPoint(x)));
    }

    const Interval region = side == Side::left ? Interval(0.0, radius) : Interval(1.0 - radius, 1.0);
    RegionStatus result{region, RegionKind::endpoint_zone, Status::inconclusive, alpha.enclosure.lo() - max_q, 0};
    if (max_q > alpha.enclosure.lo()) {
        result.status = Status::failed;
    } else if (max_q <= gap_mid) {
        result.status = Status::heuristic_pass;
    }
    return result;
}

RegionStatus zone_check_endpoint(Exponent k, Side side, double radius, int samples) {
    return zone_check_endpoint(solve_alpha(k), side, radius, samples);
}

RegionStatus zone_check_equality(const AlphaCertificate& alpha, const Interval& equality_point, double radius,
                                 int samples, const EqualityZoneOptions& options) {
    require_radius(radius, "zone_check_equality");
    require_samples(samples, "zone_check_equality");
    const Exponent k = alpha.k;
    const double a = alpha.enclosure.mid();
    const double lo = equality_point.lo() - radius;
    const double hi = equality_point.hi() + radius;

    double min_defect = std::numeric_limits<double>::infinity();
    std::vector<double> residuals;
    residuals.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const double x = i == samples - 1 ? hi : lo + (hi - lo) * i / (samples - 1);
        min_defect = std::min(min_defect, defect(k, a, UnitPoint(x)) - options.defect_shift);
        residuals.push_back(u_residual(k, x));
    }

    const bool defect_ok = min_defect >= -options.equality_tolerance;
    const bool single_crossing = count_sign_changes(residuals) == 1;
    return RegionStatus{Interval(lo, hi), RegionKind::equality_zone,
                        defect_ok && single_crossing ? Status::heuristic_pass : Status::failed, min_defect, 0};
}

RegionStatus zone_check_equality(Exponent k, double radius, int samples) {
    require_radius(radius, "zone_check_equality");
    const AlphaCertificate alpha = solve_alpha(k);
    return zone_check_equality(alpha, equality_point(k), radius, samples);
}

VerificationReport certify(Exponent k, const CertifyOptions& options) {
    const double eps = options.exclusion_radius;
    if (!(eps >= kMinExclusion && eps <= kMaxExclusion)) {
        throw DomainError("certify: exclusion radius must lie in [1e-6, 1e-2]");
    }
    if (options.max_depth < 1 || options.max_depth > kMaxDepthLimit) {
        throw DomainError("certify: max depth must lie in [1, 60]");
    }
    if (options.workers < 1) {
        throw DomainError("certify: workers must be >= 1");
    }

    const AlphaCertificate alpha = solve_alpha(k, options.tol);
    const Interval eq = equality_point(k, options.tol);

    const double left_end = eps;
    const double right_start = 1.0 - eps;
    const RegionStatus equality_zone =
        zone_check_equality(alpha, eq, eps, options.equality_samples,
                            {.equality_tolerance = options.equality_tolerance, .defect_shift = options.defect_shift});
    const double zone_lo = equality_zone.region.lo();
    const double zone_hi = equality_zone.region.hi();
    if (!(left_end < zone_lo && zone_hi < right_start)) {
        throw DomainError("certify: exclusion zones overlap; reduce the exclusion radius");
    }

    std::vector<RegionStatus> regions;
    regions.push_back(zone_check_endpoint(alpha, Side::left, eps, options.endpoint_samples));
    regions.push_back(equality_zone);
    regions.push_back(zone_check_endpoint(alpha, Side::right, eps, options.endpoint_samples));

    const std::vector<Node> roots = {{left_end, zone_lo, 0}, {zone_hi, right_start, 0}};
    std::vector<RegionStatus> core = certify_core(k, alpha.enclosure, roots, options);
    regions.insert(regions.end(), core.begin(), core.end());
    std::sort(regions.begin(), regions.end(),
              [](const RegionStatus& a, const RegionStatus& b) { return a.region.lo() < b.region.lo(); });

    VerificationReport report{
        .k = k,
        .alpha = alpha,
        .equality_point = eq,
        .exclusion_radius = eps,
        .max_depth = options.max_depth,
        .deepest_split = 0,
        .equality_tolerance = options.equality_tolerance,
        .defect_shift = options.defect_shift,
        .regions = std::move(regions),
        .min_certified_margin = std::nullopt,
        .overall = Overall::certified_except_zones,
    };

    bool any_failed_core = false;
    bool any_open = false;
    for (const RegionStatus& r : report.regions) {
        report.deepest_split = std::max(report.deepest_split, r.depth);
        if (r.status == Status::certified_positive) {
            report.min_certified_margin =
                report.min_certified_margin ? std::min(*report.min_certified_margin, r.margin) : r.margin;
        } else if (r.status == Status::failed && r.kind == RegionKind::core) {
            any_failed_core = true;
        } else if (r.status != Status::heuristic_pass) {
            any_open = true;
        }
    }
    if (any_failed_core) {
        report.overall = Overall::falsified;
    } else if (any_open) {
        report.overall = Overall::inconclusive;
    }
    return report;
}

std::vector<ScanRow> scan(Exponent k, int grid) {
    if (grid < 2) {
        throw DomainError("scan: grid must be >= 2");
    }
    const double a = solve_alpha(k).enclosure.mid();
    std::vector<ScanRow> rows;
    rows.reserve(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i) {
        const double x = i == grid - 1 ? 1.0 : static_cast<double>(i) / (grid - 1);
        const UnitPoint p(x);
        double residual = 0.0;
        if (x > 0.0 && x < 1.0) {
            // U(t) -> 1 as t -> 0, so an underflowing x^k takes the limit.
            residual = unit_pow(x, k.value()) > 0.0 ? u_residual(k, x) : u_fn(x) - 1.0;
        }
        rows.push_back({x, q(k, p), defect(k, a, p), residual});
    }
    return rows;
}

}  // namespace boppana
