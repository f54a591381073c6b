#pragma once

// Branch-and-bound certification of  alpha_k h(x^k) - x^(k-1) h(x) >= 0  on
// [0,1]. The defect touches zero at x = 0, x = 1/(1 + alpha_k) and x = 1, so
// small zones around those points are excluded from the interval proof and
// checked by sampling instead.

#include <optional>
#include <vector>

#include "boppana/alpha.hpp"
#include "boppana/interval.hpp"
#include "boppana/scalar.hpp"

namespace boppana {

enum class RegionKind { core, endpoint_zone, equality_zone };

enum class Status {
    certified_positive,  // interval lower bound of the defect is > 0
    heuristic_pass,      // zone passed its sampling check
    inconclusive,        // depth exhausted, or zone check neither passed nor failed
    failed,              // core: defect upper bound < 0; zone: check violated
};

enum class Overall { certified, certified_except_zones, falsified, inconclusive };

enum class Side { left, right };

const char* to_string(RegionKind kind) noexcept;
const char* to_string(Status status) noexcept;
const char* to_string(Overall overall) noexcept;

struct RegionStatus {
    Interval region;
    RegionKind kind = RegionKind::core;
    Status status = Status::inconclusive;
    // Core: lower bound of the defect enclosure. Endpoint zone: alpha.lo minus
    // the largest sampled q. Equality zone: smallest sampled defect.
    double margin = 0.0;
    int depth = 0;
};

struct CertifyOptions {
    double exclusion_radius = 1e-3;
    int max_depth = 40;
    double tol = kDefaultAlphaTol;
    int workers = 1;
    int endpoint_samples = 64;
    int equality_samples = 128;
    // Roundoff allowance for sampled defect values at the tangency.
    double equality_tolerance = 1e-12;
    // Test hook: certify D(x) - defect_shift instead of D(x).
    double defect_shift = 0.0;
};

struct VerificationReport {
    Exponent k;
    AlphaCertificate alpha;
    Interval equality_point;
    double exclusion_radius;
    int max_depth;
    int deepest_split;
    double equality_tolerance;
    double defect_shift;
    std::vector<RegionStatus> regions;  // sorted, tiling [0,1]
    std::optional<double> min_certified_margin;
    Overall overall;
};

VerificationReport certify(Exponent k, const CertifyOptions& options = {});

// Samples q on a log-spaced grid approaching 0 (left) or 1 (right) inside a
// zone of the given radius. Passes when every sample is at most
// (1/k + alpha.lo)/2, fails when one exceeds alpha.lo.
RegionStatus zone_check_endpoint(Exponent k, Side side, double radius, int samples);
RegionStatus zone_check_endpoint(const AlphaCertificate& alpha, Side side, double radius, int samples);

struct EqualityZoneOptions {
    double equality_tolerance = 1e-12;
    double defect_shift = 0.0;
};

// Uniform grid over the equality point enclosure widened by radius. Passes
// when the sampled defect stays above -equality_tolerance and U(x) - U(x^k)
// changes sign exactly once.
RegionStatus zone_check_equality(Exponent k, double radius, int samples);
RegionStatus zone_check_equality(const AlphaCertificate& alpha, const Interval& equality_point, double radius,
                                 int samples, const EqualityZoneOptions& options = {});

struct ScanRow {
    double x;
    double q;
    double defect;
    double u_residual;
};

// Evaluations on x = i/(grid-1). At x = 0 and x = 1, q takes its limit 1/k
// and U(x) - U(x^k) its limit 0.
std::vector<ScanRow> scan(Exponent k, int grid);

}  // namespace boppana
