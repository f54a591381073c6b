#include "boppana/io.hpp"

#include <cstdio>
#include <ostream>

namespace boppana {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json masks_to_json(const std::vector<Mask>& members) {
    json sets = json::array();
    for (Mask m : members) {
        json elements = json::array();
        for (int i = 0; m >> i; ++i) {
            if (m >> i & 1) {
                elements.push_back(i + 1);
            }
        }
        sets.push_back(std::move(elements));
    }
    return sets;
}

json fraction_to_json(const Fraction& f) { return {{"num", f.num}, {"den", f.den}, {"value", f.value()}}; }

}  // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const Interval& iv) { return {{"lo", format_double(iv.lo())}, {"hi", format_double(iv.hi())}}; }

json to_json(const AlphaCertificate& cert) {
    return {
        {"k", cert.k.value()},
        {"lo", format_double(cert.enclosure.lo())},
        {"hi", format_double(cert.enclosure.hi())},
        {"width", cert.width},
        {"iterations", cert.iterations},
        {"status", to_string(cert.status)},
        {"requested_tol", cert.requested_tol},
        {"residual_sign_lo", cert.residual_sign_lo},
        {"residual_sign_hi", cert.residual_sign_hi},
    };
}

json to_json(const VerificationReport& report) {
    json regions = json::array();
    for (const RegionStatus& r : report.regions) {
        regions.push_back({
            {"lo", format_double(r.region.lo())},
            {"hi", format_double(r.region.hi())},
            {"kind", to_string(r.kind)},
            {"status", to_string(r.status)},
            {"margin", r.margin},
            {"depth", r.depth},
        });
    }
    return {
        {"k", report.k.value()},
        {"alpha", to_json(report.alpha.enclosure)},
        {"equality_point", to_json(report.equality_point)},
        {"exclusion_radius", report.exclusion_radius},
        {"max_depth", report.max_depth},
        {"deepest_split", report.deepest_split},
        {"equality_tolerance", report.equality_tolerance},
        {"defect_shift", report.defect_shift},
        {"overall", to_string(report.overall)},
        {"min_certified_margin", optional_number(report.min_certified_margin)},
        {"regions", std::move(regions)},
    };
}

json to_json(const ClosureStats& stats) {
    json out = {
        {"k", stats.k},
        {"tuple_convention", kTupleConvention},
        {"c", fraction_to_json(stats.c)},
        {"epsilon", fraction_to_json(stats.epsilon)},
        {"max_freq", fraction_to_json(stats.max_freq.frequency)},
        {"max_freq_element", stats.max_freq.element},
        {"bound", nullptr},
        {"bound_conservative", nullptr},
        {"satisfied", stats.satisfied},
    };
    if (stats.bound) {
        out["bound"] = stats.bound->reported;
        out["bound_conservative"] = stats.bound->enclosure.lo();
    }
    return out;
}

json to_json(const SearchReport& report) {
    json violations = json::array();
    for (const Violation& v : report.violations) {
        violations.push_back({
            {"id", v.id},
            {"members", masks_to_json(v.members)},
            {"max_freq", fraction_to_json(v.max_freq)},
            {"bound", v.bound},
        });
    }
    json out = {
        {"n", report.n},
        {"k", report.k},
        {"tuple_convention", kTupleConvention},
        {"families_checked", report.families_checked},
        {"families_bounded", report.families_bounded},
        {"families_skipped", report.families_skipped},
        {"violations", std::move(violations)},
        {"min_slack", optional_number(report.min_slack)},
        {"min_slack_id", report.min_slack_id ? json(*report.min_slack_id) : json(nullptr)},
        {"union_closed_families", report.union_closed_families},
        {"union_closed_min_max_freq", nullptr},
    };
    if (report.union_closed_min_max_freq) {
        out["union_closed_min_max_freq"] = fraction_to_json(*report.union_closed_min_max_freq);
    }
    return out;
}

void write_scan_csv(std::ostream& out, std::span<const ScanRow> rows) {
    out << kScanHeader << '\n';
    for (const ScanRow& r : rows) {
        out << format_double(r.x) << ',' << format_double(r.q) << ',' << format_double(r.defect) << ','
            << format_double(r.u_residual) << '\n';
    }
}

}  // namespace boppana
