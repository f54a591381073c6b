#include "boppana/setfamily.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>

#include "parallel.hpp"

namespace boppana {

namespace {

constexpr std::string_view kEmptySetSymbol = "\xE2\x88\x85";  // U+2205

void require_k(int k, const char* op) {
    if (k < 2) {
        throw DomainError(std::string(op) + ": k must be an integer >= 2");
    }
}

// |F|^k, or nullopt if it exceeds kMaxTuples.
std::optional<std::uint64_t> tuple_count(std::uint64_t size, int k) {
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > kMaxTuples / size) {
            return std::nullopt;
        }
        total *= size;
    }
    return total;
}

Interval delta_enclosure(int k, const Interval& eps, double family_size) {
    const Interval log_size = iv_log(Interval(family_size));
    const Interval base = Interval(static_cast<double>(k)) * eps + Interval(2.0) * eps * (-iv_log(eps)) / log_size;
    if (k == 2) {
        return base;
    }
    const Interval power = Interval(1.0) / Interval(static_cast<double>(k - 1));
    return iv_exp(iv_log(base) * power);
}

double delta_point(int k, double eps, double family_size) {
    if (eps == 0.0) {
        return 0.0;
    }
    const double base = k * eps + 2.0 * eps * std::log(1.0 / eps) / std::log(family_size);
    return std::pow(base, 1.0 / (k - 1));
}

double threshold_point(const AlphaCertificate& alpha) {
    const double a = alpha.enclosure.mid();
    return a / (1.0 + a);
}

// epsilon is given exactly as a rational here; for epsilon = 0 the bound is
// the threshold itself whatever the family size.
CorollaryBound bound_for(int k, const Fraction& eps, std::uint64_t family_size, const AlphaCertificate& alpha) {
    const Interval threshold = frequency_threshold(alpha);
    if (eps.num == 0) {
        return {threshold_point(alpha), threshold};
    }
    const double size = static_cast<double>(family_size);
    return {threshold_point(alpha) - delta_point(k, eps.value(), size),
            threshold - delta_enclosure(k, eps.enclosure(), size)};
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

SetFamily random_family(int n, std::mt19937_64& engine) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (;;) {
        std::vector<Mask> members;
        std::uint64_t bits = 0;
        for (std::uint64_t m = 0; m < subsets; ++m) {
            if (m % 64 == 0) {
                bits = engine();
            }
            if (bits & 1) {
                members.push_back(static_cast<Mask>(m));
            }
            bits >>= 1;
        }
        if (members.empty() || (members.size() == 1 && members[0] == 0)) {
            continue;
        }
        return SetFamily(n, std::move(members));
    }
}

struct FamilyOutcome {
    bool present = false;  // false for skipped ids
    bool over_guard = false;
    bool bounded = false;
    bool satisfied = true;
    double slack = 0.0;
    bool union_closed = false;
    Fraction max_freq;
    double bound = 0.0;
    std::vector<Mask> members;
};

FamilyOutcome evaluate(const SetFamily& f, int k, const AlphaCertificate& alpha) {
    FamilyOutcome out;
    out.present = true;
    if (!tuple_count(f.size(), k)) {
        out.over_guard = true;
        return out;
    }
    const ClosureStats stats = closure_stats(f, k, alpha);
    out.max_freq = stats.max_freq.frequency;
    out.union_closed = is_union_closed(f);
    if (stats.bound) {
        out.bounded = true;
        out.satisfied = stats.satisfied;
        out.bound = stats.bound->reported;
        out.slack = stats.max_freq.frequency.value() - stats.bound->reported;
    }
    if (!out.satisfied) {
        out.members.assign(f.members().begin(), f.members().end());
    }
    return out;
}

SearchReport aggregate(int n, int k, const std::vector<FamilyOutcome>& outcomes, std::uint64_t first_id) {
    SearchReport report;
    report.n = n;
    report.k = k;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const FamilyOutcome& o = outcomes[i];
        const std::uint64_t id = first_id + i;
        if (!o.present) {
            continue;
        }
        if (o.over_guard) {
            ++report.families_skipped;
            continue;
        }
        ++report.families_checked;
        if (o.union_closed) {
            ++report.union_closed_families;
            if (!report.union_closed_min_max_freq || o.max_freq < *report.union_closed_min_max_freq) {
                report.union_closed_min_max_freq = o.max_freq;
            }
        }
        if (!o.bounded) {
            continue;
        }
        ++report.families_bounded;
        if (!report.min_slack || o.slack < *report.min_slack) {
            report.min_slack = o.slack;
            report.min_slack_id = id;
        }
        if (!o.satisfied) {
            report.violations.push_back({id, o.members, o.max_freq, o.bound});
        }
    }
    return report;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

int parse_int(std::string_view s, int line) {
    int value = 0;
    const auto t = trim(s);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw FamilyParseError(line, "expected an integer, got '" + std::string(t) + "'");
    }
    return value;
}

}  // namespace

Fraction Fraction::make(std::uint64_t num, std::uint64_t den) {
    if (den == 0) {
        throw DomainError("Fraction: zero denominator");
    }
    const std::uint64_t g = std::gcd(num, den);
    return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

Interval Fraction::enclosure() const {
    return Interval(static_cast<double>(num)) / Interval(static_cast<double>(den));
}

std::string Fraction::str() const { return std::to_string(num) + "/" + std::to_string(den); }

bool operator<(const Fraction& a, const Fraction& b) {
    __extension__ using Wide = unsigned __int128;
    return static_cast<Wide>(a.num) * b.den < static_cast<Wide>(b.num) * a.den;
}

SetFamily::SetFamily(int n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {
    if (n < 1 || n > kMaxGroundSet) {
        throw DomainError("SetFamily: n must lie in [1,16]");
    }
    if (members_.empty()) {
        throw DomainError("SetFamily: a family needs at least one member");
    }
    const Mask limit = Mask{1} << n;
    present_.assign(limit, false);
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] >= limit) {
            throw DomainError("SetFamily: member " + std::to_string(members_[i]) + " is not a subset of [n]");
        }
        if (i > 0 && members_[i] == members_[i - 1]) {
            throw DomainError("SetFamily: duplicate member " + std::to_string(members_[i]));
        }
        present_[members_[i]] = true;
    }
}

SetFamily SetFamily::power_set(int n) {
    if (n < 1 || n > kMaxGroundSet) {
        throw DomainError("SetFamily: n must lie in [1,16]");
    }
    std::vector<Mask> all(std::size_t{1} << n);
    std::iota(all.begin(), all.end(), Mask{0});
    return SetFamily(n, std::move(all));
}

SetFamily SetFamily::from_encoding(int n, std::uint64_t encoding) {
    if (n < 1 || n > 6) {
        throw DomainError("SetFamily::from_encoding: n must lie in [1,6]");
    }
    const unsigned subsets = 1u << n;
    std::vector<Mask> members;
    for (unsigned m = 0; m < subsets; ++m) {
        if (encoding >> m & 1) {
            members.push_back(m);
        }
    }
    return SetFamily(n, std::move(members));
}

bool is_union_closed(const SetFamily& f) {
    const auto members = f.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!f.contains(members[i] | members[j])) {
                return false;
            }
        }
    }
    return true;
}

Fraction closure_fraction(const SetFamily& f, int k) {
    require_k(k, "closure_fraction");
    const auto total = tuple_count(f.size(), k);
    if (!total) {
        throw DomainError("closure_fraction: |F|^k exceeds 1e9 tuples; use sampled_closure_fraction instead");
    }
    // below[m] = #{A in F : A subset of m}; below[m]^k counts tuples whose
    // union is a subset of m, and Moebius inversion gives the tuples whose
    // union is exactly m.
    const std::size_t size = std::size_t{1} << f.n();
    std::vector<std::int64_t> below(size, 0);
    for (Mask m : f.members()) {
        below[m] = 1;
    }
    for (int bit = 0; bit < f.n(); ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        for (std::size_t m = 0; m < size; ++m) {
            if (m & b) {
                below[m] += below[m ^ b];
            }
        }
    }
    for (auto& v : below) {
        std::int64_t p = 1;
        for (int i = 0; i < k; ++i) {
            p *= v;
        }
        v = p;
    }
    for (int bit = 0; bit < f.n(); ++bit) {
        const std::size_t b = std::size_t{1} << bit;
        for (std::size_t m = 0; m < size; ++m) {
            if (m & b) {
                below[m] -= below[m ^ b];
            }
        }
    }
    std::uint64_t closed = 0;
    for (Mask m : f.members()) {
        closed += static_cast<std::uint64_t>(below[m]);
    }
    return Fraction::make(closed, *total);
}

double sampled_closure_fraction(const SetFamily& f, int k, std::uint64_t samples, std::uint64_t seed) {
    require_k(k, "sampled_closure_fraction");
    if (samples == 0) {
        throw DomainError("sampled_closure_fraction: need at least one sample");
    }
    std::mt19937_64 engine(seed);
    std::uniform_int_distribution<std::size_t> pick(0, f.size() - 1);
    const auto members = f.members();
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        Mask u = 0;
        for (int i = 0; i < k; ++i) {
            u |= members[pick(engine)];
        }
        hits += f.contains(u);
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

ElementFrequency max_frequency(const SetFamily& f) {
    ElementFrequency best{1, Fraction::make(0, f.size())};
    std::uint64_t best_count = 0;
    for (int i = 0; i < f.n(); ++i) {
        const Mask bit = Mask{1} << i;
        const auto count = static_cast<std::uint64_t>(
            std::count_if(f.members().begin(), f.members().end(), [bit](Mask m) { return (m & bit) != 0; }));
        if (count > best_count) {
            best_count = count;
            best = {i + 1, Fraction::make(count, f.size())};
        }
    }
    return best;
}

CorollaryBound corollary_bound(int k, double epsilon, std::uint64_t family_size, const AlphaCertificate& alpha) {
    require_k(k, "corollary_bound");
    if (alpha.k.value() != static_cast<double>(k)) {
        throw DomainError("corollary_bound: alpha certificate was computed for a different k");
    }
    if (!(epsilon >= 0.0 && epsilon < 0.5)) {
        throw DomainError("corollary_bound: epsilon must lie in [0, 1/2)");
    }
    if (family_size < 2) {
        throw DomainError("corollary_bound: family size must be >= 2");
    }
    const Interval threshold = frequency_threshold(alpha);
    if (epsilon == 0.0) {
        return {threshold_point(alpha), threshold};
    }
    const double size = static_cast<double>(family_size);
    return {threshold_point(alpha) - delta_point(k, epsilon, size),
            threshold - delta_enclosure(k, Interval(epsilon), size)};
}

ClosureStats closure_stats(const SetFamily& f, int k, const AlphaCertificate& alpha) {
    if (alpha.k.value() != static_cast<double>(k)) {
        throw DomainError("closure_stats: alpha certificate was computed for a different k");
    }
    const Fraction c = closure_fraction(f, k);
    const Fraction eps = Fraction::make(c.den - c.num, c.den);
    ClosureStats stats{k, c, eps, max_frequency(f), std::nullopt, true};
    if (2 * eps.num < eps.den) {
        stats.bound = bound_for(k, eps, f.size(), alpha);
        // A violation is reported only when it survives rounding in both the
        // frequency and the bound.
        stats.satisfied = !(stats.max_freq.frequency.enclosure().hi() < stats.bound->enclosure.lo());
    }
    return stats;
}

SearchReport exhaustive_check(int n, int k, int workers) {
    if (n < 1 || n > kMaxExhaustiveGroundSet) {
        throw DomainError("exhaustive_check: n must lie in [1,4]");
    }
    require_k(k, "exhaustive_check");
    const AlphaCertificate alpha = solve_alpha(Exponent(k));
    const std::uint64_t encodings = std::uint64_t{1} << (1u << n);
    // Ids run from 1 (the empty family is not a family); id 1 is {{}}.
    std::vector<FamilyOutcome> outcomes(encodings - 1);
    detail::parallel_for(outcomes.size(), workers, [&](std::size_t i) {
        const std::uint64_t id = i + 1;
        if (id == 1) {
            return;
        }
        outcomes[i] = evaluate(SetFamily::from_encoding(n, id), k, alpha);
    });
    return aggregate(n, k, outcomes, 1);
}

SearchReport random_probe(int n, int k, std::uint64_t trials, std::uint64_t seed, int workers) {
    if (n < 1 || n > kMaxGroundSet) {
        throw DomainError("random_probe: n must lie in [1,16]");
    }
    require_k(k, "random_probe");
    const AlphaCertificate alpha = solve_alpha(Exponent(k));
    std::vector<FamilyOutcome> outcomes(trials);
    detail::parallel_for(outcomes.size(), workers, [&](std::size_t t) {
        auto engine = trial_engine(seed, t);
        outcomes[t] = evaluate(random_family(n, engine), k, alpha);
    });
    return aggregate(n, k, outcomes, 0);
}

FamilyParseError::FamilyParseError(int line, const std::string& what)
    : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

SetFamily read_family(std::istream& in) {
    std::string raw;
    int line = 0;
    int n = 0;
    while (n == 0) {
        if (!std::getline(in, raw)) {
            throw FamilyParseError(line + 1, "missing ground-set size");
        }
        ++line;
        if (!trim(raw).empty()) {
            n = parse_int(raw, line);
            if (n < 1 || n > kMaxGroundSet) {
                throw FamilyParseError(line, "ground-set size must lie in [1,16]");
            }
        }
    }
    std::vector<Mask> members;
    std::vector<int> member_line(std::size_t{1} << n, 0);
    while (std::getline(in, raw)) {
        ++line;
        const std::string_view text = trim(raw);
        if (text.empty()) {
            continue;
        }
        Mask mask = 0;
        if (text != kEmptySetSymbol) {
            std::string_view rest = text;
            while (true) {
                const auto comma = rest.find(',');
                const int element = parse_int(rest.substr(0, comma), line);
                if (element < 1 || element > n) {
                    throw FamilyParseError(line, "element " + std::to_string(element) + " is outside [1," +
                                                     std::to_string(n) + "]");
                }
                const Mask bit = Mask{1} << (element - 1);
                if (mask & bit) {
                    throw FamilyParseError(line, "element " + std::to_string(element) + " repeated");
                }
                mask |= bit;
                if (comma == std::string_view::npos) {
                    break;
                }
                rest = rest.substr(comma + 1);
            }
        }
        if (member_line[mask] != 0) {
            throw FamilyParseError(line, "duplicate of the set on line " + std::to_string(member_line[mask]));
        }
        member_line[mask] = line;
        members.push_back(mask);
    }
    if (members.empty()) {
        throw FamilyParseError(line + 1, "family has no members");
    }
    return SetFamily(n, std::move(members));
}

void write_family(std::ostream& out, const SetFamily& f) {
    out << f.n() << '\n';
    for (Mask m : f.members()) {
        if (m == 0) {
            out << kEmptySetSymbol << '\n';
            continue;
        }
        bool first = true;
        for (int i = 0; i < f.n(); ++i) {
            if (m >> i & 1) {
                out << (first ? "" : ",") << i + 1;
                first = false;
            }
        }
        out << '\n';
    }
}

}  // namespace boppana
