#pragma once

// Desk-scale checks of the approximate k-union-closed corollary: a family
// that is (1 - eps)-approximately k-union closed has an element in at least
// an alpha_k/(1 + alpha_k) - delta fraction of its sets, with
// delta = (k eps + 2 eps log(1/eps) / log|F|)^(1/(k-1)).
//
// Sets are bitmasks over the ground set [n] = {1..n}; element i is bit i-1.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boppana/alpha.hpp"
#include "boppana/errors.hpp"
#include "boppana/interval.hpp"

namespace boppana {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;
inline constexpr int kMaxExhaustiveGroundSet = 4;
// closure_fraction refuses families with more than this many k-tuples.
inline constexpr std::uint64_t kMaxTuples = 1'000'000'000;

// Nonnegative rational in lowest terms.
struct Fraction {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    static Fraction make(std::uint64_t num, std::uint64_t den);
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    // Outward-rounded enclosure of num/den.
    Interval enclosure() const;
    std::string str() const;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

bool operator<(const Fraction& a, const Fraction& b);

class SetFamily {
public:
    // Throws DomainError for n outside [1,16], an empty member list, a mask
    // outside [n] or a duplicate. Members are stored in ascending order.
    SetFamily(int n, std::vector<Mask> members);

    static SetFamily power_set(int n);
    // Bit m of `encoding` selects subset m; requires 2^n <= 64.
    static SetFamily from_encoding(int n, std::uint64_t encoding);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return members_.size(); }
    std::span<const Mask> members() const noexcept { return members_; }
    bool contains(Mask m) const noexcept { return m < present_.size() && present_[m]; }

private:
    int n_;
    std::vector<Mask> members_;
    std::vector<bool> present_;
};

// Pairwise union closure (which implies closure under all finite unions).
bool is_union_closed(const SetFamily& f);

// Fraction of ordered k-tuples (repetition allowed, |F|^k in total) whose
// union lies in F. Exact. Throws DomainError if |F|^k exceeds kMaxTuples.
Fraction closure_fraction(const SetFamily& f, int k);

// Monte Carlo estimate of closure_fraction from uniformly drawn tuples, for
// families beyond the exact-count guard.
double sampled_closure_fraction(const SetFamily& f, int k, std::uint64_t samples, std::uint64_t seed);

struct ElementFrequency {
    int element;  // 1-based; lowest index wins ties
    Fraction frequency;
};

ElementFrequency max_frequency(const SetFamily& f);

struct CorollaryBound {
    // alpha/(1 + alpha) - delta with alpha at the enclosure midpoint.
    double reported;
    // Outward enclosure over the whole alpha enclosure. Its lo() is the value
    // used to decide whether a family satisfies the bound.
    Interval enclosure;
};

// Requires 0 <= epsilon < 1/2, family_size >= 2, integer k >= 2 matching
// alpha.k. epsilon = 0 gives delta = 0.
CorollaryBound corollary_bound(int k, double epsilon, std::uint64_t family_size, const AlphaCertificate& alpha);

struct ClosureStats {
    int k;
    Fraction c;
    Fraction epsilon;
    ElementFrequency max_freq;
    // Present only when epsilon < 1/2.
    std::optional<CorollaryBound> bound;
    bool satisfied;
};

ClosureStats closure_stats(const SetFamily& f, int k, const AlphaCertificate& alpha);

struct Violation {
    std::uint64_t id;  // family encoding (exhaustive) or trial index (probe)
    std::vector<Mask> members;
    Fraction max_freq;
    double bound;
};

struct SearchReport {
    int n;
    int k;
    std::uint64_t families_checked = 0;
    // Families whose epsilon < 1/2, i.e. where the corollary says something.
    std::uint64_t families_bounded = 0;
    std::uint64_t families_skipped = 0;  // over the tuple guard (probe only)
    std::vector<Violation> violations;   // sorted by id
    std::optional<double> min_slack;     // min of max_freq - bound.reported
    std::optional<std::uint64_t> min_slack_id;
    std::uint64_t union_closed_families = 0;
    std::optional<Fraction> union_closed_min_max_freq;
};

inline constexpr const char* kTupleConvention = "ordered_with_repetition";

// Every family F over [n] other than the empty family and {{}}; n <= 4.
SearchReport exhaustive_check(int n, int k, int workers = 1);

// Random families (each subset kept with probability 1/2, empty and {{}}
// redrawn). Trial t uses its own generator seeded from (seed, t), so the
// result does not depend on the worker count.
SearchReport random_probe(int n, int k, std::uint64_t trials, std::uint64_t seed, int workers = 1);

// Family text format: first line n, then one subset per line as a
// comma-separated list of elements, or "∅" for the empty set.
class FamilyParseError : public DomainError {
public:
    FamilyParseError(int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

SetFamily read_family(std::istream& in);
void write_family(std::ostream& out, const SetFamily& f);

}  // namespace boppana
