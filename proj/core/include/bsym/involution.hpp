#pragma once

#include <utility>

#include "bsym/partition.hpp"

namespace bsym {

using IntPair = std::pair<Int, Int>;

/// r-admissible involution of a finite totally ordered set: r fixed points,
/// and the 2-cycles can be peeled off by repeatedly removing a pair of
/// consecutive elements of the remaining support. Construction validates
/// admissibility; the support is the union of pair entries and fixed points.
class AdmissibleInvolution {
public:
    AdmissibleInvolution() = default;
    AdmissibleInvolution(std::vector<IntPair> pairs, Row fixed);

    const Row& support() const { return support_; }
    const std::vector<IntPair>& pairs() const { return pairs_; }
    const Row& fixed() const { return fixed_; }
    Int r() const { return static_cast<Int>(fixed_.size()); }
    /// Number of 2-cycles (the l of 2l + r).
    Int cycles() const { return static_cast<Int>(pairs_.size()); }

    auto operator<=>(const AdmissibleInvolution&) const = default;

private:
    Row support_;
    std::vector<IntPair> pairs_;
    Row fixed_;
};

/// Literal recursive recognition: true iff there are no pairs, or some pair
/// binds two consecutive elements of the support and the restriction to the
/// rest is again admissible. Requires pairs and fixed to partition support.
bool is_r_admissible(const Row& support, const std::vector<IntPair>& pairs, const Row& fixed);

/// All r-admissible involutions of the support, each exactly once, ordered
/// lexicographically by their sorted pair lists. Rejects |support| - r odd
/// or negative.
std::vector<AdmissibleInvolution> enumerate_admissible(const Row& support, Int r);

/// Orbits as sets: every pair as a 2-set, every fixed point as a 1-set,
/// ordered by least element.
std::vector<Row> orbits(const AdmissibleInvolution& inv);

}  // namespace bsym
