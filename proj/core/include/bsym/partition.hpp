#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace bsym {

// All quantities at desk scale (n <= 10) stay far below 2^63; plain int64
// arithmetic is exact everywhere in this library.
using Int = std::int64_t;
using Row = std::vector<Int>;

/// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(Row parts);

    const Row& parts() const { return parts_; }
    Int sum() const;
    Int length() const { return static_cast<Int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; parts beyond the last are 0.
    Int part(Int i) const;

    auto operator<=>(const Partition&) const = default;

private:
    Row parts_;
};

/// Ordered pair of partitions of total size n, labelling an irreducible
/// character of the Weyl group B_n.
struct Bipartition {
    Partition first;
    Partition second;

    Int size() const { return first.sum() + second.sum(); }
    auto operator<=>(const Bipartition&) const = default;
};

std::vector<Partition> enumerate_partitions(Int n);

/// All bipartitions of n, ascending lexicographic by (first, second).
std::vector<Bipartition> enumerate_bipartitions(Int n);

}  // namespace bsym
