#include "bsym/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsym {

Partition::Partition(Row parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Int Partition::sum() const {
    Int s = 0;
    for (Int p : parts_) s += p;
    return s;
}

Int Partition::part(Int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

namespace {

void gen_partitions(Int n, Int maxp, Row& acc, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(Partition(acc));
        return;
    }
    for (Int p = std::min(n, maxp); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(Int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Row acc;
    gen_partitions(n, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bipartition> enumerate_bipartitions(Int n) {
    std::vector<Bipartition> out;
    if (n < 0) return out;
    for (Int a = 0; a <= n; ++a) {
        for (const auto& p1 : enumerate_partitions(a))
            for (const auto& p2 : enumerate_partitions(n - a))
                out.push_back(Bipartition{p1, p2});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bsym
