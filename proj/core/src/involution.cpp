#include "bsym/involution.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace bsym {

namespace {

constexpr std::size_t kMaxSupport = 64;  // bitmask-based recursion

void check_support_row(const Row& support) {
    for (std::size_t i = 0; i + 1 < support.size(); ++i)
        if (support[i] >= support[i + 1])
            throw std::invalid_argument("involution: support must be strictly increasing");
    if (support.size() > kMaxSupport)
        throw std::invalid_argument("involution: support too large");
}

// Index of value in sorted support, or -1.
int index_of(const Row& support, Int v) {
    auto it = std::lower_bound(support.begin(), support.end(), v);
    if (it == support.end() || *it != v) return -1;
    return static_cast<int>(it - support.begin());
}

// partner[i] = index of iota(support[i]) for paired entries, -1 for fixed.
// Throws unless pairs and fixed partition the support.
std::vector<int> partner_table(const Row& support, const std::vector<IntPair>& pairs,
                               const Row& fixed) {
    std::vector<int> partner(support.size(), -2);
    auto claim = [&](Int v) {
        const int i = index_of(support, v);
        if (i < 0)
            throw std::invalid_argument("involution: element outside the support");
        if (partner[static_cast<std::size_t>(i)] != -2)
            throw std::invalid_argument("involution: element used twice");
        return i;
    };
    for (const auto& [a, b] : pairs) {
        if (a == b)
            throw std::invalid_argument("involution: a pair must join two distinct elements");
        const int i = claim(a), j = claim(b);
        partner[static_cast<std::size_t>(i)] = j;
        partner[static_cast<std::size_t>(j)] = i;
    }
    for (Int f : fixed) partner[static_cast<std::size_t>(claim(f))] = -1;
    for (int p : partner)
        if (p == -2)
            throw std::invalid_argument("involution: pairs and fixed must cover the support");
    return partner;
}

bool admissible_mask(std::uint64_t mask, const std::vector<int>& partner,
                     std::unordered_map<std::uint64_t, bool>& memo) {
    bool has_pair = false;
    for (std::size_t i = 0; i < partner.size(); ++i)
        if ((mask >> i & 1) && partner[i] >= 0) { has_pair = true; break; }
    if (!has_pair) return true;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    bool ok = false;
    int prev = -1;
    for (std::size_t i = 0; i < partner.size() && !ok; ++i) {
        if (!(mask >> i & 1)) continue;
        if (prev >= 0 && partner[static_cast<std::size_t>(prev)] == static_cast<int>(i)) {
            const std::uint64_t rest = mask & ~(1ull << prev) & ~(1ull << i);
            ok = admissible_mask(rest, partner, memo);
        }
        prev = static_cast<int>(i);
    }
    memo.emplace(mask, ok);
    return ok;
}

}  // namespace

AdmissibleInvolution::AdmissibleInvolution(std::vector<IntPair> pairs, Row fixed)
    : pairs_(std::move(pairs)), fixed_(std::move(fixed)) {
    for (auto& p : pairs_)
        if (p.first > p.second) std::swap(p.first, p.second);
    std::sort(pairs_.begin(), pairs_.end());
    std::sort(fixed_.begin(), fixed_.end());
    support_.reserve(2 * pairs_.size() + fixed_.size());
    for (const auto& [a, b] : pairs_) {
        support_.push_back(a);
        support_.push_back(b);
    }
    support_.insert(support_.end(), fixed_.begin(), fixed_.end());
    std::sort(support_.begin(), support_.end());
    check_support_row(support_);  // rejects duplicates across pairs/fixed
    if (!is_r_admissible(support_, pairs_, fixed_))
        throw std::invalid_argument("involution: not admissible");
}

bool is_r_admissible(const Row& support, const std::vector<IntPair>& pairs, const Row& fixed) {
    check_support_row(support);
    const std::vector<int> partner = partner_table(support, pairs, fixed);
    std::unordered_map<std::uint64_t, bool> memo;
    const std::uint64_t full =
        support.size() == kMaxSupport ? ~0ull : (1ull << support.size()) - 1;
    return admissible_mask(full, partner, memo);
}

std::vector<AdmissibleInvolution> enumerate_admissible(const Row& support, Int r) {
    check_support_row(support);
    const Int size = static_cast<Int>(support.size());
    if (r < 0 || size < r || (size - r) % 2 != 0)
        throw std::invalid_argument("enumerate_admissible: |support| - r must be even and >= 0");

    using IndexPairs = std::vector<std::pair<int, int>>;
    std::map<std::uint64_t, std::set<IndexPairs>> memo;
    std::function<const std::set<IndexPairs>&(std::uint64_t)> go =
        [&](std::uint64_t mask) -> const std::set<IndexPairs>& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::set<IndexPairs> res;
        if (std::popcount(mask) == static_cast<int>(r)) res.insert({});
        int prev = -1;
        for (int i = 0; i < static_cast<int>(size); ++i) {
            if (!(mask >> i & 1)) continue;
            if (prev >= 0) {
                const std::uint64_t rest = mask & ~(1ull << prev) & ~(1ull << i);
                for (const auto& sub : go(rest)) {
                    IndexPairs ext = sub;
                    ext.emplace_back(prev, i);
                    std::sort(ext.begin(), ext.end());
                    res.insert(std::move(ext));
                }
            }
            prev = i;
        }
        return memo.emplace(mask, std::move(res)).first->second;
    };

    const std::uint64_t full = size == static_cast<Int>(kMaxSupport) ? ~0ull : (1ull << size) - 1;
    std::vector<AdmissibleInvolution> out;
    for (const IndexPairs& ip : go(full)) {
        std::vector<IntPair> pairs;
        std::vector<bool> paired(support.size(), false);
        pairs.reserve(ip.size());
        for (const auto& [i, j] : ip) {
            pairs.emplace_back(support[static_cast<std::size_t>(i)],
                               support[static_cast<std::size_t>(j)]);
            paired[static_cast<std::size_t>(i)] = paired[static_cast<std::size_t>(j)] = true;
        }
        Row fixed;
        for (std::size_t i = 0; i < support.size(); ++i)
            if (!paired[i]) fixed.push_back(support[i]);
        out.emplace_back(std::move(pairs), std::move(fixed));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.pairs() < b.pairs();
    });
    return out;
}

std::vector<Row> orbits(const AdmissibleInvolution& inv) {
    std::vector<Row> out;
    out.reserve(inv.pairs().size() + inv.fixed().size());
    for (const auto& [a, b] : inv.pairs()) out.push_back(Row{a, b});
    for (Int f : inv.fixed()) out.push_back(Row{f});
    std::sort(out.begin(), out.end(),
              [](const Row& a, const Row& b) { return a.front() < b.front(); });
    return out;
}

}  // namespace bsym
