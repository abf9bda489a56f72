#include "bsym/symbol.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace bsym {

namespace {

void check_row(const Row& row, const char* name) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (row[i] < 1)
            throw std::invalid_argument(std::string("Symbol: ") + name + " entries must be >= 1");
        if (i + 1 < row.size() && row[i] >= row[i + 1])
            throw std::invalid_argument(std::string("Symbol: ") + name + " must be strictly increasing");
    }
}

Row shared_entries(const Symbol& s) {
    Row out;
    std::set_intersection(s.beta().begin(), s.beta().end(),
                          s.gamma().begin(), s.gamma().end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

Symbol::Symbol(Row beta, Row gamma) : beta_(std::move(beta)), gamma_(std::move(gamma)) {
    check_row(beta_, "beta");
    check_row(gamma_, "gamma");
    if (beta_.size() < gamma_.size())
        throw std::invalid_argument("Symbol: beta must be at least as long as gamma");
}

Int rank(const Symbol& s) {
    Int out = 0;
    for (std::size_t i = 0; i < s.beta().size(); ++i) out += s.beta()[i] - static_cast<Int>(i + 1);
    for (std::size_t j = 0; j < s.gamma().size(); ++j) out += s.gamma()[j] - static_cast<Int>(j + 1);
    return out;
}

Int b_invariant(const Symbol& s) {
    const Int k = s.k(), r = s.r();
    Int out = 0;
    for (Int i = 1; i <= k + r; ++i)
        out += (2 * k + 2 * r - 2 * i) * (s.beta()[static_cast<std::size_t>(i - 1)] - i);
    for (Int j = 1; j <= k; ++j)
        out += (2 * k + 1 - 2 * j) * (s.gamma()[static_cast<std::size_t>(j - 1)] - j);
    return out;
}

Int nabla(Int k, Int r) {
    Int out = 0;
    for (Int i = 1; i <= k + r; ++i) out += (2 * k + 2 * r - 2 * i) * i;
    for (Int j = 1; j <= k; ++j) out += (2 * k + 1 - 2 * j) * j;
    return out;
}

Row z_sequence(const Symbol& s) {
    Row out;
    out.reserve(s.beta().size() + s.gamma().size());
    std::merge(s.beta().begin(), s.beta().end(), s.gamma().begin(), s.gamma().end(),
               std::back_inserter(out));
    return out;
}

Row z_prime_sequence(const Symbol& s) {
    const Int k = s.k(), r = s.r();
    Row out;
    out.reserve(static_cast<std::size_t>(2 * k + r));
    for (Int i = 0; i < r; ++i) out.push_back(s.beta()[static_cast<std::size_t>(i)]);
    for (Int j = 0; j < k; ++j) {
        out.push_back(s.gamma()[static_cast<std::size_t>(j)]);
        out.push_back(s.beta()[static_cast<std::size_t>(r + j)]);
    }
    return out;
}

Int b_via_zprime(const Symbol& s) {
    const Int k = s.k(), r = s.r();
    const Row zp = z_prime_sequence(s);
    Int out = 0, prefix = 0;
    for (Int i = 1; i <= 2 * k + r; ++i) {
        prefix += zp[static_cast<std::size_t>(i - 1)];
        if (i <= r - 1) out += prefix;
        if (i <= 2 * k + r - 1) out += prefix;
    }
    return out - nabla(k, r);
}

Int b_d_invariant(const Symbol& s, Int d) {
    if (s.r() != 0)
        throw std::invalid_argument("b_d_invariant: symbol must have r = 0");
    if (d < 0)
        throw std::invalid_argument("b_d_invariant: d must be >= 0");
    const Int kp = s.k();
    Int out = 0;
    for (Int i = 1; i <= kp; ++i)
        out += (2 * kp + 2 * d - 2 * i) * s.beta()[static_cast<std::size_t>(i - 1)];
    for (Int j = 1; j <= kp; ++j)
        out += (2 * kp + 1 - 2 * j) * s.gamma()[static_cast<std::size_t>(j - 1)];
    return out;
}

Symbol sharp(const Symbol& s) {
    const Row shared = shared_entries(s);
    auto strip = [&shared](const Row& row) {
        Row out;
        std::set_difference(row.begin(), row.end(), shared.begin(), shared.end(),
                            std::back_inserter(out));
        return out;
    };
    return Symbol(strip(s.beta()), strip(s.gamma()));
}

bool is_special(const Symbol& s) {
    const Symbol sh = sharp(s);
    return z_sequence(sh) == z_prime_sequence(sh);
}

Symbol op_symbol(const Symbol& s) {
    if (s.r() != 0)
        throw std::invalid_argument("op_symbol: symbol must have r = 0");
    return Symbol(s.gamma(), s.beta());
}

Symbol shift(const Symbol& s) {
    auto bump = [](const Row& row) {
        Row out;
        out.reserve(row.size() + 1);
        out.push_back(1);
        for (Int e : row) out.push_back(e + 1);
        return out;
    };
    return Symbol(bump(s.beta()), bump(s.gamma()));
}

Bipartition bipartition_of_symbol(const Symbol& s) {
    auto parts_of_row = [](const Row& row) {
        Row parts;
        for (std::size_t i = row.size(); i-- > 0;) {
            const Int d = row[i] - static_cast<Int>(i + 1);
            if (d > 0) parts.push_back(d);
        }
        return Partition(std::move(parts));
    };
    return Bipartition{parts_of_row(s.beta()), parts_of_row(s.gamma())};
}

Symbol symbol_of_bipartition(const Bipartition& bp, Int k, Int r) {
    if (r < 0 || k < 0)
        throw std::invalid_argument("symbol_of_bipartition: k and r must be >= 0");
    if (bp.second.length() > k || bp.first.length() > k + r)
        throw std::invalid_argument("symbol_of_bipartition: rows too short for the parts");
    Row beta, gamma;
    beta.reserve(static_cast<std::size_t>(k + r));
    gamma.reserve(static_cast<std::size_t>(k));
    for (Int i = 1; i <= k + r; ++i) beta.push_back(i + bp.first.part(k + r + 1 - i));
    for (Int j = 1; j <= k; ++j) gamma.push_back(j + bp.second.part(k + 1 - j));
    return Symbol(std::move(beta), std::move(gamma));
}

Int b_invariant(const Bipartition& bp) {
    const Int k = std::max(bp.first.length(), bp.second.length());
    return b_invariant(symbol_of_bipartition(bp, k, 1));
}

}  // namespace bsym
