#pragma once

#include "bsym/partition.hpp"

namespace bsym {

/// Symbol: two strictly increasing rows of positive integers, the beta row of
/// length k+r over the gamma row of length k, with r = |beta| - |gamma| >= 0.
/// Symbols attached to characters have r >= 1; the b_d machinery uses r = 0.
class Symbol {
public:
    Symbol() = default;
    Symbol(Row beta, Row gamma);

    const Row& beta() const { return beta_; }
    const Row& gamma() const { return gamma_; }
    Int k() const { return static_cast<Int>(gamma_.size()); }
    Int r() const { return static_cast<Int>(beta_.size()) - k(); }

    auto operator<=>(const Symbol&) const = default;

private:
    Row beta_;
    Row gamma_;
};

/// Rank: sum of (beta_i - i) plus sum of (gamma_j - j).
Int rank(const Symbol& s);

/// b(s) = sum (2k+2r-2i)(beta_i - i) + sum (2k+1-2j)(gamma_j - j).
Int b_invariant(const Symbol& s);

/// nabla(k, r) = sum_{i<=k+r} (2k+2r-2i) i + sum_{j<=k} (2k+1-2j) j, so that
/// b(s) = sum (2k+2r-2i) beta_i + sum (2k+1-2j) gamma_j - nabla(k, r).
Int nabla(Int k, Int r);

/// Multiset union of the two rows, sorted non-decreasingly (length 2k+r).
Row z_sequence(const Symbol& s);

/// Interleaving (beta_1..beta_r, gamma_1, beta_{r+1}, gamma_2, ..., gamma_k, beta_{r+k}).
Row z_prime_sequence(const Symbol& s);

/// b(s) evaluated through partial sums of z': sums of the first i entries for
/// i < r and for i < 2k+r, minus nabla(k, r). Agrees with b_invariant.
Int b_via_zprime(const Symbol& s);

/// b_d for r = 0 symbols: sum (2k'+2d-2i) beta_i + sum (2k'+1-2j) gamma_j,
/// with no nabla subtraction. Rejects symbols with r != 0.
Int b_d_invariant(const Symbol& s, Int d);

/// Removes the shared entries (beta intersect gamma) from both rows.
Symbol sharp(const Symbol& s);

/// True iff z_sequence(sharp(s)) equals z_prime_sequence(sharp(s)).
bool is_special(const Symbol& s);

/// Swaps the two rows. Only defined for r = 0; rejects otherwise.
Symbol op_symbol(const Symbol& s);

/// Prepends 1 to both rows and increments every entry; k grows by one,
/// r, rank, b-invariant and the attached bipartition are all preserved.
Symbol shift(const Symbol& s);

/// Bipartition attached to a symbol: row entries minus their positions,
/// zero parts dropped.
Bipartition bipartition_of_symbol(const Symbol& s);

/// Left inverse of bipartition_of_symbol at the given row lengths.
/// Requires k >= #parts(second) and k+r >= #parts(first).
Symbol symbol_of_bipartition(const Bipartition& bp, Int k, Int r);

/// b-invariant of the character labelled by a bipartition; independent of the
/// row lengths used for the embedding.
Int b_invariant(const Bipartition& bp);

}  // namespace bsym
