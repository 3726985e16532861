#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cinkra/bitword.hpp"

namespace cinkra {

// Binary linear block code: a subspace of F2^n held as a canonical reduced
// row echelon generator matrix. Two LinearCode values compare equal exactly
// when they are the same subspace.
class LinearCode {
  public:
    LinearCode() = default;
    explicit LinearCode(int length);  // zero code {0...0}

    // Builds the span of the given rows; dependent or duplicate rows are
    // tolerated (the rank is computed first).
    static LinearCode from_generators(int length, const std::vector<BitWord>& generators);

    int length() const { return length_; }
    int dimension() const { return static_cast<int>(rows_.size()); }
    std::uint64_t codeword_count() const { return 1ull << dimension(); }

    // Canonical RREF rows, pivots ascending.
    const std::vector<BitWord>& generators() const { return rows_; }

    // All 2^k codewords in string order.
    std::vector<BitWord> codewords() const;

    bool contains(const BitWord& w) const;
    // Smallest nonzero codeword weight; nullopt for the zero code.
    std::optional<int> min_weight() const;

    bool operator==(const LinearCode&) const = default;
    bool operator<(const LinearCode& other) const;

  private:
    int length_ = 0;
    std::vector<BitWord> rows_;
};

// Weight parity tests via the generator criterion (equivalent to checking
// every codeword: wt(v+w) = wt(v)+wt(w)-2 wt(v & w)).
bool is_even(const LinearCode& code);
bool is_doubly_even(const LinearCode& code);

// All 2^k XOR combinations of the rows' span, in string order.
std::vector<BitWord> span(int length, const std::vector<BitWord>& generators);

enum class CodeFamily { t, d, e7, e8 };

// The standard families with their textbook generator matrices: t_n (zero
// code), d_n (weight-4 band, n even >= 4), e_7 and e_8.
LinearCode standard_code(CodeFamily family, int n);
// Convenience for d_n / e_7 / e_8 as printed row lists (used by tests/CLI).
std::vector<BitWord> standard_code_rows(CodeFamily family, int n);

// Concatenation code: every codeword of g followed by every codeword of h.
LinearCode direct_sum(const LinearCode& g, const LinearCode& h);

// True when some column permutation maps the codeword set of c1 onto c2.
// Prunes by weight distribution and column profiles. Throws BudgetError for
// lengths above budget_length.
bool permutation_equivalent(const LinearCode& c1, const LinearCode& c2, int budget_length = 12);

// Every doubly even linear code of length n, deduplicated as subspaces and
// sorted (dimension, then generator rows). Throws BudgetError above the limit.
std::vector<LinearCode> enumerate_doubly_even(int n, int budget_length = 8);

struct MaxCodeResult {
    int dimension = 0;
    LinearCode code;
};

// Highest-dimensional doubly even code of length n by exhaustive enumeration.
MaxCodeResult max_doubly_even_exhaustive(int n, int budget_length = 8);

// Same by construction: e_8 blocks plus the length n mod 8 residue family.
MaxCodeResult max_doubly_even_constructive(int n);
// Name of the constructive witness, e.g. "e_8+d_4".
std::string constructive_code_name(int n);

}  // namespace cinkra
