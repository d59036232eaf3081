#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "padic/field.hpp"
#include "padic/rational.hpp"

namespace padic {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transposed() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero entry
/// in column order). Returns the pivot columns in order.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : M x = 0}, one vector per free column, in column order.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Unique solution candidate of M x = b via RREF of the augmented matrix;
/// nullopt when inconsistent. Free variables are set to zero.
std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& m,
                                                  const std::vector<Rational>& b);

/// The Q_p-coordinate expansion of n vectors over K_D = Q(p^{1/D}): one row
/// per vector, one column per (component k, ramification index j) pair, with
/// column weight j/D. Rank over Q equals rank over Q_p because all entries
/// lie in the prime field.
struct ExpandedMatrix {
  RationalMatrix entries;                 // n x (s*D)
  std::vector<Rational> column_weights;   // j/D for column (k, j)
  std::size_t component_count = 0;        // s
  unsigned ramification = 1;              // D
  Int prime = 0;                          // p; 0 only for the empty expansion

  /// (D-1)/D: the largest weight of the full s*D-column expansion, which is
  /// structural and independent of which columns are materialized.
  Rational max_column_weight() const {
    return component_count == 0 ? Rational(0)
                                : make_rational(ramification - 1, ramification);
  }
};

/// Expand vectors t_1..t_n in K_D^s. All entries must share one context.
ExpandedMatrix expand(const std::vector<std::vector<FieldElement>>& vectors);

/// Like expand, but stores only columns that are nonzero in some row, in
/// column order. Rank, kernels and the pivot-column left inverse agree with
/// the full expansion (zero columns are never pivots); use this for value
/// matrices over large witness towers, where s*D is too big to materialize.
ExpandedMatrix expand_support(const std::vector<std::vector<FieldElement>>& vectors);

std::size_t rank_over_prime_field(const ExpandedMatrix& m);
std::vector<std::vector<Rational>> kernel_basis(const ExpandedMatrix& m);

/// Right inverse B of the row-space map: M*B = I_n, with zeros in non-pivot
/// rows of B (the pivot-column pseudo-inverse, which makes the output
/// deterministic). Throws not_independent_error when rank(M) < n.
RationalMatrix left_inverse(const ExpandedMatrix& m);

/// A strict upper bound A for the valuations v(sum_i a_i t_i) over integral
/// coefficient tuples a with some unit entry:
///
///   A = max_k w_k - min{v_p(b) : b a nonzero entry of B} + 1.
///
/// Soundness: a = (aM)B gives 0 = min_i v(a_i) >= min_k v((aM)_k) + min v(B),
/// and v(sum a_i t_i) = min_k (v((aM)_k) + w_k) <= min_k v((aM)_k) + max_k w_k,
/// so every achievable valuation is <= max w - min v(B) < A.
Rational valuation_bound(const ExpandedMatrix& m);

}  // namespace padic
