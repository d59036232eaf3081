#include "padic/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "padic/errors.hpp"

namespace padic {

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t row = pivot_row;
    while (row < m.rows() && m.at(row, col) == 0) ++row;
    if (row == m.rows()) continue;
    if (row != pivot_row) {
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m.at(row, j), m.at(pivot_row, j));
    }
    const Rational inv_pivot = 1 / m.at(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv_pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m.at(i, col) == 0) continue;
      const Rational factor = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) -= factor * m.at(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return row_reduce(copy).size();
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  RationalMatrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> v(m.cols());
    v[free_col] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      v[pivots[k]] = -r.at(k, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> solve_linear(const RationalMatrix& m,
                                                  const std::vector<Rational>& b) {
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // 0 = 1 row
  std::vector<Rational> x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(k, m.cols());
  return x;
}

ExpandedMatrix expand(const std::vector<std::vector<FieldElement>>& vectors) {
  ExpandedMatrix out;
  if (vectors.empty()) return out;

  const std::size_t s = vectors.front().size();
  const PrimeContext* ctx = nullptr;
  for (const auto& vec : vectors) {
    if (vec.size() != s) throw input_error("expand: vectors of unequal length");
    for (const auto& entry : vec) {
      if (ctx == nullptr) {
        ctx = &entry.context();
      } else if (!(entry.context() == *ctx)) {
        throw input_error("expand: mixed field contexts");
      }
    }
  }
  const unsigned D = (ctx != nullptr) ? ctx->D : 1;

  out.component_count = s;
  out.ramification = D;
  if (ctx != nullptr) out.prime = ctx->p;
  out.entries = RationalMatrix(vectors.size(), s * D);
  out.column_weights.resize(s * D);
  for (std::size_t k = 0; k < s; ++k)
    for (unsigned j = 0; j < D; ++j) out.column_weights[k * D + j] = make_rational(j, D);

  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t k = 0; k < s; ++k) {
      for (const auto& [j, a] : vectors[i][k].coords()) {
        out.entries.at(i, k * D + j) = a;
      }
    }
  }
  return out;
}

ExpandedMatrix expand_support(const std::vector<std::vector<FieldElement>>& vectors) {
  ExpandedMatrix out;
  if (vectors.empty()) return out;

  const std::size_t s = vectors.front().size();
  const PrimeContext* ctx = nullptr;
  // columns keyed by (component, ramification index), in column order
  std::set<std::pair<std::size_t, unsigned>> support;
  for (const auto& vec : vectors) {
    if (vec.size() != s) throw input_error("expand: vectors of unequal length");
    for (std::size_t k = 0; k < s; ++k) {
      const auto& entry = vec[k];
      if (ctx == nullptr) {
        ctx = &entry.context();
      } else if (!(entry.context() == *ctx)) {
        throw input_error("expand: mixed field contexts");
      }
      for (const auto& [j, a] : entry.coords()) support.emplace(k, j);
    }
  }
  const unsigned D = (ctx != nullptr) ? ctx->D : 1;

  out.component_count = s;
  out.ramification = D;
  if (ctx != nullptr) out.prime = ctx->p;
  out.entries = RationalMatrix(vectors.size(), support.size());
  out.column_weights.reserve(support.size());
  std::map<std::pair<std::size_t, unsigned>, std::size_t> column_of;
  for (const auto& key : support) {
    column_of.emplace(key, out.column_weights.size());
    out.column_weights.push_back(make_rational(key.second, D));
  }
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t k = 0; k < s; ++k) {
      for (const auto& [j, a] : vectors[i][k].coords()) {
        out.entries.at(i, column_of.at({k, j})) = a;
      }
    }
  }
  return out;
}

std::size_t rank_over_prime_field(const ExpandedMatrix& m) { return rank(m.entries); }

std::vector<std::vector<Rational>> kernel_basis(const ExpandedMatrix& m) {
  // Left kernel of the row matrix: coefficient tuples a with sum a_i t_i = 0.
  return kernel_basis(m.entries.transposed());
}

RationalMatrix left_inverse(const ExpandedMatrix& m) {
  const std::size_t n = m.entries.rows();
  RationalMatrix reduced = m.entries;
  const auto pivots = row_reduce(reduced);
  if (pivots.size() < n) {
    throw not_independent_error("vectors are linearly dependent: rank " +
                                std::to_string(pivots.size()) + " < " + std::to_string(n));
  }

  // Invert the n x n pivot-column submatrix and place its rows at the pivot
  // positions of B; all other rows of B stay zero.
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) aug.at(i, k) = m.entries.at(i, pivots[k]);
    aug.at(i, n + i) = 1;
  }
  row_reduce(aug);
  RationalMatrix b(m.entries.cols(), n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) b.at(pivots[k], j) = aug.at(k, n + j);
  return b;
}

Rational valuation_bound(const ExpandedMatrix& m) {
  if (m.entries.rows() == 0 || m.prime == 0) {
    throw input_error("valuation_bound needs a nonempty expansion");
  }
  const RationalMatrix b = left_inverse(m);
  const Rational max_weight = m.max_column_weight();

  bool found = false;
  long min_val = 0;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b.at(i, j) == 0) continue;
      const long v = rational_valuation(b.at(i, j), m.prime);
      min_val = found ? std::min(min_val, v) : v;
      found = true;
    }
  }
  // M*B = I rules out an all-zero B.
  return max_weight - Rational(min_val) + 1;
}

}  // namespace padic
