#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gra/graph.hpp"
#include "gra/rational.hpp"
#include "gra/sums.hpp"

namespace gra {

using Matrix = std::vector<std::vector<Rational>>;

struct BasisFlags {
  bool connected = false;
};

/// Leafless non-zero graphs with n vertices and k edges, canonical order.
std::vector<Graph> bigraded_basis(std::size_t n, std::size_t k, BasisFlags flags = {});

/// Matrix of d from bidegree (n, k) to (n + 1, k + 1):
/// entries[j][i] is the coefficient of target_basis[j] in d(source_basis[i]).
struct DMatrix {
  std::vector<Graph> source_basis;
  std::vector<Graph> target_basis;
  Matrix entries;

  std::size_t rows() const { return target_basis.size(); }
  std::size_t cols() const { return source_basis.size(); }
  /// Column i as a reduced sum.
  GraphSum column(std::size_t i) const;
};

/// Throws InvariantError if some image term lies outside the target basis.
DMatrix d_matrix(std::size_t n, std::size_t k, BasisFlags flags = {});

struct EchelonForm {
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Null space basis of an exact matrix with `cols` columns: one primitive
/// integer vector per free column, found by fraction-free elimination with
/// leftmost pivots. Deterministic.
std::vector<std::vector<Integer>> null_space(const Matrix& m, std::size_t cols);

/// Rank by fraction-free elimination.
std::size_t rank(const Matrix& m, std::size_t cols);

/// Product b * a.
Matrix multiply(const Matrix& b, const Matrix& a, std::size_t a_cols);

/// Basis of ker d at (n, k) as reduced sums.
std::vector<GraphSum> cocycle_space(std::size_t n, std::size_t k, BasisFlags flags = {});

/// "rows cols" header, then one line per row of space-separated rationals.
std::string export_matrix(const Matrix& m, std::size_t cols);

}  // namespace gra
