#include "gra/homology.hpp"

#include <map>

#include "gra/canonical.hpp"
#include "gra/dgla.hpp"
#include "gra/error.hpp"

namespace gra {

std::vector<Graph> bigraded_basis(std::size_t n, std::size_t k, BasisFlags flags) {
  return enumerate_graphs(n, k, {.connected = flags.connected, .leafless = true, .exclude_zero = true});
}

GraphSum DMatrix::column(std::size_t i) const {
  SumAccumulator acc;
  for (std::size_t j = 0; j < rows(); ++j)
    if (entries[j][i] != 0) acc.add(entries[j][i], target_basis[j]);
  return std::move(acc).finish();
}

DMatrix d_matrix(std::size_t n, std::size_t k, BasisFlags flags) {
  DMatrix m{bigraded_basis(n, k, flags), bigraded_basis(n + 1, k + 1, flags), {}};
  std::map<Graph, std::size_t> row_of;
  for (std::size_t j = 0; j < m.target_basis.size(); ++j) row_of.emplace(m.target_basis[j], j);
  m.entries.assign(m.target_basis.size(), std::vector<Rational>(m.source_basis.size()));
  for (std::size_t i = 0; i < m.source_basis.size(); ++i) {
    for (const auto& [g, c] : d_via_bracket(GraphSum::of(m.source_basis[i]))) {
      const auto it = row_of.find(g);
      if (it == row_of.end())
        throw InvariantError("d_matrix: image " + serialize_graph(g) + " of " + serialize_graph(m.source_basis[i]) + " is not in the target basis");
      m.entries[it->second][i] = c;
    }
  }
  return m;
}

namespace {

// Scales every row to integers and runs Bareiss elimination to row echelon
// form in place. Every division is exact.
EchelonForm bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  EchelonForm form;
  Integer previous = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[row], a[pivot]);
    for (std::size_t r = row + 1; r < a.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = a[row][col] * a[r][c] - a[r][col] * a[row][c];
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), previous.get_mpz_t());
      }
      a[r][col] = 0;
    }
    previous = a[row][col];
    form.pivot_columns.push_back(col);
    ++row;
  }
  return form;
}

std::vector<std::vector<Integer>> integer_rows(const Matrix& m, std::size_t cols) {
  std::vector<std::vector<Integer>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != cols) throw InvariantError("matrix row has wrong length");
    Integer lcm = 1;
    for (const Rational& x : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> ints(cols);
    for (std::size_t c = 0; c < cols; ++c) ints[c] = row[c].get_num() * (lcm / row[c].get_den());
    out.push_back(std::move(ints));
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix& m, std::size_t cols) {
  auto a = integer_rows(m, cols);
  return bareiss(a, cols).rank();
}

std::vector<std::vector<Integer>> null_space(const Matrix& m, std::size_t cols) {
  auto a = integer_rows(m, cols);
  const EchelonForm form = bareiss(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : form.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    // Back substitution from the last pivot row up.
    for (std::size_t r = form.rank(); r-- > 0;) {
      const std::size_t pc = form.pivot_columns[r];
      Rational sum = 0;
      for (std::size_t c = pc + 1; c < cols; ++c)
        if (a[r][c] != 0 && x[c] != 0) sum += Rational(a[r][c]) * x[c];
      x[pc] = -sum / Rational(a[r][pc]);
    }
    Integer lcm = 1, gcd = 0;
    for (const Rational& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> v(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      v[c] = x[c].get_num() * (lcm / x[c].get_den());
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v[c].get_mpz_t());
    }
    for (auto& e : v) e /= gcd;
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix multiply(const Matrix& b, const Matrix& a, std::size_t a_cols) {
  const std::size_t inner = a.size();
  Matrix out(b.size(), std::vector<Rational>(a_cols, Rational(0)));
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i].size() != inner) throw InvariantError("multiply: dimension mismatch");
    for (std::size_t t = 0; t < inner; ++t) {
      if (b[i][t] == 0) continue;
      for (std::size_t j = 0; j < a_cols; ++j) out[i][j] += b[i][t] * a[t][j];
    }
  }
  return out;
}

std::vector<GraphSum> cocycle_space(std::size_t n, std::size_t k, BasisFlags flags) {
  const DMatrix m = d_matrix(n, k, flags);
  std::vector<GraphSum> out;
  for (const auto& v : null_space(m.entries, m.cols())) {
    SumAccumulator acc;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) acc.add(Rational(v[i]), m.source_basis[i]);
    out.push_back(std::move(acc).finish());
  }
  return out;
}

std::string export_matrix(const Matrix& m, std::size_t cols) {
  std::string out = std::to_string(m.size()) + " " + std::to_string(cols) + "\n";
  for (const auto& row : m) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += format_rational(row[c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace gra
