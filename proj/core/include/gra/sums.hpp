#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gra/graph.hpp"
#include "gra/rational.hpp"

namespace gra {

struct Term {
  Rational coeff;
  Graph graph;
};

/// Formal sum of edge-ordered graphs before any quotienting: terms keep their
/// order, repeat freely, and are never merged.
class RawSum {
 public:
  RawSum() = default;

  void add(Rational coeff, Graph graph) { terms_.push_back({std::move(coeff), std::move(graph)}); }
  /// Appends every term of other, multiplied by factor.
  void append(const RawSum& other, const Rational& factor = 1);

  std::span<const Term> terms() const { return terms_; }
  const Term& operator[](std::size_t i) const { return terms_[i]; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  void reserve(std::size_t n) { terms_.reserve(n); }

 private:
  std::vector<Term> terms_;
};

/// Reduced element of Gra: canonical non-zero graphs with non-zero
/// coefficients. The empty sum is the zero class.
class GraphSum {
 public:
  using Map = std::map<Graph, Rational>;

  GraphSum() = default;

  /// The class of a single graph; empty if g is a zero graph.
  static GraphSum of(const Graph& g, const Rational& coeff = 1);

  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  /// Coefficient of a canonical key, zero if absent.
  Rational coefficient(const Graph& canonical) const;
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const GraphSum&, const GraphSum&) = default;

 private:
  friend class SumAccumulator;
  friend GraphSum add(const GraphSum& a, const GraphSum& b);
  friend GraphSum scale(const Rational& c, const GraphSum& a);

  Map entries_;
};

/// Streaming reduction: canonicalizes each added term, drops zero graphs,
/// applies the sign, and merges equal keys.
class SumAccumulator {
 public:
  void add(const Rational& coeff, const Graph& g);
  void add(int sign, const Graph& g);
  void add(const GraphSum& s, const Rational& factor = 1);
  std::size_t terms_seen() const { return seen_; }
  GraphSum finish() &&;

 private:
  std::unordered_map<Graph, Rational, GraphHash> acc_;
  std::size_t seen_ = 0;
};

/// Class of s in Gra.
GraphSum reduce(const RawSum& s);

/// Re-embeds a reduced sum as raw terms, in key order.
RawSum embed(const GraphSum& s);

GraphSum add(const GraphSum& a, const GraphSum& b);
GraphSum scale(const Rational& c, const GraphSum& a);

/// One term per line: "<rational> * <graph literal>"; '#' lines and blank
/// lines are skipped; a lone "0" line is the empty sum.
RawSum parse_sum(std::string_view text);
/// "0\n" for the empty sum, otherwise one line per term.
std::string serialize_sum(const RawSum& s);
std::string serialize_sum(const GraphSum& s);

}  // namespace gra
