#pragma once

#include <optional>
#include <vector>

#include "gra/graph.hpp"

namespace gra {

enum class Verdict { Positive, Negative, Zero };

/// +1, -1, or 0 for a zero graph.
int sign_of(Verdict v);

struct CanonicalResult {
  /// Canonically labeled graph with its edge list sorted.
  Graph canonical;
  Verdict verdict;
};

/// Everything the canonical search learns about a graph.
///
/// `labeling` sends each input vertex to its canonical label; among all
/// optimal relabelings it is the one with the lexicographically smallest image
/// list. `sign` is the parity of the edge permutation carrying the relabeled
/// input order to the sorted canonical order under that labeling. When the
/// graph is a zero graph, `odd_automorphism` holds an automorphism of the
/// input whose induced edge permutation is odd.
struct CanonicalLabeling {
  Graph canonical;
  VertexPermutation labeling;
  int sign;
  std::optional<VertexPermutation> odd_automorphism;

  bool is_zero() const { return odd_automorphism.has_value(); }
};

/// Relabeling of g whose sorted edge list is lexicographically minimal over
/// all n! vertex bijections, found by branch and bound over label prefixes.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalResult canonicalize(const Graph& g);

/// Parity of the edge-position permutation induced by p. Throws
/// InvariantError if p does not map the edge set onto itself.
int induced_edge_sign(const Graph& g, const VertexPermutation& p);

/// All adjacency-preserving bijections, in lexicographic order of images.
std::vector<VertexPermutation> automorphisms(const Graph& g);

struct ZeroGraphCheck {
  bool is_zero;
  /// First odd automorphism in lexicographic order, if any.
  std::optional<VertexPermutation> witness;
};

ZeroGraphCheck is_zero_graph(const Graph& g);

struct EnumerationFlags {
  bool connected = false;
  bool leafless = false;
  bool exclude_zero = false;
  /// Keep only zero graphs. Mutually exclusive with exclude_zero.
  bool zero_only = false;
};

/// One canonical representative per isomorphism class of graphs with n
/// vertices and k >= 1 edges that satisfy the flags, sorted by edge list.
std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t k, EnumerationFlags flags = {});

/// Union of enumerate_graphs over 2 <= n <= max_vertices and every k >= 1.
std::vector<Graph> enumerate_graphs_up_to(std::size_t max_vertices, EnumerationFlags flags = {});

}  // namespace gra
