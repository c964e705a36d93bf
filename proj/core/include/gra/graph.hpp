#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gra {

// Vertices are 0-based in the C++ API. The text formats are 1-based.
using Vertex = std::uint16_t;

/// Bitmask-based algorithms cap the vertex count.
inline constexpr std::size_t kMaxVertices = 64;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Unordered pair stored as (min, max).
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// A simple graph on vertices 0..n-1 with an ordered edge list.
///
/// The position of an edge in the list is its place in the wedge ordering
/// I ^ II ^ ... ^ K; swapping two entries flips the sign of the graph's class.
/// Construction validates: 1 <= n <= kMaxVertices, at least one edge, no
/// loops, no repeated edges, endpoints in range. Edges are normalized to
/// (min, max) without moving them in the list.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::vector<Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<std::pair<int, int>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t position) const { return edges_[position]; }

  std::size_t degree(Vertex v) const;
  std::vector<std::size_t> degrees() const;
  /// Bit w of the result is set iff {v, w} is an edge.
  std::vector<std::uint64_t> adjacency() const;
  /// Edge-list positions of the edges at v, ascending.
  std::vector<std::size_t> incident_edges(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph&, const Graph&) = default;
  /// Orders by vertex count, then edge count, then edge list lexicographically.
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

/// A bijection on {0..n-1}; images()[v] is the image of v.
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<Vertex> images);
  static VertexPermutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const { return images_; }

  VertexPermutation inverse() const;
  /// (p.then(q))(v) == q(p(v)).
  VertexPermutation then(const VertexPermutation& q) const;

  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
  friend auto operator<=>(const VertexPermutation&, const VertexPermutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// Relabels every edge through p, keeping list positions.
Graph relabel(const Graph& g, const VertexPermutation& p);

/// Reorders the edge list so that new position i holds old edge order[i].
Graph permute_edges(const Graph& g, std::span<const std::size_t> order);

/// +1 for even permutations of {0..size-1}, -1 for odd ones.
int permutation_sign(std::span<const std::size_t> permutation);

/// True iff every vertex has degree >= 2.
bool is_leafless(const Graph& g);
bool is_connected(const Graph& g);

/// The single-edge graph on two vertices.
const Graph& edge_graph();

/// Parses "n: (u,v), (u,v), ..." with 1-based vertices.
Graph parse_graph(std::string_view text);
/// Emits "n: (u,v), (u,v), ..." in stored order; inverse of parse_graph.
std::string serialize_graph(const Graph& g);
/// Space-separated 1-based images, e.g. "2 1 3".
std::string serialize_permutation(const VertexPermutation& p);

}  // namespace gra
