#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <vector>

#include "gra/graph.hpp"

namespace gra {

inline void PrintTo(const Graph& g, std::ostream* os) { *os << serialize_graph(g); }

}  // namespace gra

namespace gra::testing {

inline Graph edge() { return Graph(2, {{0, 1}}); }
inline Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
inline Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }
inline Graph square() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph k4_reversed() { return Graph(4, {{2, 3}, {1, 3}, {1, 2}, {0, 3}, {0, 2}, {0, 1}}); }
inline Graph diamond() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Every bijection of {0..n-1}, in lexicographic order.
inline std::vector<VertexPermutation> all_permutations(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  std::vector<VertexPermutation> out;
  do out.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline bool preserves_adjacency(const Graph& g, const VertexPermutation& p) {
  for (const Edge& e : g.edges())
    if (!g.has_edge(p(e.u), p(e.v))) return false;
  return true;
}

// Parity of an edge permutation computed by explicitly tracking where each
// position lands, without going through the library's sign helpers.
inline int tracked_edge_parity(const Graph& g, const VertexPermutation& p) {
  std::vector<std::size_t> image;
  for (const Edge& e : g.edges()) {
    const Edge moved = make_edge(p(e.u), p(e.v));
    const auto it = std::find(g.edges().begin(), g.edges().end(), moved);
    image.push_back(static_cast<std::size_t>(it - g.edges().begin()));
  }
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j) inversions += image[j] < image[i];
  return inversions % 2 ? -1 : 1;
}

struct BruteCanonical {
  std::vector<Edge> edges;
  bool zero = false;
  int sign = 1;
};

// Minimum sorted edge list over all n! relabelings; zero iff two minimizing
// relabelings disagree on the parity of the sorting permutation.
inline BruteCanonical brute_canonical(const Graph& g) {
  BruteCanonical best;
  bool first = true, pos = false, neg = false;
  for (const auto& p : all_permutations(g.vertex_count())) {
    std::vector<Edge> r;
    for (const Edge& e : g.edges()) r.push_back(make_edge(p(e.u), p(e.v)));
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j) inversions += r[j] < r[i];
    std::sort(r.begin(), r.end());
    if (first || r < best.edges) {
      best.edges = r;
      best.sign = inversions % 2 ? -1 : 1;
      pos = neg = false;
      first = false;
    }
    if (r == best.edges) (inversions % 2 ? neg : pos) = true;
  }
  best.zero = pos && neg;
  return best;
}

}  // namespace gra::testing
