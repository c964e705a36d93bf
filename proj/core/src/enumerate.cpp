#include <algorithm>

#include "gra/canonical.hpp"
#include "gra/error.hpp"

namespace gra {

namespace {

// Every graph with k edges arises from one with k - 1 edges by adding an
// edge, so canonical augmentation level by level reaches every class.
std::vector<Graph> next_level(const std::vector<Graph>& level) {
  std::vector<Graph> out;
  for (const Graph& g : level) {
    const std::size_t n = g.vertex_count();
    const auto adj = g.adjacency();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if ((adj[a] >> b) & 1) continue;
        edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
        out.push_back(canonical_labeling(Graph(n, edges)).canonical);
        edges.pop_back();
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t n, std::size_t k, EnumerationFlags flags) {
  if (n == 0) throw InvariantError("enumerate_graphs: need at least one vertex");
  if (n > kMaxVertices) throw InvariantError("enumerate_graphs: too many vertices");
  if (k == 0) throw InvariantError("enumerate_graphs: need at least one edge");
  if (flags.exclude_zero && flags.zero_only) throw InvariantError("enumerate_graphs: exclude_zero and zero_only both set");
  if (n < 2 || k > n * (n - 1) / 2) return {};

  std::vector<Graph> level{Graph(n, {{0, 1}})};
  for (std::size_t edges = 1; edges < k; ++edges) level = next_level(level);

  std::vector<Graph> out;
  for (Graph& g : level) {
    if (flags.connected && !is_connected(g)) continue;
    if (flags.leafless && !is_leafless(g)) continue;
    if (flags.exclude_zero || flags.zero_only) {
      const bool zero = canonical_labeling(g).is_zero();
      if (flags.exclude_zero && zero) continue;
      if (flags.zero_only && !zero) continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_graphs_up_to(std::size_t max_vertices, EnumerationFlags flags) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    for (std::size_t k = 1; k <= n * (n - 1) / 2; ++k) {
      auto part = enumerate_graphs(n, k, flags);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return out;
}

}  // namespace gra
