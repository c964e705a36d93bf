#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "gra/graph.hpp"

namespace gra {

struct CheckReport {
  bool passed = true;
  std::size_t cases = 0;
  /// Failing input and what went wrong; empty on success.
  std::string counterexample;
};

/// For every leafless graph with at most max_vertices vertices and at most
/// max_edges edges: the raw d_direct(d_direct(g)) has a cancellation
/// certificate with empty residual and reduces to zero.
CheckReport check_d_squared(std::size_t max_vertices, std::size_t max_edges);

using Triple = std::tuple<Graph, Graph, Graph>;

/// `count` triples drawn uniformly with replacement from `pool`.
std::vector<Triple> sample_triples(const std::vector<Graph>& pool, std::size_t count, std::uint64_t seed);

/// Graded Jacobi identity in Gra on `trials` random triples of graphs with
/// 2..max_vertices vertices.
CheckReport check_jacobi(std::size_t max_vertices, std::size_t trials, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20180709;

}  // namespace gra
