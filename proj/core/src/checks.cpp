#include "gra/checks.hpp"

#include "gra/canonical.hpp"
#include "gra/certificate.hpp"
#include "gra/dgla.hpp"
#include "gra/sums.hpp"

namespace gra {

CheckReport check_d_squared(std::size_t max_vertices, std::size_t max_edges) {
  CheckReport report;
  for (const Graph& g : enumerate_graphs_up_to(max_vertices, {.leafless = true})) {
    if (g.edge_count() > max_edges) continue;
    ++report.cases;
    const RawSum dd = d_direct_squared(g);
    const PairingCertificate cert = cancellation_certificate(dd);
    if (!cert.identically_zero() || !verify_certificate(dd, cert)) {
      report.passed = false;
      report.counterexample = serialize_graph(g) + ": " + std::to_string(cert.residual.size()) + " of " + std::to_string(dd.size()) +
                              " terms of d(d(g)) left unpaired";
      return report;
    }
    if (!reduce(dd).empty()) {
      report.passed = false;
      report.counterexample = serialize_graph(g) + ": d(d(g)) does not reduce to zero";
      return report;
    }
  }
  return report;
}

std::vector<Triple> sample_triples(const std::vector<Graph>& pool, std::size_t count, std::uint64_t seed) {
  std::vector<Triple> out;
  if (pool.empty()) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    out.emplace_back(pool[a], pool[b], pool[c]);
  }
  return out;
}

CheckReport check_jacobi(std::size_t max_vertices, std::size_t trials, std::uint64_t seed) {
  CheckReport report;
  for (const auto& [g1, g2, g3] : sample_triples(enumerate_graphs_up_to(max_vertices), trials, seed)) {
    ++report.cases;
    const GraphSum jac = jacobiator_reduced(g1, g2, g3);
    if (!jac.empty()) {
      report.passed = false;
      report.counterexample = "Jac(" + serialize_graph(g1) + "; " + serialize_graph(g2) + "; " + serialize_graph(g3) + ") = " +
                              std::to_string(jac.size()) + "-term non-zero sum";
      return report;
    }
  }
  return report;
}

}  // namespace gra
