#include "gra/certificate.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "gra/canonical.hpp"
#include "gra/error.hpp"

namespace gra {

namespace {

// Vertex map a -> b through the shared canonical labels.
VertexPermutation isomorphism_between(const CanonicalLabeling& a, const CanonicalLabeling& b) {
  return a.labeling.then(b.labeling.inverse());
}

int unit_sign(const Rational& c) { return c > 0 ? 1 : -1; }

}  // namespace

PairingCertificate cancellation_certificate(const RawSum& s) {
  std::vector<CanonicalLabeling> labels;
  labels.reserve(s.size());
  std::unordered_map<Graph, std::vector<std::size_t>, GraphHash> classes;
  std::vector<const Graph*> class_order;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Rational& c = s[i].coeff;
    if (c != 1 && c != -1) throw InvariantError("cancellation_certificate: coefficient " + format_rational(c) + " of term " + std::to_string(i) + " is not +1 or -1");
    labels.push_back(canonical_labeling(s[i].graph));
    auto [it, inserted] = classes.try_emplace(labels.back().canonical);
    if (inserted) class_order.push_back(&it->first);
    it->second.push_back(i);
  }

  PairingCertificate cert;
  for (const Graph* key : class_order) {
    const auto& members = classes.at(*key);
    if (labels[members.front()].is_zero()) {
      std::size_t j = 0;
      for (; j + 1 < members.size(); j += 2) {
        const std::size_t a = members[j], b = members[j + 1];
        VertexPermutation phi = isomorphism_between(labels[a], labels[b]);
        const int edge_sign = labels[a].sign * labels[b].sign;
        if (unit_sign(s[a].coeff) * edge_sign + unit_sign(s[b].coeff) != 0) phi = phi.then(*labels[b].odd_automorphism);
        cert.pairs.push_back({a, b, std::move(phi)});
      }
      if (j < members.size()) cert.residual.push_back(members[j]);
      continue;
    }
    std::deque<std::size_t> positive, negative;
    for (std::size_t i : members) {
      if (unit_sign(s[i].coeff) * labels[i].sign > 0) {
        if (!negative.empty()) {
          cert.pairs.push_back({negative.front(), i, isomorphism_between(labels[negative.front()], labels[i])});
          negative.pop_front();
        } else {
          positive.push_back(i);
        }
      } else {
        if (!positive.empty()) {
          cert.pairs.push_back({positive.front(), i, isomorphism_between(labels[positive.front()], labels[i])});
          positive.pop_front();
        } else {
          negative.push_back(i);
        }
      }
    }
    cert.residual.insert(cert.residual.end(), positive.begin(), positive.end());
    cert.residual.insert(cert.residual.end(), negative.begin(), negative.end());
  }
  std::sort(cert.pairs.begin(), cert.pairs.end(), [](const CancellingPair& x, const CancellingPair& y) { return x.first < y.first; });
  std::sort(cert.residual.begin(), cert.residual.end());
  return cert;
}

bool verify_certificate(const RawSum& s, const PairingCertificate& cert) {
  std::vector<int> used(s.size(), 0);
  for (const auto& p : cert.pairs) {
    if (p.first >= s.size() || p.second >= s.size() || p.first == p.second) return false;
    ++used[p.first];
    ++used[p.second];
    const Graph& a = s[p.first].graph;
    const Graph& b = s[p.second].graph;
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() || p.isomorphism.size() != a.vertex_count()) return false;
    // Position in b of the image of each edge of a.
    std::vector<std::size_t> image(a.edge_count(), a.edge_count());
    for (std::size_t i = 0; i < a.edge_count(); ++i) {
      const Edge e = make_edge(p.isomorphism(a.edge(i).u), p.isomorphism(a.edge(i).v));
      for (std::size_t j = 0; j < b.edge_count(); ++j)
        if (b.edge(j) == e) image[i] = j;
      if (image[i] == a.edge_count()) return false;
    }
    std::vector<bool> hit(b.edge_count(), false);
    for (std::size_t j : image) {
      if (hit[j]) return false;
      hit[j] = true;
    }
    if (s[p.first].coeff * permutation_sign(image) + s[p.second].coeff != 0) return false;
  }
  for (std::size_t i : cert.residual) {
    if (i >= s.size()) return false;
    ++used[i];
  }
  return std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
}

}  // namespace gra
