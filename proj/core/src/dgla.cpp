#include "gra/dgla.hpp"

#include "gra/canonical.hpp"
#include "gra/error.hpp"

namespace gra {

namespace {

// Everything about a host vertex blow-up that does not depend on the
// partition: the edge list with placeholders for the reattached edges.
class BlowUp {
 public:
  BlowUp(const Graph& guest, const Graph& host, Vertex v)
      : guest_offset_(host.vertex_count() - 1), vertex_count_(guest.vertex_count() + host.vertex_count() - 1) {
    if (v >= host.vertex_count()) throw InvariantError("blow_up: vertex " + std::to_string(v + 1) + " is not in the host graph");
    if (guest.vertex_count() < 2) throw InvariantError("blow_up: inserted graph needs at least two vertices");
    auto compact = [v](Vertex w) { return static_cast<Vertex>(w < v ? w : w - 1); };
    edges_.reserve(guest.edge_count() + host.edge_count());
    for (const Edge& e : guest.edges()) edges_.push_back({static_cast<Vertex>(e.u + guest_offset_), static_cast<Vertex>(e.v + guest_offset_)});
    for (std::size_t p = 0; p < host.edge_count(); ++p) {
      const Edge& e = host.edge(p);
      if (e.u == v || e.v == v) {
        slots_.push_back(edges_.size());
        far_ends_.push_back(compact(e.u == v ? e.v : e.u));
        edges_.push_back({});
      } else {
        edges_.push_back({compact(e.u), compact(e.v)});
      }
    }
  }

  std::size_t degree() const { return slots_.size(); }

  Graph make(const OrderedPartition& partition) {
    for (std::size_t i = 0; i < slots_.size(); ++i)
      edges_[slots_[i]] = make_edge(far_ends_[i], static_cast<Vertex>(guest_offset_ + partition[i]));
    return Graph(vertex_count_, edges_);
  }

 private:
  std::size_t guest_offset_;
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> slots_;
  std::vector<Vertex> far_ends_;
};

// Odometer over [0, base)^digits, last digit fastest.
bool advance(OrderedPartition& digits, std::size_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

void for_each_blow_up_term(const Graph& guest, const Graph& host, Vertex v, int sign, const TermSink& sink, bool proper_two_part = false) {
  BlowUp blow(guest, host, v);
  OrderedPartition partition(blow.degree(), 0);
  const std::size_t base = guest.vertex_count();
  do {
    if (proper_two_part) {
      bool has0 = false, has1 = false;
      for (Vertex part : partition) (part ? has1 : has0) = true;
      if (!has0 || !has1) continue;
    }
    sink(sign, blow.make(partition));
  } while (advance(partition, base));
}

RawSum collect(const std::function<void(const TermSink&)>& generate) {
  RawSum out;
  generate([&out](int sign, Graph&& g) { out.add(sign, std::move(g)); });
  return out;
}

}  // namespace

Graph blow_up_term(const Graph& guest, const Graph& host, Vertex v, const OrderedPartition& partition) {
  BlowUp blow(guest, host, v);
  if (partition.size() != blow.degree()) throw InvariantError("blow_up_term: partition does not cover the incident edges");
  for (Vertex part : partition)
    if (part >= guest.vertex_count()) throw InvariantError("blow_up_term: partition targets a missing vertex");
  return blow.make(partition);
}

RawSum blow_up(const Graph& guest, const Graph& host, Vertex v) {
  return collect([&](const TermSink& sink) { for_each_blow_up_term(guest, host, v, 1, sink); });
}

void for_each_insert_term(const Graph& guest, const Graph& host, int sign, const TermSink& sink) {
  for (std::size_t v = 0; v < host.vertex_count(); ++v) for_each_blow_up_term(guest, host, static_cast<Vertex>(v), sign, sink);
}

RawSum insert(const Graph& guest, const Graph& host) {
  return collect([&](const TermSink& sink) { for_each_insert_term(guest, host, 1, sink); });
}

int koszul_sign(const Graph& a, const Graph& b) { return (a.edge_count() * b.edge_count()) % 2 == 0 ? 1 : -1; }

void for_each_bracket_term(const Graph& g1, const Graph& g2, int sign, const TermSink& sink) {
  for_each_insert_term(g1, g2, sign, sink);
  for_each_insert_term(g2, g1, -sign * koszul_sign(g1, g2), sink);
}

RawSum bracket_raw(const Graph& g1, const Graph& g2) {
  return collect([&](const TermSink& sink) { for_each_bracket_term(g1, g2, 1, sink); });
}

GraphSum bracket(const GraphSum& a, const GraphSum& b) {
  SumAccumulator acc;
  for (const auto& [ga, ca] : a) {
    for (const auto& [gb, cb] : b) {
      const Rational c = ca * cb;
      const Rational minus_c = -c;
      for_each_bracket_term(ga, gb, 1, [&](int s, Graph&& g) { acc.add(s > 0 ? c : minus_c, g); });
    }
  }
  return std::move(acc).finish();
}

GraphSum d_via_bracket(const GraphSum& a) { return bracket(GraphSum::of(edge_graph()), a); }

RawSum d_via_bracket_raw(const Graph& g) { return bracket_raw(edge_graph(), g); }

void for_each_d_direct_term(const Graph& g, int sign, const TermSink& sink) {
  if (!is_leafless(g)) throw InvariantError("d_direct: input " + serialize_graph(g) + " has a leaf");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) for_each_blow_up_term(edge_graph(), g, static_cast<Vertex>(v), sign, sink, true);
}

RawSum d_direct(const Graph& g) {
  return collect([&](const TermSink& sink) { for_each_d_direct_term(g, 1, sink); });
}

RawSum d_direct_squared(const Graph& g) {
  return collect([&](const TermSink& sink) {
    for_each_d_direct_term(g, 1, [&](int s, Graph&& t) { for_each_d_direct_term(t, s, sink); });
  });
}

void for_each_jacobiator_term(const Graph& g1, const Graph& g2, const Graph& g3, const TermSink& sink) {
  const std::size_t k1 = g1.edge_count(), k2 = g2.edge_count(), k3 = g3.edge_count();
  const int second = (k1 * k2 + k1 * k3) % 2 == 0 ? 1 : -1;
  const int third = (k1 * k3 + k2 * k3) % 2 == 0 ? 1 : -1;
  auto nested = [&sink](const Graph& a, const Graph& b, const Graph& c, int sign) {
    for_each_bracket_term(a, b, sign, [&](int s, Graph&& t) { for_each_bracket_term(t, c, s, sink); });
  };
  nested(g1, g2, g3, 1);
  nested(g2, g3, g1, second);
  nested(g3, g1, g2, third);
}

RawSum jacobiator(const Graph& g1, const Graph& g2, const Graph& g3) {
  return collect([&](const TermSink& sink) { for_each_jacobiator_term(g1, g2, g3, sink); });
}

namespace {

// Inner raw bracket merged by canonical form using only the sign of one
// explicit relabeling per term; zero graphs stay in.
std::vector<std::pair<Graph, Integer>> merged_bracket(const Graph& a, const Graph& b) {
  std::unordered_map<Graph, Integer, GraphHash> acc;
  for_each_bracket_term(a, b, 1, [&](int s, Graph&& t) {
    CanonicalLabeling c = canonical_labeling(t);
    acc[std::move(c.canonical)] += s * c.sign;
  });
  std::vector<std::pair<Graph, Integer>> out;
  for (auto& [g, c] : acc)
    if (c != 0) out.emplace_back(g, std::move(c));
  return out;
}

}  // namespace

GraphSum jacobiator_reduced(const Graph& g1, const Graph& g2, const Graph& g3) {
  const std::size_t k1 = g1.edge_count(), k2 = g2.edge_count(), k3 = g3.edge_count();
  const int second = (k1 * k2 + k1 * k3) % 2 == 0 ? 1 : -1;
  const int third = (k1 * k3 + k2 * k3) % 2 == 0 ? 1 : -1;
  SumAccumulator acc;
  auto nested = [&acc](const Graph& a, const Graph& b, const Graph& c, int sign) {
    for (const auto& [inner, coeff] : merged_bracket(a, b)) {
      const Rational plus(coeff * sign), minus(-plus);
      for_each_bracket_term(inner, c, 1, [&](int s, Graph&& t) { acc.add(s > 0 ? plus : minus, t); });
    }
  };
  nested(g1, g2, g3, 1);
  nested(g2, g3, g1, second);
  nested(g3, g1, g2, third);
  return std::move(acc).finish();
}

bool is_cocycle(const GraphSum& a) { return d_via_bracket(a).empty(); }

}  // namespace gra
