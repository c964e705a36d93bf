#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gra/graph.hpp"
#include "gra/sums.hpp"

namespace gra {

/// Receives generated terms one at a time. Coefficients of generated terms
/// are always +1 or -1.
using TermSink = std::function<void(int sign, Graph&& g)>;

/// Assignment of each edge at a vertex (in ascending edge-list position) to a
/// vertex of the inserted graph. Parts may be empty.
using OrderedPartition = std::vector<Vertex>;

/// Graph obtained from host by replacing vertex v with a copy of guest and
/// reattaching the i-th edge at v to guest vertex partition[i].
///
/// Host vertices other than v keep their order and are compacted to
/// 0..n_host-2; guest vertex j becomes n_host-1+j. The edge list is the
/// guest's edges in order followed by the host's, each host edge keeping its
/// position.
Graph blow_up_term(const Graph& guest, const Graph& host, Vertex v, const OrderedPartition& partition);

/// Sum over all n_guest^deg(v) ordered partitions, coefficients +1, in
/// lexicographic order of partitions.
RawSum blow_up(const Graph& guest, const Graph& host, Vertex v);

/// guest o_i host: blow-ups of every host vertex, in vertex order.
RawSum insert(const Graph& guest, const Graph& host);
void for_each_insert_term(const Graph& guest, const Graph& host, int sign, const TermSink& sink);

/// (-1)^(k1 k2) with k the edge count.
int koszul_sign(const Graph& a, const Graph& b);

/// insert(g1, g2) with +1, then insert(g2, g1) with -(-1)^(k1 k2); every term
/// keeps its native edge order.
RawSum bracket_raw(const Graph& g1, const Graph& g2);
void for_each_bracket_term(const Graph& g1, const Graph& g2, int sign, const TermSink& sink);

/// Bilinear extension of bracket_raw, reduced.
GraphSum bracket(const GraphSum& a, const GraphSum& b);

/// [edge, a] in Gra.
GraphSum d_via_bracket(const GraphSum& a);
RawSum d_via_bracket_raw(const Graph& g);

/// Sum over vertices and ordered partitions of the incident edges into two
/// non-empty parts of the edge blow-up; the new edge comes first. Throws
/// InvariantError for a graph with a leaf.
RawSum d_direct(const Graph& g);
void for_each_d_direct_term(const Graph& g, int sign, const TermSink& sink);

/// d_direct applied to every term of d_direct(g).
RawSum d_direct_squared(const Graph& g);

/// [[g1,g2],g3] + (-1)^(k1k2+k1k3) [[g2,g3],g1] + (-1)^(k1k3+k2k3) [[g3,g1],g2]
/// as raw terms.
RawSum jacobiator(const Graph& g1, const Graph& g2, const Graph& g3);
void for_each_jacobiator_term(const Graph& g1, const Graph& g2, const Graph& g3, const TermSink& sink);

/// reduce(jacobiator(g1, g2, g3)), computed by first merging the raw inner
/// brackets modulo the edge-order relation alone. Zero-graph inner terms are
/// kept, so no vanishing of zero-graph brackets is assumed.
GraphSum jacobiator_reduced(const Graph& g1, const Graph& g2, const Graph& g3);

/// d_via_bracket(a) is empty.
bool is_cocycle(const GraphSum& a);

}  // namespace gra
