#include "gra/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

#include "gra/error.hpp"

namespace gra {

int sign_of(Verdict v) {
  switch (v) {
    case Verdict::Positive: return 1;
    case Verdict::Negative: return -1;
    case Verdict::Zero: return 0;
  }
  return 0;
}

namespace {

// Sign of the permutation that sorts `keys` (all distinct), by inversion count.
int sorting_sign(std::span<const Edge> keys) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (std::size_t j = i + 1; j < keys.size(); ++j)
      if (keys[j] < keys[i]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

// The sorted edge list of a labeling is lexicographically smaller exactly
// when its upper-triangular adjacency string, read row by row, is larger.
// Labels are handed out in increasing order; the unlabeled vertices sit in an
// ordered partition whose cells are the blocks of labels still to come, so
// the next label must be drawn from the first cell and fixes one complete row.
// Rows are compared as they are produced, which gives exact prefix pruning.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()), cells_((n_ + 1) * n_, 0) {
    const auto adj = g.adjacency();
    std::copy(adj.begin(), adj.end(), adj_.begin());
    cells_[0] = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    relabeled_.resize(g.edge_count());
  }

  CanonicalLabeling run() {
    descend(0, 1);
    assert(have_best_);
    std::vector<Edge> edges;
    edges.reserve(g_.edge_count());
    for (const Edge& e : g_.edges()) edges.push_back(make_edge(best_labeling_[e.u], best_labeling_[e.v]));
    std::sort(edges.begin(), edges.end());

    std::optional<VertexPermutation> odd;
    if (have_positive_ && have_negative_) {
      // positive leaf, then back through the negative one.
      std::vector<Vertex> back(n_);
      for (std::size_t v = 0; v < n_; ++v) back[negative_leaf_[v]] = static_cast<Vertex>(v);
      std::vector<Vertex> images(n_);
      for (std::size_t v = 0; v < n_; ++v) images[v] = back[positive_leaf_[v]];
      odd.emplace(std::move(images));
    }
    return CanonicalLabeling{Graph(n_, std::move(edges)), VertexPermutation(best_labeling_), best_sign_, std::move(odd)};
  }

 private:
  void descend(std::size_t depth, std::size_t cell_count) {
    if (depth == n_) {
      visit_leaf();
      return;
    }
    const std::uint64_t* cells = &cells_[depth * n_];
    // Only candidates attaining the largest row among siblings can be optimal.
    std::array<std::uint64_t, kMaxVertices> rows{};
    std::uint64_t top = 0;
    for (std::uint64_t choices = cells[0]; choices; choices &= choices - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(choices));
      rows[x] = row_of(x, cells, cell_count, nullptr, nullptr);
      top = std::max(top, rows[x]);
    }
    if (depth < valid_rows_) {
      if (top < best_rows_[depth]) return;
      if (top > best_rows_[depth]) {
        best_rows_[depth] = top;
        valid_rows_ = depth + 1;
        reset_leaves();
      }
    } else {
      best_rows_[depth] = top;
      valid_rows_ = depth + 1;
    }
    std::uint64_t* next = &cells_[(depth + 1) * n_];
    for (std::uint64_t choices = cells[0]; choices; choices &= choices - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(choices));
      if (rows[x] != top) continue;
      // A deeper level may have replaced the best prefix with a larger one.
      if (best_rows_[depth] != top) return;
      std::size_t next_count = 0;
      row_of(x, cells, cell_count, next, &next_count);
      order_[depth] = static_cast<Vertex>(x);
      descend(depth + 1, next_count);
    }
  }

  // Row of the upper-triangular adjacency string contributed by labeling x
  // next; optionally writes the refined cell list.
  std::uint64_t row_of(std::size_t x, const std::uint64_t* cells, std::size_t cell_count, std::uint64_t* next, std::size_t* next_count) const {
    const std::uint64_t nbrs = adj_[x];
    std::uint64_t row = 0;
    std::size_t count = 0;
    for (std::size_t c = 0; c < cell_count; ++c) {
      std::uint64_t cell = cells[c];
      if (c == 0) cell &= ~(std::uint64_t{1} << x);
      if (!cell) continue;
      const std::uint64_t in = cell & nbrs;
      const std::uint64_t out = cell & ~nbrs;
      const auto ni = static_cast<unsigned>(std::popcount(in));
      const auto no = static_cast<unsigned>(std::popcount(out));
      row = (row << (ni + no)) | (((std::uint64_t{1} << ni) - 1) << no);
      if (next) {
        if (in) next[count++] = in;
        if (out) next[count++] = out;
      }
    }
    if (next_count) *next_count = count;
    return row;
  }

  void reset_leaves() {
    have_best_ = have_positive_ = have_negative_ = false;
  }

  void visit_leaf() {
    std::array<Vertex, kMaxVertices> labels{};
    for (std::size_t i = 0; i < n_; ++i) labels[order_[i]] = static_cast<Vertex>(i);
    const auto edges = g_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) relabeled_[i] = make_edge(labels[edges[i].u], labels[edges[i].v]);
    const int sign = sorting_sign(relabeled_);

    std::vector<Vertex> labeling(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(n_));
    if (sign > 0 && !have_positive_) {
      positive_leaf_ = labeling;
      have_positive_ = true;
    } else if (sign < 0 && !have_negative_) {
      negative_leaf_ = labeling;
      have_negative_ = true;
    }
    if (!have_best_ || labeling < best_labeling_) {
      best_labeling_ = std::move(labeling);
      best_sign_ = sign;
      have_best_ = true;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
  std::array<std::uint64_t, kMaxVertices> best_rows_{};
  std::size_t valid_rows_ = 0;
  std::array<Vertex, kMaxVertices> order_{};
  std::vector<std::uint64_t> cells_;
  std::vector<Edge> relabeled_;

  bool have_best_ = false;
  std::vector<Vertex> best_labeling_;
  int best_sign_ = 1;
  bool have_positive_ = false;
  bool have_negative_ = false;
  std::vector<Vertex> positive_leaf_;
  std::vector<Vertex> negative_leaf_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonicalSearch(g).run(); }

CanonicalResult canonicalize(const Graph& g) {
  CanonicalLabeling c = canonical_labeling(g);
  const Verdict verdict = c.is_zero() ? Verdict::Zero : (c.sign > 0 ? Verdict::Positive : Verdict::Negative);
  return CanonicalResult{std::move(c.canonical), verdict};
}

int induced_edge_sign(const Graph& g, const VertexPermutation& p) {
  const std::size_t n = g.vertex_count();
  if (p.size() != n) throw InvariantError("permutation size does not match vertex count");
  std::vector<std::size_t> position(n * n, g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) position[g.edge(i).u * n + g.edge(i).v] = i;
  std::vector<std::size_t> image(g.edge_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge e = make_edge(p(g.edge(i).u), p(g.edge(i).v));
    image[i] = position[e.u * n + e.v];
    if (image[i] == g.edge_count()) throw InvariantError("permutation is not an automorphism: edge " + std::to_string(i + 1) + " has no image");
  }
  return permutation_sign(image);
}

namespace {

void extend_automorphism(const std::vector<std::uint64_t>& adj, const std::vector<std::size_t>& deg, std::vector<Vertex>& images,
                         std::uint64_t used, std::size_t v, std::vector<VertexPermutation>& out) {
  const std::size_t n = adj.size();
  if (v == n) {
    out.emplace_back(images);
    return;
  }
  for (std::size_t w = 0; w < n; ++w) {
    if ((used >> w) & 1 || deg[w] != deg[v]) continue;
    bool consistent = true;
    for (std::size_t u = 0; u < v && consistent; ++u)
      consistent = ((adj[v] >> u) & 1) == ((adj[w] >> images[u]) & 1);
    if (!consistent) continue;
    images[v] = static_cast<Vertex>(w);
    extend_automorphism(adj, deg, images, used | (std::uint64_t{1} << w), v + 1, out);
  }
}

}  // namespace

std::vector<VertexPermutation> automorphisms(const Graph& g) {
  std::vector<VertexPermutation> out;
  std::vector<Vertex> images(g.vertex_count());
  extend_automorphism(g.adjacency(), g.degrees(), images, 0, 0, out);
  return out;
}

ZeroGraphCheck is_zero_graph(const Graph& g) {
  for (auto& p : automorphisms(g))
    if (induced_edge_sign(g, p) < 0) return {true, std::move(p)};
  return {false, std::nullopt};
}

}  // namespace gra
