#include "gra/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <numeric>

#include "gra/error.hpp"

namespace gra {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ == 0) throw InvariantError("graph must have at least one vertex");
  if (n_ > kMaxVertices) throw InvariantError("graph has more than " + std::to_string(kMaxVertices) + " vertices");
  if (edges_.empty()) throw InvariantError("graph must have at least one edge");
  std::array<std::uint64_t, kMaxVertices> seen{};
  for (Edge& e : edges_) {
    if (e.u == e.v) throw InvariantError("loop at vertex " + std::to_string(e.u + 1));
    e = make_edge(e.u, e.v);
    if (e.v >= n_) throw InvariantError("vertex " + std::to_string(e.v + 1) + " out of range");
    const std::uint64_t bit = std::uint64_t{1} << e.v;
    if (seen[e.u] & bit)
      throw InvariantError("duplicate edge (" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + ")");
    seen[e.u] |= bit;
  }
}

Graph::Graph(std::size_t vertex_count, std::initializer_list<std::pair<int, int>> edges)
    : Graph(vertex_count, [&] {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto [a, b] : edges) {
          if (a < 0 || b < 0) throw InvariantError("negative vertex index");
          out.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
        }
        return out;
      }()) {}

std::size_t Graph::degree(Vertex v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::uint64_t> Graph::adjacency() const {
  std::vector<std::uint64_t> adj(n_, 0);
  for (const Edge& e : edges_) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

std::vector<std::size_t> Graph::incident_edges(Vertex v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
  return out;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  const Edge e = make_edge(a, b);
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.edges_.size() <=> b.edges_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.edges_.begin(), a.edges_.end(), b.edges_.begin(), b.edges_.end());
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ g.vertex_count();
  for (const Edge& e : g.edges()) {
    h ^= (std::uint64_t{e.u} << 16 | e.v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

VertexPermutation::VertexPermutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Vertex v : images_) {
    if (v >= images_.size() || hit[v]) throw InvariantError("vertex permutation is not a bijection");
    hit[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  return VertexPermutation(std::move(images));
}

VertexPermutation VertexPermutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) inv[images_[v]] = static_cast<Vertex>(v);
  return VertexPermutation(std::move(inv));
}

VertexPermutation VertexPermutation::then(const VertexPermutation& q) const {
  if (q.size() != size()) throw InvariantError("composing permutations of different sizes");
  std::vector<Vertex> out(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) out[v] = q(images_[v]);
  return VertexPermutation(std::move(out));
}

Graph relabel(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.vertex_count()) throw InvariantError("permutation size does not match vertex count");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back(make_edge(p(e.u), p(e.v)));
  return Graph(g.vertex_count(), std::move(edges));
}

Graph permute_edges(const Graph& g, std::span<const std::size_t> order) {
  if (order.size() != g.edge_count()) throw InvariantError("edge order has wrong length");
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (std::size_t i : order) {
    if (i >= g.edge_count()) throw InvariantError("edge order index out of range");
    edges.push_back(g.edge(i));
  }
  return Graph(g.vertex_count(), std::move(edges));
}

int permutation_sign(std::span<const std::size_t> permutation) {
  std::vector<bool> visited(permutation.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < permutation.size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !visited[i]; i = permutation[i]) {
      visited[i] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

bool is_leafless(const Graph& g) {
  const auto deg = g.degrees();
  return std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d >= 2; });
}

bool is_connected(const Graph& g) {
  const auto adj = g.adjacency();
  const std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
  std::uint64_t reached = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

const Graph& edge_graph() {
  static const Graph g(2, {{0, 1}});
  return g;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void skip_spaces() {
    while (!done() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::size_t integer() {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("graph literal, column " + std::to_string(pos_ + 1) + ": " + what + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Cursor in(trim(text));
  const std::size_t n = in.integer();
  if (n > kMaxVertices) throw InvariantError("graph has more than " + std::to_string(kMaxVertices) + " vertices");
  in.expect(':');
  in.skip_spaces();
  std::vector<Edge> edges;
  for (;;) {
    in.expect('(');
    const std::size_t a = in.integer();
    in.expect(',');
    const std::size_t b = in.integer();
    in.expect(')');
    if (a < 1 || b < 1 || a > n || b > n)
      throw InvariantError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " + std::to_string(n) + " vertices");
    edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
    if (in.done()) break;
    in.expect(',');
    in.skip_spaces();
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ":";
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    out += i == 0 ? " (" : ", (";
    out += std::to_string(g.edge(i).u + 1);
    out += ',';
    out += std::to_string(g.edge(i).v + 1);
    out += ')';
  }
  return out;
}

std::string serialize_permutation(const VertexPermutation& p) {
  std::string out;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (v) out += ' ';
    out += std::to_string(p(static_cast<Vertex>(v)) + 1);
  }
  return out;
}

}  // namespace gra
