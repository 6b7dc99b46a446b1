// Simple undirected graphs: representation, text formats, elementary queries
// and k-tree fixture generators.
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polydec {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// Undirected edge stored canonically with `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    }
  }

  [[nodiscard]] bool has(VertexId w) const { return w == u || w == v; }
  [[nodiscard]] VertexId other(VertexId w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class Graph {
 public:
  Graph() = default;

  /// Builds a graph from a vertex list and an edge list. Duplicate vertices
  /// and duplicate edges collapse; an edge endpoint outside `vertices` throws.
  Graph(VertexSet vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adjacency_.resize(vertices_.size());
    for (const Edge& e : edges_) {
      if (!contains(e.u) || !contains(e.v)) {
        throw std::invalid_argument("edge " + to_string(e) +
                                    " references an unknown vertex");
      }
      adjacency_[slot(e.u)].push_back(e.v);
      adjacency_[slot(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  /// Graph whose vertex set is the union of the edge endpoints.
  static Graph from_edges(const std::vector<Edge>& edges) {
    VertexSet vs;
    vs.reserve(2 * edges.size());
    for (const Edge& e : edges) {
      vs.push_back(e.u);
      vs.push_back(e.v);
    }
    return Graph(std::move(vs), edges);
  }

  [[nodiscard]] const VertexSet& vertices() const { return vertices_; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] std::size_t order() const { return vertices_.size(); }
  [[nodiscard]] std::size_t size() const { return edges_.size(); }
  [[nodiscard]] bool empty() const { return vertices_.empty(); }

  [[nodiscard]] bool contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  [[nodiscard]] bool has_edge(VertexId a, VertexId b) const {
    if (a == b || !contains(a)) return false;
    const auto& nbrs = adjacency_[slot(a)];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }

  /// Position of `v` in `vertices()`; throws for unknown vertices.
  [[nodiscard]] std::size_t index_of(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) {
      throw std::out_of_range("unknown vertex " + std::to_string(v));
    }
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// N(v): neighbours of `v`, ascending.
  [[nodiscard]] const VertexSet& neighbors(VertexId v) const {
    return adjacency_[index_of(v)];
  }

  [[nodiscard]] std::size_t degree(VertexId v) const {
    return neighbors(v).size();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  [[nodiscard]] std::size_t slot(VertexId v) const { return index_of(v); }

  VertexSet vertices_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
};

// ---------------------------------------------------------------------------
// Queries

inline VertexSet open_neighborhood(const Graph& g, VertexId v) {
  return g.neighbors(v);
}

inline VertexSet closed_neighborhood(const Graph& g, VertexId v) {
  VertexSet out = g.neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) edges.emplace_back(vs[i], vs[j]);
    }
  }
  return Graph(vs, std::move(edges));
}

/// Edges with exactly one endpoint in `inside`.
inline std::vector<Edge> edge_boundary(const Graph& g, const VertexSet& inside) {
  VertexSet s = inside;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (VertexId v : s) {
    if (!g.contains(v)) {
      throw std::out_of_range("unknown vertex " + std::to_string(v));
    }
  }
  auto in = [&](VertexId v) { return std::binary_search(s.begin(), s.end(), v); };
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (in(e.u) != in(e.v)) out.push_back(e);
  }
  return out;
}

[[nodiscard]] inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack{g.vertices().front()};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      std::size_t i = g.index_of(w);
      if (!seen[i]) {
        seen[i] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

// ---------------------------------------------------------------------------
// Text formats

enum class GraphFormat { edge_list, dimacs };

inline GraphFormat parse_format_name(std::string_view name) {
  if (name == "edge-list") return GraphFormat::edge_list;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline bool parse_id(const std::string& tok, std::uint64_t& out) {
  if (tok.empty() || tok.size() > 10) return false;
  std::uint64_t v = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  out = v;
  return true;
}

inline VertexId parse_vertex(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  if (!parse_id(tok, v) || v > 0xFFFFFFFFull) {
    throw ParseError(line, "expected a non-negative vertex id, got '" + tok + "'");
  }
  return static_cast<VertexId>(v);
}

inline Edge checked_edge(VertexId a, VertexId b, std::size_t line) {
  if (a == b) {
    throw ParseError(line, "self-loop on vertex " + std::to_string(a));
  }
  return Edge(a, b);
}

inline Graph parse_edge_list(std::istream& in) {
  VertexSet vertices;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "n") {
      if (toks.size() != 2) throw ParseError(lineno, "expected 'n <count>'");
      std::uint64_t count = 0;
      if (!parse_id(toks[1], count) || count > 0xFFFFFFFFull) {
        throw ParseError(lineno, "bad vertex count '" + toks[1] + "'");
      }
      for (std::uint64_t v = 0; v < count; ++v) {
        vertices.push_back(static_cast<VertexId>(v));
      }
      continue;
    }
    if (toks.size() == 1) {
      // isolated vertex
      vertices.push_back(parse_vertex(toks[0], lineno));
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError(lineno, "expected 'u v', got '" + line + "'");
    }
    VertexId a = parse_vertex(toks[0], lineno);
    VertexId b = parse_vertex(toks[1], lineno);
    edges.push_back(checked_edge(a, b, lineno));
    vertices.push_back(a);
    vertices.push_back(b);
  }
  return Graph(std::move(vertices), std::move(edges));
}

inline Graph parse_dimacs(std::istream& in) {
  bool have_header = false;
  std::uint64_t n = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      std::uint64_t m = 0;
      if (have_header) throw ParseError(lineno, "duplicate 'p' line");
      if (toks.size() != 4 || toks[1] != "edge" || !parse_id(toks[2], n) ||
          !parse_id(toks[3], m) || n > 0xFFFFFFFFull) {
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      }
      have_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (!have_header) throw ParseError(lineno, "'e' line before 'p' line");
      if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
      VertexId a = parse_vertex(toks[1], lineno);
      VertexId b = parse_vertex(toks[2], lineno);
      for (VertexId w : {a, b}) {
        if (w == 0 || w > n) {
          throw ParseError(lineno, "vertex " + std::to_string(w) +
                                       " not declared (ids are 1.." +
                                       std::to_string(n) + ")");
        }
      }
      edges.push_back(checked_edge(a, b, lineno));
      continue;
    }
    throw ParseError(lineno, "unrecognised line '" + line + "'");
  }
  if (!have_header) {
    if (lineno == 0 || edges.empty()) return Graph();
    throw ParseError(lineno, "missing 'p edge' line");
  }
  VertexSet vertices(n);
  for (std::uint64_t i = 0; i < n; ++i) vertices[i] = static_cast<VertexId>(i + 1);
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace detail

inline Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::edge_list ? detail::parse_edge_list(in)
                                          : detail::parse_dimacs(in);
}

inline Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

/// Edge-list output: isolated vertices are written as single-id lines so the
/// text parses back to the same graph.
inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) out << v << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

/// DIMACS output. The vertex set must be exactly 1..n.
inline std::string serialize_dimacs(const Graph& g) {
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] != i + 1) {
      throw std::invalid_argument(
          "DIMACS output needs vertex ids 1..n without gaps");
    }
  }
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline std::string serialize_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::edge_list ? serialize_edge_list(g)
                                          : serialize_dimacs(g);
}

// ---------------------------------------------------------------------------
// Generators

/// How a new k-tree vertex picks the k-clique it attaches to.
enum class KTreeAttachment {
  /// Any k-subset of any (k+1)-clique built so far, uniformly at random.
  any_clique,
  /// A k-subset of the (k+1)-clique closed by the previous vertex. The
  /// construction ordering then has vertex separation at most k+1.
  recent_clique,
};

/// k-tree on vertices 0..m-1, built in id order: 0..k form K_{k+1}, then
/// each vertex attaches to k mutually adjacent earlier vertices that lie in a
/// common (k+1)-clique. Deterministic for a given seed.
inline Graph generate_k_tree(unsigned k, unsigned m, std::uint64_t seed,
                             KTreeAttachment attach = KTreeAttachment::any_clique) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (m < k + 1) {
    throw std::invalid_argument("k-tree of order " + std::to_string(m) +
                                " needs at least k+1 = " + std::to_string(k + 1) +
                                " vertices");
  }
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  std::vector<VertexSet> cliques;  // (k+1)-cliques, each sorted
  VertexSet base(k + 1);
  for (VertexId i = 0; i <= k; ++i) {
    base[i] = i;
    for (VertexId j = 0; j < i; ++j) edges.emplace_back(j, i);
  }
  cliques.push_back(base);
  for (VertexId v = k + 1; v < m; ++v) {
    const VertexSet& host = attach == KTreeAttachment::any_clique
                                ? cliques[rng() % cliques.size()]
                                : cliques.back();
    std::size_t drop = rng() % host.size();
    VertexSet clique;
    for (std::size_t i = 0; i < host.size(); ++i) {
      if (i == drop) continue;
      clique.push_back(host[i]);
      edges.emplace_back(host[i], v);
    }
    clique.push_back(v);
    cliques.push_back(std::move(clique));
  }
  VertexSet vertices(m);
  for (VertexId i = 0; i < m; ++i) vertices[i] = i;
  return Graph(std::move(vertices), std::move(edges));
}

/// k-tree with floor(delete_fraction * |E|) edges removed, chosen by seed.
inline Graph random_partial_k_tree(unsigned k, unsigned m, double delete_fraction,
                                   std::uint64_t seed,
                                   KTreeAttachment attach = KTreeAttachment::any_clique) {
  if (!(delete_fraction >= 0.0 && delete_fraction <= 1.0)) {
    throw std::invalid_argument("delete_fraction must lie in [0, 1]");
  }
  Graph full = generate_k_tree(k, m, seed, attach);
  std::vector<Edge> edges = full.edges();
  auto remove = static_cast<std::size_t>(delete_fraction *
                                         static_cast<double>(edges.size()));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  // Fisher-Yates with a fixed reduction so results do not depend on the
  // standard library's distribution implementation.
  for (std::size_t i = edges.size(); i > 1; --i) {
    std::swap(edges[i - 1], edges[rng() % i]);
  }
  edges.resize(edges.size() - remove);
  return Graph(full.vertices(), std::move(edges));
}

}  // namespace polydec
