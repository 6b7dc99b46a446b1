// Tree and path decompositions, nice path decompositions in signed-vertex
// form, composition orders, and a greedy vertex-ordering heuristic.
#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include <json.hpp>

#include "polydec/graph.hpp"

namespace polydec {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

struct SignedVertex {
  Sign sign = Sign::plus;
  VertexId vertex = 0;

  friend auto operator<=>(const SignedVertex&, const SignedVertex&) = default;
};

inline SignedVertex plus(VertexId v) { return {Sign::plus, v}; }
inline SignedVertex minus(VertexId v) { return {Sign::minus, v}; }

inline std::string to_string(const SignedVertex& s) {
  return (s.sign == Sign::plus ? "+" : "-") + std::to_string(s.vertex);
}

/// One step of a composition order: a vertex addition/removal or an edge.
using CompositionItem = std::variant<SignedVertex, Edge>;

inline std::string to_string(const CompositionItem& item) {
  return std::visit([](const auto& i) { return to_string(i); }, item);
}

struct TreeDecomposition {
  Graph tree;                                   // nodes carry the bag ids
  std::map<VertexId, VertexSet> bags;           // node -> bag
};

struct PathDecomposition {
  std::vector<VertexSet> bags;
};

struct NicePathDecomposition {
  std::vector<SignedVertex> steps;
};

struct CompositionOrder {
  std::vector<CompositionItem> items;

  friend bool operator==(const CompositionOrder&, const CompositionOrder&) = default;
};

// ---------------------------------------------------------------------------
// Violation reports

/// First violated property of a decomposition. `property` is "1".."4" for the
/// composition-order properties, or "vertex", "edge", "compactness", "order".
/// Positions in `witness` are 1-based.
struct Violation {
  std::string property;
  std::vector<std::int64_t> witness;
  std::string message;
};

inline nlohmann::json to_json(const Violation& v) {
  nlohmann::json prop;
  if (v.property.size() == 1 && v.property[0] >= '1' && v.property[0] <= '4') {
    prop = v.property[0] - '0';
  } else {
    prop = v.property;
  }
  return {{"property", prop}, {"witness", v.witness}, {"message", v.message}};
}

using ValidationResult = std::optional<Violation>;  // nullopt == valid

// ---------------------------------------------------------------------------
// Width

inline int width(const std::vector<VertexSet>& bags) {
  if (bags.empty()) throw std::invalid_argument("decomposition has no bags");
  std::size_t widest = 0;
  for (const auto& b : bags) widest = std::max(widest, b.size());
  return static_cast<int>(widest) - 1;
}

inline int width(const PathDecomposition& pd) { return width(pd.bags); }

inline int width(const TreeDecomposition& td) {
  std::vector<VertexSet> bags;
  for (const auto& [node, bag] : td.bags) bags.push_back(bag);
  return width(bags);
}

// ---------------------------------------------------------------------------
// Tree decompositions

namespace detail {

inline bool contains_sorted(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet sorted_unique(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace detail

inline ValidationResult validate_tree_decomposition(const Graph& g,
                                                    const TreeDecomposition& td) {
  const Graph& t = td.tree;
  if (t.empty() || t.size() + 1 != t.order() || !is_connected(t)) {
    throw std::invalid_argument("decomposition tree is not a tree");
  }
  std::map<VertexId, VertexSet> bags;
  for (VertexId node : t.vertices()) {
    auto it = td.bags.find(node);
    bags[node] = it == td.bags.end() ? VertexSet{} : detail::sorted_unique(it->second);
  }
  for (const auto& [node, bag] : td.bags) {
    if (!t.contains(node)) {
      return Violation{"vertex", {node}, "bag for unknown tree node " + std::to_string(node)};
    }
    for (VertexId v : bag) {
      if (!g.contains(v)) {
        return Violation{"vertex", {v}, "bag holds unknown vertex " + std::to_string(v)};
      }
    }
  }
  for (VertexId v : g.vertices()) {
    bool covered = std::any_of(bags.begin(), bags.end(), [&](const auto& kv) {
      return detail::contains_sorted(kv.second, v);
    });
    if (!covered) {
      return Violation{"vertex", {v}, "vertex " + std::to_string(v) + " is in no bag"};
    }
  }
  for (const Edge& e : g.edges()) {
    bool covered = std::any_of(bags.begin(), bags.end(), [&](const auto& kv) {
      return detail::contains_sorted(kv.second, e.u) &&
             detail::contains_sorted(kv.second, e.v);
    });
    if (!covered) {
      return Violation{"edge", {e.u, e.v}, "edge " + to_string(e) + " is in no bag"};
    }
  }
  // The nodes holding v span a subforest of the tree; it is connected iff it
  // has exactly one edge fewer than nodes.
  for (VertexId v : g.vertices()) {
    std::size_t nodes = 0;
    std::size_t links = 0;
    for (const auto& [node, bag] : bags) nodes += detail::contains_sorted(bag, v);
    for (const Edge& e : t.edges()) {
      links += detail::contains_sorted(bags[e.u], v) && detail::contains_sorted(bags[e.v], v);
    }
    if (links + 1 != nodes) {
      return Violation{"compactness", {v},
                       "nodes containing vertex " + std::to_string(v) +
                           " are not connected in the tree"};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Path decompositions

inline ValidationResult validate_path_decomposition(const Graph& g,
                                                    const PathDecomposition& pd) {
  std::vector<VertexSet> bags;
  bags.reserve(pd.bags.size());
  for (const auto& b : pd.bags) bags.push_back(detail::sorted_unique(b));

  for (std::size_t i = 0; i < bags.size(); ++i) {
    for (VertexId v : bags[i]) {
      if (!g.contains(v)) {
        return Violation{"vertex", {v, static_cast<std::int64_t>(i + 1)},
                         "bag " + std::to_string(i + 1) + " holds unknown vertex " +
                             std::to_string(v)};
      }
    }
  }
  for (VertexId v : g.vertices()) {
    bool covered = std::any_of(bags.begin(), bags.end(),
                               [&](const VertexSet& b) { return detail::contains_sorted(b, v); });
    if (!covered) {
      return Violation{"vertex", {v}, "vertex " + std::to_string(v) + " is in no bag"};
    }
  }
  for (const Edge& e : g.edges()) {
    bool covered = std::any_of(bags.begin(), bags.end(), [&](const VertexSet& b) {
      return detail::contains_sorted(b, e.u) && detail::contains_sorted(b, e.v);
    });
    if (!covered) {
      return Violation{"edge", {e.u, e.v}, "edge " + to_string(e) + " is in no bag"};
    }
  }
  for (VertexId v : g.vertices()) {
    std::size_t first = bags.size();
    std::size_t last = 0;
    for (std::size_t i = 0; i < bags.size(); ++i) {
      if (detail::contains_sorted(bags[i], v)) {
        first = std::min(first, i);
        last = i;
      }
    }
    for (std::size_t i = first + 1; i < last; ++i) {
      if (!detail::contains_sorted(bags[i], v)) {
        return Violation{"compactness",
                         {v, static_cast<std::int64_t>(first + 1),
                          static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(last + 1)},
                         "vertex " + std::to_string(v) + " is in bags " +
                             std::to_string(first + 1) + " and " + std::to_string(last + 1) +
                             " but not in bag " + std::to_string(i + 1)};
      }
    }
  }
  return std::nullopt;
}

/// Running active sets V_1..V_{2m+1} of a signed-vertex sequence, starting
/// with the empty bag.
inline std::vector<VertexSet> bags_of(const NicePathDecomposition& npd) {
  std::vector<VertexSet> bags{{}};
  std::set<VertexId> active;
  for (const SignedVertex& s : npd.steps) {
    if (s.sign == Sign::plus) {
      active.insert(s.vertex);
    } else {
      active.erase(s.vertex);
    }
    bags.emplace_back(active.begin(), active.end());
  }
  return bags;
}

/// Checks the signed-vertex sequence: each vertex of `g` added once and
/// removed once, in that order, with no foreign vertices, and every edge
/// covered by some bag. Reported under property "2".
inline ValidationResult validate_nice_path_decomposition(const Graph& g,
                                                         const NicePathDecomposition& npd) {
  std::map<VertexId, std::size_t> added;
  std::map<VertexId, std::size_t> removed;
  for (std::size_t i = 0; i < npd.steps.size(); ++i) {
    const SignedVertex& s = npd.steps[i];
    auto pos = static_cast<std::int64_t>(i + 1);
    if (!g.contains(s.vertex)) {
      return Violation{"2", {s.vertex, pos}, "unknown vertex " + std::to_string(s.vertex)};
    }
    if (s.sign == Sign::plus) {
      if (added.count(s.vertex)) {
        return Violation{"2", {s.vertex, pos},
                         "vertex " + std::to_string(s.vertex) + " added twice"};
      }
      added[s.vertex] = i;
    } else {
      if (!added.count(s.vertex)) {
        return Violation{"2", {s.vertex, pos},
                         "vertex " + std::to_string(s.vertex) + " removed before it was added"};
      }
      if (removed.count(s.vertex)) {
        return Violation{"2", {s.vertex, pos},
                         "vertex " + std::to_string(s.vertex) + " removed twice"};
      }
      removed[s.vertex] = i;
    }
  }
  for (VertexId v : g.vertices()) {
    if (!added.count(v) || !removed.count(v)) {
      return Violation{"2", {v},
                       "vertex " + std::to_string(v) + " is not both added and removed"};
    }
  }
  for (const Edge& e : g.edges()) {
    if (std::max(added[e.u], added[e.v]) > std::min(removed[e.u], removed[e.v])) {
      return Violation{"2", {e.u, e.v},
                       "endpoints of edge " + to_string(e) + " are never active together"};
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Construction

/// Adds vertices in `order`; after each addition removes, in ascending id
/// order, every active vertex whose neighbours have all been added.
inline NicePathDecomposition nice_path_from_ordering(const Graph& g,
                                                     const std::vector<VertexId>& order) {
  if (order.size() != g.order() ||
      detail::sorted_unique(order) != g.vertices()) {
    throw std::invalid_argument("ordering is not a permutation of the vertex set");
  }
  std::vector<std::size_t> pending(g.order());
  for (VertexId v : g.vertices()) pending[g.index_of(v)] = g.degree(v);
  std::vector<bool> added(g.order(), false);
  NicePathDecomposition npd;
  npd.steps.reserve(2 * g.order());
  for (VertexId v : order) {
    npd.steps.push_back(plus(v));
    added[g.index_of(v)] = true;
    std::vector<VertexId> done;
    if (pending[g.index_of(v)] == 0) done.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      std::size_t j = g.index_of(w);
      if (--pending[j] == 0 && added[j]) done.push_back(w);
    }
    std::sort(done.begin(), done.end());
    for (VertexId w : done) npd.steps.push_back(minus(w));
  }
  return npd;
}

/// Places each edge directly after the later of its endpoints' additions.
/// Edges sharing a slot follow canonical (min, max) order.
inline CompositionOrder compose_order(const Graph& g, const NicePathDecomposition& npd) {
  if (auto bad = validate_nice_path_decomposition(g, npd)) {
    throw std::invalid_argument("invalid nice path decomposition: " + bad->message);
  }
  std::map<VertexId, std::size_t> added;
  for (std::size_t i = 0; i < npd.steps.size(); ++i) {
    if (npd.steps[i].sign == Sign::plus) added[npd.steps[i].vertex] = i;
  }
  std::vector<std::vector<Edge>> slots(npd.steps.size());
  for (const Edge& e : g.edges()) {  // already canonical-sorted
    slots[std::max(added[e.u], added[e.v])].push_back(e);
  }
  CompositionOrder co;
  co.items.reserve(npd.steps.size() + g.size());
  for (std::size_t i = 0; i < npd.steps.size(); ++i) {
    co.items.emplace_back(npd.steps[i]);
    for (const Edge& e : slots[i]) co.items.emplace_back(e);
  }
  return co;
}

/// Walks a valid path decomposition of `g`: before each bag, removes the
/// active vertices it lacks, then adds its new ones (both ascending).
inline NicePathDecomposition nice_path_from_bags(const Graph& g, const PathDecomposition& pd) {
  if (auto bad = validate_path_decomposition(g, pd)) {
    throw std::invalid_argument("invalid path decomposition: " + bad->message);
  }
  NicePathDecomposition npd;
  VertexSet active;
  for (const VertexSet& raw : pd.bags) {
    VertexSet bag = detail::sorted_unique(raw);
    VertexSet next;
    for (VertexId v : active) {
      if (detail::contains_sorted(bag, v)) {
        next.push_back(v);
      } else {
        npd.steps.push_back(minus(v));
      }
    }
    for (VertexId v : bag) {
      if (!detail::contains_sorted(active, v)) npd.steps.push_back(plus(v));
    }
    active = std::move(bag);
  }
  for (VertexId v : active) npd.steps.push_back(minus(v));
  return npd;
}

inline NicePathDecomposition strip_edges(const CompositionOrder& co) {
  NicePathDecomposition npd;
  for (const auto& item : co.items) {
    if (const auto* s = std::get_if<SignedVertex>(&item)) npd.steps.push_back(*s);
  }
  return npd;
}

/// The graph a composition order describes on its own: its signed vertices and
/// its edge items.
inline Graph implied_graph(const CompositionOrder& co) {
  VertexSet vs;
  std::vector<Edge> es;
  for (const auto& item : co.items) {
    if (const auto* s = std::get_if<SignedVertex>(&item)) {
      vs.push_back(s->vertex);
    } else {
      const Edge& e = std::get<Edge>(item);
      vs.push_back(e.u);
      vs.push_back(e.v);
      es.push_back(e);
    }
  }
  return Graph(std::move(vs), std::move(es));
}

inline ValidationResult validate_composition_order(const Graph& g, const CompositionOrder& co) {
  // Property 1: every edge of g exactly once, nothing else.
  std::map<Edge, std::size_t> seen;
  for (std::size_t i = 0; i < co.items.size(); ++i) {
    const auto* e = std::get_if<Edge>(&co.items[i]);
    if (!e) continue;
    auto pos = static_cast<std::int64_t>(i + 1);
    if (!g.has_edge(e->u, e->v)) {
      return Violation{"1", {e->u, e->v, pos}, to_string(*e) + " is not an edge of the graph"};
    }
    if (!seen.emplace(*e, i).second) {
      return Violation{"1", {e->u, e->v, pos}, "edge " + to_string(*e) + " occurs more than once"};
    }
  }
  for (const Edge& e : g.edges()) {
    if (!seen.count(e)) {
      return Violation{"1", {e.u, e.v}, "edge " + to_string(e) + " is missing"};
    }
  }
  // Property 2: the signed vertices alone form a nice path decomposition.
  if (auto bad = validate_nice_path_decomposition(g, strip_edges(co))) return bad;
  // Property 3: each edge sits strictly inside both endpoints' active spans.
  std::map<VertexId, std::size_t> added;
  std::map<VertexId, std::size_t> removed;
  for (std::size_t i = 0; i < co.items.size(); ++i) {
    if (const auto* s = std::get_if<SignedVertex>(&co.items[i])) {
      (s->sign == Sign::plus ? added : removed)[s->vertex] = i;
    }
  }
  for (const auto& [e, i] : seen) {
    for (VertexId w : {e.u, e.v}) {
      if (added[w] > i || removed[w] < i) {
        return Violation{"3",
                         {e.u, e.v, static_cast<std::int64_t>(i + 1)},
                         "edge " + to_string(e) + " at position " + std::to_string(i + 1) +
                             " lies outside the active span of vertex " + std::to_string(w)};
      }
    }
  }
  // Property 4: length.
  std::size_t expected = 2 * g.order() + g.size();
  if (co.items.size() != expected) {
    return Violation{"4",
                     {static_cast<std::int64_t>(co.items.size()),
                      static_cast<std::int64_t>(expected)},
                     "length " + std::to_string(co.items.size()) + ", expected " +
                         std::to_string(expected)};
  }
  return std::nullopt;
}

/// Largest active set over the sweep minus one; -1 for the empty order.
inline int composition_width(const CompositionOrder& co) {
  std::size_t active = 0;
  std::size_t peak = 0;
  for (const auto& item : co.items) {
    if (const auto* s = std::get_if<SignedVertex>(&item)) {
      if (s->sign == Sign::plus) {
        peak = std::max(peak, ++active);
      } else {
        if (active == 0) throw std::invalid_argument("composition order removes too many vertices");
        --active;
      }
    }
  }
  return static_cast<int>(peak) - 1;
}

// ---------------------------------------------------------------------------
// Heuristic ordering

namespace detail {

/// Peak active-set size of the nice path decomposition an ordering induces.
inline std::size_t ordering_peak(const Graph& g, const std::vector<VertexId>& order) {
  std::vector<std::size_t> pending(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) pending[i] = g.degree(g.vertices()[i]);
  std::vector<bool> added(g.order(), false);
  std::size_t active = 0, peak = 0;
  for (VertexId v : order) {
    std::size_t i = g.index_of(v);
    added[i] = true;
    peak = std::max(peak, ++active);
    if (pending[i] == 0) --active;
    for (VertexId w : g.neighbors(v)) {
      std::size_t j = g.index_of(w);
      if (--pending[j] == 0 && added[j]) --active;
    }
  }
  return peak;
}

/// Greedy placement. Each step picks the unplaced vertex minimising the
/// active-set size left after its addition and the removals it triggers;
/// ties go to (frontier mode) the vertex with most placed neighbours, then
/// fewest unplaced neighbours, then smallest id.
inline std::vector<VertexId> greedy_ordering(const Graph& g, bool frontier) {
  const std::size_t n = g.order();
  std::vector<std::size_t> pending(n);
  for (std::size_t i = 0; i < n; ++i) pending[i] = g.degree(g.vertices()[i]);
  std::vector<bool> placed(n, false);
  std::size_t active = 0;
  std::vector<VertexId> order;
  order.reserve(n);
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    Key best_key{};
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      VertexId v = g.vertices()[i];
      std::size_t freed = 0;
      std::size_t own_pending = 0;
      for (VertexId w : g.neighbors(v)) {
        std::size_t j = g.index_of(w);
        if (placed[j]) {
          freed += pending[j] == 1;  // v is w's last missing neighbour
        } else {
          ++own_pending;
        }
      }
      freed += own_pending == 0;
      std::size_t placed_nbrs = g.degree(v) - own_pending;
      Key key{active + 1 - freed, frontier ? n - placed_nbrs : 0, own_pending};
      if (best == n || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    VertexId v = g.vertices()[best];
    placed[best] = true;
    order.push_back(v);
    active = std::get<0>(best_key);
    for (VertexId w : g.neighbors(v)) --pending[g.index_of(w)];
  }
  return order;
}

/// Breadth-first order from `root`, restarting at the smallest unvisited id
/// for further components. Also reports the last vertex reached.
inline std::vector<VertexId> bfs_ordering(const Graph& g, VertexId root, VertexId* last = nullptr) {
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> order;
  order.reserve(g.order());
  auto sweep = [&](VertexId start) {
    std::size_t head = order.size();
    seen[g.index_of(start)] = true;
    order.push_back(start);
    while (head < order.size()) {
      VertexId v = order[head++];
      for (VertexId w : g.neighbors(v)) {
        std::size_t j = g.index_of(w);
        if (!seen[j]) {
          seen[j] = true;
          order.push_back(w);
        }
      }
    }
  };
  sweep(root);
  for (VertexId v : g.vertices()) {
    if (!seen[g.index_of(v)]) sweep(v);
  }
  if (last) *last = order.empty() ? root : order[order.size() - 1];
  return order;
}

}  // namespace detail

/// Vertex ordering for small active sets: the narrowest (by peak active set,
/// earliest candidate on ties) of the id order, two greedy placements, and
/// breadth-first orders from a minimum-degree vertex and from the vertex that
/// search reaches last.
inline std::vector<VertexId> heuristic_ordering(const Graph& g) {
  if (g.empty()) return {};
  std::vector<std::vector<VertexId>> candidates;
  candidates.push_back(g.vertices());
  candidates.push_back(detail::greedy_ordering(g, false));
  candidates.push_back(detail::greedy_ordering(g, true));
  VertexId low = *std::min_element(g.vertices().begin(), g.vertices().end(),
                                    [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
  VertexId far = low;
  candidates.push_back(detail::bfs_ordering(g, low, &far));
  candidates.push_back(detail::bfs_ordering(g, far));
  std::size_t best = 0;
  std::size_t best_peak = detail::ordering_peak(g, candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    std::size_t p = detail::ordering_peak(g, candidates[i]);
    if (p < best_peak) {
      best = i;
      best_peak = p;
    }
  }
  return candidates[best];
}

// ---------------------------------------------------------------------------
// File formats

/// Composition-order file: one item per line, "+<id>", "-<id>" or "<id>-<id>".
inline std::string serialize_composition_order(const CompositionOrder& co) {
  std::string out;
  for (const auto& item : co.items) {
    out += to_string(item);
    out += '\n';
  }
  return out;
}

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline CompositionItem parse_item(const std::string& tok, std::size_t line) {
  if (tok.empty()) throw ParseError(line, "empty item");
  if (tok[0] == '+' || tok[0] == '-') {
    return SignedVertex{tok[0] == '+' ? Sign::plus : Sign::minus,
                        parse_vertex(tok.substr(1), line)};
  }
  auto dash = tok.find('-');
  if (dash == std::string::npos) {
    throw ParseError(line, "expected '+<id>', '-<id>' or '<id>-<id>', got '" + tok + "'");
  }
  VertexId a = parse_vertex(tok.substr(0, dash), line);
  VertexId b = parse_vertex(tok.substr(dash + 1), line);
  return checked_edge(a, b, line);
}

}  // namespace detail

/// Contents of an order file: a full composition order, a bare vertex
/// ordering (one id per line), or a bag sequence (one bag per line, ids
/// separated by whitespace or commas, optionally braced; "{}" is an empty bag).
struct OrderFile {
  enum class Kind { composition, ordering, bags };
  Kind kind = Kind::ordering;
  CompositionOrder composition;
  std::vector<VertexId> ordering;
  PathDecomposition bags;
};

inline OrderFile parse_order_file(std::istream& in) {
  struct Line {
    std::size_t number;
    std::string text;
  };
  std::vector<Line> lines;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string t = detail::trim(raw);
    if (t.empty() || t[0] == '#') continue;
    lines.push_back({lineno, t});
  }
  auto is_composition_line = [](const std::string& t) {
    return t[0] == '+' || t[0] == '-' ||
           (t.find('-') != std::string::npos && t.find_first_of(" \t,{") == std::string::npos);
  };
  auto is_bag_line = [](const std::string& t) {
    return t.find_first_of("{, \t") != std::string::npos;
  };
  OrderFile out;
  if (std::any_of(lines.begin(), lines.end(),
                  [&](const Line& l) { return is_composition_line(l.text); })) {
    out.kind = OrderFile::Kind::composition;
    for (const auto& l : lines) out.composition.items.push_back(detail::parse_item(l.text, l.number));
  } else if (std::any_of(lines.begin(), lines.end(),
                         [&](const Line& l) { return is_bag_line(l.text); })) {
    out.kind = OrderFile::Kind::bags;
    for (const auto& l : lines) {
      std::string t = l.text;
      for (char& c : t) {
        if (c == '{' || c == '}' || c == ',') c = ' ';
      }
      VertexSet bag;
      for (const auto& tok : detail::split_ws(t)) bag.push_back(detail::parse_vertex(tok, l.number));
      out.bags.bags.push_back(std::move(bag));
    }
  } else {
    out.kind = OrderFile::Kind::ordering;
    for (const auto& l : lines) out.ordering.push_back(detail::parse_vertex(l.text, l.number));
  }
  return out;
}

inline OrderFile parse_order_file(const std::string& text) {
  std::istringstream in(text);
  return parse_order_file(in);
}

inline CompositionOrder parse_composition_order(const std::string& text) {
  OrderFile f = parse_order_file(text);
  if (f.kind == OrderFile::Kind::composition) return f.composition;
  if (f.kind == OrderFile::Kind::ordering && f.ordering.empty()) return {};
  throw std::invalid_argument("not a composition-order file");
}

/// Checks that `order` lists every vertex of `g` exactly once.
inline ValidationResult validate_ordering(const Graph& g, const std::vector<VertexId>& order) {
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto pos = static_cast<std::int64_t>(i + 1);
    if (!g.contains(order[i])) {
      return Violation{"order", {order[i], pos}, "unknown vertex " + std::to_string(order[i])};
    }
    if (!seen.insert(order[i]).second) {
      return Violation{"order", {order[i], pos},
                       "vertex " + std::to_string(order[i]) + " listed twice"};
    }
  }
  for (VertexId v : g.vertices()) {
    if (!seen.count(v)) {
      return Violation{"order", {v}, "vertex " + std::to_string(v) + " missing from ordering"};
    }
  }
  return std::nullopt;
}

}  // namespace polydec
