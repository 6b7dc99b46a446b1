// State maps for the independence, chromatic, domination and bipartition
// polynomials. Each model sees only the composition-order items.
#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "polydec/engine.hpp"

namespace polydec {

namespace detail {

inline bool set_has(const VertexSet& s, VertexId v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline void set_insert(VertexSet& s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) s.insert(it, v);
}

inline bool set_erase(VertexSet& s, VertexId v) {
  auto it = std::lower_bound(s.begin(), s.end(), v);
  if (it == s.end() || *it != v) return false;
  s.erase(it);
  return true;
}

inline std::string encode_set(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace detail

/// Three pairwise disjoint vertex sets, used by the domination and
/// bipartition models.
struct SetTriple {
  VertexSet d;
  VertexSet e;
  VertexSet f;

  friend auto operator<=>(const SetTriple&, const SetTriple&) = default;
};

inline std::string encode_triple(const SetTriple& t) {
  return "[" + detail::encode_set(t.d) + "," + detail::encode_set(t.e) + "," +
         detail::encode_set(t.f) + "]";
}

// ---------------------------------------------------------------------------

/// Index: the chosen (independent) vertices among the active ones.
struct IndependenceModel {
  using Index = VertexSet;

  [[nodiscard]] State<Index> initial_state() const { return {{}, 1}; }

  [[nodiscard]] std::vector<State<Index>> on_vertex_add(const State<Index>& s, VertexId v) const {
    Index with = s.index;
    detail::set_insert(with, v);
    return {s, {std::move(with), s.value.shifted({1, 0, 0})}};
  }

  [[nodiscard]] std::vector<State<Index>> on_vertex_delete(const State<Index>& s,
                                                           VertexId v) const {
    Index without = s.index;
    detail::set_erase(without, v);
    return {{std::move(without), s.value}};
  }

  [[nodiscard]] std::vector<State<Index>> on_edge(const State<Index>& s, const Edge& e) const {
    if (detail::set_has(s.index, e.u) && detail::set_has(s.index, e.v)) return {};
    return {s};
  }

  [[nodiscard]] std::string encode(const Index& i) const { return detail::encode_set(i); }
};

// ---------------------------------------------------------------------------

/// Index: a partition of the active vertices into colour classes, blocks
/// ordered by their smallest member.
struct ChromaticModel {
  using Index = std::vector<VertexSet>;

  [[nodiscard]] State<Index> initial_state() const { return {{}, 1}; }

  [[nodiscard]] std::vector<State<Index>> on_vertex_add(const State<Index>& s, VertexId v) const {
    std::vector<State<Index>> out;
    out.reserve(s.index.size() + 1);
    // v opens a new colour class: x - |blocks| colours remain for it.
    Index fresh = s.index;
    fresh.push_back({v});
    canonicalize(fresh);
    Polynomial factor = Polynomial::x() - Polynomial(static_cast<long long>(s.index.size()));
    out.push_back({std::move(fresh), s.value * factor});
    for (std::size_t b = 0; b < s.index.size(); ++b) {
      Index joined = s.index;
      detail::set_insert(joined[b], v);
      canonicalize(joined);
      out.push_back({std::move(joined), s.value});
    }
    return out;
  }

  [[nodiscard]] std::vector<State<Index>> on_vertex_delete(const State<Index>& s,
                                                           VertexId v) const {
    Index rest = s.index;
    for (auto& block : rest) {
      if (detail::set_erase(block, v)) break;
    }
    std::erase_if(rest, [](const VertexSet& b) { return b.empty(); });
    canonicalize(rest);
    return {{std::move(rest), s.value}};
  }

  [[nodiscard]] std::vector<State<Index>> on_edge(const State<Index>& s, const Edge& e) const {
    for (const auto& block : s.index) {
      if (detail::set_has(block, e.u) && detail::set_has(block, e.v)) return {};
    }
    return {s};
  }

  /// "{1,3|2}"; the empty partition is "{}".
  [[nodiscard]] std::string encode(const Index& i) const {
    std::string out = "{";
    for (std::size_t b = 0; b < i.size(); ++b) {
      if (b) out += '|';
      for (std::size_t k = 0; k < i[b].size(); ++k) {
        if (k) out += ',';
        out += std::to_string(i[b][k]);
      }
    }
    return out + "}";
  }

  static void canonicalize(Index& blocks) {
    std::sort(blocks.begin(), blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  }
};

// ---------------------------------------------------------------------------

/// Index [D, E, F]: D uncovered, E covered by a chosen neighbour, F chosen.
struct DominationModel {
  using Index = SetTriple;

  [[nodiscard]] State<Index> initial_state() const { return {{}, 1}; }

  [[nodiscard]] std::vector<State<Index>> on_vertex_add(const State<Index>& s, VertexId v) const {
    Index uncovered = s.index;
    detail::set_insert(uncovered.d, v);
    Index chosen = s.index;
    detail::set_insert(chosen.f, v);
    return {{std::move(uncovered), s.value}, {std::move(chosen), s.value.shifted({1, 0, 0})}};
  }

  [[nodiscard]] std::vector<State<Index>> on_vertex_delete(const State<Index>& s,
                                                           VertexId v) const {
    if (detail::set_has(s.index.d, v)) return {};  // leaves undominated
    Index rest = s.index;
    detail::set_erase(rest.e, v);
    detail::set_erase(rest.f, v);
    return {{std::move(rest), s.value}};
  }

  [[nodiscard]] std::vector<State<Index>> on_edge(const State<Index>& s, const Edge& e) const {
    const Index& i = s.index;
    auto cover = [&](VertexId w) {
      Index next = i;
      detail::set_erase(next.d, w);
      detail::set_insert(next.e, w);
      return std::vector<State<Index>>{{std::move(next), s.value}};
    };
    if (detail::set_has(i.f, e.v) && detail::set_has(i.d, e.u)) return cover(e.u);
    if (detail::set_has(i.f, e.u) && detail::set_has(i.d, e.v)) return cover(e.v);
    return {s};
  }

  [[nodiscard]] std::string encode(const Index& i) const { return encode_triple(i); }
};

// ---------------------------------------------------------------------------

/// Index [D, E, F]: F active members of the chosen subset V', D outside
/// vertices already counted as neighbours through a chosen boundary edge,
/// E outside vertices not yet counted.
struct BipartitionModel {
  using Index = SetTriple;

  [[nodiscard]] State<Index> initial_state() const { return {{}, 1}; }

  [[nodiscard]] std::vector<State<Index>> on_vertex_add(const State<Index>& s, VertexId v) const {
    Index outside = s.index;
    detail::set_insert(outside.e, v);
    Index inside = s.index;
    detail::set_insert(inside.f, v);
    return {{std::move(outside), s.value}, {std::move(inside), s.value.shifted({1, 0, 0})}};
  }

  [[nodiscard]] std::vector<State<Index>> on_vertex_delete(const State<Index>& s,
                                                           VertexId v) const {
    Index rest = s.index;
    detail::set_erase(rest.d, v) || detail::set_erase(rest.e, v) || detail::set_erase(rest.f, v);
    return {{std::move(rest), s.value}};
  }

  [[nodiscard]] std::vector<State<Index>> on_edge(const State<Index>& s, const Edge& e) const {
    const Index& i = s.index;
    auto first_neighbour = [&](VertexId w) {
      Index next = i;
      detail::set_erase(next.e, w);
      detail::set_insert(next.d, w);
      return std::vector<State<Index>>{s, {std::move(next), s.value.shifted({0, 1, 1})}};
    };
    if (detail::set_has(i.f, e.u) && detail::set_has(i.e, e.v)) return first_neighbour(e.v);
    if (detail::set_has(i.f, e.v) && detail::set_has(i.e, e.u)) return first_neighbour(e.u);
    if ((detail::set_has(i.f, e.u) && detail::set_has(i.d, e.v)) ||
        (detail::set_has(i.d, e.u) && detail::set_has(i.f, e.v))) {
      return {s, {i, s.value.shifted({0, 0, 1})}};
    }
    return {s};
  }

  [[nodiscard]] std::string encode(const Index& i) const { return encode_triple(i); }
};

static_assert(PolynomialModel<IndependenceModel>);
static_assert(PolynomialModel<ChromaticModel>);
static_assert(PolynomialModel<DominationModel>);
static_assert(PolynomialModel<BipartitionModel>);

inline IndependenceModel independence_model() { return {}; }
inline ChromaticModel chromatic_model() { return {}; }
inline DominationModel domination_model() { return {}; }
inline BipartitionModel bipartition_model() { return {}; }

// ---------------------------------------------------------------------------
// Selection by name

enum class PolynomialKind { independence, chromatic, domination, bipartition };

inline constexpr PolynomialKind all_polynomial_kinds[] = {
    PolynomialKind::independence, PolynomialKind::chromatic, PolynomialKind::domination,
    PolynomialKind::bipartition};

inline std::string_view name_of(PolynomialKind k) {
  switch (k) {
    case PolynomialKind::independence: return "independence";
    case PolynomialKind::chromatic: return "chromatic";
    case PolynomialKind::domination: return "domination";
    case PolynomialKind::bipartition: return "bipartition";
  }
  return "?";
}

inline PolynomialKind parse_polynomial_kind(std::string_view name) {
  for (PolynomialKind k : all_polynomial_kinds) {
    if (name_of(k) == name) return k;
  }
  throw std::invalid_argument("unknown polynomial '" + std::string(name) + "'");
}

/// Runs the model for `kind` over `co`.
inline RunResult compute(PolynomialKind kind, const CompositionOrder& co,
                         const RunOptions& options = {}) {
  switch (kind) {
    case PolynomialKind::independence: return run(IndependenceModel{}, co, options);
    case PolynomialKind::chromatic: return run(ChromaticModel{}, co, options);
    case PolynomialKind::domination: return run(DominationModel{}, co, options);
    case PolynomialKind::bipartition: return run(BipartitionModel{}, co, options);
  }
  throw std::invalid_argument("unknown polynomial kind");
}

/// Heuristic composition order for `g`.
inline CompositionOrder default_composition_order(const Graph& g) {
  return compose_order(g, nice_path_from_ordering(g, heuristic_ordering(g)));
}

}  // namespace polydec
