// Brute-force reference computations of the four polynomials and of the
// classical graph invariants. Exponential; guarded by a budget.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polydec/graph.hpp"
#include "polydec/models.hpp"
#include "polydec/polynomial.hpp"

namespace polydec {

struct OracleBudget {
  std::size_t max_vertices = 12;
  std::size_t max_boundary = 20;  // bipartition only: largest |edge boundary|
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

/// Dense bitmask view of a small graph: vertex i is bit i, in id order.
struct MaskGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> adj;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  MaskGraph(const Graph& g, const OracleBudget& budget) {
    if (g.order() > budget.max_vertices || g.order() > 30) {
      throw BudgetExceeded("oracle refuses " + std::to_string(g.order()) +
                           " vertices (budget " + std::to_string(budget.max_vertices) + ")");
    }
    n = g.order();
    adj.assign(n, 0);
    for (const Edge& e : g.edges()) {
      std::size_t a = g.index_of(e.u);
      std::size_t b = g.index_of(e.v);
      adj[a] |= 1u << b;
      adj[b] |= 1u << a;
      edges.emplace_back(a, b);
    }
  }

  [[nodiscard]] std::uint32_t all() const { return n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1); }

  [[nodiscard]] std::uint32_t closed_neighbourhood(std::uint32_t s) const {
    std::uint32_t out = s;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1u) out |= adj[i];
    }
    return out;
  }

  [[nodiscard]] bool independent(std::uint32_t s) const {
    for (std::size_t i = 0; i < n; ++i) {
      if ((s >> i & 1u) && (adj[i] & s)) return false;
    }
    return true;
  }
};

inline Polynomial count_by_size(const std::vector<BigInt>& counts) {
  Polynomial p;
  for (std::uint32_t j = 0; j < counts.size(); ++j) p.add_term({j, 0, 0}, counts[j]);
  return p;
}

/// Deletion-contraction on adjacency masks restricted to `alive`.
inline Polynomial chromatic_rec(std::vector<std::uint32_t> adj, std::uint32_t alive) {
  for (std::size_t a = 0; a < adj.size(); ++a) {
    if (!(alive >> a & 1u) || adj[a] == 0) continue;
    std::size_t b = static_cast<std::size_t>(std::countr_zero(adj[a]));
    // G - e
    std::vector<std::uint32_t> del = adj;
    del[a] &= ~(1u << b);
    del[b] &= ~(1u << a);
    // G / e: fold b into a, dropping the loop and parallel edges.
    std::vector<std::uint32_t> con = del;
    std::uint32_t moved = con[b];
    con[a] |= moved;
    for (std::size_t w = 0; w < con.size(); ++w) {
      if (moved >> w & 1u) {
        con[w] &= ~(1u << b);
        con[w] |= 1u << a;
      }
    }
    con[a] &= ~(1u << a);
    con[b] = 0;
    return chromatic_rec(std::move(del), alive) - chromatic_rec(std::move(con), alive & ~(1u << b));
  }
  return Polynomial::monomial({static_cast<std::uint32_t>(std::popcount(alive)), 0, 0});
}

}  // namespace detail

/// Sum over independent sets S of x^|S|.
inline Polynomial independence_oracle(const Graph& g, const OracleBudget& budget = {}) {
  detail::MaskGraph mg(g, budget);
  std::vector<BigInt> counts(mg.n + 1, 0);
  for (std::uint64_t s = 0; s <= mg.all(); ++s) {
    auto mask = static_cast<std::uint32_t>(s);
    if (mg.independent(mask)) ++counts[std::popcount(mask)];
  }
  return detail::count_by_size(counts);
}

/// P(G) = P(G - e) - P(G / e), with x^n for edgeless graphs.
inline Polynomial chromatic_oracle(const Graph& g, const OracleBudget& budget = {}) {
  detail::MaskGraph mg(g, budget);
  return detail::chromatic_rec(mg.adj, mg.all());
}

/// Sum over dominating sets S of x^|S|.
inline Polynomial domination_oracle(const Graph& g, const OracleBudget& budget = {}) {
  detail::MaskGraph mg(g, budget);
  std::vector<BigInt> counts(mg.n + 1, 0);
  for (std::uint64_t s = 0; s <= mg.all(); ++s) {
    auto mask = static_cast<std::uint32_t>(s);
    if (mg.closed_neighbourhood(mask) == mg.all()) ++counts[std::popcount(mask)];
  }
  return detail::count_by_size(counts);
}

/// Sum over V' and subsets E' of the edge boundary of V' of
/// x^|V'| y^|N_(V,E')(V')| z^|E'|.
inline Polynomial bipartition_oracle(const Graph& g, const OracleBudget& budget = {}) {
  detail::MaskGraph mg(g, budget);
  Polynomial out;
  for (std::uint64_t s = 0; s <= mg.all(); ++s) {
    auto inside = static_cast<std::uint32_t>(s);
    std::vector<std::size_t> outer;  // outside endpoint of each boundary edge
    for (auto [a, b] : mg.edges) {
      bool ia = inside >> a & 1u;
      bool ib = inside >> b & 1u;
      if (ia != ib) outer.push_back(ia ? b : a);
    }
    if (outer.size() > budget.max_boundary || outer.size() > 30) {
      throw BudgetExceeded("edge boundary of size " + std::to_string(outer.size()) +
                           " exceeds budget " + std::to_string(budget.max_boundary));
    }
    auto vx = static_cast<std::uint32_t>(std::popcount(inside));
    for (std::uint64_t t = 0; t < (1ull << outer.size()); ++t) {
      std::uint32_t reached = 0;
      for (std::size_t k = 0; k < outer.size(); ++k) {
        if (t >> k & 1u) reached |= 1u << outer[k];
      }
      out.add_term({vx, static_cast<std::uint32_t>(std::popcount(reached)),
                    static_cast<std::uint32_t>(std::popcount(t))},
                   1);
    }
  }
  return out;
}

inline Polynomial oracle(PolynomialKind kind, const Graph& g, const OracleBudget& budget = {}) {
  switch (kind) {
    case PolynomialKind::independence: return independence_oracle(g, budget);
    case PolynomialKind::chromatic: return chromatic_oracle(g, budget);
    case PolynomialKind::domination: return domination_oracle(g, budget);
    case PolynomialKind::bipartition: return bipartition_oracle(g, budget);
  }
  throw std::invalid_argument("unknown polynomial kind");
}

/// For every Y that does not dominate g, checks that V \ Y dominates the
/// complement of g.
inline bool non_dominating_complement_check(const Graph& g, const OracleBudget& budget = {}) {
  detail::MaskGraph mg(g, budget);
  detail::MaskGraph co(complement(g), budget);
  for (std::uint64_t s = 0; s <= mg.all(); ++s) {
    auto y = static_cast<std::uint32_t>(s);
    if (mg.closed_neighbourhood(y) == mg.all()) continue;
    if (co.closed_neighbourhood(mg.all() & ~y) != co.all()) return false;
  }
  return true;
}

/// Largest independent set size.
inline std::size_t independence_number(const Graph& g, const OracleBudget& budget = {}) {
  detail::MaskGraph mg(g, budget);
  std::size_t best = 0;
  for (std::uint64_t s = 0; s <= mg.all(); ++s) {
    auto mask = static_cast<std::uint32_t>(s);
    if (mg.independent(mask)) best = std::max<std::size_t>(best, std::popcount(mask));
  }
  return best;
}

/// Smallest dominating set size (0 for the null graph).
inline std::size_t domination_number(const Graph& g, const OracleBudget& budget = {}) {
  detail::MaskGraph mg(g, budget);
  std::size_t best = mg.n;
  for (std::uint64_t s = 0; s <= mg.all(); ++s) {
    auto mask = static_cast<std::uint32_t>(s);
    if (mg.closed_neighbourhood(mask) == mg.all()) {
      best = std::min<std::size_t>(best, std::popcount(mask));
    }
  }
  return best;
}

/// Least k >= 1 with P(G, k) > 0; 0 for the null graph.
inline std::size_t chromatic_number(const Graph& g, const OracleBudget& budget = {}) {
  if (g.empty()) return 0;
  Polynomial p = chromatic_oracle(g, budget);
  for (std::size_t k = 1;; ++k) {
    if (evaluate(p, k) > 0) return k;
  }
}

}  // namespace polydec
