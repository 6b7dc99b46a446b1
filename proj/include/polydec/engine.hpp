// Composition-order sweep: applies a model's vertex-add, vertex-delete and
// edge maps item by item, merging states that share an index.
#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "polydec/decomposition.hpp"
#include "polydec/polynomial.hpp"

namespace polydec {

template <class Index>
struct State {
  Index index;
  Polynomial value;
};

/// Map from canonical index to accumulated value. Index uniqueness comes from
/// the map; zero values are never stored.
template <class Index>
using StateSet = std::map<Index, Polynomial>;

/// A polynomial family expressed as an initial state plus three maps. `Index`
/// must be a canonical value type: two indices compare equal exactly when
/// their encodings are identical.
template <class M>
concept PolynomialModel = requires(const M& m, const State<typename M::Index>& s,
                                   VertexId v, const Edge& e,
                                   const typename M::Index& i) {
  typename M::Index;
  { m.initial_state() } -> std::same_as<State<typename M::Index>>;
  { m.on_vertex_add(s, v) } -> std::same_as<std::vector<State<typename M::Index>>>;
  { m.on_vertex_delete(s, v) } -> std::same_as<std::vector<State<typename M::Index>>>;
  { m.on_edge(s, e) } -> std::same_as<std::vector<State<typename M::Index>>>;
  { m.encode(i) } -> std::same_as<std::string>;
  { i < i } -> std::convertible_to<bool>;
};

class EngineError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One merged state set, rendered: the step label ("init", "+3", "-3", "1-3")
/// and the states in index order.
struct TraceStep {
  std::string label;
  std::vector<std::pair<std::string, Polynomial>> states;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

using Trace = std::vector<TraceStep>;

inline std::size_t peak_state_count(const Trace& trace) {
  std::size_t peak = 0;
  for (const auto& step : trace) peak = std::max(peak, step.states.size());
  return peak;
}

struct RunOptions {
  bool trace = false;
  /// When set, each step visits the current states in a seeded random order.
  /// The merged result must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
  /// Skip the structural check of the composition order (callers that have
  /// already validated against the host graph).
  bool prevalidated = false;
};

struct RunResult {
  Polynomial value;
  std::size_t peak_states = 0;
  std::optional<Trace> trace;
};

template <class Index>
StateSet<Index> merge(std::vector<State<Index>> states) {
  StateSet<Index> out;
  for (auto& s : states) {
    if (s.value.is_zero()) continue;
    auto [it, inserted] = out.try_emplace(std::move(s.index), std::move(s.value));
    if (!inserted) {
      it->second += s.value;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

template <PolynomialModel M>
TraceStep render_step(const M& model, std::string label,
                      const StateSet<typename M::Index>& states) {
  TraceStep step{std::move(label), {}};
  step.states.reserve(states.size());
  for (const auto& [index, value] : states) step.states.emplace_back(model.encode(index), value);
  return step;
}

template <PolynomialModel M>
RunResult run(const M& model, const CompositionOrder& co, const RunOptions& options = {}) {
  using Index = typename M::Index;
  if (!options.prevalidated) {
    if (auto bad = validate_composition_order(implied_graph(co), co)) {
      throw std::invalid_argument("invalid composition order: " + bad->message);
    }
  }

  State<Index> init = model.initial_state();
  const Index empty_index = init.index;
  StateSet<Index> current;
  current.emplace(init.index, init.value);

  RunResult result;
  result.peak_states = 1;
  if (options.trace) {
    result.trace.emplace();
    result.trace->push_back(render_step(model, "init", current));
  }
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  std::vector<State<Index>> inputs;
  std::vector<State<Index>> produced;
  for (const auto& item : co.items) {
    inputs.clear();
    produced.clear();
    for (auto& [index, value] : current) inputs.push_back({index, value});
    if (rng) {
      for (std::size_t i = inputs.size(); i > 1; --i) {
        std::swap(inputs[i - 1], inputs[(*rng)() % i]);
      }
    }
    for (const auto& s : inputs) {
      std::vector<State<Index>> out;
      if (const auto* sv = std::get_if<SignedVertex>(&item)) {
        out = sv->sign == Sign::plus ? model.on_vertex_add(s, sv->vertex)
                                     : model.on_vertex_delete(s, sv->vertex);
      } else {
        out = model.on_edge(s, std::get<Edge>(item));
      }
      for (auto& o : out) produced.push_back(std::move(o));
    }
    current = merge(std::move(produced));
    produced = {};
    result.peak_states = std::max(result.peak_states, current.size());
    if (options.trace) result.trace->push_back(render_step(model, to_string(item), current));
  }

  if (current.size() != 1 || !(current.begin()->first == empty_index)) {
    throw EngineError("sweep ended with " + std::to_string(current.size()) +
                      " states instead of the single empty-index state");
  }
  result.value = current.begin()->second;
  return result;
}

// ---------------------------------------------------------------------------
// Trace rendering

/// One row per step: the label, a tab, then "(index, polynomial)" entries.
inline std::string trace_to_text(const Trace& trace) {
  std::string out;
  for (const auto& step : trace) {
    out += step.label;
    out += '\t';
    for (std::size_t i = 0; i < step.states.size(); ++i) {
      if (i) out += ", ";
      out += "(" + step.states[i].first + ", " + to_text(step.states[i].second) + ")";
    }
    out += '\n';
  }
  return out;
}

/// Array of steps, each an array of {"index": string, "value": polynomial}.
inline nlohmann::json trace_to_json(const Trace& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& step : trace) {
    nlohmann::json states = nlohmann::json::array();
    for (const auto& [index, value] : step.states) {
      states.push_back({{"index", index}, {"value", to_json(value)}});
    }
    out.push_back(std::move(states));
  }
  return out;
}

}  // namespace polydec
