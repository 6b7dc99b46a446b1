// Fixture graphs, decompositions and state tables transcribed from the
// worked examples. Vertex v_i is id i.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polydec/polydec.hpp"

namespace polydec::fixtures {

inline Graph edges(std::initializer_list<std::pair<VertexId, VertexId>> list) {
  std::vector<Edge> es;
  for (auto [a, b] : list) es.emplace_back(a, b);
  return Graph::from_edges(es);
}

inline Graph complete(VertexId n, VertexId first = 1) {
  std::vector<Edge> es;
  VertexSet vs;
  for (VertexId i = 0; i < n; ++i) {
    vs.push_back(first + i);
    for (VertexId j = 0; j < i; ++j) es.emplace_back(first + j, first + i);
  }
  return Graph(vs, es);
}

inline Graph edgeless(VertexId n, VertexId first = 1) {
  VertexSet vs;
  for (VertexId i = 0; i < n; ++i) vs.push_back(first + i);
  return Graph(vs, {});
}

inline Graph path(VertexId n, VertexId first = 1) {
  std::vector<Edge> es;
  for (VertexId i = 1; i < n; ++i) es.emplace_back(first + i - 1, first + i);
  return n == 1 ? edgeless(1, first) : Graph::from_edges(es);
}

// 7 vertices, 8 edges.
inline Graph triangle_square() {
  return edges({{1, 2}, {2, 3}, {1, 3}, {2, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

// First tree decomposition of triangle_square(): nodes 1..6.
inline TreeDecomposition triangle_square_td_a() {
  return {edges({{1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 6}}),
          {{1, {1, 2, 3}}, {2, {2, 4}}, {3, {4, 5}}, {4, {4, 6}}, {5, {5, 7}}, {6, {6, 7}}}};
}

// Second tree decomposition of triangle_square(): nodes 1..5.
inline TreeDecomposition triangle_square_td_b() {
  return {edges({{1, 2}, {2, 3}, {3, 4}, {3, 5}}),
          {{1, {1, 2, 3}}, {2, {2, 4}}, {3, {4, 5, 6}}, {4, {5, 7}}, {5, {6, 7}}}};
}

// 8 vertices, 9 edges.
inline Graph two_squares() {
  return edges({{2, 4}, {4, 3}, {2, 1}, {3, 1}, {4, 5}, {6, 5}, {7, 5}, {8, 6}, {8, 7}});
}

inline TreeDecomposition two_squares_td() {
  return {edges({{1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 7}}),
          {{1, {1, 2, 3}},
           {2, {2, 3, 4}},
           {3, {4, 5}},
           {4, {5, 6}},
           {5, {5, 7}},
           {6, {6, 8}},
           {7, {7, 8}}}};
}

// The 3-tree with 8 vertices and 18 edges.
inline Graph three_tree() {
  return edges({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}, {2, 4}, {1, 5}, {3, 5}, {4, 5},
                {2, 6}, {3, 6}, {4, 6}, {1, 7}, {2, 7}, {4, 7}, {1, 8}, {2, 8}, {3, 8}});
}

// 10 vertices, 9 edges.
inline Graph tree10() {
  return edges({{1, 2}, {1, 4}, {1, 3}, {2, 6}, {5, 2}, {3, 8}, {7, 3}, {4, 9}, {4, 10}});
}

inline PathDecomposition tree10_path() {
  return {{{2, 5}, {2, 6}, {2, 1}, {1, 3}, {1, 3, 7}, {1, 3, 8}, {1, 4, 9}, {1, 4, 10}}};
}

// 6 vertices, 7 edges.
inline Graph bridged() {
  return edges({{1, 2}, {2, 3}, {1, 3}, {2, 4}, {4, 5}, {4, 6}, {6, 5}});
}

inline const char* const bridged_edge_list = "1 2\n2 3\n1 3\n2 4\n4 5\n4 6\n5 6\n";

inline const std::vector<VertexId> bridged_ordering{1, 3, 2, 4, 5, 6};

inline NicePathDecomposition bridged_nice_path() {
  return {{plus(1), plus(3), plus(2), minus(1), minus(3), plus(4), minus(2), plus(5), plus(6),
           minus(4), minus(5), minus(6)}};
}

// The hand-placed order: {5,6} comes after -4.
inline CompositionOrder bridged_hand_order() {
  return {{plus(1), plus(3), Edge(1, 3), plus(2), Edge(1, 2), Edge(2, 3), minus(1), minus(3),
           plus(4), Edge(2, 4), minus(2), plus(5), Edge(4, 5), plus(6), Edge(4, 6), minus(4),
           Edge(5, 6), minus(5), minus(6)}};
}

// K3.
inline Graph triangle() { return edges({{1, 2}, {2, 3}, {1, 3}}); }

inline CompositionOrder triangle_hand_order() {
  return {{plus(1), plus(3), Edge(1, 3), plus(2), Edge(1, 2), Edge(2, 3), minus(1), minus(3),
           minus(2)}};
}

// Reference polynomials.
inline Polynomial bridged_independence() { return Polynomial::from_x_coefficients({1, 6, 8}); }
inline Polynomial bridged_chromatic() {
  return Polynomial::from_x_coefficients({0, -4, 16, -25, 19, -7, 1});
}
inline Polynomial bridged_domination() {
  return Polynomial::from_x_coefficients({0, 0, 9, 18, 15, 6, 1});
}
inline Polynomial triangle_bipartition() {
  Polynomial p = Polynomial::from_x_coefficients({1, 3, 3, 1});
  p.add_term({1, 1, 1}, 6);
  p.add_term({1, 2, 2}, 3);
  p.add_term({2, 1, 1}, 6);
  p.add_term({2, 1, 2}, 3);
  return p;
}

// ---------------------------------------------------------------------------
// Traces. Each row: step label and (index, value) pairs in index order, using
// the models' encodings. Values are written in the text rendering.

struct TableRow {
  std::string label;
  std::vector<std::pair<std::string, std::string>> states;
};

// Independence polynomial of bridged along bridged_hand_order().
inline std::vector<TableRow> bridged_independence_trace() {
  return {
      {"init", {{"{}", "1"}}},
      {"+1", {{"{}", "1"}, {"{1}", "x"}}},
      {"+3", {{"{}", "1"}, {"{1}", "x"}, {"{1,3}", "x^2"}, {"{3}", "x"}}},
      {"1-3", {{"{}", "1"}, {"{1}", "x"}, {"{3}", "x"}}},
      {"+2",
       {{"{}", "1"}, {"{1}", "x"}, {"{1,2}", "x^2"}, {"{2}", "x"}, {"{2,3}", "x^2"}, {"{3}", "x"}}},
      {"1-2", {{"{}", "1"}, {"{1}", "x"}, {"{2}", "x"}, {"{2,3}", "x^2"}, {"{3}", "x"}}},
      {"2-3", {{"{}", "1"}, {"{1}", "x"}, {"{2}", "x"}, {"{3}", "x"}}},
      {"-1", {{"{}", "1 + x"}, {"{2}", "x"}, {"{3}", "x"}}},
      {"-3", {{"{}", "1 + 2*x"}, {"{2}", "x"}}},
      {"+4", {{"{}", "1 + 2*x"}, {"{2}", "x"}, {"{2,4}", "x^2"}, {"{4}", "x + 2*x^2"}}},
      {"2-4", {{"{}", "1 + 2*x"}, {"{2}", "x"}, {"{4}", "x + 2*x^2"}}},
      {"-2", {{"{}", "1 + 3*x"}, {"{4}", "x + 2*x^2"}}},
      {"+5",
       {{"{}", "1 + 3*x"}, {"{4}", "x + 2*x^2"}, {"{4,5}", "x^2 + 2*x^3"}, {"{5}", "x + 3*x^2"}}},
      {"4-5", {{"{}", "1 + 3*x"}, {"{4}", "x + 2*x^2"}, {"{5}", "x + 3*x^2"}}},
      {"+6",
       {{"{}", "1 + 3*x"},
        {"{4}", "x + 2*x^2"},
        {"{4,6}", "x^2 + 2*x^3"},
        {"{5}", "x + 3*x^2"},
        {"{5,6}", "x^2 + 3*x^3"},
        {"{6}", "x + 3*x^2"}}},
      {"4-6",
       {{"{}", "1 + 3*x"},
        {"{4}", "x + 2*x^2"},
        {"{5}", "x + 3*x^2"},
        {"{5,6}", "x^2 + 3*x^3"},
        {"{6}", "x + 3*x^2"}}},
      {"-4",
       {{"{}", "1 + 4*x + 2*x^2"}, {"{5}", "x + 3*x^2"}, {"{5,6}", "x^2 + 3*x^3"}, {"{6}", "x + 3*x^2"}}},
      {"5-6", {{"{}", "1 + 4*x + 2*x^2"}, {"{5}", "x + 3*x^2"}, {"{6}", "x + 3*x^2"}}},
      {"-5", {{"{}", "1 + 5*x + 5*x^2"}, {"{6}", "x + 3*x^2"}}},
      {"-6", {{"{}", "1 + 6*x + 8*x^2"}}},
  };
}

// Chromatic polynomial of bridged along bridged_hand_order().
inline std::vector<TableRow> bridged_chromatic_trace() {
  const std::string p2 = "-x + x^2";
  const std::string p3 = "2*x - 3*x^2 + x^3";
  const std::string p4 = "-2*x + 5*x^2 - 4*x^3 + x^4";
  const std::string p5 = "2*x - 7*x^2 + 9*x^3 - 5*x^4 + x^5";
  const std::string p6 = "-4*x + 16*x^2 - 25*x^3 + 19*x^4 - 7*x^5 + x^6";
  return {
      {"init", {{"{}", "1"}}},
      {"+1", {{"{1}", "x"}}},
      {"+3", {{"{1|3}", p2}, {"{1,3}", "x"}}},
      {"1-3", {{"{1|3}", p2}}},
      {"+2", {{"{1|2|3}", p3}, {"{1|2,3}", p2}, {"{1,2|3}", p2}}},
      {"1-2", {{"{1|2|3}", p3}, {"{1|2,3}", p2}}},
      {"2-3", {{"{1|2|3}", p3}}},
      {"-1", {{"{2|3}", p3}}},
      {"-3", {{"{2}", p3}}},
      {"+4", {{"{2|4}", p4}, {"{2,4}", p3}}},
      {"2-4", {{"{2|4}", p4}}},
      {"-2", {{"{4}", p4}}},
      {"+5", {{"{4|5}", p5}, {"{4,5}", p4}}},
      {"4-5", {{"{4|5}", p5}}},
      {"+6", {{"{4|5|6}", p6}, {"{4|5,6}", p5}, {"{4,6|5}", p5}}},
      {"4-6", {{"{4|5|6}", p6}, {"{4|5,6}", p5}}},
      {"-4", {{"{5|6}", p6}, {"{5,6}", p5}}},
      {"5-6", {{"{5|6}", p6}}},
      {"-5", {{"{6}", p6}}},
      {"-6", {{"{}", p6}}},
  };
}

// Domination polynomial of bridged along bridged_hand_order(). Index
// [D,E,F]: uncovered, covered, dominating.
inline std::vector<TableRow> bridged_domination_trace() {
  return {
      {"init", {{"[{},{},{}]", "1"}}},
      {"+1", {{"[{},{},{1}]", "x"}, {"[{1},{},{}]", "1"}}},
      {"+3",
       {{"[{},{},{1,3}]", "x^2"}, {"[{1},{},{3}]", "x"}, {"[{1,3},{},{}]", "1"}, {"[{3},{},{1}]", "x"}}},
      {"1-3",
       {{"[{},{},{1,3}]", "x^2"}, {"[{},{1},{3}]", "x"}, {"[{},{3},{1}]", "x"}, {"[{1,3},{},{}]", "1"}}},
      {"+2",
       {{"[{},{},{1,2,3}]", "x^3"},
        {"[{},{1},{2,3}]", "x^2"},
        {"[{},{3},{1,2}]", "x^2"},
        {"[{1,2,3},{},{}]", "1"},
        {"[{1,3},{},{2}]", "x"},
        {"[{2},{},{1,3}]", "x^2"},
        {"[{2},{1},{3}]", "x"},
        {"[{2},{3},{1}]", "x"}}},
      {"1-2",
       {{"[{},{},{1,2,3}]", "x^3"},
        {"[{},{1},{2,3}]", "x^2"},
        {"[{},{2},{1,3}]", "x^2"},
        {"[{},{2,3},{1}]", "x"},
        {"[{},{3},{1,2}]", "x^2"},
        {"[{1,2,3},{},{}]", "1"},
        {"[{2},{1},{3}]", "x"},
        {"[{3},{1},{2}]", "x"}}},
      {"2-3",
       {{"[{},{},{1,2,3}]", "x^3"},
        {"[{},{1},{2,3}]", "x^2"},
        {"[{},{1,2},{3}]", "x"},
        {"[{},{1,3},{2}]", "x"},
        {"[{},{2},{1,3}]", "x^2"},
        {"[{},{2,3},{1}]", "x"},
        {"[{},{3},{1,2}]", "x^2"},
        {"[{1,2,3},{},{}]", "1"}}},
      {"-1",
       {{"[{},{},{2,3}]", "x^2 + x^3"},
        {"[{},{2},{3}]", "x + x^2"},
        {"[{},{2,3},{}]", "x"},
        {"[{},{3},{2}]", "x + x^2"}}},
      {"-3", {{"[{},{},{2}]", "x + 2*x^2 + x^3"}, {"[{},{2},{}]", "2*x + x^2"}}},
      {"+4",
       {{"[{},{},{2,4}]", "x^2 + 2*x^3 + x^4"},
        {"[{},{2},{4}]", "2*x^2 + x^3"},
        {"[{4},{},{2}]", "x + 2*x^2 + x^3"},
        {"[{4},{2},{}]", "2*x + x^2"}}},
      {"2-4",
       {{"[{},{},{2,4}]", "x^2 + 2*x^3 + x^4"},
        {"[{},{2},{4}]", "2*x^2 + x^3"},
        {"[{},{4},{2}]", "x + 2*x^2 + x^3"},
        {"[{4},{2},{}]", "2*x + x^2"}}},
      {"-2",
       {{"[{},{},{4}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{},{4},{}]", "x + 2*x^2 + x^3"},
        {"[{4},{},{}]", "2*x + x^2"}}},
      {"+5",
       {{"[{},{},{4,5}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{},{4},{5}]", "x^2 + 2*x^3 + x^4"},
        {"[{4},{},{5}]", "2*x^2 + x^3"},
        {"[{4,5},{},{}]", "2*x + x^2"},
        {"[{5},{},{4}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{5},{4},{}]", "x + 2*x^2 + x^3"}}},
      {"4-5",
       {{"[{},{},{4,5}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{},{4},{5}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{},{5},{4}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{4,5},{},{}]", "2*x + x^2"},
        {"[{5},{4},{}]", "x + 2*x^2 + x^3"}}},
      {"+6",
       {{"[{},{},{4,5,6}]", "3*x^4 + 3*x^5 + x^6"},
        {"[{},{4},{5,6}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{},{5},{4,6}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{4,5},{},{6}]", "2*x^2 + x^3"},
        {"[{4,5,6},{},{}]", "2*x + x^2"},
        {"[{5},{4},{6}]", "x^2 + 2*x^3 + x^4"},
        {"[{5,6},{4},{}]", "x + 2*x^2 + x^3"},
        {"[{6},{},{4,5}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{6},{4},{5}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{6},{5},{4}]", "3*x^2 + 3*x^3 + x^4"}}},
      {"4-6",
       {{"[{},{},{4,5,6}]", "3*x^4 + 3*x^5 + x^6"},
        {"[{},{4},{5,6}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{},{5},{4,6}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{},{5,6},{4}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{},{6},{4,5}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{4,5,6},{},{}]", "2*x + x^2"},
        {"[{5},{4},{6}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{5,6},{4},{}]", "x + 2*x^2 + x^3"},
        {"[{6},{4},{5}]", "3*x^2 + 3*x^3 + x^4"}}},
      {"-4",
       {{"[{},{},{5,6}]", "3*x^3 + 6*x^4 + 4*x^5 + x^6"},
        {"[{},{5},{6}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{},{5,6},{}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{},{6},{5}]", "3*x^3 + 3*x^4 + x^5"},
        {"[{5},{},{6}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{5,6},{},{}]", "x + 2*x^2 + x^3"},
        {"[{6},{},{5}]", "3*x^2 + 3*x^3 + x^4"}}},
      {"5-6",
       {{"[{},{},{5,6}]", "3*x^3 + 6*x^4 + 4*x^5 + x^6"},
        {"[{},{5},{6}]", "3*x^2 + 6*x^3 + 4*x^4 + x^5"},
        {"[{},{5,6},{}]", "3*x^2 + 3*x^3 + x^4"},
        {"[{},{6},{5}]", "3*x^2 + 6*x^3 + 4*x^4 + x^5"},
        {"[{5,6},{},{}]", "x + 2*x^2 + x^3"}}},
      {"-5",
       {{"[{},{},{6}]", "3*x^2 + 9*x^3 + 10*x^4 + 5*x^5 + x^6"},
        {"[{},{6},{}]", "6*x^2 + 9*x^3 + 5*x^4 + x^5"}}},
      {"-6", {{"[{},{},{}]", "9*x^2 + 18*x^3 + 15*x^4 + 6*x^5 + x^6"}}},
  };
}

/// Bipartition trace of triangle along triangle_hand_order(): the number of
/// distinct states per step as printed, and the corrected count where the
/// printed table is wrong (see tests/fixtures/README.md).
struct CountRow {
  std::string label;
  std::size_t printed;
  std::size_t corrected;
};

inline std::vector<CountRow> triangle_bipartition_counts() {
  return {
      {"init", 1, 1}, {"+1", 2, 2},  {"+3", 4, 4},  {"1-3", 6, 6}, {"+2", 12, 12},
      {"1-2", 16, 16}, {"2-3", 20, 20}, {"-1", 8, 9}, {"-3", 3, 3},  {"-2", 1, 1},
  };
}

}  // namespace polydec::fixtures
