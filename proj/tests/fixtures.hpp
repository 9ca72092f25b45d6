#pragma once

#include "sarod/construction.hpp"
#include "sarod/rigidity.hpp"
#include "sarod/snl.hpp"

#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using namespace sarod;

// Edges and attributes are 1-based / one character per vertex ("ADDA...").
inline Framework make(const std::string& attrs, std::initializer_list<std::pair<int, int>> edges,
                      std::initializer_list<Vector2d> pos) {
  Framework fw{Graph(static_cast<int>(attrs.size())), Config2d(2, static_cast<Eigen::Index>(attrs.size()))};
  for (std::size_t v = 0; v < attrs.size(); ++v) fw.g.set_attr(static_cast<int>(v), attrs[v] == 'A' ? Attr::A : Attr::D);
  for (auto [i, j] : edges) fw.g.add_edge(i - 1, j - 1);
  int c = 0;
  for (const auto& p : pos) fw.p.col(c++) = p;
  return fw;
}

inline Config2d random_config(int n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Config2d p(2, n);
  for (int v = 0; v < n; ++v) p.col(v) = Vector2d(u(rng), u(rng));
  return p;
}

// Six-vertex graph whose SA index graph splits and RoD index graph connects.
inline Graph index_graph_example() {
  Graph g(6);
  for (auto [i, j] : {std::pair{1, 2}, {1, 4}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {4, 5}, {5, 6}}) g.add_edge(i - 1, j - 1);
  for (int v : {1, 3, 6}) g.set_attr(v - 1, Attr::A);
  return g;
}

// Globally ambiguous five-vertex framework: vertex 5 reflects across line 3-4.
inline Framework reflective_pentagon() {
  return make("DADDD", {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}},
              {Vector2d(0.0, 0.0), Vector2d(1.0, 0.1), Vector2d(0.3, 0.9), Vector2d(1.2, 1.1), Vector2d(0.9, 1.9)});
}

// Quadrilateral with V_A = {1} and vertices 2, 3, 4 collinear.
inline Framework collinear_quad() {
  return make("ADDD", {{1, 2}, {2, 3}, {3, 4}, {1, 4}},
              {Vector2d(0, 1), Vector2d(-1, 0), Vector2d(0, 0), Vector2d(1, 0)});
}

// Generic quadrilateral with V_A = {1}; not globally rigid.
inline Framework generic_quad_one_a() {
  return make("ADDD", {{1, 2}, {2, 3}, {3, 4}, {1, 4}},
              {Vector2d(0.1, 0.2), Vector2d(1.0, 0.0), Vector2d(1.3, 0.9), Vector2d(0.2, 1.1)});
}

// Anchors 1, 2; vertex 4 lies on segment 1-3 and can slide along it.
inline Framework sliding_vertex() {
  return make("ADAA", {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {3, 4}},
              {Vector2d(0.0, 0.0), Vector2d(1.0, -0.5), Vector2d(1.0, 1.0), Vector2d(0.4, 0.4)});
}

inline AdditionStep two_vertex(int i, int j, Attr first, Attr second) {
  AdditionStep s;
  s.kind = AdditionKind::TwoVertex;
  s.i = i - 1;
  s.j = j - 1;
  s.first = first;
  s.second = second;
  return s;
}

// First merge operand: 6 vertices built from seed 1=D, 2=A by two 2-vertex additions.
inline Framework merge_left(std::uint64_t seed = 11) {
  Rng rng(seed);
  Framework fw = seed_framework(Attr::D, Attr::A, rng);
  AdditionStep s1 = two_vertex(1, 2, Attr::A, Attr::A);
  fw = apply_step(fw, s1, rng);
  AdditionStep s2 = two_vertex(4, 3, Attr::A, Attr::D);
  return apply_step(fw, s2, rng);
}

// Second merge operand: vertices 7..10 (local 1..4), seed 7=A, 8=D.
inline Framework merge_right(std::uint64_t seed = 12) {
  Rng rng(seed);
  Framework fw = seed_framework(Attr::A, Attr::D, rng);
  AdditionStep s = two_vertex(2, 1, Attr::A, Attr::A);
  return apply_step(fw, s, rng);
}

// Random connected graph with random attributes and positions.
inline Framework random_framework(int n, Rng& rng) {
  Framework fw{Graph(n), random_config(n, rng)};
  std::bernoulli_distribution coin(0.5);
  for (int v = 0; v < n; ++v) fw.g.set_attr(v, coin(rng) ? Attr::A : Attr::D);
  for (int v = 1; v < n; ++v) fw.g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::bernoulli_distribution extra(0.4);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!fw.g.has_edge(a, b) && extra(rng)) fw.g.add_edge(a, b);
  return fw;
}

// Central differences of the rigidity function, SA entries wrapped.
inline Eigen::MatrixXd finite_difference_jacobian(const Config2d& p, const std::vector<Triple>& tA,
                                                  const std::vector<Triple>& tD, double h = 1e-6) {
  const Eigen::Index rows = static_cast<Eigen::Index>(tA.size() + tD.size());
  Eigen::MatrixXd J(rows, 2 * p.cols());
  for (Eigen::Index c = 0; c < 2 * p.cols(); ++c) {
    Config2d lo = p, hi = p;
    lo(c % 2, c / 2) -= h;
    hi(c % 2, c / 2) += h;
    const Eigen::VectorXd fl = rigidity_function(lo, tA, tD), fh = rigidity_function(hi, tA, tD);
    for (Eigen::Index r = 0; r < rows; ++r)
      J(r, c) = (r < static_cast<Eigen::Index>(tA.size()) ? angle_diff(fh(r), fl(r)) : fh(r) - fl(r)) / (2 * h);
  }
  return J;
}

}  // namespace fixtures
