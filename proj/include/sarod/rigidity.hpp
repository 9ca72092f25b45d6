#pragma once

#include "sarod/geometry.hpp"
#include "sarod/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sarod {

template <class S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

// Writes the 1x2 block v^T into row r at edge/vertex column block c.
template <class S, class V>
void put(MatrixX<S>& M, Eigen::Index r, int c, const V& v) {
  M(r, 2 * c) += v(0);
  M(r, 2 * c + 1) += v(1);
}

}  // namespace detail

// Jacobian of the rigidity function with respect to the stacked configuration,
// |tA|+|tD| rows (SA first) by 2n columns.
template <class S>
MatrixX<S> rigidity_matrix(const Config<S>& p, const std::vector<Triple>& tA, const std::vector<Triple>& tD) {
  MatrixX<S> R = MatrixX<S>::Zero(static_cast<Eigen::Index>(tA.size() + tD.size()), 2 * p.cols());
  Eigen::Index r = 0;
  for (const auto& t : tA) {
    const Vec2<S> As = perp(bearing(p, t.apex, t.j)) / distance(p, t.apex, t.j);
    const Vec2<S> At = perp(bearing(p, t.apex, t.k)) / distance(p, t.apex, t.k);
    detail::put(R, r, t.apex, Vec2<S>(As - At));
    detail::put(R, r, t.j, Vec2<S>(-As));
    detail::put(R, r, t.k, At);
    ++r;
  }
  for (const auto& t : tD) {
    const S kappa = ratio_of_distance(p, t.apex, t.j, t.k);
    const Vec2<S> Dj = bearing(p, t.apex, t.j) / distance(p, t.apex, t.j);
    const Vec2<S> Dk = bearing(p, t.apex, t.k) / distance(p, t.apex, t.k);
    detail::put(R, r, t.apex, Vec2<S>(kappa * (Dj - Dk)));
    detail::put(R, r, t.j, Vec2<S>(-kappa * Dj));
    detail::put(R, r, t.k, Vec2<S>(kappa * Dk));
    ++r;
  }
  return R;
}

// Edge-space factor: rows as above, 2m columns, so that R = factor * (H kron I2).
// Bearings are taken along each edge's tail->head orientation; the sign of the
// orientation cancels between bearing and displacement.
template <class S>
MatrixX<S> edge_factor(const Graph& g, const Config<S>& p, const std::vector<Triple>& t, Attr kind) {
  MatrixX<S> F = MatrixX<S>::Zero(static_cast<Eigen::Index>(t.size()), 2 * g.m());
  auto oriented = [&](int e) {
    const Edge& ed = g.edge(e);
    return std::pair<Vec2<S>, S>(bearing(p, ed.tail, ed.head), distance(p, ed.tail, ed.head));
  };
  for (std::size_t r = 0; r < t.size(); ++r) {
    const auto [bj, dj] = oriented(t[r].ej);
    const auto [bk, dk] = oriented(t[r].ek);
    const auto row = static_cast<Eigen::Index>(r);
    if (kind == Attr::A) {
      detail::put(F, row, t[r].ej, Vec2<S>(-perp(bj) / dj));
      detail::put(F, row, t[r].ek, Vec2<S>(perp(bk) / dk));
    } else {
      const S kappa = dk / dj;
      detail::put(F, row, t[r].ej, Vec2<S>(-kappa * bj / dj));
      detail::put(F, row, t[r].ek, Vec2<S>(kappa * bk / dk));
    }
  }
  return F;
}

struct RigidityMatrix {
  Eigen::MatrixXd R;
  Eigen::MatrixXd Rbar_A;
  Eigen::MatrixXd Rbar_D;
  Eigen::MatrixXd Hbar;  // H kron I2
  std::vector<Triple> sa;
  std::vector<Triple> rod;
};

RigidityMatrix assemble_rigidity_matrix(const Framework& fw, TripleMode mode = TripleMode::Full);

// Columns 1 (x) e1, 1 (x) e2, (I (x) R(pi/2)) p, p.
Eigen::MatrixXd trivial_motions(const Config2d& p);

struct RankReport {
  int rank = 0;
  int required = 0;  // 2n-4
  bool rigid = false;
  Eigen::VectorXd sigma;
  double rtol = kDefaultRtol;
  Eigen::MatrixXd null_basis;
  double trivial_residual = 0.0;  // max ||R v|| / (||R|| ||v||) over trivial motions
};

RankReport infinitesimal_rigidity_test(const Framework& fw, double rtol = kDefaultRtol,
                                       TripleMode mode = TripleMode::Full);

struct DualityReport {
  int rank = 0;
  int rank_swapped = 0;
  bool equal = false;
};

DualityReport duality_check(const Framework& fw, double rtol = kDefaultRtol);

// Quadrilateral global rigidity on the 4-cycle (1,2),(2,3),(3,4),(4,1).
enum class QuadVerdict { Rigid, NotRigid, Boundary };

struct QuadReport {
  QuadVerdict verdict = QuadVerdict::NotRigid;
  int quad_case = 0;           // 1..4
  std::vector<int> labels;     // canonical label l -> input vertex
  double margin = 0.0;         // decisive quantity, sign as in the criterion
  double equality_residual = 0.0;
  std::string detail;
};

QuadReport quad_global_rigidity(const Framework& fw, double tol = 1e-9);

std::string to_string(QuadVerdict v);

struct ShapeSearchOptions {
  int starts = 50;
  std::uint64_t seed = 0;
  double accept = 1e-10;       // cost threshold for a solution
  double cluster_tol = 1e-6;   // RMS similarity residual for "same shape"
  double box_scale = 1.5;      // start box half-width relative to the half-extent of p
};

// Multi-start search for configurations with the same rigidity function as fw,
// vertices 1 and 2 pinned; returns one representative per distinct shape.
std::vector<Config2d> equivalent_shape_search(const Framework& fw, const ShapeSearchOptions& opt = {});

}  // namespace sarod
