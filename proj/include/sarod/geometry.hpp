#pragma once

#include "sarod/graph.hpp"

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sarod {

template <class S>
using Vec2 = Eigen::Matrix<S, 2, 1>;
template <class S>
using Mat2 = Eigen::Matrix<S, 2, 2>;
// Planar configuration, one column per vertex.
template <class S>
using Config = Eigen::Matrix<S, 2, Eigen::Dynamic>;

using Vector2d = Eigen::Vector2d;
using Config2d = Config<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class S>
Mat2<S> rotation(S theta) {
  using std::cos;
  using std::sin;
  Mat2<S> r;
  r << cos(theta), -sin(theta), sin(theta), cos(theta);
  return r;
}

// R(pi/2) v, counter-clockwise.
template <class Derived>
Vec2<typename Derived::Scalar> perp(const Eigen::MatrixBase<Derived>& v) {
  return Vec2<typename Derived::Scalar>(-v(1), v(0));
}

template <class S>
S wrap_angle(S a) {
  using std::fmod;
  a = fmod(a, S(kTwoPi));
  if (a < S(0)) a += S(kTwoPi);
  if (a >= S(kTwoPi)) a -= S(kTwoPi);
  return a;
}

// Signed difference folded into (-pi, pi].
inline double angle_diff(double a, double b) { return std::remainder(a - b, kTwoPi); }

template <class S>
void require_apart(const Vec2<S>& a, const Vec2<S>& b) {
  if ((a - b).squaredNorm() == S(0)) throw std::invalid_argument("collocated nodes (Assumption 1)");
}

// Unit bearing from p_i to p_j.
template <class S>
Vec2<S> bearing(const Config<S>& p, int i, int j) {
  const Vec2<S> e = p.col(j) - p.col(i);
  require_apart<S>(p.col(i), p.col(j));
  return e / e.norm();
}

template <class S>
S distance(const Config<S>& p, int i, int j) {
  return (p.col(j) - p.col(i)).norm();
}

// Angle in [0, 2pi) rotating b_ij counter-clockwise onto b_ik.
template <class S>
S signed_angle(const Config<S>& p, int i, int j, int k) {
  using std::atan2;
  const Vec2<S> bj = bearing(p, i, j), bk = bearing(p, i, k);
  const S cross = bk.dot(perp(bj));
  const S dot = bj.dot(bk);
  return wrap_angle(atan2(cross, dot));
}

template <class S>
S ratio_of_distance(const Config<S>& p, int i, int j, int k) {
  require_apart<S>(p.col(i), p.col(j));
  require_apart<S>(p.col(i), p.col(k));
  return distance(p, i, k) / distance(p, i, j);
}

// SA entries over tA followed by RoD entries over tD.
template <class S>
Eigen::Matrix<S, Eigen::Dynamic, 1> rigidity_function(const Config<S>& p, const std::vector<Triple>& tA,
                                                     const std::vector<Triple>& tD) {
  Eigen::Matrix<S, Eigen::Dynamic, 1> f(tA.size() + tD.size());
  Eigen::Index r = 0;
  for (const auto& t : tA) f(r++) = signed_angle(p, t.apex, t.j, t.k);
  for (const auto& t : tD) f(r++) = ratio_of_distance(p, t.apex, t.j, t.k);
  return f;
}

struct MeasurementSet {
  std::vector<Triple> sa_triples;
  Eigen::VectorXd sa;
  std::vector<Triple> rod_triples;
  Eigen::VectorXd rod;
};

MeasurementSet synthesize_measurements(const Config2d& p, const std::vector<Triple>& tA,
                                       const std::vector<Triple>& tD);

// q = xi + c R(theta) p, applied column-wise.
struct SimilarityTransform {
  double c = 1.0;
  double theta = 0.0;
  Vector2d xi = Vector2d::Zero();

  Config2d apply(const Config2d& p) const {
    return ((c * rotation(theta)) * p).colwise() + xi;
  }
};

struct SimilarityFit {
  SimilarityTransform transform;
  double residual = 0.0;  // RMS misalignment
};

// Least-squares similarity (positive scale, proper rotation) taking p onto q.
SimilarityFit fit_similarity(const Config2d& p, const Config2d& q);

inline bool same_shape(const Config2d& p, const Config2d& q, double tol = 1e-8) {
  return fit_similarity(p, q).residual < tol;
}

// Bipartite framework: graph with attributes plus one position per vertex.
struct Framework {
  Graph g;
  Config2d p;
};

// Throws if any two vertices coincide.
void require_distinct(const Config2d& p);

// |cross(b-a, c-a)| normalised by the two leg lengths, i.e. |sin| of the angle at a.
double collinearity(const Vector2d& a, const Vector2d& b, const Vector2d& c);

}  // namespace sarod
