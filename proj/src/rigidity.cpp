#include "sarod/rigidity.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <array>
#include <cmath>

namespace sarod {

RigidityMatrix assemble_rigidity_matrix(const Framework& fw, TripleMode mode) {
  require_distinct(fw.p);
  RigidityMatrix out;
  out.sa = enumerate_triples(fw.g, Attr::A, mode);
  out.rod = enumerate_triples(fw.g, Attr::D, mode);
  out.R = rigidity_matrix<double>(fw.p, out.sa, out.rod);
  out.Rbar_A = edge_factor<double>(fw.g, fw.p, out.sa, Attr::A);
  out.Rbar_D = edge_factor<double>(fw.g, fw.p, out.rod, Attr::D);
  out.Hbar = Eigen::kroneckerProduct(incidence_matrix(fw.g), Eigen::Matrix2d::Identity()).eval();
  return out;
}

Eigen::MatrixXd trivial_motions(const Config2d& p) {
  const Eigen::Index n = p.cols();
  Eigen::MatrixXd T(2 * n, 4);
  for (Eigen::Index i = 0; i < n; ++i) {
    T.block<2, 1>(2 * i, 0) = Vector2d(1, 0);
    T.block<2, 1>(2 * i, 1) = Vector2d(0, 1);
    T.block<2, 1>(2 * i, 2) = perp(p.col(i));
    T.block<2, 1>(2 * i, 3) = p.col(i);
  }
  return T;
}

RankReport infinitesimal_rigidity_test(const Framework& fw, double rtol, TripleMode mode) {
  if (fw.g.n() < 3) throw std::invalid_argument("rigidity test needs n >= 3");
  require_distinct(fw.p);
  const auto tA = enumerate_triples(fw.g, Attr::A, mode);
  const auto tD = enumerate_triples(fw.g, Attr::D, mode);
  const Eigen::MatrixXd R = rigidity_matrix<double>(fw.p, tA, tD);
  RankReport rep;
  rep.rtol = rtol;
  rep.required = 2 * fw.g.n() - 4;
  const RankInfo info = numerical_rank(R, rtol);
  rep.rank = info.rank;
  rep.sigma = info.sigma;
  rep.rigid = rep.rank == rep.required;
  rep.null_basis = null_space(R, rtol);
  const Eigen::MatrixXd T = trivial_motions(fw.p);
  const double normR = R.norm();
  for (int c = 0; c < 4; ++c) {
    const double denom = normR * T.col(c).norm();
    if (denom > 0) rep.trivial_residual = std::max(rep.trivial_residual, (R * T.col(c)).norm() / denom);
  }
  return rep;
}

DualityReport duality_check(const Framework& fw, double rtol) {
  DualityReport rep;
  rep.rank = infinitesimal_rigidity_test(fw, rtol).rank;
  rep.rank_swapped = infinitesimal_rigidity_test({swap_attributes(fw.g), fw.p}, rtol).rank;
  rep.equal = rep.rank == rep.rank_swapped;
  return rep;
}

std::string to_string(QuadVerdict v) {
  switch (v) {
    case QuadVerdict::Rigid: return "globally rigid";
    case QuadVerdict::NotRigid: return "not globally rigid";
    case QuadVerdict::Boundary: return "boundary";
  }
  return "?";
}

namespace {

bool is_four_cycle(const Graph& g) {
  if (g.n() != 4 || g.m() != 4) return false;
  for (int v = 0; v < 4; ++v)
    if (!g.has_edge(v, (v + 1) % 4)) return false;
  return true;
}

}  // namespace

QuadReport quad_global_rigidity(const Framework& fw, double tol) {
  if (!is_four_cycle(fw.g)) throw std::invalid_argument("expects 4-cycle");
  require_distinct(fw.p);
  std::array<bool, 4> isA{};
  int na = 0;
  for (int v = 0; v < 4; ++v) na += (isA[v] = fw.g.attr(v) == Attr::A);
  if (na == 0 || na == 4) throw std::invalid_argument("quadrilateral criteria need both attributes present");

  // Cyclic relabeling so the attribute pattern matches the canonical case.
  auto wants = [&](int shift, std::array<bool, 4> pattern) {
    for (int l = 0; l < 4; ++l)
      if (isA[(l + shift) % 4] != pattern[l]) return false;
    return true;
  };
  QuadReport rep;
  std::array<bool, 4> pattern{};
  if (na == 3) {
    rep.quad_case = 1;
    pattern = {true, true, true, false};
  } else if (na == 1) {
    rep.quad_case = 2;
    pattern = {true, false, false, false};
  } else if (isA[0] == isA[2]) {
    rep.quad_case = 4;
    pattern = {true, false, true, false};
  } else {
    rep.quad_case = 3;
    pattern = {true, true, false, false};
  }
  int shift = 0;
  while (!wants(shift, pattern)) ++shift;
  rep.labels.resize(4);
  for (int l = 0; l < 4; ++l) rep.labels[l] = (l + shift) % 4;

  auto P = [&](int l) -> Vector2d { return fw.p.col(rep.labels[l - 1]); };
  auto d = [&](int a, int b) { return (P(b) - P(a)).norm(); };
  auto theta = [&](int a, int b) {
    const Vector2d e = P(b) - P(a);
    return std::atan2(e.y(), e.x());
  };

  switch (rep.quad_case) {
    case 1: {
      rep.equality_residual = collinearity(P(1), P(2), P(3));
      rep.margin = rep.equality_residual;
      rep.verdict = rep.equality_residual <= tol ? QuadVerdict::NotRigid : QuadVerdict::Rigid;
      rep.detail = "A-vertices collinearity residual";
      break;
    }
    case 2: {
      const double col = collinearity(P(2), P(3), P(4));
      const double sym = std::max(std::abs(d(1, 4) - d(3, 4)), std::abs(d(1, 2) - d(3, 2)));
      rep.equality_residual = std::min(col, sym);
      rep.margin = rep.equality_residual;
      rep.verdict = rep.equality_residual <= tol ? QuadVerdict::Rigid : QuadVerdict::NotRigid;
      rep.detail = "min(collinearity of 2,3,4; symmetry residual)";
      break;
    }
    case 3: {
      rep.margin = d(1, 2) + 2.0 * d(3, 4) * std::cos(theta(3, 4) - theta(1, 2));
      rep.verdict = std::abs(rep.margin) <= tol ? QuadVerdict::Boundary
                    : rep.margin < 0       ? QuadVerdict::Rigid
                                           : QuadVerdict::NotRigid;
      rep.detail = "d12 + 2 d34 cos(theta34 - theta12)";
      break;
    }
    case 4: {
      const double k4 = d(3, 4) / d(1, 4);
      const double k2 = d(2, 3) / d(1, 2);
      const double a1 = theta(1, 4) - theta(1, 2);
      const double a3 = theta(3, 4) - theta(3, 2);
      const double s1 = std::sin(a1), s3 = std::sin(a3);
      rep.equality_residual =
          k4 * k4 + k2 * k2 - s1 * s1 - k4 * k4 * k2 * k2 * s3 * s3 - 2.0 * k4 * k2 * std::cos(a1) * std::cos(a3);
      rep.margin = (d(2, 3) - d(1, 2)) * (d(3, 4) - d(1, 4));
      if (std::abs(rep.equality_residual) <= tol || rep.margin < -tol)
        rep.verdict = QuadVerdict::Rigid;
      else if (std::abs(rep.margin) <= tol)
        rep.verdict = QuadVerdict::Boundary;
      else
        rep.verdict = QuadVerdict::NotRigid;
      rep.detail = "(d23 - d12)(d34 - d14); equality residual is the double-root discriminant";
      break;
    }
  }
  return rep;
}

namespace {

struct PinnedProblem {
  const Framework* fw;
  std::vector<Triple> tA, tD;
  Eigen::VectorXd target;

  Config2d config(const Eigen::VectorXd& x) const {
    Config2d q = fw->p;
    for (int v = 2; v < fw->g.n(); ++v) q.col(v) = x.segment<2>(2 * (v - 2));
    return q;
  }
  void residual(const Eigen::VectorXd& x, Eigen::VectorXd& r) const {
    const Eigen::VectorXd f = rigidity_function(config(x), tA, tD);
    r = f - target;
    for (std::size_t i = 0; i < tA.size(); ++i) r(i) = angle_diff(f(i), target(i));
  }
  void jacobian(const Eigen::VectorXd& x, Eigen::MatrixXd& J) const {
    const Eigen::MatrixXd R = rigidity_matrix<double>(config(x), tA, tD);
    J = R.rightCols(R.cols() - 4);
  }
};

}  // namespace

std::vector<Config2d> equivalent_shape_search(const Framework& fw, const ShapeSearchOptions& opt) {
  const int n = fw.g.n();
  if (n > 8) throw std::invalid_argument("oracle is desk-scale only");
  if (n < 3) throw std::invalid_argument("oracle needs n >= 3");
  require_distinct(fw.p);
  PinnedProblem pp{&fw, enumerate_triples(fw.g, Attr::A), enumerate_triples(fw.g, Attr::D), {}};
  pp.target = rigidity_function(fw.p, pp.tA, pp.tD);

  LsqProblem prob;
  prob.inputs = 2 * (n - 2);
  prob.values = static_cast<int>(pp.target.size());
  prob.residual = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r) { pp.residual(x, r); };
  prob.jacobian = [&](const Eigen::VectorXd& x, Eigen::MatrixXd& J) { pp.jacobian(x, J); };

  const Vector2d lo = fw.p.rowwise().minCoeff(), hi = fw.p.rowwise().maxCoeff();
  const Vector2d centre = 0.5 * (lo + hi);
  const double half = opt.box_scale * std::max(0.5 * (hi - lo).maxCoeff(), 1e-12);

  std::vector<Config2d> shapes;
  for (int s = 0; s < opt.starts; ++s) {
    auto rng = start_rng(opt.seed, static_cast<std::uint64_t>(s));
    std::uniform_real_distribution<double> u(-half, half);
    Eigen::VectorXd x0(prob.inputs);
    for (int v = 0; v < n - 2; ++v) x0.segment<2>(2 * v) = centre + Vector2d(u(rng), u(rng));
    LsqResult res;
    try {
      res = minimize(prob, x0);
    } catch (const std::invalid_argument&) {
      continue;  // iterate ran into a collocation
    }
    if (!(std::sqrt(res.cost) < opt.accept)) continue;
    const Config2d q = pp.config(res.x);
    bool degenerate = false;
    try {
      require_distinct(q);
    } catch (const std::invalid_argument&) {
      degenerate = true;
    }
    if (degenerate) continue;
    const bool known = std::any_of(shapes.begin(), shapes.end(), [&](const Config2d& r) {
      return fit_similarity(q, r).residual < opt.cluster_tol;
    });
    if (!known) shapes.push_back(q);
  }
  return shapes;
}

}  // namespace sarod
