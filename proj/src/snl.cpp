#include "sarod/snl.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace sarod {

namespace {

constexpr double kConsistencyTol = 1e-6;

}  // namespace

SensorNetwork build_network(const Framework& fw, std::vector<int> anchors) {
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  if (anchors.size() < 2) throw std::invalid_argument("need n_a >= 2");
  for (int a : anchors)
    if (a < 0 || a >= fw.g.n()) throw std::invalid_argument("anchor out of range");
  require_distinct(fw.p);

  SensorNetwork net;
  net.fw.g = augment_anchor_clique(fw.g, anchors);
  net.fw.p = fw.p;
  if (!net.fw.g.connected()) throw std::invalid_argument("graph not connected");
  net.anchors = anchors;
  net.is_anchor.assign(net.n(), 0);
  for (int a : anchors) net.is_anchor[a] = 1;
  for (int e = 0; e < net.m(); ++e) {
    const Edge& ed = net.fw.g.edge(e);
    if (net.is_anchor[ed.tail] && net.is_anchor[ed.head]) net.anchor_edges.push_back(e);
  }
  const auto na = static_cast<Eigen::Index>(net.anchor_edges.size());
  net.anchor_b.resize(2 * na);
  net.anchor_d.resize(na);
  for (Eigen::Index a = 0; a < na; ++a) {
    const Edge& ed = net.fw.g.edge(net.anchor_edges[a]);
    net.anchor_b.segment<2>(2 * a) = bearing(net.fw.p, ed.tail, ed.head);
    net.anchor_d(a) = distance(net.fw.p, ed.tail, ed.head);
  }
  net.meas = synthesize_measurements(net.fw.p, enumerate_triples(net.fw.g, Attr::A),
                                     enumerate_triples(net.fw.g, Attr::D));
  net.tree = bfs_tree(net.fw.g, 0);
  net.C = cycle_basis(net.fw.g, net.tree);
  return net;
}

void set_measurements(SensorNetwork& net, const MeasurementSet& meas) {
  auto same = [](const std::vector<Triple>& a, const std::vector<Triple>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].apex != b[i].apex || a[i].j != b[i].j || a[i].k != b[i].k) return false;
    return true;
  };
  if (!same(meas.sa_triples, net.meas.sa_triples)) throw std::invalid_argument("SA triples do not match the network");
  if (!same(meas.rod_triples, net.meas.rod_triples))
    throw std::invalid_argument("RoD triples do not match the network");
  for (Eigen::Index i = 0; i < meas.rod.size(); ++i)
    if (!(meas.rod(i) > 0)) throw std::invalid_argument("RoD values must be positive");
  net.meas.sa = meas.sa;
  net.meas.rod = meas.rod;
}

Eigen::VectorXd true_bearings(const SensorNetwork& net) {
  Eigen::VectorXd b(2 * net.m());
  for (int e = 0; e < net.m(); ++e) b.segment<2>(2 * e) = bearing(net.fw.p, net.fw.g.edge(e).tail, net.fw.g.edge(e).head);
  return b;
}

Eigen::VectorXd true_distances(const SensorNetwork& net) {
  Eigen::VectorXd d(net.m());
  for (int e = 0; e < net.m(); ++e) d(e) = distance(net.fw.p, net.fw.g.edge(e).tail, net.fw.g.edge(e).head);
  return d;
}

Eigen::MatrixXd cycle_bearing_matrix(const Eigen::MatrixXd& C, const Eigen::VectorXd& b) {
  Eigen::MatrixXd Cb(2 * C.rows(), C.cols());
  for (Eigen::Index k = 0; k < C.rows(); ++k)
    for (Eigen::Index e = 0; e < C.cols(); ++e) Cb.block<2, 1>(2 * k, e) = C(k, e) * b.segment<2>(2 * e);
  return Cb;
}

namespace {

// +1 when the apex is the tail of the edge, so apex->nbr = s * (tail->head).
double orientation(const Graph& g, int apex, int e) { return g.edge(e).tail == apex ? 1.0 : -1.0; }

struct Link {
  int to;
  double value;  // SA: angle to add; RoD: factor to multiply
};

// BFS labelling of the index graph; value[e] is relative to its component root.
struct Propagation {
  Components comp;
  std::vector<double> value;
};

Propagation walk(const SensorNetwork& net, bool angles) {
  const Graph& g = net.fw.g;
  const auto& triples = angles ? net.meas.sa_triples : net.meas.rod_triples;
  const Eigen::VectorXd& meas = angles ? net.meas.sa : net.meas.rod;
  std::vector<std::vector<Link>> adj(g.m());
  for (std::size_t r = 0; r < triples.size(); ++r) {
    const Triple& t = triples[r];
    if (angles) {
      double phi = meas(static_cast<Eigen::Index>(r));
      if (orientation(g, t.apex, t.ej) * orientation(g, t.apex, t.ek) < 0) phi += M_PI;
      adj[t.ej].push_back({t.ek, phi});
      adj[t.ek].push_back({t.ej, -phi});
    } else {
      const double kappa = meas(static_cast<Eigen::Index>(r));
      adj[t.ej].push_back({t.ek, kappa});
      adj[t.ek].push_back({t.ej, 1.0 / kappa});
    }
  }
  Propagation out;
  out.comp.label.assign(g.m(), -1);
  out.value.assign(g.m(), 0.0);
  for (int root = 0; root < g.m(); ++root) {
    if (out.comp.label[root] >= 0) continue;
    const int c = out.comp.count++;
    out.comp.label[root] = c;
    out.value[root] = angles ? 0.0 : 1.0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int e = q.front();
      q.pop();
      for (const Link& l : adj[e]) {
        const double v = angles ? out.value[e] + l.value : out.value[e] * l.value;
        if (out.comp.label[l.to] < 0) {
          out.comp.label[l.to] = c;
          out.value[l.to] = angles ? wrap_angle(v) : v;
          q.push(l.to);
        } else {
          const bool ok = angles ? std::abs(angle_diff(v, out.value[l.to])) <= kConsistencyTol
                                 : std::abs(v - out.value[l.to]) <= kConsistencyTol * out.value[l.to];
          if (!ok) throw std::runtime_error(angles ? "infeasible SA data" : "infeasible RoD data");
        }
      }
    }
  }
  return out;
}

}  // namespace

Parameterization propagate_bearings(const SensorNetwork& net) {
  const Propagation pr = walk(net, true);
  const int m = net.m();
  // reference bearing per component, fixed by its anchor edges if any
  std::vector<std::optional<Vector2d>> ref(pr.comp.count);
  for (std::size_t a = 0; a < net.anchor_edges.size(); ++a) {
    const int e = net.anchor_edges[a];
    const Vector2d r = rotation(-pr.value[e]) * net.anchor_b.segment<2>(2 * static_cast<Eigen::Index>(a));
    auto& slot = ref[pr.comp.label[e]];
    if (!slot) slot = r;
    else if ((*slot - r).norm() > kConsistencyTol) throw std::runtime_error("infeasible SA data");
  }
  Parameterization par;
  par.components = pr.comp.count;
  std::vector<int> column(pr.comp.count, -1);
  for (int c = 0; c < pr.comp.count; ++c)
    if (!ref[c]) column[c] = par.free_components++;
  par.base = Eigen::VectorXd::Zero(2 * m);
  par.basis = Eigen::MatrixXd::Zero(2 * m, 2 * par.free_components);
  for (int e = 0; e < m; ++e) {
    const int c = pr.comp.label[e];
    const Eigen::Matrix2d Q = rotation(pr.value[e]);
    if (ref[c]) par.base.segment<2>(2 * e) = Q * *ref[c];
    else par.basis.block<2, 2>(2 * e, 2 * column[c]) = Q;
  }
  return par;
}

Parameterization propagate_distances(const SensorNetwork& net) {
  const Propagation pr = walk(net, false);
  const int m = net.m();
  std::vector<std::optional<double>> ref(pr.comp.count);
  for (std::size_t a = 0; a < net.anchor_edges.size(); ++a) {
    const int e = net.anchor_edges[a];
    const double r = net.anchor_d(static_cast<Eigen::Index>(a)) / pr.value[e];
    auto& slot = ref[pr.comp.label[e]];
    if (!slot) slot = r;
    else if (std::abs(*slot - r) > kConsistencyTol * r) throw std::runtime_error("infeasible RoD data");
  }
  Parameterization par;
  par.components = pr.comp.count;
  std::vector<int> column(pr.comp.count, -1);
  for (int c = 0; c < pr.comp.count; ++c)
    if (!ref[c]) column[c] = par.free_components++;
  par.base = Eigen::VectorXd::Zero(m);
  par.basis = Eigen::MatrixXd::Zero(m, par.free_components);
  for (int e = 0; e < m; ++e) {
    const int c = pr.comp.label[e];
    if (ref[c]) par.base(e) = pr.value[e] * *ref[c];
    else par.basis(e, column[c]) = pr.value[e];
  }
  return par;
}

LinearSystem assemble_C_D(const SensorNetwork& net, const Eigen::VectorXd& b, double rtol) {
  const Eigen::MatrixXd Cb = cycle_bearing_matrix(net.C, b);
  const auto& tD = net.meas.rod_triples;
  const auto nt = static_cast<Eigen::Index>(tD.size());
  const auto na = static_cast<Eigen::Index>(net.anchor_edges.size());
  LinearSystem sys;
  sys.A = Eigen::MatrixXd::Zero(Cb.rows() + nt + na, net.m());
  sys.rhs = Eigen::VectorXd::Zero(sys.A.rows());
  sys.A.topRows(Cb.rows()) = Cb;
  for (Eigen::Index r = 0; r < nt; ++r) {
    sys.A(Cb.rows() + r, tD[r].ej) = -net.meas.rod(r);
    sys.A(Cb.rows() + r, tD[r].ek) = 1.0;
  }
  for (Eigen::Index a = 0; a < na; ++a) {
    sys.A(Cb.rows() + nt + a, net.anchor_edges[a]) = 1.0;
    sys.rhs(Cb.rows() + nt + a) = net.anchor_d(a);
  }
  sys.rank = numerical_rank(sys.A, rtol).rank;
  return sys;
}

namespace {

Eigen::MatrixXd weighted_cycles(const SensorNetwork& net, const Eigen::VectorXd& d) {
  return Eigen::kroneckerProduct(net.C * d.asDiagonal(), Eigen::Matrix2d::Identity()).eval();
}

}  // namespace

BearingSystem assemble_C_B(const SensorNetwork& net, const Eigen::VectorXd& d, double rtol) {
  const Graph& g = net.fw.g;
  const auto& tA = net.meas.sa_triples;
  const auto nt = static_cast<Eigen::Index>(tA.size());
  const auto na = static_cast<Eigen::Index>(net.anchor_edges.size());
  BearingSystem sys;
  sys.C_B1 = weighted_cycles(net, d);
  sys.C_B2 = Eigen::MatrixXd::Zero(2 * (nt + na), 2 * net.m());
  Eigen::VectorXd rhs2 = Eigen::VectorXd::Zero(sys.C_B2.rows());
  // b_ik - R(theta) b_ij = 0 written on oriented edge bearings
  for (Eigen::Index r = 0; r < nt; ++r) {
    const Triple& t = tA[r];
    sys.C_B2.block<2, 2>(2 * r, 2 * t.ej) = -orientation(g, t.apex, t.ej) * rotation(net.meas.sa(r));
    sys.C_B2.block<2, 2>(2 * r, 2 * t.ek) = orientation(g, t.apex, t.ek) * Eigen::Matrix2d::Identity();
  }
  for (Eigen::Index a = 0; a < na; ++a) {
    sys.C_B2.block<2, 2>(2 * (nt + a), 2 * net.anchor_edges[a]) = Eigen::Matrix2d::Identity();
    rhs2.segment<2>(2 * (nt + a)) = net.anchor_b.segment<2>(2 * a);
  }
  sys.A.resize(sys.C_B1.rows() + sys.C_B2.rows(), 2 * net.m());
  sys.A << sys.C_B1, sys.C_B2;
  sys.rhs.resize(sys.A.rows());
  sys.rhs << Eigen::VectorXd::Zero(sys.C_B1.rows()), rhs2;
  sys.rank = numerical_rank(sys.A, rtol).rank;
  sys.N = null_space(sys.A, rtol);
  sys.L = static_cast<int>(sys.N.cols());
  return sys;
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::SA: return "sa";
    case Method::RoD: return "rod";
    case Method::General: return "general";
  }
  return "?";
}

Method parse_method(const std::string& s) {
  for (Method m : {Method::Auto, Method::SA, Method::RoD, Method::General})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown method '" + s + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Localizable: return "localizable";
    case Verdict::Unlocalizable: return "unlocalizable";
    case Verdict::HeuristicUnique: return "heuristic-unique";
    case Verdict::HeuristicAmbiguous: return "heuristic-ambiguous";
  }
  return "?";
}

bool is_localized(Verdict v) { return v == Verdict::Localizable || v == Verdict::HeuristicUnique; }

namespace {

struct Parameterized {
  Parameterization bearings;
  Parameterization distances;
};

Parameterized parameterize(const SensorNetwork& net, EdgeSolution& sol) {
  Parameterized p{propagate_bearings(net), propagate_distances(net)};
  sol.c_A = p.bearings.components;
  sol.c_D = p.distances.components;
  sol.dim_A = p.bearings.dim();
  sol.dim_D = p.distances.dim();
  return p;
}

void check_positive(EdgeSolution& sol) {
  if (sol.d.size() > 0 && !(sol.d.minCoeff() > 0)) sol.status = "infeasible numerics";
}

// One multi-start run: accepted zeros, clustered by recovered positions.
struct Zero {
  Eigen::VectorXd b, d;
  double cost;
  Config2d x;
};

template <class Decode>
std::vector<Zero> multi_start(const SensorNetwork& net, const LsqProblem& prob, const SolverConfig& cfg,
                              Decode decode, EdgeSolution& sol) {
  const int starts = std::max(cfg.starts, 1);
  const Eigen::MatrixXd X0 = latin_hypercube(starts, prob.inputs, cfg.half_width, cfg.seed);
  std::vector<Zero> zeros;
  sol.best_cost = std::numeric_limits<double>::infinity();
  for (int s = 0; s < starts; ++s) {
    const LsqResult res = minimize(prob, X0.row(s).transpose(), cfg.lsq);
    sol.best_cost = std::min(sol.best_cost, res.cost);
    if (!(res.cost < cfg.accept)) continue;
    Zero z;
    z.cost = res.cost;
    decode(res.x, z.b, z.d);
    if (!(z.d.minCoeff() > 0)) continue;
    ++sol.converged;
    z.x = recover_positions(net, z.b, z.d).x;
    auto same = std::find_if(zeros.begin(), zeros.end(), [&](const Zero& o) {
      return std::sqrt((z.x - o.x).squaredNorm() / static_cast<double>(z.x.cols())) < cfg.cluster_tol;
    });
    if (same == zeros.end()) zeros.push_back(z);
    else if (z.cost < same->cost) *same = z;
  }
  return zeros;
}

void settle(EdgeSolution& sol, const std::vector<Zero>& zeros, bool certified_unique) {
  if (zeros.empty()) {
    if (sol.converged == 0 && sol.best_cost < std::numeric_limits<double>::infinity() && sol.variables > 0)
      throw std::runtime_error("solver failed: no start reached the acceptance threshold (best cost " +
                               std::to_string(sol.best_cost) + ")");
    throw std::runtime_error("infeasible: positivity violated at every converged zero");
  }
  sol.clusters = static_cast<int>(zeros.size());
  const auto best = std::min_element(zeros.begin(), zeros.end(),
                                     [](const Zero& a, const Zero& b) { return a.cost < b.cost; });
  sol.b = best->b;
  sol.d = best->d;
  if (certified_unique) sol.verdict = Verdict::Localizable;
  else sol.verdict = zeros.size() == 1 ? Verdict::HeuristicUnique : Verdict::HeuristicAmbiguous;
  if (zeros.size() > 1) sol.warnings.push_back("ambiguous (not localizable): " + std::to_string(zeros.size()) +
                                               " distinct zeros");
}

}  // namespace

EdgeSolution solve_sa_connected(const SensorNetwork& net, const SolverConfig& cfg) {
  EdgeSolution sol;
  sol.method = Method::SA;
  const Parameterized p = parameterize(net, sol);
  if (sol.dim_A != 0)
    throw std::invalid_argument("method sa requires T_A connected over the augmented graph (c_A=" +
                                std::to_string(sol.c_A) + ")");
  sol.b = p.bearings.base;
  const LinearSystem sys = assemble_C_D(net, sol.b, cfg.rtol);
  sol.rank_CD = sys.rank;
  sol.rows_CD = static_cast<int>(sys.A.rows());
  sol.d = least_squares(sys.A, sys.rhs, cfg.rtol);
  sol.verdict = sys.rank == net.m() ? Verdict::Localizable : Verdict::Unlocalizable;
  // a rank-deficient system has no meaningful distances to check
  if (sol.verdict == Verdict::Localizable) check_positive(sol);
  return sol;
}

EdgeSolution solve_rod_connected(const SensorNetwork& net, const SolverConfig& cfg) {
  EdgeSolution sol;
  sol.method = Method::RoD;
  const Parameterized p = parameterize(net, sol);
  if (sol.dim_D != 0)
    throw std::invalid_argument("method rod requires T_D connected over the augmented graph (c_D=" +
                                std::to_string(sol.c_D) + ")");
  sol.d = p.distances.base;
  const BearingSystem sys = assemble_C_B(net, sol.d, cfg.rtol);
  sol.rank_CB = sys.rank;
  sol.rows_CB = static_cast<int>(sys.A.rows());
  sol.L = sys.L;
  sol.variables = sys.L;
  const Eigen::VectorXd b0 = pseudo_inverse(sys.A, cfg.rtol) * sys.rhs;
  if (sys.L == 0) {
    sol.b = b0;
    sol.verdict = Verdict::Localizable;
    check_positive(sol);
    return sol;
  }
  const int m = net.m();
  const Eigen::MatrixXd& N = sys.N;
  LsqProblem prob;
  prob.inputs = sys.L;
  prob.values = m;
  prob.residual = [&](const Eigen::VectorXd& w, Eigen::VectorXd& r) {
    const Eigen::VectorXd b = b0 + N * w;
    r.resize(m);
    for (int e = 0; e < m; ++e) r(e) = b.segment<2>(2 * e).squaredNorm() - 1.0;
  };
  prob.jacobian = [&](const Eigen::VectorXd& w, Eigen::MatrixXd& J) {
    const Eigen::VectorXd b = b0 + N * w;
    J.resize(m, sys.L);
    for (int e = 0; e < m; ++e) J.row(e) = 2.0 * b.segment<2>(2 * e).transpose() * N.middleRows(2 * e, 2);
  };
  const auto zeros = multi_start(
      net, prob, cfg,
      [&](const Eigen::VectorXd& w, Eigen::VectorXd& b, Eigen::VectorXd& d) {
        b = b0 + N * w;
        d = sol.d;
      },
      sol);
  settle(sol, zeros, false);
  return sol;
}

EdgeSolution solve_disconnected(const SensorNetwork& net, const SolverConfig& cfg) {
  EdgeSolution sol;
  sol.method = Method::General;
  const Parameterized p = parameterize(net, sol);
  const int m = net.m();
  const int nw = sol.dim_A, ny = sol.dim_D;
  sol.variables = nw + ny;
  const Parameterization& B = p.bearings;
  const Parameterization& D = p.distances;
  const Eigen::Index cyc = 2 * net.C.rows();
  const double eps = cfg.positivity_eps;

  auto split = [&](const Eigen::VectorXd& v, Eigen::VectorXd& b, Eigen::VectorXd& d) {
    b = B.eval(v.head(nw));
    d = D.eval(v.tail(ny));
  };
  LsqProblem prob;
  prob.inputs = nw + ny;
  prob.values = static_cast<int>(cyc) + 2 * m;
  prob.residual = [&](const Eigen::VectorXd& v, Eigen::VectorXd& r) {
    Eigen::VectorXd b, d;
    split(v, b, d);
    r.resize(prob.values);
    r.head(cyc) = weighted_cycles(net, d) * b;
    for (int e = 0; e < m; ++e) {
      r(cyc + e) = b.segment<2>(2 * e).squaredNorm() - 1.0;
      r(cyc + m + e) = std::max(0.0, eps - d(e));
    }
  };
  prob.jacobian = [&](const Eigen::VectorXd& v, Eigen::MatrixXd& J) {
    Eigen::VectorXd b, d;
    split(v, b, d);
    J = Eigen::MatrixXd::Zero(prob.values, prob.inputs);
    J.topLeftCorner(cyc, nw) = weighted_cycles(net, d) * B.basis;
    J.topRightCorner(cyc, ny) = cycle_bearing_matrix(net.C, b) * D.basis;
    for (int e = 0; e < m; ++e) {
      J.block(cyc + e, 0, 1, nw) = 2.0 * b.segment<2>(2 * e).transpose() * B.basis.middleRows(2 * e, 2);
      if (d(e) < eps) J.block(cyc + m + e, nw, 1, ny) = -D.basis.row(e);
    }
  };
  if (prob.inputs == 0) {
    Eigen::VectorXd r;
    prob.residual(Eigen::VectorXd(), r);
    sol.converged = 1;
    sol.best_cost = r.squaredNorm();
    split(Eigen::VectorXd(), sol.b, sol.d);
    if (!(sol.best_cost < cfg.accept)) throw std::runtime_error("infeasible: fully determined data violate closure");
    sol.clusters = 1;
    sol.verdict = Verdict::Localizable;
    check_positive(sol);
    return sol;
  }
  const auto zeros = multi_start(net, prob, cfg, split, sol);
  settle(sol, zeros, false);
  return sol;
}

EdgeSolution solve(const SensorNetwork& net, Method method, const SolverConfig& cfg) {
  switch (method) {
    case Method::SA: return solve_sa_connected(net, cfg);
    case Method::RoD: return solve_rod_connected(net, cfg);
    case Method::General: return solve_disconnected(net, cfg);
    case Method::Auto: break;
  }
  if (propagate_bearings(net).dim() == 0) return solve_sa_connected(net, cfg);
  if (propagate_distances(net).dim() == 0) return solve_rod_connected(net, cfg);
  return solve_disconnected(net, cfg);
}

Recovery recover_positions(const SensorNetwork& net, const Eigen::VectorXd& b, const Eigen::VectorXd& d,
                           const std::optional<SpanningTree>& tree) {
  const int l = net.base();
  const Eigen::MatrixXd P = path_matrix(net.fw.g, l, tree ? *tree : net.tree);
  Eigen::MatrixXd disp(2, net.m());
  for (int e = 0; e < net.m(); ++e) disp.col(e) = d(e) * b.segment<2>(2 * e);
  Recovery rec;
  rec.x = (disp * P.transpose()).colwise() + net.fw.p.col(l);
  rec.anchor_residual.resize(static_cast<Eigen::Index>(net.anchors.size()));
  for (std::size_t a = 0; a < net.anchors.size(); ++a) {
    const int v = net.anchors[a];
    rec.anchor_residual(static_cast<Eigen::Index>(a)) = (rec.x.col(v) - net.fw.p.col(v)).norm();
  }
  if (rec.anchor_residual.size() > 0 && rec.anchor_residual.maxCoeff() > 1e-6) rec.warnings.push_back("gauge drift");
  return rec;
}

double mse(const Config2d& estimate, const Config2d& truth) {
  return (estimate - truth).colwise().squaredNorm().sum() / static_cast<double>(truth.cols());
}

ConstraintResidual constraint_residual(const SensorNetwork& net, const Config2d& x) {
  ConstraintResidual out;
  try {
    require_distinct(x);
  } catch (const std::invalid_argument&) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf, inf};
  }
  const auto& tA = net.meas.sa_triples;
  const auto& tD = net.meas.rod_triples;
  for (std::size_t r = 0; r < tA.size(); ++r)
    out.sa = std::max(out.sa, std::abs(angle_diff(signed_angle(x, tA[r].apex, tA[r].j, tA[r].k),
                                                  net.meas.sa(static_cast<Eigen::Index>(r)))));
  for (std::size_t r = 0; r < tD.size(); ++r) {
    const double want = net.meas.rod(static_cast<Eigen::Index>(r));
    out.rod = std::max(out.rod, std::abs(ratio_of_distance(x, tD[r].apex, tD[r].j, tD[r].k) - want) / want);
  }
  for (int a : net.anchors) out.anchor = std::max(out.anchor, (x.col(a) - net.fw.p.col(a)).norm());
  return out;
}

LocalizationResult localize(const SensorNetwork& net, Method method, const SolverConfig& cfg) {
  LocalizationResult res;
  res.sol = solve(net, method, cfg);
  res.rec = recover_positions(net, res.sol.b, res.sol.d);
  res.mse = mse(res.rec.x, net.fw.p);
  res.residual = constraint_residual(net, res.rec.x);
  return res;
}

EdgeSolution localizability_check(const SensorNetwork& net, const SolverConfig& cfg) {
  return solve(net, Method::Auto, cfg);
}

}  // namespace sarod
