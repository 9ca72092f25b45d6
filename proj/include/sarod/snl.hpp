#pragma once

#include "sarod/geometry.hpp"
#include "sarod/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sarod {

// SNL instance on the augmented graph (anchor clique added).  Solvers read
// only the measurements and the anchor positions; truth is kept for scoring.
struct SensorNetwork {
  Framework fw;                   // augmented graph; positions are the truth
  std::vector<int> anchors;       // sorted
  std::vector<char> is_anchor;    // per vertex
  std::vector<int> anchor_edges;  // edges joining two anchors
  Eigen::VectorXd anchor_b;       // 2 per anchor edge, tail->head
  Eigen::VectorXd anchor_d;       // 1 per anchor edge
  MeasurementSet meas;            // over the full triples of the augmented graph
  SpanningTree tree;              // BFS from vertex 0, shared by C and P
  Eigen::MatrixXd C;              // cycle basis of the augmented graph

  int n() const { return fw.g.n(); }
  int m() const { return fw.g.m(); }
  int base() const { return anchors.front(); }
};

// Adds the anchor clique and synthesizes exact measurements from fw.p.
SensorNetwork build_network(const Framework& fw, std::vector<int> anchors);

// Replaces the measurements; triples must match the network's own enumeration.
void set_measurements(SensorNetwork& net, const MeasurementSet& meas);

// Stacked ground-truth edge bearings (2m) and distances (m).
Eigen::VectorXd true_bearings(const SensorNetwork& net);
Eigen::VectorXd true_distances(const SensorNetwork& net);

// 2(m-n+1) x m; column e is C(:,e) (x) b_e.
Eigen::MatrixXd cycle_bearing_matrix(const Eigen::MatrixXd& C, const Eigen::VectorXd& b);

// Affine parameterization v = base + basis * params.
struct Parameterization {
  Eigen::VectorXd base;
  Eigen::MatrixXd basis;
  int components = 0;   // c_A or c_D
  int free_components = 0;

  int dim() const { return static_cast<int>(basis.cols()); }
  Eigen::VectorXd eval(const Eigen::VectorXd& params) const { return base + basis * params; }
};

// Bearings propagated by rotation along the SA index graph; throws
// "infeasible SA data" on inconsistent measurements.
Parameterization propagate_bearings(const SensorNetwork& net);

// Distances propagated by ratios along the RoD index graph; throws
// "infeasible RoD data" on inconsistent measurements.
Parameterization propagate_distances(const SensorNetwork& net);

struct LinearSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd rhs;
  int rank = 0;
};

// [C_b; D0; anchor distance rows] d = [0; 0; d*].
LinearSystem assemble_C_D(const SensorNetwork& net, const Eigen::VectorXd& b, double rtol = kDefaultRtol);

struct BearingSystem {
  Eigen::MatrixXd C_B1;  // 2(m-n+1) x 2m, cycle closure weighted by distances
  Eigen::MatrixXd C_B2;  // SA rotation rows then anchor bearing rows
  Eigen::MatrixXd A;     // [C_B1; C_B2]
  Eigen::VectorXd rhs;   // [0; 0; b*]
  Eigen::MatrixXd N;     // orthonormal null basis
  int rank = 0;
  int L = 0;
};

BearingSystem assemble_C_B(const SensorNetwork& net, const Eigen::VectorXd& d, double rtol = kDefaultRtol);

enum class Method { Auto, SA, RoD, General };
enum class Verdict { Localizable, Unlocalizable, HeuristicUnique, HeuristicAmbiguous };

std::string to_string(Method m);
Method parse_method(const std::string& s);
std::string to_string(Verdict v);
// True for verdicts that certify (or heuristically indicate) a unique solution.
bool is_localized(Verdict v);

struct SolverConfig {
  int starts = 20;
  std::uint64_t seed = 0;
  double rtol = kDefaultRtol;
  double accept = 1e-16;        // on the sum of squared residuals
  double cluster_tol = 1e-6;    // RMS position difference between zeros
  double half_width = 2.0;      // Latin-hypercube box
  double positivity_eps = 1e-6;
  LsqOptions lsq;
};

struct EdgeSolution {
  Method method = Method::Auto;
  Verdict verdict = Verdict::Unlocalizable;
  std::string status = "ok";
  Eigen::VectorXd b;  // 2m
  Eigen::VectorXd d;  // m
  int c_A = 0;
  int c_D = 0;
  int dim_A = 0;
  int dim_D = 0;
  int rank_CD = -1;
  int rows_CD = 0;
  int rank_CB = -1;
  int rows_CB = 0;
  int L = -1;
  int variables = 0;
  int converged = 0;  // starts reaching the acceptance threshold
  int clusters = 0;
  double best_cost = 0.0;
  std::vector<std::string> warnings;
};

// Bearings fully determined; distances from C_D d = y.
EdgeSolution solve_sa_connected(const SensorNetwork& net, const SolverConfig& cfg = {});
// Distances fully determined; bearings from C_B, with an H(w) solve when L > 0.
EdgeSolution solve_rod_connected(const SensorNetwork& net, const SolverConfig& cfg = {});
// General case: G(w,y) over both parameterizations.
EdgeSolution solve_disconnected(const SensorNetwork& net, const SolverConfig& cfg = {});
// Dispatch by method; Auto picks SA, then RoD, then General.
EdgeSolution solve(const SensorNetwork& net, Method method, const SolverConfig& cfg = {});

struct Recovery {
  Config2d x;
  Eigen::VectorXd anchor_residual;  // per anchor
  std::vector<std::string> warnings;
};

// x = 1 (x) x_l + (P_l (.) B) d with l the lowest-index anchor.
Recovery recover_positions(const SensorNetwork& net, const Eigen::VectorXd& b, const Eigen::VectorXd& d,
                           const std::optional<SpanningTree>& tree = std::nullopt);

double mse(const Config2d& estimate, const Config2d& truth);

// Max residuals of the position-level constraints (SA wrapped, RoD relative, anchors).
struct ConstraintResidual {
  double sa = 0.0;
  double rod = 0.0;
  double anchor = 0.0;
};
ConstraintResidual constraint_residual(const SensorNetwork& net, const Config2d& x);

struct LocalizationResult {
  EdgeSolution sol;
  Recovery rec;
  double mse = 0.0;
  ConstraintResidual residual;
};

LocalizationResult localize(const SensorNetwork& net, Method method, const SolverConfig& cfg = {});

// Verdict with evidence, via the same dispatch as Auto.
EdgeSolution localizability_check(const SensorNetwork& net, const SolverConfig& cfg = {});

}  // namespace sarod
