#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>

namespace sarod {

inline constexpr double kDefaultRtol = 1e-8;

struct RankInfo {
  int rank = 0;
  Eigen::VectorXd sigma;
  double rtol = kDefaultRtol;
};

// Rank = number of singular values above rtol * sigma_max.
RankInfo numerical_rank(const Eigen::MatrixXd& M, double rtol = kDefaultRtol);

// Orthonormal basis of the right null space at the same tolerance.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rtol = kDefaultRtol);

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& M, double rtol = kDefaultRtol);

// Column-pivoted QR least squares.
Eigen::VectorXd least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double rtol = kDefaultRtol);

// Residual/Jacobian pair for nonlinear least squares.
struct LsqProblem {
  int inputs = 0;
  int values = 0;
  std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)> residual;
  std::function<void(const Eigen::VectorXd&, Eigen::MatrixXd&)> jacobian;
};

struct LsqOptions {
  int max_evaluations = 2000;
  double xtol = 1e-15;
  double ftol = 1e-15;
  double gtol = 0.0;
};

struct LsqResult {
  Eigen::VectorXd x;
  double cost = 0.0;  // sum of squared residuals
  int evaluations = 0;
};

// Levenberg-Marquardt (Eigen's MINPACK port); under-determined problems are
// padded with zero residuals.
LsqResult minimize(const LsqProblem& prob, const Eigen::VectorXd& x0, const LsqOptions& opt = {});

// Per-start generator derived from (seed, start index).
std::mt19937_64 start_rng(std::uint64_t seed, std::uint64_t start);

// count x dim Latin hypercube in [-half_width, half_width]^dim.
Eigen::MatrixXd latin_hypercube(int count, int dim, double half_width, std::uint64_t seed);

}  // namespace sarod
