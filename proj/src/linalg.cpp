#include "sarod/linalg.hpp"

#include <unsupported/Eigen/LevenbergMarquardt>

#include <algorithm>
#include <numeric>

namespace sarod {

namespace {

Eigen::JacobiSVD<Eigen::MatrixXd> full_svd(const Eigen::MatrixXd& M) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

int rank_from(const Eigen::VectorXd& s, double rtol) {
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  const double cut = rtol * s(0);
  return static_cast<int>((s.array() > cut).count());
}

}  // namespace

RankInfo numerical_rank(const Eigen::MatrixXd& M, double rtol) {
  RankInfo info;
  info.rtol = rtol;
  if (M.size() == 0) return info;
  info.sigma = Eigen::BDCSVD<Eigen::MatrixXd>(M).singularValues();
  info.rank = rank_from(info.sigma, rtol);
  return info;
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& M, double rtol) {
  if (M.rows() == 0) return Eigen::MatrixXd::Identity(M.cols(), M.cols());
  const auto svd = full_svd(M);
  const int r = rank_from(svd.singularValues(), rtol);
  return svd.matrixV().rightCols(M.cols() - r);
}

Eigen::MatrixXd pseudo_inverse(const Eigen::MatrixXd& M, double rtol) {
  if (M.size() == 0) return Eigen::MatrixXd::Zero(M.cols(), M.rows());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  const int r = rank_from(s, rtol);
  return svd.matrixV().leftCols(r) * s.head(r).cwiseInverse().asDiagonal() * svd.matrixU().leftCols(r).transpose();
}

Eigen::VectorXd least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double rtol) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(rtol);
  return qr.solve(b);
}

namespace {

struct Functor : Eigen::DenseFunctor<double> {
  const LsqProblem* prob;
  Functor(const LsqProblem& p, int values) : Eigen::DenseFunctor<double>(p.inputs, values), prob(&p) {}

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    Eigen::VectorXd r;
    prob->residual(x, r);
    f.setZero(values());
    f.head(r.size()) = r;
    return 0;
  }
  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& J) const {
    Eigen::MatrixXd Jr;
    prob->jacobian(x, Jr);
    J.setZero(values(), inputs());
    J.topRows(Jr.rows()) = Jr;
    return 0;
  }
};

}  // namespace

LsqResult minimize(const LsqProblem& prob, const Eigen::VectorXd& x0, const LsqOptions& opt) {
  LsqResult res;
  res.x = x0;
  if (prob.inputs == 0) {
    Eigen::VectorXd r;
    prob.residual(x0, r);
    res.cost = r.squaredNorm();
    return res;
  }
  Functor f(prob, std::max(prob.values, prob.inputs));
  Eigen::LevenbergMarquardt<Functor> lm(f);
  lm.setMaxfev(opt.max_evaluations);
  lm.setXtol(opt.xtol);
  lm.setFtol(opt.ftol);
  lm.setGtol(opt.gtol);
  lm.minimize(res.x);
  Eigen::VectorXd r;
  prob.residual(res.x, r);
  res.cost = r.squaredNorm();
  res.evaluations = static_cast<int>(lm.nfev());
  return res;
}

std::mt19937_64 start_rng(std::uint64_t seed, std::uint64_t start) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(start), static_cast<std::uint32_t>(start >> 32)};
  return std::mt19937_64(seq);
}

Eigen::MatrixXd latin_hypercube(int count, int dim, double half_width, std::uint64_t seed) {
  Eigen::MatrixXd X(count, dim);
  auto rng = start_rng(seed, 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> perm(count);
  for (int d = 0; d < dim; ++d) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int s = 0; s < count; ++s) {
      const double u = (perm[s] + unit(rng)) / count;
      X(s, d) = half_width * (2.0 * u - 1.0);
    }
  }
  return X;
}

}  // namespace sarod
