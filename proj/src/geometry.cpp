#include "sarod/geometry.hpp"

namespace sarod {

MeasurementSet synthesize_measurements(const Config2d& p, const std::vector<Triple>& tA,
                                       const std::vector<Triple>& tD) {
  MeasurementSet m;
  m.sa_triples = tA;
  m.rod_triples = tD;
  m.sa.resize(static_cast<Eigen::Index>(tA.size()));
  m.rod.resize(static_cast<Eigen::Index>(tD.size()));
  for (std::size_t r = 0; r < tA.size(); ++r) m.sa(r) = signed_angle(p, tA[r].apex, tA[r].j, tA[r].k);
  for (std::size_t r = 0; r < tD.size(); ++r) m.rod(r) = ratio_of_distance(p, tD[r].apex, tD[r].j, tD[r].k);
  return m;
}

SimilarityFit fit_similarity(const Config2d& p, const Config2d& q) {
  if (p.cols() != q.cols()) throw std::invalid_argument("configurations differ in size");
  if (p.cols() < 2) throw std::invalid_argument("similarity fit needs n >= 2");
  const Eigen::Matrix3d T = Eigen::umeyama(p, q, true);
  SimilarityFit fit;
  const Eigen::Matrix2d L = T.topLeftCorner<2, 2>();
  fit.transform.c = L.col(0).norm();
  fit.transform.theta = wrap_angle(std::atan2(L(1, 0), L(0, 0)));
  fit.transform.xi = T.topRightCorner<2, 1>();
  const Config2d diff = fit.transform.apply(p) - q;
  fit.residual = std::sqrt(diff.squaredNorm() / static_cast<double>(p.cols()));
  return fit;
}

void require_distinct(const Config2d& p) {
  for (Eigen::Index i = 0; i < p.cols(); ++i)
    for (Eigen::Index j = i + 1; j < p.cols(); ++j)
      if ((p.col(i) - p.col(j)).squaredNorm() == 0.0) throw std::invalid_argument("collocated nodes (Assumption 1)");
}

double collinearity(const Vector2d& a, const Vector2d& b, const Vector2d& c) {
  const Vector2d u = b - a, v = c - a;
  const double nu = u.norm(), nv = v.norm();
  if (nu == 0.0 || nv == 0.0) return 0.0;
  return std::abs(u.x() * v.y() - u.y() * v.x()) / (nu * nv);
}

}  // namespace sarod
