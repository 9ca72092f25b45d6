#include "fixtures.hpp"

#include <doctest.h>

using namespace sarod;
using namespace fixtures;

TEST_SUITE("geometry") {
  TEST_CASE("signed angle is counter-clockwise in [0, 2pi)") {
    Config2d p(2, 3);
    p << 0, 1, 0, 0, 0, 1;
    CHECK(signed_angle(p, 0, 1, 2) == doctest::Approx(M_PI / 2));
    CHECK(signed_angle(p, 0, 2, 1) == doctest::Approx(3 * M_PI / 2));
    CHECK(wrap_angle(-1e-18) >= 0.0);
    CHECK(wrap_angle(kTwoPi) < kTwoPi);
  }

  TEST_CASE("ratio of distance is far leg over near leg") {
    Config2d p(2, 3);
    p << 0, 2, 0, 0, 0, 3;
    CHECK(ratio_of_distance(p, 0, 1, 2) == doctest::Approx(1.5));
  }

  TEST_CASE("collocated vertices are rejected") {
    Config2d p(2, 2);
    p << 0, 0, 1, 1;
    CHECK_THROWS(require_distinct(p));
    CHECK_THROWS(bearing(p, 0, 1));
  }

  TEST_CASE("similarities preserve the rigidity function") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
      const Framework fw = random_framework(6, rng);
      const auto tA = enumerate_triples(fw.g, Attr::A), tD = enumerate_triples(fw.g, Attr::D);
      SimilarityTransform s;
      s.c = 0.3 + t;
      s.theta = 0.7 * t;
      s.xi = Vector2d(t, -2.0 * t);
      const Eigen::VectorXd f = rigidity_function(fw.p, tA, tD), g = rigidity_function(s.apply(fw.p), tA, tD);
      for (Eigen::Index r = 0; r < f.size(); ++r)
        CHECK(std::abs(r < static_cast<Eigen::Index>(tA.size()) ? angle_diff(f(r), g(r)) : f(r) - g(r)) < 1e-10);
    }
  }

  TEST_CASE("similarity fit recovers the transform") {
    Rng rng(5);
    const Config2d p = random_config(7, rng);
    SimilarityTransform s;
    s.c = 2.5;
    s.theta = 1.1;
    s.xi = Vector2d(-3, 4);
    const SimilarityFit fit = fit_similarity(p, s.apply(p));
    CHECK(fit.residual < 1e-12);
    CHECK(fit.transform.c == doctest::Approx(2.5));
    CHECK(wrap_angle(fit.transform.theta) == doctest::Approx(1.1));
    CHECK(same_shape(p, s.apply(p)));
    Config2d mirrored = p;
    mirrored.row(0) *= -1.0;
    CHECK_FALSE(same_shape(p, mirrored));
  }

  TEST_CASE("synthesized measurements match the rigidity function") {
    const Framework fw = reflective_pentagon();
    const auto tA = enumerate_triples(fw.g, Attr::A), tD = enumerate_triples(fw.g, Attr::D);
    const MeasurementSet m = synthesize_measurements(fw.p, tA, tD);
    const Eigen::VectorXd f = rigidity_function(fw.p, tA, tD);
    CHECK((f.head(m.sa.size()) - m.sa).norm() == 0.0);
    CHECK((f.tail(m.rod.size()) - m.rod).norm() == 0.0);
    CHECK(m.sa.minCoeff() >= 0.0);
    CHECK(m.sa.maxCoeff() < kTwoPi);
  }

  TEST_CASE("collinearity residual") {
    CHECK(collinearity(Vector2d(0, 0), Vector2d(1, 1), Vector2d(3, 3)) < 1e-15);
    CHECK(collinearity(Vector2d(0, 0), Vector2d(1, 0), Vector2d(0, 1)) == doctest::Approx(1.0));
  }
}
