#include "fixtures.hpp"

#include <doctest.h>

using namespace sarod;
using namespace fixtures;

TEST_SUITE("rigidity") {
  TEST_CASE("rigidity matrix matches central differences") {
    Rng rng(6);
    for (int t = 0; t < 30; ++t) {
      const Framework fw = random_framework(4 + t % 9, rng);
      const auto tA = enumerate_triples(fw.g, Attr::A), tD = enumerate_triples(fw.g, Attr::D);
      const Eigen::MatrixXd R = rigidity_matrix<double>(fw.p, tA, tD);
      CHECK((R - finite_difference_jacobian(fw.p, tA, tD)).norm() < 1e-6 * R.norm());
    }
  }

  TEST_CASE("edge factorization reproduces the vertex form") {
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
      const Framework fw = random_framework(5 + t % 6, rng);
      const RigidityMatrix rm = assemble_rigidity_matrix(fw);
      Eigen::MatrixXd F(rm.Rbar_A.rows() + rm.Rbar_D.rows(), rm.Hbar.rows());
      F << rm.Rbar_A, rm.Rbar_D;
      CHECK((F * rm.Hbar - rm.R).norm() < 1e-10 * rm.R.norm());
    }
  }

  TEST_CASE("trivial motions, rank bound and duality") {
    Rng rng(8);
    for (int t = 0; t < 30; ++t) {
      const Framework fw = random_framework(4 + t % 9, rng);
      const RankReport r = infinitesimal_rigidity_test(fw);
      CHECK(r.trivial_residual < 1e-10);
      CHECK(r.rank <= 2 * fw.g.m() - fw.g.n());
      CHECK(duality_check(fw).equal);
      CHECK(infinitesimal_rigidity_test(fw, kDefaultRtol, TripleMode::Reduced).rank == r.rank);
    }
  }

  TEST_CASE("null basis is orthogonal to the row space") {
    const Framework fw = collinear_quad();
    const RankReport r = infinitesimal_rigidity_test(fw);
    const Eigen::MatrixXd R = assemble_rigidity_matrix(fw).R;
    CHECK(r.null_basis.cols() == 8 - r.rank);
    CHECK((R * r.null_basis).norm() < 1e-10);
  }

  TEST_CASE("quadrilateral with collinear D-vertices is infinitesimally flexible") {
    CHECK_FALSE(infinitesimal_rigidity_test(collinear_quad()).rigid);
  }

  TEST_CASE("pure RoD 4-cycle is flexible") {
    Framework fw = generic_quad_one_a();
    fw.g.set_attr(0, Attr::D);
    const RankReport r = infinitesimal_rigidity_test(fw);
    CHECK(r.rank == 3);
    CHECK_FALSE(r.rigid);
  }

  TEST_CASE("quadrilateral verdicts per case") {
    Rng rng(9);
    Framework three = make("AAAD", {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {});
    three.p = random_config(4, rng);
    QuadReport q = quad_global_rigidity(three);
    CHECK(q.quad_case == 1);
    CHECK(q.verdict == QuadVerdict::Rigid);

    three.p.col(2) = 0.5 * (three.p.col(0) + three.p.col(1));
    CHECK(quad_global_rigidity(three).verdict == QuadVerdict::NotRigid);

    q = quad_global_rigidity(generic_quad_one_a());
    CHECK(q.quad_case == 2);
    CHECK(q.verdict == QuadVerdict::NotRigid);
    CHECK(quad_global_rigidity(collinear_quad()).verdict == QuadVerdict::Rigid);

    Framework rotated = make("DDDA", {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {});
    rotated.p = generic_quad_one_a().p;
    CHECK(quad_global_rigidity(rotated).labels == std::vector<int>{3, 0, 1, 2});
  }

  TEST_CASE("quadrilateral checker agrees with the shape oracle") {
    Rng rng(10);
    for (const std::string cls : {"AADD", "ADAD"}) {
      for (int t = 0; t < 10; ++t) {
        Framework fw = make(cls, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {});
        fw.p = random_config(4, rng);
        const QuadReport q = quad_global_rigidity(fw);
        if (q.verdict == QuadVerdict::Boundary || std::abs(q.margin) < 1e-6) continue;
        ShapeSearchOptions opt;
        opt.starts = 200;
        CHECK((equivalent_shape_search(fw, opt).size() == 1) == (q.verdict == QuadVerdict::Rigid));
      }
    }
  }

  TEST_CASE("quadrilateral checker preconditions") {
    CHECK_THROWS_WITH(quad_global_rigidity(reflective_pentagon()), "expects 4-cycle");
  }

  TEST_CASE("shape oracle finds the reflected pentagon") {
    const Framework fw = reflective_pentagon();
    const auto shapes = equivalent_shape_search(fw);
    CHECK(shapes.size() >= 2);
    for (const auto& s : shapes) {
      const auto tA = enumerate_triples(fw.g, Attr::A), tD = enumerate_triples(fw.g, Attr::D);
      const Eigen::VectorXd f = rigidity_function(fw.p, tA, tD), g = rigidity_function(s, tA, tD);
      CHECK((f - g).cwiseAbs().maxCoeff() < 1e-8);
    }
  }

  TEST_CASE("shape oracle is desk-scale only") {
    Rng rng(11);
    CHECK_THROWS_WITH(equivalent_shape_search(random_framework(9, rng)), "oracle is desk-scale only");
  }
}
