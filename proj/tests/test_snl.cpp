#include "fixtures.hpp"

#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

using namespace sarod;
using namespace fixtures;

namespace {

SensorNetwork network(Recipe r, int n, std::uint64_t seed, std::vector<int> anchors = {0, 1}) {
  return build_network(generate_ordering(r, n, seed).fw, anchors);
}

}  // namespace

TEST_SUITE("snl") {
  TEST_CASE("anchor augmentation") {
    const Framework fw = generate_ordering(Recipe::Quad2v, 20, 0).fw;
    CHECK_THROWS_WITH(build_network(fw, {0}), "need n_a >= 2");
    CHECK(build_network(fw, {0, 1}).m() == fw.g.m());
    const SensorNetwork net = build_network(fw, {0, 1, 7});
    CHECK(net.anchor_edges.size() == 3);
    CHECK(net.meas.sa_triples.size() >= enumerate_triples(fw.g, Attr::A).size());
  }

  TEST_CASE("compatibility at the ground truth") {
    for (Recipe r : all_recipes()) {
      const SensorNetwork net = network(r, admissible_n(r, 24), 3);
      const Eigen::VectorXd b = true_bearings(net), d = true_distances(net);
      const Eigen::MatrixXd Cb = cycle_bearing_matrix(net.C, b);
      CHECK(Cb.rows() == 2 * (net.m() - net.n() + 1));
      CHECK((Cb * d).norm() < 1e-12);
      CHECK((Cb * (3.0 * d)).norm() < 1e-12);

      const LinearSystem cd = assemble_C_D(net, b);
      CHECK(cd.A.rows() == static_cast<Eigen::Index>(net.meas.rod_triples.size() + 1) + Cb.rows());
      CHECK((cd.A * d - cd.rhs).norm() < 1e-10);

      const BearingSystem cb = assemble_C_B(net, d);
      CHECK(cb.A.rows() == Cb.rows() + 2 * static_cast<Eigen::Index>(net.meas.sa_triples.size() + 1));
      CHECK((cb.A * b - cb.rhs).norm() < 1e-10);
      CHECK(cb.L == 2 * net.m() - cb.rank);

      // H at the projection of the truth onto the null space
      const Eigen::VectorXd b0 = pseudo_inverse(cb.A) * cb.rhs;
      const Eigen::VectorXd bw = b0 + cb.N * (cb.N.transpose() * (b - b0));
      double H = 0.0;
      for (int e = 0; e < net.m(); ++e) H += std::pow(bw.segment<2>(2 * e).squaredNorm() - 1.0, 2);
      CHECK(H < 1e-20);

      // G at the parameters reproducing the truth
      const Parameterization pb = propagate_bearings(net), pd = propagate_distances(net);
      for (const auto& [par, truth] : {std::pair{&pb, b}, std::pair{&pd, d}}) {
        if (par->dim() == 0) {
          CHECK((par->base - truth).norm() < 1e-10);
          continue;
        }
        const Eigen::VectorXd w = par->basis.colPivHouseholderQr().solve(truth - par->base);
        CHECK((par->eval(w) - truth).norm() < 1e-10);
      }
      const Eigen::MatrixXd CB1 = Eigen::kroneckerProduct(net.C * d.asDiagonal(), Eigen::Matrix2d::Identity());
      CHECK((CB1 * b).norm() < 1e-12);
    }
  }

  TEST_CASE("parameterization dimensions follow the component counts") {
    const SensorNetwork net = network(Recipe::Type2D1, 70, 1);
    const Parameterization pb = propagate_bearings(net), pd = propagate_distances(net);
    CHECK(pb.components == 23);
    CHECK(pd.components == 47);
    CHECK(pb.dim() == 44);
    CHECK(pd.dim() == 46);
  }

  TEST_CASE("inconsistent measurements surface in propagation") {
    SensorNetwork net = network(Recipe::Quad2v, 20, 2);
    MeasurementSet m = net.meas;
    for (Eigen::Index r = 0; r < m.sa.size(); ++r) m.sa(r) = wrap_angle(m.sa(r) + 0.01 * static_cast<double>(r % 3));
    set_measurements(net, m);
    CHECK_THROWS_WITH(propagate_bearings(net), "infeasible SA data");

    SensorNetwork bil = network(Recipe::BilatD1A1, 20, 2);
    MeasurementSet r = bil.meas;
    for (Eigen::Index k = 0; k < r.rod.size(); ++k) r.rod(k) *= 1.0 + 0.01 * static_cast<double>(k % 3);
    set_measurements(bil, r);
    CHECK_THROWS_WITH(propagate_distances(bil), "infeasible RoD data");
  }

  TEST_CASE("triangle with two SA anchors is recovered exactly") {
    const Framework fw = make("AAD", {{1, 2}, {2, 3}, {1, 3}}, {Vector2d(0, 0), Vector2d(1, 0), Vector2d(0.3, 0.8)});
    const SensorNetwork net = build_network(fw, {0, 1});
    const LocalizationResult res = localize(net, Method::Auto);
    CHECK(res.sol.method == Method::SA);
    CHECK(res.sol.verdict == Verdict::Localizable);
    CHECK(res.mse < 1e-24);
  }

  TEST_CASE("SA-connected networks localize and the rank-deficient sibling does not") {
    const SensorNetwork net = network(Recipe::Quad2v, 30, 4);
    const LocalizationResult res = localize(net, Method::SA);
    CHECK(res.sol.rank_CD == net.m());
    CHECK(res.mse < 1e-16);
    CHECK(res.residual.sa < 1e-8);
    CHECK(res.residual.rod < 1e-8);
    CHECK(res.residual.anchor < 1e-12);

    const EdgeSolution sib = solve_sa_connected(network(Recipe::Quad2vFlex, 30, 4));
    CHECK(sib.rank_CD < sib.rows_CD);
    CHECK(sib.verdict == Verdict::Unlocalizable);
  }

  TEST_CASE("bilateration networks have full-rank C_B") {
    for (int n = 5; n <= 70; n += 5) {
      const SensorNetwork net = network(Recipe::BilatD1A1, n, static_cast<std::uint64_t>(n));
      const BearingSystem cb = assemble_C_B(net, propagate_distances(net).base);
      CHECK(cb.rank == 4 * n - 6);
      CHECK(cb.L == 0);
    }
  }

  TEST_CASE("RoD-connected solve with a nontrivial null space") {
    const SensorNetwork net = network(Recipe::MixD2A1, 20, 5);
    const LocalizationResult res = localize(net, Method::RoD);
    CHECK(res.sol.L == 4);
    CHECK(res.sol.verdict == Verdict::HeuristicUnique);
    CHECK(res.mse < 1e-12);
    CHECK(res.residual.sa < 1e-8);
  }

  TEST_CASE("general solve matches the SA solve") {
    const SensorNetwork net = network(Recipe::Quad2v, 12, 6);
    const LocalizationResult sa = localize(net, Method::SA);
    const LocalizationResult gen = localize(net, Method::General);
    CHECK(gen.sol.dim_A == 0);
    CHECK(gen.sol.variables == gen.sol.c_D - 1);
    CHECK((sa.rec.x - gen.rec.x).cwiseAbs().maxCoeff() < 1e-6);
  }

  TEST_CASE("disconnected solve") {
    const SensorNetwork net = network(Recipe::Type2D1, 30, 7);
    const LocalizationResult res = localize(net, Method::Auto);
    CHECK(res.sol.method == Method::General);
    CHECK(res.sol.variables == 2 * res.sol.c_A + res.sol.c_D - 3);
    CHECK(is_localized(res.sol.verdict));
    CHECK(res.mse < 1e-12);
    CHECK(res.sol.d.minCoeff() > 0);
  }

  TEST_CASE("method preconditions") {
    const SensorNetwork net = network(Recipe::Quad2v, 20, 8);
    CHECK_THROWS_WITH(solve(net, Method::RoD), doctest::Contains("T_D connected"));
    CHECK_THROWS_WITH(solve(network(Recipe::BilatD1A1, 20, 8), Method::SA), doctest::Contains("T_A connected"));
  }

  TEST_CASE("a vertex sliding on a segment is unlocalizable") {
    const SensorNetwork net = build_network(sliding_vertex(), {0, 1});
    const EdgeSolution sol = localizability_check(net);
    CHECK(sol.method == Method::SA);
    CHECK(sol.rank_CD < net.m());
    CHECK(sol.verdict == Verdict::Unlocalizable);
  }

  TEST_CASE("anchor choice decides localizability of a one-A quadrilateral") {
    const Framework fw = generic_quad_one_a();
    const EdgeSolution adjacent = localizability_check(build_network(fw, {0, 1}));
    CHECK(adjacent.verdict == Verdict::HeuristicAmbiguous);
    const EdgeSolution opposite = localizability_check(build_network(fw, {0, 2}));
    CHECK(is_localized(opposite.verdict));
  }

  TEST_CASE("recovery is tree independent") {
    const SensorNetwork net = network(Recipe::Random, 25, 9);
    const Eigen::VectorXd b = true_bearings(net), d = true_distances(net);
    const Recovery bfs = recover_positions(net, b, d, bfs_tree(net.fw.g, 3));
    const Recovery dfs = recover_positions(net, b, d, dfs_tree(net.fw.g, 10));
    CHECK((bfs.x - net.fw.p).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((dfs.x - bfs.x).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(bfs.warnings.empty());
    CHECK(recover_positions(net, b, 2.0 * d).warnings == std::vector<std::string>{"gauge drift"});
  }
}
