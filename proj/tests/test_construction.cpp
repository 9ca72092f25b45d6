#include "fixtures.hpp"

#include <doctest.h>

using namespace sarod;
using namespace fixtures;

namespace {

AdditionStep one(AdditionKind kind, int i, int j, int k = -1) {
  AdditionStep s;
  s.kind = kind;
  s.i = i - 1;
  s.j = j - 1;
  s.k = k - 1;
  return s;
}

Framework without_edge(const Framework& fw, int cut) {
  Framework out{Graph(fw.g.n()), fw.p};
  for (int v = 0; v < fw.g.n(); ++v) out.g.set_attr(v, fw.g.attr(v));
  for (int e = 0; e < fw.g.m(); ++e)
    if (e != cut) out.g.add_edge(fw.g.edge(e).tail, fw.g.edge(e).head);
  return out;
}

}  // namespace

TEST_SUITE("construction") {
  TEST_CASE("vertex addition preconditions name the violated clause") {
    Rng rng(1);
    Framework fw = seed_framework(Attr::A, Attr::A, rng);
    AdditionStep a1 = one(AdditionKind::A1, 1, 2);
    CHECK_THROWS_WITH(apply_step(fw, a1, rng), "A1 requires i in V_D or j in V_D");
    AdditionStep d2 = one(AdditionKind::D2, 1, 2, 1);
    CHECK_THROWS_WITH(apply_step(fw, d2, rng), "D2 requires at least three D-vertices");
    AdditionStep two = two_vertex(1, 2, Attr::A, Attr::A);
    CHECK_THROWS_WITH(apply_step(fw, two, rng), "TwoVertex requires exactly three of i, j, n+1, n+2 in V_A");
  }

  TEST_CASE("legal additions keep the rank at 2n-4") {
    Rng rng(2);
    for (auto [kind, i, j] : {std::tuple{AdditionKind::A1, 1, 2}, {AdditionKind::D1, 1, 2}, {AdditionKind::A2, 1, 3}}) {
      Framework fw = seed_framework(Attr::A, Attr::D, rng);
      AdditionStep first = one(AdditionKind::A1, 1, 2);
      fw = apply_step(fw, first, rng);
      AdditionStep s = one(kind, i, j);
      fw = apply_step(fw, s, rng);
      CHECK(infinitesimal_rigidity_test(fw).rigid);
    }
    Framework fw = seed_framework(Attr::A, Attr::D, rng);
    for (int j : {2, 3}) {
      AdditionStep d1 = one(AdditionKind::D1, 1, j);
      fw = apply_step(fw, d1, rng);
    }
    AdditionStep d2 = one(AdditionKind::D2, 2, 3, 4);
    fw = apply_step(fw, d2, rng);
    CHECK(fw.g.degree(4) == 3);
    CHECK(infinitesimal_rigidity_test(fw).rigid);
  }

  TEST_CASE("two-vertex addition from K2 gives a rigid quadrilateral") {
    Rng rng(3);
    Framework fw = seed_framework(Attr::D, Attr::A, rng);
    AdditionStep s = two_vertex(1, 2, Attr::A, Attr::A);
    fw = apply_step(fw, s, rng);
    CHECK(fw.g.n() == 4);
    CHECK(fw.g.m() == 4);
    REQUIRE(s.at.size() == 2);
    Framework quad = make("DAAA", {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {});
    quad.p = fw.p;
    const QuadReport q = quad_global_rigidity(quad);
    CHECK(q.quad_case == 1);
    CHECK(q.verdict == QuadVerdict::Rigid);
  }

  TEST_CASE("fixed placements are validated") {
    Rng rng(4);
    Framework fw = seed_framework(Attr::D, Attr::A, rng);
    AdditionStep s = one(AdditionKind::A1, 1, 2);
    s.at = {0.5 * (fw.p.col(0) + fw.p.col(1))};
    CHECK_THROWS(apply_step(fw, s, rng));
    s.at = {Vector2d(5, 5)};
    CHECK(apply_step(fw, s, rng).p.col(2) == Vector2d(5, 5));
  }

  TEST_CASE("recipe edge counts") {
    CHECK(generate_ordering(Recipe::Quad2v, 70, 42).fw.g.m() == 103);
    CHECK(generate_ordering(Recipe::BilatD1A1, 70, 1).fw.g.m() == 137);
    CHECK(generate_ordering(Recipe::BilatD1A1, 5, 1).fw.g.m() == 7);
    CHECK(generate_ordering(Recipe::MixD2A1, 70, 1).fw.g.m() == 169);
    CHECK(generate_ordering(Recipe::Type2D1, 70, 1).fw.g.m() == 114);
    CHECK(generate_minimal_rigid(6, 0).fw.g.m() == 7);
    CHECK(generate_minimal_rigid(7, 0).fw.g.m() == 9);
    for (int k = 1; k < 6; ++k) {
      CHECK(generate_minimal_rigid(2 * k + 2, k).fw.g.m() == 3 * k + 1);
      CHECK(generate_minimal_rigid(2 * k + 3, k).fw.g.m() == 3 * k + 3);
    }
  }

  TEST_CASE("recipe connectivity signatures") {
    auto counts = [](Recipe r) {
      const Framework fw = generate_ordering(r, 30, 5).fw;
      return std::pair{triple_components(fw.g, enumerate_triples(fw.g, Attr::A)).count,
                       triple_components(fw.g, enumerate_triples(fw.g, Attr::D)).count};
    };
    CHECK(counts(Recipe::Quad2v).first == 1);
    CHECK(counts(Recipe::BilatD1A1).second == 1);
    CHECK(counts(Recipe::MixD2A1).second == 1);
    const auto t = counts(Recipe::Type2D1);
    CHECK(t.first > 1);
    CHECK(t.second > 1);
  }

  TEST_CASE("orderings are rigid and reproducible") {
    for (Recipe r : all_recipes()) {
      if (r == Recipe::Quad2vFlex) continue;
      for (std::uint64_t s = 0; s < 5; ++s) {
        const Construction c = generate_ordering(r, admissible_n(r, 12 + static_cast<int>(s)), s);
        CHECK(infinitesimal_rigidity_test(c.fw).rigid);
        const Construction again = generate_ordering(r, c.fw.g.n(), s);
        CHECK(again.fw.p == c.fw.p);
        CHECK(again.fw.g.m() == c.fw.g.m());
      }
    }
    CHECK_FALSE(infinitesimal_rigidity_test(generate_ordering(Recipe::Quad2vFlex, 20, 0).fw).rigid);
  }

  TEST_CASE("invalid recipe or size") {
    CHECK_THROWS(parse_recipe("hexagon"));
    CHECK_THROWS(generate_ordering(Recipe::Quad2v, 7, 0));
    CHECK_THROWS(generate_minimal_rigid(3, 0));
    for (Recipe r : all_recipes()) CHECK(parse_recipe(to_string(r)) == r);
  }

  TEST_CASE("minimal frameworks lose rigidity without any edge") {
    for (int n : {6, 7}) {
      const Framework fw = generate_minimal_rigid(n, 3).fw;
      REQUIRE(infinitesimal_rigidity_test(fw).rigid);
      for (int e = 0; e < fw.g.m(); ++e) CHECK(infinitesimal_rigidity_test(without_edge(fw, e)).rank < 2 * n - 4);
    }
  }

  TEST_CASE("merging by added edges") {
    const Framework left = merge_left(), right = merge_right();
    const Framework a = merge_add_edges(left, right, 5, 2, 0, 3);
    CHECK(a.g.n() == 10);
    CHECK(a.g.has_edge(5, 6));
    CHECK(a.g.has_edge(2, 9));
    CHECK(infinitesimal_rigidity_test(a).rigid);

    CHECK_THROWS_WITH(merge_add_edges(left, right, 1, 2, 0, 3), "merge requires exactly three of i, m, j, k in V_A");
    const Framework b = merge_add_edges(left, right, 1, 2, 0, 3, true);
    CHECK(b.g.m() == left.g.m() + right.g.m() + 3);
    CHECK(infinitesimal_rigidity_test(b).rigid);
  }

  TEST_CASE("merging by contraction") {
    const Framework left = merge_left(), right = merge_right();
    const Config2d aligned = align_pairs(right.p, 0, 3, left.p.col(1), left.p.col(2));
    CHECK((aligned.col(0) - left.p.col(1)).norm() < 1e-12);
    const Contraction c = merge_contract(left, {right.g, aligned}, {1, 0}, {2, 3});
    CHECK(c.fw.g.n() == 8);
    CHECK(c.second_map[0] == 1);
    CHECK(c.second_map[3] == 2);
    CHECK(infinitesimal_rigidity_test(c.fw).rigid);

    CHECK_THROWS_WITH(merge_contract(left, right, {1, 0}, {2, 3}), "contracted vertices must coincide");
    CHECK_THROWS_WITH(merge_contract(left, {right.g, aligned}, {0, 0}, {2, 3}),
                      "contracted vertices must share the same attribute");
  }
}
