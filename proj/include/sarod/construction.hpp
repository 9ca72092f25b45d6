#pragma once

#include "sarod/geometry.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace sarod {

using Rng = std::mt19937_64;

enum class AdditionKind { A1, D1, A2, D2, TwoVertex };

std::string to_string(AdditionKind k);

// One construction step.  Attachments are 0-based vertex ids.
//   A1/D1/A2: new vertex joined to i and j.
//   D2: new vertex joined to i, j and k.
//   TwoVertex: new vertices u=n, w=n+1 with edges (j,u), (u,w), (w,i).
struct AdditionStep {
  AdditionKind kind = AdditionKind::A1;
  int i = -1;
  int j = -1;
  int k = -1;
  Attr first = Attr::A;   // TwoVertex: attribute of u
  Attr second = Attr::A;  // TwoVertex: attribute of w
  bool third_any = false; // D2: third attachment may be an A-vertex
  std::vector<Vector2d> at;  // fixed placement; empty means sample
};

struct PlacementBox {
  Vector2d lo = Vector2d(0.0, 0.0);
  Vector2d hi = Vector2d(1.0, 1.0);
  double scale() const { return (hi - lo).maxCoeff(); }
};

inline constexpr double kPlacementTol = 1e-6;
inline constexpr int kPlacementTries = 100;

// Framework with edge (1,2); attributes a, b; positions sampled from the box.
Framework seed_framework(Attr a, Attr b, Rng& rng, const PlacementBox& box = {});

// Both throw std::invalid_argument naming the violated clause.  The placed
// coordinates are written back into step.at.
Framework apply_vertex_addition(const Framework& fw, AdditionStep& step, Rng& rng, const PlacementBox& box = {});
Framework apply_two_vertex_addition(const Framework& fw, AdditionStep& step, Rng& rng,
                                    const PlacementBox& box = {});
Framework apply_step(const Framework& fw, AdditionStep& step, Rng& rng, const PlacementBox& box = {});

enum class Recipe { Quad2v, Quad2vFlex, BilatD1A1, MixD2A1, Type2D1, Minimal, Random };

std::string to_string(Recipe r);
Recipe parse_recipe(const std::string& name);
const std::vector<Recipe>& all_recipes();

// Smallest admissible n >= hint for the recipe (parity and minimum size).
int admissible_n(Recipe r, int hint);

struct Construction {
  Framework fw;
  std::vector<AdditionStep> log;
  Recipe recipe = Recipe::Random;
  std::uint64_t seed = 0;
};

Construction generate_ordering(Recipe recipe, int n, std::uint64_t seed);
Construction generate_minimal_rigid(int n, std::uint64_t seed);

// Union of the two frameworks with edges (m,k) and (i,j) added; i,m index fw1
// and j,k index fw2.  With three_edges the all-A variant also adds (i,k).
Framework merge_add_edges(const Framework& fw1, const Framework& fw2, int i, int m, int j, int k,
                          bool three_edges = false, double rtol = 1e-8);

struct Contraction {
  Framework fw;
  std::vector<int> second_map;  // fw2 vertex -> merged vertex
};

// Identifies fw2 vertex j with fw1 vertex i and fw2 vertex k with fw1 vertex m.
Contraction merge_contract(const Framework& fw1, const Framework& fw2, std::pair<int, int> ij,
                           std::pair<int, int> mk, double rtol = 1e-8);

// Similarity moving q_j onto p_i and q_k onto p_m.
Config2d align_pairs(const Config2d& q, int j, int k, const Vector2d& pi, const Vector2d& pm);

}  // namespace sarod
