#include "sarod/construction.hpp"

#include "sarod/rigidity.hpp"

#include <algorithm>
#include <complex>

namespace sarod {

std::string to_string(AdditionKind k) {
  switch (k) {
    case AdditionKind::A1: return "A1";
    case AdditionKind::D1: return "D1";
    case AdditionKind::A2: return "A2";
    case AdditionKind::D2: return "D2";
    case AdditionKind::TwoVertex: return "TwoVertex";
  }
  return "?";
}

namespace {

void fail(const std::string& what) { throw std::invalid_argument(what); }

Vector2d sample(Rng& rng, const PlacementBox& box) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double x = u(rng), y = u(rng);
  return box.lo + Vector2d(x * (box.hi.x() - box.lo.x()), y * (box.hi.y() - box.lo.y()));
}

double cross(const Vector2d& a, const Vector2d& b, const Vector2d& c) {
  const Vector2d u = b - a, v = c - a;
  return u.x() * v.y() - u.y() * v.x();
}

bool far_from_all(const Config2d& p, const Vector2d& x, double tol) {
  for (Eigen::Index v = 0; v < p.cols(); ++v)
    if ((p.col(v) - x).norm() <= tol) return false;
  return true;
}

bool non_collinear(const Vector2d& a, const Vector2d& b, const Vector2d& c, const PlacementBox& box) {
  const double s = box.scale();
  return std::abs(cross(a, b, c)) > kPlacementTol * s * s;
}

void check_vertex(const Framework& fw, int v, const char* role) {
  if (v < 0 || v >= fw.g.n()) fail(std::string("attachment ") + role + " out of range");
}

Config2d with_columns(const Config2d& p, const std::vector<Vector2d>& extra) {
  Config2d q(2, p.cols() + static_cast<Eigen::Index>(extra.size()));
  q.leftCols(p.cols()) = p;
  for (std::size_t c = 0; c < extra.size(); ++c) q.col(p.cols() + static_cast<Eigen::Index>(c)) = extra[c];
  return q;
}

template <class Valid>
std::vector<Vector2d> place(AdditionStep& step, std::size_t count, Rng& rng, const PlacementBox& box,
                            Valid valid) {
  if (!step.at.empty()) {
    if (step.at.size() != count) fail("fixed placement has wrong number of points");
    if (!valid(step.at)) fail("fixed placement violates the collinearity/collocation tolerance");
    return step.at;
  }
  for (int attempt = 0; attempt < kPlacementTries; ++attempt) {
    std::vector<Vector2d> pts;
    for (std::size_t c = 0; c < count; ++c) pts.push_back(sample(rng, box));
    if (valid(pts)) {
      step.at = pts;
      return pts;
    }
  }
  fail("placement failed after " + std::to_string(kPlacementTries) + " resamples");
  return {};
}

}  // namespace

Framework seed_framework(Attr a, Attr b, Rng& rng, const PlacementBox& box) {
  Framework fw{Graph(2), Config2d(2, 2)};
  fw.g.set_attr(0, a);
  fw.g.set_attr(1, b);
  fw.g.add_edge(0, 1);
  fw.p.col(0) = sample(rng, box);
  do {
    fw.p.col(1) = sample(rng, box);
  } while ((fw.p.col(1) - fw.p.col(0)).norm() <= kPlacementTol * box.scale());
  return fw;
}

Framework apply_vertex_addition(const Framework& fw, AdditionStep& step, Rng& rng, const PlacementBox& box) {
  if (step.kind == AdditionKind::TwoVertex) fail("use apply_two_vertex_addition for TwoVertex steps");
  check_vertex(fw, step.i, "i");
  check_vertex(fw, step.j, "j");
  if (step.i == step.j) fail("attachments i and j must differ");
  const Graph& g = fw.g;
  const Attr ai = g.attr(step.i), aj = g.attr(step.j);
  Attr attr_new = Attr::A;
  switch (step.kind) {
    case AdditionKind::A1:
      if (ai != Attr::D && aj != Attr::D) fail("A1 requires i in V_D or j in V_D");
      attr_new = Attr::A;
      break;
    case AdditionKind::D1:
      if (ai != Attr::A && aj != Attr::A) fail("D1 requires i in V_A or j in V_A");
      attr_new = Attr::D;
      break;
    case AdditionKind::A2:
      if (ai != Attr::A || aj != Attr::A) fail("A2 requires i and j in V_A");
      attr_new = Attr::A;
      break;
    case AdditionKind::D2:
      if (g.count(Attr::D) < 3) fail("D2 requires at least three D-vertices");
      if (ai != Attr::D || aj != Attr::D) fail("D2 requires i and j in V_D");
      check_vertex(fw, step.k, "k");
      if (step.k == step.i || step.k == step.j) fail("D2 third attachment k must differ from i and j");
      if (!step.third_any && g.attr(step.k) != Attr::D) fail("D2 requires the third attachment k in V_D");
      if (!non_collinear(fw.p.col(step.i), fw.p.col(step.j), fw.p.col(step.k), box))
        fail("D2 requires p_i, p_j, p_k non-collinear");
      attr_new = Attr::D;
      break;
    case AdditionKind::TwoVertex: break;
  }
  const double sep = kPlacementTol * box.scale();
  const Vector2d pi = fw.p.col(step.i), pj = fw.p.col(step.j);
  const auto pts = place(step, 1, rng, box, [&](const std::vector<Vector2d>& x) {
    return far_from_all(fw.p, x[0], sep) && non_collinear(pi, pj, x[0], box);
  });
  Framework out{g, with_columns(fw.p, pts)};
  const int v = out.g.add_vertex(attr_new);
  out.g.add_edge(v, step.i);
  out.g.add_edge(v, step.j);
  if (step.kind == AdditionKind::D2) out.g.add_edge(v, step.k);
  return out;
}

namespace {

// Appends the path j - u - w - i; attribute pattern is checked by the caller.
Framework append_two_vertex(const Framework& fw, AdditionStep& step, Rng& rng, const PlacementBox& box) {
  check_vertex(fw, step.i, "i");
  check_vertex(fw, step.j, "j");
  if (step.i == step.j) fail("attachments i and j must differ");
  const std::array<Attr, 4> attrs{fw.g.attr(step.i), fw.g.attr(step.j), step.first, step.second};
  const double sep = kPlacementTol * box.scale();
  const auto pts = place(step, 2, rng, box, [&](const std::vector<Vector2d>& x) {
    if (!far_from_all(fw.p, x[0], sep) || !far_from_all(fw.p, x[1], sep) || (x[0] - x[1]).norm() <= sep)
      return false;
    const std::array<Vector2d, 4> pos{fw.p.col(step.i), fw.p.col(step.j), x[0], x[1]};
    std::vector<Vector2d> a;
    for (int q = 0; q < 4; ++q)
      if (attrs[q] == Attr::A) a.push_back(pos[q]);
    for (std::size_t p = 0; p + 2 < a.size(); ++p)
      for (std::size_t q = p + 1; q + 1 < a.size(); ++q)
        for (std::size_t r = q + 1; r < a.size(); ++r)
          if (!non_collinear(a[p], a[q], a[r], box)) return false;
    return non_collinear(pos[0], pos[1], pos[2], box) && non_collinear(pos[1], pos[2], pos[3], box);
  });
  Framework out{fw.g, with_columns(fw.p, pts)};
  const int u = out.g.add_vertex(step.first);
  const int w = out.g.add_vertex(step.second);
  out.g.add_edge(step.j, u);
  out.g.add_edge(u, w);
  out.g.add_edge(w, step.i);
  return out;
}

}  // namespace

Framework apply_two_vertex_addition(const Framework& fw, AdditionStep& step, Rng& rng, const PlacementBox& box) {
  if (step.kind != AdditionKind::TwoVertex) fail("not a TwoVertex step");
  check_vertex(fw, step.i, "i");
  check_vertex(fw, step.j, "j");
  const int na = (fw.g.attr(step.i) == Attr::A) + (fw.g.attr(step.j) == Attr::A) + (step.first == Attr::A) +
                 (step.second == Attr::A);
  if (na != 3) fail("TwoVertex requires exactly three of i, j, n+1, n+2 in V_A");
  return append_two_vertex(fw, step, rng, box);
}

Framework apply_step(const Framework& fw, AdditionStep& step, Rng& rng, const PlacementBox& box) {
  return step.kind == AdditionKind::TwoVertex ? apply_two_vertex_addition(fw, step, rng, box)
                                              : apply_vertex_addition(fw, step, rng, box);
}

std::string to_string(Recipe r) {
  switch (r) {
    case Recipe::Quad2v: return "quad2v";
    case Recipe::Quad2vFlex: return "quad2v-flex";
    case Recipe::BilatD1A1: return "bilat-D1A1";
    case Recipe::MixD2A1: return "mix-D2A1";
    case Recipe::Type2D1: return "type2D1";
    case Recipe::Minimal: return "minimal";
    case Recipe::Random: return "random";
  }
  return "?";
}

const std::vector<Recipe>& all_recipes() {
  static const std::vector<Recipe> r{Recipe::Quad2v,  Recipe::Quad2vFlex, Recipe::BilatD1A1, Recipe::MixD2A1,
                                     Recipe::Type2D1, Recipe::Minimal,    Recipe::Random};
  return r;
}

Recipe parse_recipe(const std::string& name) {
  for (Recipe r : all_recipes())
    if (to_string(r) == name) return r;
  fail("unknown recipe '" + name + "'");
  return Recipe::Random;
}

int admissible_n(Recipe r, int hint) {
  switch (r) {
    case Recipe::Quad2v: return std::max(4, hint + (hint % 2));
    case Recipe::Quad2vFlex: return std::max(8, hint + (hint % 2));
    case Recipe::MixD2A1: return std::max(6, hint + (hint % 2));
    case Recipe::BilatD1A1: return std::max(3, hint);
    case Recipe::Type2D1: return std::max(4, hint);
    case Recipe::Minimal: return std::max(4, hint);
    case Recipe::Random: return std::max(3, hint);
  }
  return hint;
}

namespace {

int pick(const std::vector<int>& pool, Rng& rng) {
  if (pool.empty()) fail("no vertex with the required attribute");
  std::uniform_int_distribution<std::size_t> u(0, pool.size() - 1);
  return pool[u(rng)];
}

int pick_other(const std::vector<int>& pool, int avoid, Rng& rng) {
  std::vector<int> rest;
  for (int v : pool)
    if (v != avoid) rest.push_back(v);
  return pick(rest, rng);
}

struct Builder {
  Construction c;
  Rng rng;
  PlacementBox box;

  Builder(Recipe r, std::uint64_t seed) : rng(seed) {
    c.recipe = r;
    c.seed = seed;
  }
  int n() const { return c.fw.g.n(); }
  std::vector<int> with(Attr a) const { return c.fw.g.vertices_with(a); }

  void seed(Attr a, Attr b) { c.fw = seed_framework(a, b, rng, box); }
  void step(AdditionStep s) {
    c.fw = apply_step(c.fw, s, rng, box);
    c.log.push_back(s);
  }
  void unchecked_two_vertex(AdditionStep s) {
    c.fw = append_two_vertex(c.fw, s, rng, box);
    c.log.push_back(s);
  }
  void one(AdditionKind kind, int i, int j, int k = -1, bool third_any = false) {
    AdditionStep s;
    s.kind = kind;
    s.i = i;
    s.j = j;
    s.k = k;
    s.third_any = third_any;
    step(s);
  }
  void two(int i, int j, Attr first, Attr second) {
    AdditionStep s;
    s.kind = AdditionKind::TwoVertex;
    s.i = i;
    s.j = j;
    s.first = first;
    s.second = second;
    step(s);
  }
};

void require_n(bool ok, Recipe r, int n) {
  if (!ok) fail("n=" + std::to_string(n) + " not admissible for recipe " + to_string(r));
}

// A legal random TwoVertex pattern on attachments i, j (false if none exists).
bool random_two_pattern(const Graph& g, int i, int j, Rng& rng, Attr& first, Attr& second) {
  const int na = (g.attr(i) == Attr::A) + (g.attr(j) == Attr::A);
  if (na == 0) return false;
  if (na == 1) {
    first = second = Attr::A;
  } else {
    const bool flip = std::bernoulli_distribution(0.5)(rng);
    first = flip ? Attr::A : Attr::D;
    second = flip ? Attr::D : Attr::A;
  }
  return true;
}

void random_two(Builder& b) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> all(b.n());
    for (int v = 0; v < b.n(); ++v) all[v] = v;
    const int i = pick(all, b.rng), j = pick_other(all, i, b.rng);
    Attr f, s;
    if (random_two_pattern(b.c.fw.g, i, j, b.rng, f, s)) {
      b.two(i, j, f, s);
      return;
    }
  }
  fail("no legal TwoVertex attachment");
}

// Random legal 1-vertex addition of the given kind; false if infeasible here.
bool random_one(Builder& b, AdditionKind kind) {
  const auto A = b.with(Attr::A), D = b.with(Attr::D);
  std::vector<int> all(b.n());
  for (int v = 0; v < b.n(); ++v) all[v] = v;
  switch (kind) {
    case AdditionKind::A1: {
      if (D.empty() || b.n() < 2) return false;
      const int i = pick(D, b.rng);
      b.one(kind, i, pick_other(all, i, b.rng));
      return true;
    }
    case AdditionKind::D1: {
      if (A.empty() || b.n() < 2) return false;
      const int i = pick(A, b.rng);
      b.one(kind, i, pick_other(all, i, b.rng));
      return true;
    }
    case AdditionKind::A2: {
      if (A.size() < 2) return false;
      const int i = pick(A, b.rng);
      b.one(kind, i, pick_other(A, i, b.rng));
      return true;
    }
    case AdditionKind::D2: {
      if (D.size() < 3) return false;
      for (int attempt = 0; attempt < 100; ++attempt) {
        const int i = pick(D, b.rng), j = pick_other(D, i, b.rng);
        std::vector<int> rest;
        for (int v : D)
          if (v != i && v != j) rest.push_back(v);
        const int k = pick(rest, b.rng);
        if (non_collinear(b.c.fw.p.col(i), b.c.fw.p.col(j), b.c.fw.p.col(k), b.box)) {
          b.one(kind, i, j, k);
          return true;
        }
      }
      return false;
    }
    case AdditionKind::TwoVertex: return false;
  }
  return false;
}

void quad2v(Builder& b, int n, int flex_steps) {
  b.seed(Attr::D, Attr::A);
  const int steps = (n - 2) / 2;
  for (int s = 1; s <= steps; ++s) {
    const bool flex = flex_steps > 0 && s % (steps / (flex_steps + 1)) == 0 &&
                      s / (steps / (flex_steps + 1)) <= flex_steps;
    if (flex) {
      // every vertex of the quadrilateral in V_A: not a legal 2-vertex addition
      AdditionStep st;
      st.kind = AdditionKind::TwoVertex;
      const auto A = b.with(Attr::A);
      st.i = pick(A, b.rng);
      st.j = pick_other(A, st.i, b.rng);
      st.first = st.second = Attr::A;
      b.unchecked_two_vertex(st);
    } else {
      b.two(pick(b.with(Attr::A), b.rng), pick(b.with(Attr::D), b.rng), Attr::A, Attr::A);
    }
  }
}

void bilateration(Builder& b, int n) {
  b.seed(Attr::D, Attr::A);
  while (b.n() < n) {
    const auto A = b.with(Attr::A), D = b.with(Attr::D);
    if ((b.n() + 1) % 2 == 1) {
      b.one(AdditionKind::D1, pick(A, b.rng), pick(D, b.rng));
    } else {
      const int i = pick(D, b.rng);
      b.one(AdditionKind::A1, i, pick_other(D, i, b.rng));
    }
  }
}

void mix_d2a1(Builder& b, int n) {
  // quadrilateral 1-2-3-4 with V_A = {1}
  b.seed(Attr::A, Attr::D);
  for (int v = 2; v < 4; ++v) {
    const Config2d& p = b.c.fw.p;
    Vector2d x;
    bool ok = false;
    for (int tries = 0; tries < kPlacementTries && !ok; ++tries) {
      x = sample(b.rng, b.box);
      ok = far_from_all(p, x, kPlacementTol * b.box.scale());
      for (Eigen::Index q = 0; ok && q < p.cols(); ++q)
        for (Eigen::Index r = q + 1; ok && r < p.cols(); ++r) ok = non_collinear(p.col(q), p.col(r), x, b.box);
    }
    if (!ok) fail("placement failed for the initial quadrilateral");
    b.c.fw.p = with_columns(p, {x});
    b.c.fw.g.add_vertex(Attr::D);
    b.c.fw.g.add_edge(v - 1, v);
  }
  b.c.fw.g.add_edge(0, 3);
  bool first = true;
  while (b.n() + 2 <= n) {
    const auto D = b.with(Attr::D);
    if (first) {
      b.one(AdditionKind::D2, 1, 2, 3);
    } else {
      // third edge to vertex 1 (an A-vertex), see README
      int i = -1, j = -1;
      for (int attempt = 0; attempt < 100; ++attempt) {
        i = pick(D, b.rng);
        j = pick_other(D, i, b.rng);
        if (non_collinear(b.c.fw.p.col(i), b.c.fw.p.col(j), b.c.fw.p.col(0), b.box)) break;
      }
      b.one(AdditionKind::D2, i, j, 0, true);
    }
    const int v = b.n() - 1;
    b.one(AdditionKind::A1, v, pick_other(b.with(Attr::D), v, b.rng));
    first = false;
  }
}

void type2d1(Builder& b, int n) {
  b.seed(Attr::D, Attr::A);
  bool two_turn = true;
  while (b.n() < n) {
    if (two_turn && n - b.n() >= 2) {
      b.two(pick(b.with(Attr::D), b.rng), pick(b.with(Attr::A), b.rng), Attr::A, Attr::A);
    } else {
      b.one(AdditionKind::D1, pick(b.with(Attr::A), b.rng), pick(b.with(Attr::D), b.rng));
    }
    two_turn = !two_turn;
  }
}

void minimal(Builder& b, int n) {
  b.seed(Attr::D, Attr::A);
  while (n - b.n() >= 2) random_two(b);
  if (b.n() < n) {
    const bool a1 = std::bernoulli_distribution(0.5)(b.rng);
    if (!random_one(b, a1 ? AdditionKind::A1 : AdditionKind::D1)) random_one(b, a1 ? AdditionKind::D1 : AdditionKind::A1);
  }
}

void random_ordering(Builder& b, int n) {
  std::bernoulli_distribution coin(0.5);
  b.seed(coin(b.rng) ? Attr::A : Attr::D, Attr::A);
  b.c.fw.g.set_attr(1, other(b.c.fw.g.attr(0)));
  std::uniform_int_distribution<int> kind(0, 4);
  while (b.n() < n) {
    const auto k = static_cast<AdditionKind>(kind(b.rng));
    if (k == AdditionKind::TwoVertex) {
      if (n - b.n() >= 2) random_two(b);
      continue;
    }
    random_one(b, k);
  }
}

}  // namespace

Construction generate_ordering(Recipe recipe, int n, std::uint64_t seed) {
  Builder b(recipe, seed);
  switch (recipe) {
    case Recipe::Quad2v:
      require_n(n >= 4 && n % 2 == 0, recipe, n);
      quad2v(b, n, 0);
      break;
    case Recipe::Quad2vFlex:
      require_n(n >= 8 && n % 2 == 0, recipe, n);
      quad2v(b, n, 2);
      break;
    case Recipe::BilatD1A1:
      require_n(n >= 3, recipe, n);
      bilateration(b, n);
      break;
    case Recipe::MixD2A1:
      require_n(n >= 6 && n % 2 == 0, recipe, n);
      mix_d2a1(b, n);
      break;
    case Recipe::Type2D1:
      require_n(n >= 4, recipe, n);
      type2d1(b, n);
      break;
    case Recipe::Minimal:
      require_n(n >= 4, recipe, n);
      minimal(b, n);
      break;
    case Recipe::Random:
      require_n(n >= 3, recipe, n);
      random_ordering(b, n);
      break;
  }
  return b.c;
}

Construction generate_minimal_rigid(int n, std::uint64_t seed) {
  if (n < 4) fail("minimal frameworks need n >= 4");
  return generate_ordering(Recipe::Minimal, n, seed);
}

namespace {

void require_rigid(const Framework& fw, double rtol, const char* which) {
  if (!infinitesimal_rigidity_test(fw, rtol).rigid)
    fail(std::string(which) + " framework fails the rank test at 2n-4");
}

Framework disjoint_union(const Framework& a, const Framework& b) {
  Framework out{a.g, Config2d(2, a.p.cols() + b.p.cols())};
  out.p << a.p, b.p;
  const int off = a.g.n();
  for (int v = 0; v < b.g.n(); ++v) out.g.add_vertex(b.g.attr(v));
  for (const auto& e : b.g.edges()) out.g.add_edge(e.tail + off, e.head + off);
  return out;
}

}  // namespace

Framework merge_add_edges(const Framework& fw1, const Framework& fw2, int i, int m, int j, int k, bool three_edges,
                          double rtol) {
  check_vertex(fw1, i, "i");
  check_vertex(fw1, m, "m");
  check_vertex(fw2, j, "j");
  check_vertex(fw2, k, "k");
  if (i == m || j == k) fail("merge vertices must be distinct");
  require_rigid(fw1, rtol, "first");
  require_rigid(fw2, rtol, "second");
  Framework out = disjoint_union(fw1, fw2);
  const int off = fw1.g.n();
  const std::array<int, 4> quad{i, m, j + off, k + off};
  std::vector<Vector2d> a;
  for (int v : quad)
    if (out.g.attr(v) == Attr::A) a.push_back(out.p.col(v));
  const PlacementBox unit;
  if (three_edges) {
    if (a.size() != 4) fail("three-edge merge requires all four vertices in V_A");
    if (!non_collinear(a[0], a[1], a[2], unit) && !non_collinear(a[0], a[1], a[3], unit) &&
        !non_collinear(a[0], a[2], a[3], unit))
      fail("merge vertices are collinear");
  } else {
    if (a.size() != 3) fail("merge requires exactly three of i, m, j, k in V_A");
    if (!non_collinear(a[0], a[1], a[2], unit)) fail("merge A-vertices are collinear");
  }
  out.g.add_edge(m, k + off);
  out.g.add_edge(i, j + off);
  if (three_edges) out.g.add_edge(i, k + off);
  return out;
}

Contraction merge_contract(const Framework& fw1, const Framework& fw2, std::pair<int, int> ij,
                           std::pair<int, int> mk, double rtol) {
  const auto [i, j] = ij;
  const auto [m, k] = mk;
  check_vertex(fw1, i, "i");
  check_vertex(fw1, m, "m");
  check_vertex(fw2, j, "j");
  check_vertex(fw2, k, "k");
  if (i == m || j == k) fail("contracted pairs must be distinct");
  if (fw1.g.attr(i) != fw2.g.attr(j) || fw1.g.attr(m) != fw2.g.attr(k))
    fail("contracted vertices must share the same attribute");
  if ((fw1.p.col(i) - fw2.p.col(j)).norm() > 1e-9 || (fw1.p.col(m) - fw2.p.col(k)).norm() > 1e-9)
    fail("contracted vertices must coincide");
  require_rigid(fw1, rtol, "first");
  require_rigid(fw2, rtol, "second");

  Contraction out;
  out.fw.g = fw1.g;
  out.second_map.assign(fw2.g.n(), -1);
  out.second_map[j] = i;
  out.second_map[k] = m;
  std::vector<Vector2d> extra;
  for (int v = 0; v < fw2.g.n(); ++v) {
    if (out.second_map[v] >= 0) continue;
    out.second_map[v] = out.fw.g.add_vertex(fw2.g.attr(v));
    extra.push_back(fw2.p.col(v));
  }
  out.fw.p = with_columns(fw1.p, extra);
  for (const auto& e : fw2.g.edges()) {
    const int a = out.second_map[e.tail], b = out.second_map[e.head];
    if (!out.fw.g.has_edge(a, b)) out.fw.g.add_edge(a, b);
  }
  return out;
}

Config2d align_pairs(const Config2d& q, int j, int k, const Vector2d& pi, const Vector2d& pm) {
  using C = std::complex<double>;
  const C qj(q(0, j), q(1, j)), qk(q(0, k), q(1, k)), a(pi.x(), pi.y()), b(pm.x(), pm.y());
  const C s = (b - a) / (qk - qj);
  Config2d out(2, q.cols());
  for (Eigen::Index v = 0; v < q.cols(); ++v) {
    const C z = a + s * (C(q(0, v), q(1, v)) - qj);
    out(0, v) = z.real();
    out(1, v) = z.imag();
  }
  return out;
}

}  // namespace sarod
