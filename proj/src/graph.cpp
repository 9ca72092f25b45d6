#include "sarod/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace sarod {

Graph::Graph(int n, Attr fill) : adj_(n), attr_(n, fill) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

int Graph::add_vertex(Attr a) {
  adj_.emplace_back();
  attr_.push_back(a);
  return n() - 1;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n()) throw std::out_of_range("vertex " + std::to_string(v + 1) + " out of range");
}

int Graph::add_edge(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  if (i == j) throw std::invalid_argument("self-loop at vertex " + std::to_string(i + 1));
  if (has_edge(i, j))
    throw std::invalid_argument("duplicate edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  const int e = m();
  edges_.push_back({std::min(i, j), std::max(i, j)});
  auto insert = [](std::vector<Incident>& list, Incident x) {
    auto it = std::lower_bound(list.begin(), list.end(), x,
                               [](const Incident& a, const Incident& b) { return a.nbr < b.nbr; });
    list.insert(it, x);
  };
  insert(adj_[i], {j, e});
  insert(adj_[j], {i, e});
  return e;
}

int Graph::find_edge(int i, int j) const {
  if (i < 0 || j < 0 || i >= n() || j >= n()) return -1;
  const auto& list = adj_[i];
  auto it = std::lower_bound(list.begin(), list.end(), j, [](const Incident& a, int v) { return a.nbr < v; });
  return (it != list.end() && it->nbr == j) ? it->edge : -1;
}

int Graph::edge_index(int i, int j) const {
  const int e = find_edge(i, j);
  if (e < 0) throw std::invalid_argument("no edge (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  return e;
}

std::vector<int> Graph::vertices_with(Attr a) const {
  std::vector<int> out;
  for (int v = 0; v < n(); ++v)
    if (attr_[v] == a) out.push_back(v);
  return out;
}

int Graph::count(Attr a) const {
  return static_cast<int>(std::count(attr_.begin(), attr_.end(), a));
}

bool Graph::connected() const {
  if (n() == 0) return true;
  std::vector<char> seen(n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& inc : adj_[v])
      if (!seen[inc.nbr]) {
        seen[inc.nbr] = 1;
        ++reached;
        stack.push_back(inc.nbr);
      }
  }
  return reached == n();
}

std::int64_t edge_code(int i, int j, int n) {
  const std::int64_t lo = std::min(i, j) + 1, hi = std::max(i, j) + 1;
  return (lo - 1) * n + hi;
}

Eigen::MatrixXd incidence_matrix(const Graph& g) {
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(g.m(), g.n());
  for (int e = 0; e < g.m(); ++e) {
    H(e, g.edge(e).tail) = -1.0;
    H(e, g.edge(e).head) = 1.0;
  }
  return H;
}

namespace {

SpanningTree empty_tree(const Graph& g, int root) {
  if (root < 0 || root >= g.n()) throw std::out_of_range("tree root out of range");
  SpanningTree t;
  t.root = root;
  t.parent.assign(g.n(), -1);
  t.parent_edge.assign(g.n(), -1);
  t.depth.assign(g.n(), -1);
  t.in_tree.assign(g.m(), 0);
  t.depth[root] = 0;
  return t;
}

void require_spanning(const SpanningTree& t) {
  for (int d : t.depth)
    if (d < 0) throw std::invalid_argument("graph not connected");
}

}  // namespace

SpanningTree bfs_tree(const Graph& g, int root) {
  SpanningTree t = empty_tree(g, root);
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& inc : g.incident(v)) {
      if (t.depth[inc.nbr] >= 0) continue;
      t.depth[inc.nbr] = t.depth[v] + 1;
      t.parent[inc.nbr] = v;
      t.parent_edge[inc.nbr] = inc.edge;
      t.in_tree[inc.edge] = 1;
      q.push(inc.nbr);
    }
  }
  require_spanning(t);
  return t;
}

SpanningTree dfs_tree(const Graph& g, int root) {
  SpanningTree t = empty_tree(g, root);
  std::vector<int> stack{root};
  std::vector<char> done(g.n(), 0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (done[v]) continue;
    done[v] = 1;
    if (t.parent[v] >= 0) t.in_tree[t.parent_edge[v]] = 1;
    const auto& list = g.incident(v);
    for (auto it = list.rbegin(); it != list.rend(); ++it) {
      if (done[it->nbr]) continue;
      t.parent[it->nbr] = v;
      t.parent_edge[it->nbr] = it->edge;
      t.depth[it->nbr] = t.depth[v] + 1;
      stack.push_back(it->nbr);
    }
  }
  require_spanning(t);
  return t;
}

namespace {

// Adds the signed tree walk from a up to b into row (b must be an ancestor of a).
// Walking child->parent follows the edge orientation iff child is the head.
template <class Row>
void add_walk_up(const Graph& g, const SpanningTree& t, int a, int b, Row&& row, double sign) {
  while (a != b) {
    const int e = t.parent_edge[a];
    const double s = (g.edge(e).tail == a) ? 1.0 : -1.0;
    row(e) += sign * s;
    a = t.parent[a];
  }
}

int lowest_common_ancestor(const SpanningTree& t, int a, int b) {
  while (t.depth[a] > t.depth[b]) a = t.parent[a];
  while (t.depth[b] > t.depth[a]) b = t.parent[b];
  while (a != b) {
    a = t.parent[a];
    b = t.parent[b];
  }
  return a;
}

}  // namespace

Eigen::MatrixXd cycle_basis(const Graph& g, const SpanningTree& t) {
  if (static_cast<int>(t.in_tree.size()) != g.m()) throw std::invalid_argument("tree does not match graph");
  const int rows = g.m() - g.n() + 1;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(std::max(rows, 0), g.m());
  int r = 0;
  for (int e = 0; e < g.m(); ++e) {
    if (t.in_tree[e]) continue;
    const int u = g.edge(e).tail, v = g.edge(e).head;
    auto row = C.row(r);
    row(e) = 1.0;
    // continue from v back to u through the tree: v -> lca -> u
    const int w = lowest_common_ancestor(t, u, v);
    add_walk_up(g, t, v, w, row, 1.0);
    add_walk_up(g, t, u, w, row, -1.0);
    ++r;
  }
  return C;
}

Eigen::MatrixXd cycle_basis(const Graph& g) { return cycle_basis(g, bfs_tree(g, 0)); }

Eigen::MatrixXd path_matrix(const Graph& g, int base, const SpanningTree& t) {
  if (base < 0 || base >= g.n()) throw std::out_of_range("base vertex out of range");
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(g.n(), g.m());
  for (int i = 0; i < g.n(); ++i) {
    if (i == base) continue;
    auto row = P.row(i);
    const int w = lowest_common_ancestor(t, base, i);
    // base -> w walks against the upward direction, w -> i likewise
    add_walk_up(g, t, base, w, row, 1.0);
    add_walk_up(g, t, i, w, row, -1.0);
  }
  return P;
}

Eigen::MatrixXd path_matrix(const Graph& g, int base) { return path_matrix(g, base, bfs_tree(g, 0)); }

std::vector<Triple> enumerate_triples(const Graph& g, Attr a, TripleMode mode) {
  std::vector<Triple> out;
  for (int u = 0; u < g.n(); ++u) {
    if (g.attr(u) != a) continue;
    const auto& inc = g.incident(u);
    const int d = static_cast<int>(inc.size());
    const int first_end = (mode == TripleMode::Full) ? d : std::min(d, 1);
    for (int x = 0; x < first_end; ++x)
      for (int y = x + 1; y < d; ++y) out.push_back({u, inc[x].nbr, inc[y].nbr, inc[x].edge, inc[y].edge});
  }
  return out;
}

namespace {

struct DisjointSets {
  std::vector<int> up;
  explicit DisjointSets(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Components triple_components(const Graph& g, const std::vector<Triple>& t) {
  DisjointSets ds(g.m());
  for (const auto& tr : t) ds.unite(tr.ej, tr.ek);
  Components c;
  c.label.assign(g.m(), -1);
  std::vector<int> root_label(g.m(), -1);
  for (int e = 0; e < g.m(); ++e) {
    const int r = ds.find(e);
    if (root_label[r] < 0) root_label[r] = c.count++;
    c.label[e] = root_label[r];
  }
  return c;
}

Graph augment_anchor_clique(const Graph& g, std::vector<int> anchors) {
  std::sort(anchors.begin(), anchors.end());
  anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
  if (anchors.size() < 2) throw std::invalid_argument("need n_a >= 2");
  Graph out = g;
  for (std::size_t x = 0; x < anchors.size(); ++x)
    for (std::size_t y = x + 1; y < anchors.size(); ++y)
      if (!out.has_edge(anchors[x], anchors[y])) out.add_edge(anchors[x], anchors[y]);
  return out;
}

Graph swap_attributes(const Graph& g) {
  Graph out = g;
  for (int v = 0; v < g.n(); ++v) out.set_attr(v, other(g.attr(v)));
  return out;
}

}  // namespace sarod
