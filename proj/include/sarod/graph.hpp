#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sarod {

// Vertex attribute: A-vertices sense signed angles, D-vertices ratios of distance.
enum class Attr : unsigned char { A, D };

inline Attr other(Attr a) { return a == Attr::A ? Attr::D : Attr::A; }
inline char to_char(Attr a) { return a == Attr::A ? 'A' : 'D'; }

// Edges are stored with tail < head; that orientation drives every signed matrix.
struct Edge {
  int tail;
  int head;
};

struct Incident {
  int nbr;
  int edge;
};

// Undirected simple graph with 0-based vertices and a per-vertex attribute.
// Edge insertion order is the canonical edge index.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, Attr fill = Attr::D);

  int add_vertex(Attr a);
  int add_edge(int i, int j);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }

  // Index of edge {i,j} or -1.
  int find_edge(int i, int j) const;
  int edge_index(int i, int j) const;
  bool has_edge(int i, int j) const { return find_edge(i, j) >= 0; }

  // Incident edges sorted by neighbor id.
  const std::vector<Incident>& incident(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  Attr attr(int v) const { return attr_.at(v); }
  void set_attr(int v, Attr a) { attr_.at(v) = a; }
  const std::vector<Attr>& attrs() const { return attr_; }
  std::vector<int> vertices_with(Attr a) const;
  int count(Attr a) const;

  bool connected() const;

 private:
  void check_vertex(int v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<Incident>> adj_;
  std::vector<Attr> attr_;
};

// Edge code H(i,j,|V|) = (min-1)|V| + max on 1-based ids.
std::int64_t edge_code(int i, int j, int n);

// m x n, -1 at tail and +1 at head.
Eigen::MatrixXd incidence_matrix(const Graph& g);

struct SpanningTree {
  int root = 0;
  std::vector<int> parent;       // -1 at root
  std::vector<int> parent_edge;  // -1 at root
  std::vector<int> depth;
  std::vector<char> in_tree;     // per edge
};

SpanningTree bfs_tree(const Graph& g, int root = 0);
SpanningTree dfs_tree(const Graph& g, int root = 0);

// Fundamental cycles of the tree, (m-n+1) x m with entries in {-1,0,1}.
// Each row walks its chord tail->head and returns along the tree; an entry is
// +1 where the walk follows the edge orientation.
Eigen::MatrixXd cycle_basis(const Graph& g, const SpanningTree& t);
Eigen::MatrixXd cycle_basis(const Graph& g);

// n x m; row i is the signed tree path from base to i.
Eigen::MatrixXd path_matrix(const Graph& g, int base, const SpanningTree& t);
Eigen::MatrixXd path_matrix(const Graph& g, int base);

// Measurement triple at apex with neighbors j < k; ej, ek index edges {apex,j}, {apex,k}.
struct Triple {
  int apex;
  int j;
  int k;
  int ej;
  int ek;
};

enum class TripleMode { Full, Reduced };

// Triples whose apex carries attribute a.  Reduced mode keeps the star at the
// smallest neighbor, deg-1 triples per apex.
std::vector<Triple> enumerate_triples(const Graph& g, Attr a, TripleMode mode = TripleMode::Full);

struct Components {
  std::vector<int> label;  // per edge, 0..count-1 ordered by first edge
  int count = 0;
};

// Components of the triple index graph over all edges of g.
Components triple_components(const Graph& g, const std::vector<Triple>& t);

// Adds the missing anchor-anchor edges after the existing ones.
Graph augment_anchor_clique(const Graph& g, std::vector<int> anchors);

Graph swap_attributes(const Graph& g);

}  // namespace sarod
