#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thuelab {

// Raised for malformed input or violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool adjacent(int u, int v) const;
  // Edges with u < v, sorted lexicographically; position is the edge id.
  const std::vector<Edge>& edges() const { return edges_; }
  // Edge id of {u,v} or -1.
  int edge_id(int u, int v) const;
  // Edge ids parallel to neighbours(v).
  const std::vector<int>& incident_edges(int v) const { return eid_[v]; }

  friend Graph build_graph(int n, const std::vector<Edge>& edges);

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> eid_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> matrix_;
  int words_ = 0;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

// Standard families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);

struct ProductGraph {
  Graph graph;
  // Vertex (a, b) has index a * |B| + b.
  std::vector<int> first;
  std::vector<int> second;
};

ProductGraph strong_product(const Graph& a, const Graph& b);
ProductGraph cartesian_product(const Graph& a, const Graph& b);
ProductGraph direct_product(const Graph& a, const Graph& b);

struct SubdivisionMap {
  struct Origin {
    int vertex = -1;  // original vertex, or -1 for a division vertex
    int edge = -1;    // original edge id of a division vertex
    int position = -1;  // 0-based position along the chain
  };
  Graph original;
  Graph subdivided;
  // chains[e] lists the division vertices of edge e from edges()[e].first
  // towards edges()[e].second.
  std::vector<std::vector<int>> chains;
  std::vector<Origin> origin;

  bool is_division(int v) const { return origin[v].vertex < 0; }
  int max_chain() const;
};

// counts[e] division vertices on edge e. Original vertices keep their ids.
SubdivisionMap subdivide(const Graph& g, const std::vector<int>& counts);
SubdivisionMap subdivide_uniform(const Graph& g, int d);

Graph square(const Graph& g);

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_of;  // vertex of L(G) -> edge of G
};
LineGraph line_graph(const Graph& g);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);

struct Layering {
  std::vector<std::vector<int>> layers;
  std::vector<int> depth;
};

// Layering from a depth map; throws InputError if an edge spans more than one layer.
Layering make_layering(const Graph& g, const std::vector<int>& depth);
// BFS layering; further components are rooted at their smallest vertex and
// merged by depth.
Layering bfs_layering(const Graph& g, int root);

struct ShadowWitness {
  int layer = 0;
  std::vector<int> component;
  int a = -1;
  int b = -1;
};
// Empty result means shadow-complete.
std::optional<ShadowWitness> find_shadow_violation(const Graph& g, const Layering& lay);
bool is_shadow_complete(const Graph& g, const Layering& lay);

struct TreeDecomposition {
  Graph tree;
  std::vector<std::vector<int>> bags;
  int width() const;
};

struct PathDecomposition {
  std::vector<std::vector<int>> bags;
  int width() const;
  TreeDecomposition as_tree() const;
};

struct DecompositionCheck {
  bool ok = false;
  int width = -1;
  std::string violation;
};

DecompositionCheck validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);
DecompositionCheck validate_path_decomposition(const Graph& g, const PathDecomposition& pd);
// Adds a clique on every bag.
Graph chordal_complete(const Graph& g, const TreeDecomposition& td);
bool is_chordal(const Graph& g);
int clique_number(const Graph& g);
std::vector<int> maximum_independent_set(const Graph& g);

struct ProductEmbedding {
  Graph host_H;
  Graph host_P;
  int ell = 1;
  std::vector<std::array<int, 3>> placement;
};

// Empty result means valid; otherwise a description of the offending item.
std::optional<std::string> embedding_violation(const Graph& g, const ProductEmbedding& emb);
// Vertex order along a path graph; throws InputError if g is not a path.
std::vector<int> path_order(const Graph& g);

}  // namespace thuelab
