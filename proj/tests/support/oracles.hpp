#pragma once

#include <random>
#include <vector>

#include "thuelab/exact.hpp"
#include "thuelab/graph.hpp"

// Brute-force references and random instance generators for the tests. The
// checkers here share no code with the library detectors.
namespace thuelab::oracle {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
std::vector<int> random_colouring(int n, int k, Rng& rng);

Graph random_graph(int n, double p, Rng& rng);
Graph random_tree(int n, Rng& rng);
// Random edges are added in random order while both endpoints stay below delta.
Graph random_bounded_degree(int n, int delta, double p, Rng& rng);

struct DecomposedGraph {
  Graph graph;
  TreeDecomposition td;
};
// Subgraph of a random k-tree; each k-tree edge is kept with probability keep.
DecomposedGraph random_partial_ktree(int n, int k, double keep, Rng& rng);

struct PathDecomposedGraph {
  Graph graph;
  PathDecomposition pd;
};
// Random caterpillar with a width-1 path decomposition.
PathDecomposedGraph random_caterpillar(int n, Rng& rng);

bool has_square(const std::vector<int>& w);

// Every simple path with an even number of vertices.
bool path_repetitive(const Graph& g, const std::vector<int>& col);

enum class Step { adjacent, touch };
enum class Offdiag { all, some };
// Decides whether some sequence a_1..a_t b_1..b_t with t <= max_half has
// consecutive elements related by step (including a_t, b_1), equal colours
// c(a_i) = c(b_i), and a_i != b_i for all i (Offdiag::all) or some i
// (Offdiag::some). Layered reachability over (a_i, b_i, b_1, differs).
bool walk_repetitive(const Graph& g, const std::vector<int>& col, Step step, Offdiag off, int max_half);
// Shorthand with max_half = 2 n^2.
bool stroll_repetitive(const Graph& g, const std::vector<int>& col);
bool walk_nonboring_repetitive(const Graph& g, const std::vector<int>& col);

// Lazy paths with at most cap vertices.
bool lazy_path_repetitive(const Graph& g, const std::vector<int>& col, int cap);

// Edge colouring indexed by edge id; simple paths with an even number of edges.
bool edge_path_repetitive(const Graph& g, const std::vector<int>& edge_col);

enum class Target { path, stroll, walk };
// Minimum colours over all colourings (restricted growth enumeration).
int brute_chromatic(const Graph& g, Target target);
// Number of colourings from the lists with no repetition of the target kind.
BigInt brute_count(const Graph& g, const std::vector<std::vector<int>>& lists, Target target);

}  // namespace thuelab::oracle
