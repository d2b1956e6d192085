#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thuelab/colouring.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/words.hpp"

namespace thuelab {

enum class RepKind { word_square, path, stroll, walk, lazy_walk, lazy_stroll, lazy_path, edge_path };

std::string kind_name(RepKind k);
RepKind parse_kind(const std::string& s);

// Even-length sequence whose halves are coloured identically. For edge paths
// `sequence` holds edge ids and `vertices` the traversed vertices.
struct Witness {
  RepKind kind = RepKind::path;
  std::vector<int> sequence;
  std::vector<int> vertices;
};

// True if the colours of seq form a repetition.
bool is_repetitive(const std::vector<int>& seq, const std::vector<int>& col);

// Detectors below ignore uncoloured vertices (negative colours).

// Lexicographically first witness of minimum half-length.
std::optional<Witness> find_repetitive_path(const Graph& g, const std::vector<int>& col,
                                            std::optional<int> max_half = std::nullopt);

struct PathSearch {
  std::optional<Witness> witness;
  bool complete = true;  // false if the node budget ran out first
  std::uint64_t nodes = 0;
};
PathSearch find_repetitive_path_budgeted(const Graph& g, const std::vector<int>& col, std::optional<int> max_half,
                                         std::uint64_t node_budget);

// Reusable path detector; precomputes distances for pruning. The graph must
// outlive the finder.
class RepetitivePathFinder {
 public:
  explicit RepetitivePathFinder(const Graph& g);
  PathSearch search(const std::vector<int>& col, std::optional<int> max_half = std::nullopt,
                    std::uint64_t node_budget = 0) const;
  std::optional<Witness> through(const std::vector<int>& col, int v, std::optional<int> max_half = std::nullopt,
                                 bool shortest = false) const;

 private:
  const Graph* g_;
  std::vector<int> dist_;
};

// Repetitively coloured even paths through v. With shortest=false the first
// hit is returned; otherwise one of minimum half-length.
std::optional<Witness> find_repetitive_path_through(const Graph& g, const std::vector<int>& col, int v,
                                                    std::optional<int> max_half = std::nullopt,
                                                    bool shortest = false);

// Exact stroll detector over the pair digraph; returns a shortest witness.
std::optional<Witness> find_repetitive_stroll(const Graph& g, const std::vector<int>& col);

// Non-boring repetitive walk via distance-2 violations and strolls.
std::optional<Witness> find_repetitive_walk_nonboring(const Graph& g, const std::vector<int>& col);

// Non-boring repetitive walk decided directly on the pair digraph with diagonal nodes.
std::optional<Witness> find_repetitive_walk_direct(const Graph& g, const std::vector<int>& col);

enum class LazyKind { walk_nonboring, stroll, path };

struct LazyResult {
  std::optional<Witness> witness;
  bool inconclusive = false;  // lazy-path only: nothing found within the cap
  int cap = 0;
};

// cap is the lazy-path vertex cap; 0 selects 2n.
LazyResult find_repetitive_lazy(const Graph& g, const std::vector<int>& col, LazyKind kind, int cap = 0);

std::optional<std::pair<int, int>> distance2_violation(const Graph& g, const std::vector<int>& col);
bool is_distance2(const Graph& g, const std::vector<int>& col);

// edge_col is indexed by edge id; negative entries are uncoloured edges.
std::optional<Witness> find_repetitive_edge_path(const Graph& g, const std::vector<int>& edge_col);

// Walk-nonrepetitive colourings of G[V_i] composed with a spine need this
// distinctness condition; returns a violating pair.
std::optional<std::pair<int, int>> common_neighbour_clash(const Graph& g, const std::vector<int>& col,
                                                          const std::vector<int>& depth);

}  // namespace thuelab
