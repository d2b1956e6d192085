#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thuelab/colouring.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/repetition.hpp"
#include "thuelab/words.hpp"

namespace thuelab {

struct SubdivColouring {
  SubdivisionMap map;
  Colouring colouring;  // of map.subdivided
  std::string scheme;
  int palette_size() const { return colouring.palette_size; }
};

// Division vertices get new colours: one colour for chains of length <= 1,
// two for length <= 2, otherwise three laid along each chain as a square-free
// word. reverse[e] colours chain e from its higher endpoint; empty means low to high.
SubdivColouring subdiv_plus(const Graph& g, const std::vector<int>& phi, const SubdivisionMap& sub,
                            const std::vector<char>& reverse = {});

// Square-free r-words of length t in lexicographic order.
std::vector<Word> enumerate_nonrep_path_colourings(int t, int r, std::size_t limit);

// (r+2)-colouring of G^(2t+1) from a nonrepetitive colouring phi of G.
SubdivColouring subdiv_lemma_colour(const Graph& g, const std::vector<int>& phi, int t, int r);

struct FiveSubdiv {
  SubdivColouring result;
  int t = 0;
  int d = 0;
  long long guarantee = 0;  // divisions sufficient for k_upper colours
};
FiveSubdiv five_subdiv(const Graph& g, const std::vector<int>& phi, int k_upper);

// Odd d >= 3 only.
SubdivColouring d_subdiv_colour(const Graph& g, const std::vector<int>& phi, int d);

// Edge v_i v_j (i < j in order) gets 2(j-i)-1 divisions; colours follow depth
// along a 4-colour walk-nonrepetitive path. Empty order means BFS from vertex 0.
SubdivColouring four_subdiv(const Graph& g, const std::vector<int>& order = {});

SubdivColouring complete_subdiv_colour(int n, int d, int a, int b);
SubdivColouring complete_subdiv1_colour(int n);

// Variants 1, 2, 3 colour G^(1), G^(2), G^(3) from a nonrepetitive colouring
// phi. Variant 1 also uses a proper colouring (phi itself when empty).
SubdivColouring subdiv123_colour(const Graph& g, int variant, const std::vector<int>& phi,
                                 const std::vector<int>& proper = {});

struct ProjectionResult {
  std::optional<Witness> witness;  // vertices of the subdivided graph
  bool complete = true;
  std::uint64_t nodes = 0;
};

// Exact path check on a subdivision: enumerates simple paths of the original
// graph and splices chain segments onto them. Budget 0 means unlimited.
ProjectionResult verify_subdivision(const SubdivisionMap& map, const std::vector<int>& col,
                                    std::uint64_t node_budget = 0);

struct EdgeBoundReport {
  long long edges = 0;
  long long vertices = 0;
  int colours = 0;
  int d = 0;
  bool exact_subdivision = false;
  double literal_rhs = 0;     // closed form in c and |V(G)|
  bool literal_holds = false;
  double class_rhs = 0;       // same counting restricted to nonempty colour classes
  bool holds = false;
  double lower_bound = 0;     // (|E|/(|V|-1))^(1/(d+1)) - 3
  bool lower_consistent = false;
};

// Throws InputError when col has a repetitive path on at most 4d+4 vertices or
// the map has a chain longer than d.
EdgeBoundReport subdiv_edge_bound_check(const SubdivisionMap& map, const std::vector<int>& col, int d,
                                        std::uint64_t node_budget = 100'000'000ULL);

}  // namespace thuelab
