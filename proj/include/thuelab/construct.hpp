#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thuelab/colouring.hpp"
#include "thuelab/graph.hpp"
#include "thuelab/words.hpp"

namespace thuelab {

enum class ComposeMode { pi, rho, sigma };

std::string mode_name(ComposeMode m);
ComposeMode parse_mode(const std::string& s);

struct NaiveColouring {
  Colouring colouring;
  std::vector<int> independent_set;
  bool exact_independent_set = true;  // false if the greedy fallback was used
};

// One colour on an independent set X, a private colour on every other vertex.
// Without X a maximum independent set is computed (exactly up to 30 vertices).
NaiveColouring naive_colouring(const Graph& g, const std::optional<std::vector<int>>& indep = std::nullopt);

// Colours v in layer i by the pair (spine(i), layer_colour[v]) with a
// 4-colour walk-nonrepetitive spine. All premises are checked; violations
// throw InputError naming the witness.
Colouring shadow_compose(const Graph& g, const Layering& lay, const std::vector<int>& layer_colour, ComposeMode mode);

Colouring tree_rho4(const Graph& t, int root = 0);
Colouring tree_sigma(const Graph& t, int root = 0);
Colouring treewidth_colour(const Graph& g, const TreeDecomposition& td);
Colouring pathwidth_colour(const Graph& g, const PathDecomposition& pd);

struct OuterplanarWitness {
  Graph supergraph;          // maximal outerplanar supergraph on the same vertex set
  std::vector<int> cycle;    // its outer Hamiltonian cycle
};

// Throws InputError if the witness is structurally invalid.
void validate_outerplanar_witness(const Graph& g, const OuterplanarWitness& w);
// mode pi: at most 12 colours; mode rho: at most 16.
Colouring outerplanar_colour(const Graph& g, const OuterplanarWitness& w, ComposeMode mode);

struct ProductColouring {
  ProductGraph product;
  Colouring colouring;
};

// mode rho: alpha stroll-clean on g, beta walk-clean on h. mode sigma: both walk-clean.
ProductColouring product_colour(const Graph& g, const Graph& h, const std::vector<int>& alpha,
                                const std::vector<int>& beta, ComposeMode mode = ComposeMode::rho);

Colouring product_structure_colour(const Graph& g, const ProductEmbedding& emb, const TreeDecomposition& td_h);

struct EdgeColouring {
  Graph graph;
  std::vector<int> colours;  // by edge id
};
EdgeColouring edge_colour_hypercube_complete(int k);

struct ColouredGraph {
  Graph graph;
  Colouring colouring;
};

// K_(c-1) joined to an independent set, with a stroll-nonrepetitive c-colouring.
ColouredGraph extremal_witness(int n, int c);
// P_n strong K_ell with a walk-nonrepetitive product colouring.
ColouredGraph sigma_extremal_example(int n, int ell);

}  // namespace thuelab
