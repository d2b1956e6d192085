#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thuelab/exact.hpp"

namespace thuelab {

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, double>> inputs;
  std::optional<double> lower;
  double value = 0;  // upper bound, or the formula value for single-sided reports
  std::string basis;
};

// Ceiling after a 1e-9 downward nudge.
long long ceil_nudged(double x);
// Smallest m >= 0 with m^k >= x.
long long iroot_ceil(long long x, int k);

// Colour count of the local lemma argument for maximum degree delta.
long long lll_colour_count(int delta);

struct RosenfeldCount {
  double beta = 0;
  long long c = 0;
};
RosenfeldCount rosenfeld_colour_count(int delta, double r, bool subdivided);

// Growth rate k of nonrepetitive list colourings of paths with r-lists, r >= 4.
double multicolour_rate(double r);

// Maximum edges of an n-vertex graph with pi <= c (equivalently rho <= c).
long long extremal_max_edges(int n, int c);

// n - alpha + 1.
long long naive_upper_bound(int n, int alpha);
// Lower and upper bounds on sigma from rho and the maximum degree.
std::pair<long long, long long> sigma_bounds(int rho, int delta);
// Upper bound on sigma for a d-degenerate graph.
long long sigma_degenerate_bound(int rho, int degeneracy, int delta);
// rho bound for treewidth k and maximum degree delta.
double treewidth_degree_rho_bound(int k, int delta);
// Second-order list colouring bound for maximum degree delta >= 2.
double delta_squared_bound(int delta);

enum class GraphClass { path, cycle, tree, outerplanar, treewidth, pathwidth, planar, genus };

struct ClassSpec {
  GraphClass cls = GraphClass::path;
  int k = 0;  // treewidth or pathwidth
  int g = 0;  // Euler genus
  std::optional<int> delta;
};

// Accepts "path", "cycle", "tree", "outerplanar", "planar", "treewidth(k)",
// "pathwidth(k)" and "genus(g)".
ClassSpec parse_class(const std::string& s);
std::string class_name(const ClassSpec& c);

// pi, rho and sigma only; sigma rows that scale with the degree need delta.
BoundReport class_bound(const ClassSpec& c, Parameter p);

// Subdivision formulas.
double complete_subdiv_lower(long long n, int d);
long long complete_subdiv_upper(long long n, int d);
long long complete_subdiv_lemma_colours(long long a, long long b);
long long d_subdiv_colours(long long pi, int d);
long long five_subdiv_d(long long pi);
long long gen_subdiv_d(long long pi, int r);
long long complete_subdiv1_colours(long long n);
double subdiv_division_lower(long long n, int c);
double general_subdiv_lower(long long edges, long long vertices, int d);
long long subdiv1_colours(long long chi, long long pi);
long long subdiv2_colours(long long pi);
long long subdiv3_colours(long long pi);
long long nonrep_sub_colours(long long pi, int max_chain);

struct SubdivQuery {
  std::optional<long long> n;   // complete graph order
  std::optional<int> d;         // divisions per edge
  std::optional<long long> pi;  // nonrepetitive chromatic number (or an upper bound) of the base graph
  std::optional<long long> chi;
};

// Every subdivision formula whose inputs are present.
std::vector<BoundReport> subdiv_bounds(const SubdivQuery& q);

}  // namespace thuelab
