#include "thuelab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <regex>

namespace thuelab {

long long ceil_nudged(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }

long long iroot_ceil(long long x, int k) {
  if (k < 1) throw InputError("root index must be positive");
  if (x <= 0) return 0;
  auto pow_ge = [&](long long m) {
    long double p = 1;
    for (int i = 0; i < k; ++i) {
      p *= m;
      if (p >= x) return true;
    }
    return p >= x;
  };
  long long m = std::max<long long>(1, static_cast<long long>(std::pow(static_cast<double>(x), 1.0 / k)) - 1);
  while (m > 1 && pow_ge(m - 1)) --m;
  while (!pow_ge(m)) ++m;
  return m;
}

long long lll_colour_count(int delta) {
  if (delta < 1) throw InputError("maximum degree must be at least 1");
  double d = delta;
  return ceil_nudged(2 * d * d + 4 * d * std::sqrt(d + 1) + 4 * d);
}

RosenfeldCount rosenfeld_colour_count(int delta, double r, bool subdivided) {
  if (delta < 2) throw InputError("maximum degree must be at least 2");
  if (!(r > 0 && r < 1)) throw InputError("r must lie strictly between 0 and 1");
  RosenfeldCount out;
  double dm1 = delta - 1;
  out.beta = subdivided ? dm1 / r : dm1 * dm1 / r;
  out.c = ceil_nudged(out.beta + delta / ((1 - r) * (1 - r)));
  return out;
}

double multicolour_rate(double r) {
  if (r < 4) throw InputError("r must be at least 4");
  return 0.5 * (r + std::sqrt(r * r - 4 * r));
}

long long extremal_max_edges(int n, int c) {
  if (c < 1 || n < c) throw InputError("need n >= c >= 1");
  return static_cast<long long>(c - 1) * n - static_cast<long long>(c) * (c - 1) / 2;
}

long long naive_upper_bound(int n, int alpha) {
  if (alpha < 0 || alpha > n) throw InputError("independence number out of range");
  return n == 0 ? 0 : n - alpha + 1;
}

std::pair<long long, long long> sigma_bounds(int rho, int delta) {
  long long d = delta;
  return {std::max<long long>(rho, d + 1), static_cast<long long>(rho) * (d * d + 1)};
}

long long sigma_degenerate_bound(int rho, int degeneracy, int delta) {
  return static_cast<long long>(rho) * (static_cast<long long>(degeneracy) * delta + 1);
}

double treewidth_degree_rho_bound(int k, int delta) { return 10.0 * (k + 1) * (3.5 * delta - 1); }

double delta_squared_bound(int delta) {
  if (delta < 2) throw InputError("maximum degree must be at least 2");
  double d = delta;
  return d * d + 3 * std::pow(2.0, -2.0 / 3) * std::pow(d, 5.0 / 3) + std::pow(2.0, 2.0 / 3) * std::pow(d, 4.0 / 3) -
         d - std::pow(2.0, 4.0 / 3) * std::pow(d, 2.0 / 3) + 2;
}

ClassSpec parse_class(const std::string& s) {
  static const std::regex param(R"((treewidth|pathwidth|genus)\((\d+)\))");
  ClassSpec c;
  std::smatch m;
  if (s == "path") c.cls = GraphClass::path;
  else if (s == "cycle") c.cls = GraphClass::cycle;
  else if (s == "tree") c.cls = GraphClass::tree;
  else if (s == "outerplanar") c.cls = GraphClass::outerplanar;
  else if (s == "planar") c.cls = GraphClass::planar;
  else if (std::regex_match(s, m, param)) {
    int v = std::stoi(m[2]);
    if (m[1] == "treewidth") {
      c.cls = GraphClass::treewidth;
      c.k = v;
    } else if (m[1] == "pathwidth") {
      c.cls = GraphClass::pathwidth;
      c.k = v;
    } else {
      c.cls = GraphClass::genus;
      c.g = v;
    }
  } else {
    throw InputError("unknown graph class '" + s + "'");
  }
  return c;
}

std::string class_name(const ClassSpec& c) {
  switch (c.cls) {
    case GraphClass::path: return "path";
    case GraphClass::cycle: return "cycle";
    case GraphClass::tree: return "tree";
    case GraphClass::outerplanar: return "outerplanar";
    case GraphClass::planar: return "planar";
    case GraphClass::treewidth: return "treewidth(" + std::to_string(c.k) + ")";
    case GraphClass::pathwidth: return "pathwidth(" + std::to_string(c.k) + ")";
    case GraphClass::genus: return "genus(" + std::to_string(c.g) + ")";
  }
  return "unknown";
}

namespace {

double pow4(int k) { return std::pow(4.0, k); }

double binom2(int k) { return (k + 2.0) * (k + 1.0) / 2.0; }

}  // namespace

BoundReport class_bound(const ClassSpec& c, Parameter p) {
  if (p != Parameter::pi && p != Parameter::rho && p != Parameter::sigma)
    throw InputError("class bounds cover pi, rho and sigma only");
  if (c.k < 0 || c.g < 0) throw InputError("class parameters must be non-negative");
  BoundReport r;
  r.name = class_name(c) + "/" + parameter_name(p);
  if (c.cls == GraphClass::treewidth || c.cls == GraphClass::pathwidth) r.inputs.emplace_back("k", c.k);
  if (c.cls == GraphClass::genus) r.inputs.emplace_back("g", c.g);
  auto need_delta = [&]() -> double {
    if (!c.delta) throw InputError("sigma bound for " + class_name(c) + " needs the maximum degree");
    r.inputs.emplace_back("delta", *c.delta);
    return *c.delta;
  };
  const int k = c.k;
  const double pw = 2.0 * k * k + 6.0 * k + 1.0;
  const double genus_factor = 256.0 * std::max(2 * c.g, 3);
  if (p == Parameter::sigma) {
    switch (c.cls) {
      case GraphClass::path:
        r.lower = 4;
        r.value = 4;
        r.basis = "paths: 4-colouring from separated square-free words; tight from 6 vertices";
        break;
      case GraphClass::cycle:
        r.lower = 4;
        r.value = 5;
        r.basis = "cycles: between 4 and 5";
        break;
      case GraphClass::tree: {
        double d = need_delta();
        r.lower = d + 1;
        r.value = 4 * d;
        r.basis = "trees: layered sibling colouring, at most 4 per degree";
        break;
      }
      case GraphClass::outerplanar: {
        double d = need_delta();
        r.lower = d + 1;
        r.value = 16 * d + 32;
        r.basis = "outerplanar: stroll bound times a distance-2 colouring";
        break;
      }
      case GraphClass::planar: {
        double d = need_delta();
        r.lower = d + 1;
        r.value = 1536 * d + 19200;
        r.basis = "planar: 768 times a distance-2 colouring with 2*delta+25 colours";
        break;
      }
      case GraphClass::treewidth: {
        double d = need_delta();
        r.lower = d + 1;
        r.value = pow4(k) * (k * d + 1);
        r.basis = "treewidth: 4^k times a degenerate distance-2 colouring";
        break;
      }
      case GraphClass::pathwidth: {
        double d = need_delta();
        r.lower = d + 1;
        r.value = pw * (k * d + 1);
        r.basis = "pathwidth: (2k^2+6k+1) times a degenerate distance-2 colouring";
        break;
      }
      case GraphClass::genus: {
        double d = need_delta();
        r.lower = d + 1;
        r.value = genus_factor * (d * d + 1);
        r.basis = "genus: stroll bound times a distance-2 colouring with delta^2+1 colours";
        break;
      }
    }
    return r;
  }
  const bool pi = p == Parameter::pi;
  switch (c.cls) {
    case GraphClass::path:
      r.lower = 3;
      r.value = pi ? 3 : 4;
      r.basis = pi ? "paths: square-free ternary words" : "paths: at most sigma = 4; whether 3 suffices is open";
      break;
    case GraphClass::cycle:
      r.lower = 3;
      r.value = pi ? 4 : 5;
      r.basis = pi ? "cycles: 4 exactly for n in {5,7,9,10,14,17}, else 3" : "cycles: at most sigma <= 5";
      break;
    case GraphClass::tree:
      r.lower = 4;
      r.value = 4;
      r.basis = "trees: BFS layering with a walk-nonrepetitive spine";
      break;
    case GraphClass::outerplanar:
      r.lower = 7;
      r.value = pi ? 12 : 16;
      r.basis = pi ? "outerplanar: path layers with ternary words, 4 x 3" : "outerplanar: path layers with 4-colourings, 4 x 4";
      break;
    case GraphClass::planar:
      r.lower = 11;
      r.value = 768;
      r.basis = "planar: treewidth-3 host times path times K3, 12 x 4^3";
      break;
    case GraphClass::treewidth:
      r.lower = binom2(k);
      r.value = pow4(k);
      r.basis = "treewidth: recursion over BFS layers of a chordal completion";
      break;
    case GraphClass::pathwidth:
      r.lower = k + 1;
      r.value = pw;
      r.basis = "pathwidth: disjoint bag extraction with recursion on the gaps";
      break;
    case GraphClass::genus:
      r.lower = 11;
      r.value = genus_factor;
      r.basis = "genus: treewidth-3 host times path times K_max(2g,3)";
      break;
  }
  return r;
}

double complete_subdiv_lower(long long n, int d) {
  if (n < 1 || d < 0) throw InputError("need n >= 1 and d >= 0");
  return std::pow(n / 2.0, 1.0 / (d + 1));
}

long long complete_subdiv_upper(long long n, int d) {
  if (n < 1 || d < 0) throw InputError("need n >= 1 and d >= 0");
  return 9 * iroot_ceil(n, d + 1);
}

long long complete_subdiv_lemma_colours(long long a, long long b) {
  if (a < 1 || b < 1) throw InputError("need A >= 1 and B >= 1");
  return a + 8 * b;
}

long long d_subdiv_colours(long long pi, int d) {
  if (d < 3 || d % 2 == 0) throw InputError("d must be odd and at least 3; even d is unsupported");
  if (pi < 1) throw InputError("pi must be positive");
  int t = (d - 1) / 2;
  return iroot_ceil(pi, t) + 4;
}

long long five_subdiv_d(long long pi) {
  if (pi < 1) throw InputError("pi must be positive");
  return 2 * ceil_nudged(17 * std::log2(static_cast<double>(pi))) + 1;
}

long long gen_subdiv_d(long long pi, int r) {
  if (r < 4) throw InputError("r must be at least 4");
  if (pi < 1) throw InputError("pi must be positive");
  long long t = 0;
  long double p = 1;
  while (p < pi) {
    p *= (r - 2);
    ++t;
  }
  return 2 * t + 1;
}

long long complete_subdiv1_colours(long long n) {
  if (n < 1) throw InputError("n must be positive");
  long long N = iroot_ceil(n, 3);
  return 2 * N * N + N * (N - 1) / 2;
}

double subdiv_division_lower(long long n, int c) {
  if (n < 1 || c < 1) throw InputError("need n >= 1 and c >= 1");
  return std::log(n / 2.0) / std::log(c + 3.0) - 1;
}

double general_subdiv_lower(long long edges, long long vertices, int d) {
  if (vertices < 2 || d < 0) throw InputError("need at least 2 vertices and d >= 0");
  return std::pow(static_cast<double>(edges) / (vertices - 1), 1.0 / (d + 1)) - 3;
}

long long subdiv1_colours(long long chi, long long pi) {
  if (chi < 1 || pi < 1) throw InputError("chi and pi must be positive");
  long long k = iroot_ceil(chi * pi, 3);
  return 2 * k * k + chi;
}

long long subdiv2_colours(long long pi) {
  if (pi < 1) throw InputError("pi must be positive");
  return 3 * iroot_ceil(pi, 2);
}

long long subdiv3_colours(long long pi) {
  if (pi < 1) throw InputError("pi must be positive");
  long long k = iroot_ceil(pi, 5);
  return 4 * k * k;
}

long long nonrep_sub_colours(long long pi, int max_chain) {
  if (max_chain < 0) throw InputError("chain length must be non-negative");
  if (max_chain == 0) return pi;
  return pi + std::min(max_chain, 3);
}

std::vector<BoundReport> subdiv_bounds(const SubdivQuery& q) {
  std::vector<BoundReport> out;
  if (q.n && q.d) {
    BoundReport r;
    r.name = "complete-subdivision";
    r.inputs = {{"n", static_cast<double>(*q.n)}, {"d", static_cast<double>(*q.d)}};
    r.lower = complete_subdiv_lower(*q.n, *q.d);
    r.value = static_cast<double>(complete_subdiv_upper(*q.n, *q.d));
    r.basis = "(n/2)^(1/(d+1)) <= pi(K_n^(d)) <= 9 ceil(n^(1/(d+1)))";
    out.push_back(r);
  }
  if (q.n) {
    BoundReport r;
    r.name = "complete-1-subdivision";
    r.inputs = {{"n", static_cast<double>(*q.n)}};
    r.lower = std::sqrt(static_cast<double>(*q.n));
    r.value = static_cast<double>(complete_subdiv1_colours(*q.n));
    r.basis = "labels over an N x N x N grid, N = ceil(n^(1/3)): 2N^2 + N(N-1)/2 colours";
    out.push_back(r);
    BoundReport s;
    s.name = "divisions-for-c-colours";
    s.inputs = {{"n", static_cast<double>(*q.n)}, {"c", 5}};
    s.value = subdiv_division_lower(*q.n, 5);
    s.basis = "a c-colourable subdivision of K_n subdivides some edge at least log_(c+3)(n/2) - 1 times";
    out.push_back(s);
  }
  if (q.pi) {
    BoundReport f;
    f.name = "five-colour-subdivision";
    f.inputs = {{"pi", static_cast<double>(*q.pi)}};
    f.value = static_cast<double>(five_subdiv_d(*q.pi));
    f.basis = "d = 2 ceil(17 log2 pi) + 1 divisions give 5 colours";
    out.push_back(f);
    for (int r : {4, 5, 6}) {
      BoundReport g;
      g.name = "subdivision-divisions-r" + std::to_string(r);
      g.inputs = {{"pi", static_cast<double>(*q.pi)}, {"r", r}};
      g.value = static_cast<double>(gen_subdiv_d(*q.pi, r));
      g.basis = "d = 2 ceil(log_(r-2) pi) + 1 divisions give r+2 colours";
      out.push_back(g);
    }
    BoundReport two;
    two.name = "2-subdivision";
    two.inputs = {{"pi", static_cast<double>(*q.pi)}};
    two.value = static_cast<double>(subdiv2_colours(*q.pi));
    two.basis = "3 ceil(pi^(1/2))";
    out.push_back(two);
    BoundReport three;
    three.name = "3-subdivision";
    three.inputs = {{"pi", static_cast<double>(*q.pi)}};
    three.value = static_cast<double>(subdiv3_colours(*q.pi));
    three.basis = "4 ceil(pi^(1/5))^2";
    out.push_back(three);
    if (q.chi) {
      BoundReport one;
      one.name = "1-subdivision";
      one.inputs = {{"pi", static_cast<double>(*q.pi)}, {"chi", static_cast<double>(*q.chi)}};
      one.value = static_cast<double>(subdiv1_colours(*q.chi, *q.pi));
      one.basis = "2 ceil((chi pi)^(1/3))^2 + chi";
      out.push_back(one);
    }
    if (q.d && *q.d >= 3 && *q.d % 2 == 1) {
      BoundReport dd;
      dd.name = "odd-d-subdivision";
      dd.inputs = {{"pi", static_cast<double>(*q.pi)}, {"d", static_cast<double>(*q.d)}};
      dd.value = static_cast<double>(d_subdiv_colours(*q.pi, *q.d));
      dd.basis = "ceil(pi^(2/(d-1))) + 4";
      out.push_back(dd);
    }
  }
  return out;
}

}  // namespace thuelab
