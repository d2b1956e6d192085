#include "thuelab/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "thuelab/repetition.hpp"

namespace thuelab {

std::string mode_name(ComposeMode m) {
  switch (m) {
    case ComposeMode::pi: return "pi";
    case ComposeMode::rho: return "rho";
    case ComposeMode::sigma: return "sigma";
  }
  return "unknown";
}

ComposeMode parse_mode(const std::string& s) {
  if (s == "pi") return ComposeMode::pi;
  if (s == "rho") return ComposeMode::rho;
  if (s == "sigma") return ComposeMode::sigma;
  throw InputError("unknown mode '" + s + "' (expected pi, rho or sigma)");
}

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::optional<Witness> mode_witness(const Graph& g, const std::vector<int>& col, ComposeMode mode) {
  switch (mode) {
    case ComposeMode::pi: return find_repetitive_path(g, col);
    case ComposeMode::rho: return find_repetitive_stroll(g, col);
    case ComposeMode::sigma: return find_repetitive_walk_nonboring(g, col);
  }
  return std::nullopt;
}

std::vector<int> restrict_colours(const std::vector<int>& col, const std::vector<int>& vs) {
  std::vector<int> out(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) out[i] = col[vs[i]];
  return out;
}

// Index of each vertex within vs, -1 outside.
std::vector<int> position_map(int n, const std::vector<int>& vs) {
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  return pos;
}

std::vector<std::vector<int>> restrict_bags(const std::vector<std::vector<int>>& bags, const std::vector<int>& pos) {
  std::vector<std::vector<int>> out;
  out.reserve(bags.size());
  for (const auto& b : bags) {
    std::vector<int> r;
    for (int v : b)
      if (pos[v] >= 0) r.push_back(pos[v]);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

NaiveColouring naive_colouring(const Graph& g, const std::optional<std::vector<int>>& indep) {
  NaiveColouring out;
  if (indep) {
    std::vector<int> x = *indep;
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    for (int v : x)
      if (v < 0 || v >= g.n()) throw InputError("independent set vertex out of range: " + std::to_string(v));
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (g.adjacent(x[i], x[j]))
          throw InputError("set is not independent: edge " + std::to_string(x[i]) + "-" + std::to_string(x[j]));
    out.independent_set = x;
  } else if (g.n() <= 30) {
    out.independent_set = maximum_independent_set(g);
  } else {
    // Greedy by minimum degree.
    out.exact_independent_set = false;
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
    std::vector<char> blocked(g.n(), 0);
    for (int v : order) {
      if (blocked[v]) continue;
      out.independent_set.push_back(v);
      blocked[v] = 1;
      for (int w : g.neighbours(v)) blocked[w] = 1;
    }
    std::sort(out.independent_set.begin(), out.independent_set.end());
  }
  std::vector<int> col(g.n(), -1);
  for (int v : out.independent_set) col[v] = 0;
  int next = out.independent_set.empty() ? 0 : 1;
  for (int v = 0; v < g.n(); ++v)
    if (col[v] < 0) col[v] = next++;
  out.colouring = Colouring(std::move(col));
  return out;
}

Colouring shadow_compose(const Graph& g, const Layering& lay, const std::vector<int>& layer_colour, ComposeMode mode) {
  if (static_cast<int>(layer_colour.size()) != g.n()) throw InputError("layer colouring does not match the graph");
  if (static_cast<int>(lay.depth.size()) != g.n()) throw InputError("layering does not match the graph");
  if (g.n() == 0) return Colouring({}, 0);
  for (int v = 0; v < g.n(); ++v)
    if (layer_colour[v] < 0) throw InputError("vertex " + std::to_string(v) + " has no layer colour");
  if (auto w = find_shadow_violation(g, lay))
    throw InputError("layering is not shadow-complete: layer " + std::to_string(w->layer) + " component {" +
                     join(w->component) + "} has non-adjacent shadow vertices " + std::to_string(w->a) + " and " +
                     std::to_string(w->b));
  for (std::size_t i = 0; i < lay.layers.size(); ++i) {
    const auto& vs = lay.layers[i];
    if (vs.empty()) continue;
    Graph sub = induced_subgraph(g, vs);
    if (auto w = mode_witness(sub, restrict_colours(layer_colour, vs), mode)) {
      std::vector<int> orig;
      for (int x : w->sequence) orig.push_back(vs[x]);
      throw InputError("layer " + std::to_string(i) + " colouring is not " + mode_name(mode) +
                       "-nonrepetitive: witness " + join(orig));
    }
  }
  if (mode == ComposeMode::sigma) {
    if (auto clash = common_neighbour_clash(g, layer_colour, lay.depth))
      throw InputError("vertices " + std::to_string(clash->first) + " and " + std::to_string(clash->second) +
                       " share a neighbour in the same or previous layer and have equal layer colours");
  }
  int palette = *std::max_element(layer_colour.begin(), layer_colour.end()) + 1;
  std::vector<int> spine = path_sigma4(static_cast<int>(lay.layers.size()));
  std::vector<int> col(g.n());
  for (int v = 0; v < g.n(); ++v) col[v] = spine[lay.depth[v]] * palette + layer_colour[v];
  return compact(col);
}

Colouring tree_rho4(const Graph& t, int root) {
  if (t.n() == 0) return Colouring({}, 0);
  if (!is_tree(t)) throw InputError("graph is not a tree");
  Layering lay = bfs_layering(t, root);
  return shadow_compose(t, lay, std::vector<int>(t.n(), 0), ComposeMode::rho);
}

Colouring tree_sigma(const Graph& t, int root) {
  if (t.n() == 0) return Colouring({}, 0);
  if (!is_tree(t)) throw InputError("graph is not a tree");
  Layering lay = bfs_layering(t, root);
  // Children of a common parent form a clique in the sibling graph; their
  // index among the siblings is a proper colouring of it.
  std::vector<int> beta(t.n(), 0);
  for (int v = 0; v < t.n(); ++v) {
    int idx = 0;
    for (int w : t.neighbours(v))
      if (lay.depth[w] == lay.depth[v] + 1) beta[w] = idx++;
  }
  return shadow_compose(t, lay, beta, ComposeMode::sigma);
}

namespace {

std::vector<int> treewidth_rec(const Graph& g, const TreeDecomposition& td) {
  DecompositionCheck chk = validate_tree_decomposition(g, td);
  if (!chk.ok) throw InputError("invalid tree decomposition: " + chk.violation);
  if (g.m() == 0) return std::vector<int>(g.n(), 0);
  Graph h = chordal_complete(g, td);
  Layering lay = bfs_layering(h, 0);
  std::vector<int> layer_colour(g.n(), 0);
  for (const auto& vs : lay.layers) {
    if (vs.empty()) continue;
    Graph sub = induced_subgraph(h, vs);
    TreeDecomposition sub_td{td.tree, restrict_bags(td.bags, position_map(g.n(), vs))};
    if (sub_td.width() > chk.width - 1)
      throw InputError("layer decomposition has width " + std::to_string(sub_td.width()) + ", expected at most " +
                       std::to_string(chk.width - 1));
    std::vector<int> c = treewidth_rec(sub, sub_td);
    for (std::size_t i = 0; i < vs.size(); ++i) layer_colour[vs[i]] = c[i];
  }
  return shadow_compose(h, lay, layer_colour, ComposeMode::rho).colours;
}

std::vector<int> pathwidth_rec(const Graph& g, const PathDecomposition& pd) {
  DecompositionCheck chk = validate_path_decomposition(g, pd);
  if (!chk.ok) throw InputError("invalid path decomposition: " + chk.violation);
  if (g.m() == 0) return std::vector<int>(g.n(), 0);
  const int k = chk.width;
  const int nb = static_cast<int>(pd.bags.size());

  // Pairwise disjoint bags X_1, X_2, ...: each is the first bag disjoint from its predecessor.
  std::vector<int> xpos{0};
  {
    std::vector<int> mark(g.n(), -1);
    for (int v : pd.bags[0]) mark[v] = 0;
    for (int j = 1; j < nb; ++j) {
      bool disjoint = std::none_of(pd.bags[j].begin(), pd.bags[j].end(),
                                   [&](int v) { return mark[v] == static_cast<int>(xpos.size()) - 1; });
      if (!disjoint) continue;
      xpos.push_back(j);
      for (int v : pd.bags[j]) mark[v] = static_cast<int>(xpos.size()) - 1;
    }
  }
  const int m = static_cast<int>(xpos.size());
  std::vector<int> group(g.n(), -1), index(g.n(), -1);
  for (int i = 0; i < m; ++i) {
    const auto& bag = pd.bags[xpos[i]];
    for (std::size_t j = 0; j < bag.size(); ++j) {
      group[bag[j]] = i;
      index[bag[j]] = static_cast<int>(j);
    }
  }
  // Remaining vertices: B_i holds those first seen strictly between X_i and X_(i+1).
  std::vector<int> first(g.n(), -1);
  for (int j = 0; j < nb; ++j)
    for (int v : pd.bags[j])
      if (first[v] < 0) first[v] = j;
  std::vector<int> block(g.n(), -1);
  std::vector<int> rest;
  for (int v = 0; v < g.n(); ++v) {
    if (group[v] >= 0) continue;
    block[v] = static_cast<int>(std::upper_bound(xpos.begin(), xpos.end(), first[v]) - xpos.begin()) - 1;
    rest.push_back(v);
  }

  // G' adds a clique on N(B_i); (S, X) must be a shadow-complete layering of it
  // and G'[S] must sit inside P_m strong K_(k+1).
  std::vector<Edge> edges = g.edges();
  std::vector<std::set<int>> nbhd(m);
  for (int v : rest)
    for (int w : g.neighbours(v)) {
      if (block[w] >= 0 && block[w] != block[v])
        throw InputError("vertices " + std::to_string(v) + " and " + std::to_string(w) + " lie in different gaps");
      if (group[w] >= 0) nbhd[block[v]].insert(w);
    }
  for (int i = 0; i < m; ++i) {
    std::vector<int> s(nbhd[i].begin(), nbhd[i].end());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b) edges.emplace_back(s[a], s[b]);
  }
  Graph gp = build_graph(g.n(), edges);
  for (auto [u, v] : gp.edges())
    if (group[u] >= 0 && group[v] >= 0 && std::abs(group[u] - group[v]) > 1)
      throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " skips a disjoint bag");
  std::vector<int> depth(g.n());
  for (int v = 0; v < g.n(); ++v) depth[v] = group[v] >= 0 ? 0 : 1;
  Layering lay = make_layering(gp, depth);
  if (auto w = find_shadow_violation(gp, lay))
    throw InputError("two-layer split is not shadow-complete at vertices " + std::to_string(w->a) + " and " +
                     std::to_string(w->b));

  std::vector<int> spine = path_sigma4(m);
  std::vector<int> col(g.n());
  for (int v = 0; v < g.n(); ++v)
    if (group[v] >= 0) col[v] = spine[group[v]] * (k + 1) + index[v];
  if (!rest.empty()) {
    Graph sub = induced_subgraph(g, rest);
    PathDecomposition sub_pd;
    for (auto& b : restrict_bags(pd.bags, position_map(g.n(), rest)))
      if (!b.empty()) sub_pd.bags.push_back(std::move(b));
    if (sub_pd.width() > k - 1)
      throw InputError("gap decomposition has width " + std::to_string(sub_pd.width()) + ", expected at most " +
                       std::to_string(k - 1));
    std::vector<int> c = pathwidth_rec(sub, sub_pd);
    for (std::size_t i = 0; i < rest.size(); ++i) col[rest[i]] = 4 * (k + 1) + c[i];
  }
  return compact(col).colours;
}

}  // namespace

Colouring treewidth_colour(const Graph& g, const TreeDecomposition& td) {
  if (g.n() == 0) return Colouring({}, 0);
  return compact(treewidth_rec(g, td));
}

Colouring pathwidth_colour(const Graph& g, const PathDecomposition& pd) {
  if (g.n() == 0) return Colouring({}, 0);
  return compact(pathwidth_rec(g, pd));
}

void validate_outerplanar_witness(const Graph& g, const OuterplanarWitness& w) {
  const Graph& h = w.supergraph;
  const int n = g.n();
  if (h.n() != n) throw InputError("supergraph has a different vertex count");
  for (auto [u, v] : g.edges())
    if (!h.adjacent(u, v)) throw InputError("supergraph misses edge " + std::to_string(u) + "-" + std::to_string(v));
  if (n <= 2) return;
  if (static_cast<int>(w.cycle.size()) != n) throw InputError("outer cycle must list every vertex once");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = w.cycle[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw InputError("outer cycle must list every vertex once");
    pos[v] = i;
  }
  for (int i = 0; i < n; ++i) {
    int a = w.cycle[i], b = w.cycle[(i + 1) % n];
    if (!h.adjacent(a, b)) throw InputError("outer cycle edge " + std::to_string(a) + "-" + std::to_string(b) + " missing");
  }
  if (h.m() != 2 * n - 3) throw InputError("maximal outerplanar graph needs 2n-3 edges");
  std::vector<std::pair<int, int>> chords;
  for (auto [u, v] : h.edges()) {
    int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
    if (b - a == 1 || (a == 0 && b == n - 1)) continue;
    chords.emplace_back(a, b);
  }
  std::sort(chords.begin(), chords.end());
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size() && chords[j].first < chords[i].second; ++j)
      if (chords[j].first > chords[i].first && chords[j].second > chords[i].second)
        throw InputError("chords " + std::to_string(w.cycle[chords[i].first]) + "-" +
                         std::to_string(w.cycle[chords[i].second]) + " and " +
                         std::to_string(w.cycle[chords[j].first]) + "-" + std::to_string(w.cycle[chords[j].second]) +
                         " cross");
}

Colouring outerplanar_colour(const Graph& g, const OuterplanarWitness& w, ComposeMode mode) {
  if (mode == ComposeMode::sigma) throw InputError("outerplanar construction supports pi and rho");
  validate_outerplanar_witness(g, w);
  if (g.n() == 0) return Colouring({}, 0);
  const Graph& h = w.supergraph;
  int root = w.cycle.empty() ? 0 : w.cycle[0];
  Layering lay = bfs_layering(h, root);
  std::vector<int> layer_colour(h.n(), 0);
  for (const auto& vs : lay.layers) {
    if (vs.empty()) continue;
    Graph sub = induced_subgraph(h, vs);
    for (const auto& comp : connected_components(sub)) {
      Graph path = induced_subgraph(sub, comp);
      std::vector<int> order;
      try {
        order = path_order(path);
      } catch (const InputError&) {
        std::vector<int> orig;
        for (int x : comp) orig.push_back(vs[x]);
        throw InputError("layer component {" + join(orig) + "} is not a path");
      }
      Word word = mode == ComposeMode::pi ? thue_word(order.size()) : path_sigma4(static_cast<int>(order.size()));
      for (std::size_t i = 0; i < order.size(); ++i) layer_colour[vs[comp[order[i]]]] = word[i];
    }
  }
  return shadow_compose(h, lay, layer_colour, mode);
}

ProductColouring product_colour(const Graph& g, const Graph& h, const std::vector<int>& alpha,
                                const std::vector<int>& beta, ComposeMode mode) {
  if (mode == ComposeMode::pi) throw InputError("product colouring supports rho and sigma");
  if (static_cast<int>(alpha.size()) != g.n() || static_cast<int>(beta.size()) != h.n())
    throw InputError("colouring sizes do not match the factors");
  for (int c : alpha)
    if (c < 0) throw InputError("alpha has an uncoloured vertex");
  for (int c : beta)
    if (c < 0) throw InputError("beta has an uncoloured vertex");
  auto wa = mode == ComposeMode::rho ? find_repetitive_stroll(g, alpha) : find_repetitive_walk_nonboring(g, alpha);
  if (wa) throw InputError("alpha is not " + std::string(mode == ComposeMode::rho ? "stroll" : "walk") +
                           "-nonrepetitive: witness " + join(wa->sequence));
  if (auto wb = find_repetitive_walk_nonboring(h, beta))
    throw InputError("beta is not walk-nonrepetitive: witness " + join(wb->sequence));
  ProductColouring out;
  out.product = strong_product(g, h);
  int pb = h.n() ? *std::max_element(beta.begin(), beta.end()) + 1 : 1;
  std::vector<int> col(out.product.graph.n());
  for (int v = 0; v < out.product.graph.n(); ++v) col[v] = alpha[out.product.first[v]] * pb + beta[out.product.second[v]];
  out.colouring = compact(col);
  return out;
}

Colouring product_structure_colour(const Graph& g, const ProductEmbedding& emb, const TreeDecomposition& td_h) {
  if (auto bad = embedding_violation(g, emb)) throw InputError("invalid embedding: " + *bad);
  Colouring alpha = treewidth_colour(emb.host_H, td_h);
  std::vector<int> order = path_order(emb.host_P);
  std::vector<int> pos(emb.host_P.n());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  std::vector<int> spine = path_sigma4(emb.host_P.n());
  std::vector<int> col(g.n());
  for (int v = 0; v < g.n(); ++v) {
    auto [x, p, idx] = emb.placement[v];
    col[v] = (alpha[x] * 4 + spine[pos[p]]) * emb.ell + idx;
  }
  return compact(col);
}

EdgeColouring edge_colour_hypercube_complete(int k) {
  if (k < 1 || k > 12) throw InputError("k must be between 1 and 12");
  EdgeColouring out;
  out.graph = complete_graph(1 << k);
  for (auto [u, v] : out.graph.edges()) out.colours.push_back((u ^ v) - 1);
  return out;
}

ColouredGraph extremal_witness(int n, int c) {
  if (c < 1 || n < c) throw InputError("need n >= c >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < c - 1; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  std::vector<int> col(n, c - 1);
  for (int u = 0; u < c - 1; ++u) col[u] = u;
  return {build_graph(n, edges), Colouring(col, c)};
}

ColouredGraph sigma_extremal_example(int n, int ell) {
  if (n < 1 || ell < 1) throw InputError("need n >= 1 and ell >= 1");
  std::vector<int> beta(ell);
  std::iota(beta.begin(), beta.end(), 0);
  ProductColouring pc = product_colour(path_graph(n), complete_graph(ell), path_sigma4(n), beta, ComposeMode::sigma);
  return {pc.product.graph, pc.colouring};
}

}  // namespace thuelab
