#include "thuelab/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace thuelab {

namespace {

constexpr int kMatrixLimit = 8192;

std::string edge_text(int u, int v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph::Graph(int n) {
  *this = build_graph(n, {});
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  if (words_ > 0) return (matrix_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::edge_id(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return -1;
  const auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it == a.end() || *it != v) return -1;
  return eid_[u][it - a.begin()];
}

Graph build_graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge " + edge_text(u, v) + " has an index out of range for n=" + std::to_string(n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

  Graph g;
  g.adj_.assign(n, {});
  g.eid_.assign(n, {});
  for (auto [u, v] : norm) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) std::sort(g.adj_[v].begin(), g.adj_[v].end());
  g.edges_ = std::move(norm);
  for (int v = 0; v < n; ++v) {
    g.eid_[v].resize(g.adj_[v].size());
    for (std::size_t i = 0; i < g.adj_[v].size(); ++i) {
      int w = g.adj_[v][i];
      Edge e{std::min(v, w), std::max(v, w)};
      g.eid_[v][i] = static_cast<int>(std::lower_bound(g.edges_.begin(), g.edges_.end(), e) - g.edges_.begin());
    }
  }
  if (n <= kMatrixLimit && n > 0) {
    g.words_ = (n + 63) / 64;
    g.matrix_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    for (auto [u, v] : g.edges_) {
      g.matrix_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
      g.matrix_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    }
  }
  return g;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return build_graph(a + b, e);
}

namespace {

ProductGraph product(const Graph& a, const Graph& b, bool cart, bool direct) {
  int na = a.n(), nb = b.n();
  ProductGraph p;
  p.first.resize(static_cast<std::size_t>(na) * nb);
  p.second.resize(p.first.size());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      p.first[i * nb + j] = i;
      p.second[i * nb + j] = j;
    }
  std::vector<Edge> e;
  if (cart) {
    for (int i = 0; i < na; ++i)
      for (auto [x, y] : b.edges()) e.emplace_back(i * nb + x, i * nb + y);
    for (auto [v, w] : a.edges())
      for (int j = 0; j < nb; ++j) e.emplace_back(v * nb + j, w * nb + j);
  }
  if (direct) {
    for (auto [v, w] : a.edges())
      for (auto [x, y] : b.edges()) {
        e.emplace_back(v * nb + x, w * nb + y);
        e.emplace_back(v * nb + y, w * nb + x);
      }
  }
  p.graph = build_graph(na * nb, e);
  return p;
}

}  // namespace

ProductGraph strong_product(const Graph& a, const Graph& b) { return product(a, b, true, true); }
ProductGraph cartesian_product(const Graph& a, const Graph& b) { return product(a, b, true, false); }
ProductGraph direct_product(const Graph& a, const Graph& b) { return product(a, b, false, true); }

int SubdivisionMap::max_chain() const {
  int d = 0;
  for (const auto& c : chains) d = std::max(d, static_cast<int>(c.size()));
  return d;
}

SubdivisionMap subdivide(const Graph& g, const std::vector<int>& counts) {
  if (static_cast<int>(counts.size()) != g.m())
    throw InputError("subdivision counts must be given for every edge");
  SubdivisionMap s;
  s.original = g;
  s.origin.resize(g.n());
  for (int v = 0; v < g.n(); ++v) s.origin[v].vertex = v;
  int next = g.n();
  std::vector<Edge> e;
  s.chains.resize(g.m());
  for (int id = 0; id < g.m(); ++id) {
    if (counts[id] < 0) throw InputError("negative subdivision count");
    auto [u, v] = g.edges()[id];
    int prev = u;
    for (int k = 0; k < counts[id]; ++k) {
      s.chains[id].push_back(next);
      s.origin.push_back({-1, id, k});
      e.emplace_back(prev, next);
      prev = next++;
    }
    e.emplace_back(prev, v);
  }
  s.subdivided = build_graph(next, e);
  return s;
}

SubdivisionMap subdivide_uniform(const Graph& g, int d) {
  return subdivide(g, std::vector<int>(g.m(), d));
}

Graph square(const Graph& g) {
  std::vector<Edge> e(g.edges());
  for (int v = 0; v < g.n(); ++v) {
    const auto& nb = g.neighbours(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) e.emplace_back(nb[i], nb[j]);
  }
  return build_graph(g.n(), e);
}

LineGraph line_graph(const Graph& g) {
  LineGraph l;
  l.edge_of = g.edges();
  std::vector<Edge> e;
  for (int v = 0; v < g.n(); ++v) {
    const auto& ids = g.incident_edges(v);
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) e.emplace_back(ids[i], ids[j]);
  }
  l.graph = build_graph(g.m(), e);
  return l;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> e;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbours(vertices[i]))
      if (index[w] > static_cast<int>(i)) e.emplace_back(static_cast<int>(i), index[w]);
  return build_graph(static_cast<int>(vertices.size()), e);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> seen(g.n(), 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbours(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g); }

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.neighbours(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return dist;
}

Layering make_layering(const Graph& g, const std::vector<int>& depth) {
  if (static_cast<int>(depth.size()) != g.n()) throw InputError("layering depth map has wrong size");
  Layering lay;
  lay.depth = depth;
  int t = 0;
  for (int d : depth) {
    if (d < 0) throw InputError("negative layer index");
    t = std::max(t, d + 1);
  }
  lay.layers.assign(t, {});
  for (int v = 0; v < g.n(); ++v) lay.layers[depth[v]].push_back(v);
  for (auto [u, v] : g.edges())
    if (std::abs(depth[u] - depth[v]) > 1)
      throw InputError("edge " + edge_text(u, v) + " spans layers " + std::to_string(depth[u]) + " and " +
                       std::to_string(depth[v]));
  return lay;
}

Layering bfs_layering(const Graph& g, int root) {
  if (g.n() == 0) return {};
  if (root < 0 || root >= g.n()) throw InputError("root out of range");
  std::vector<int> depth(g.n(), -1);
  auto run = [&](int s) {
    std::deque<int> q{s};
    depth[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : g.neighbours(v))
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          q.push_back(w);
        }
    }
  };
  run(root);
  for (int v = 0; v < g.n(); ++v)
    if (depth[v] < 0) run(v);
  return make_layering(g, depth);
}

std::optional<ShadowWitness> find_shadow_violation(const Graph& g, const Layering& lay) {
  if (static_cast<int>(lay.depth.size()) != g.n()) throw InputError("layering does not match the graph");
  for (auto [u, v] : g.edges())
    if (std::abs(lay.depth[u] - lay.depth[v]) > 1) throw InputError("invalid layering: edge " + edge_text(u, v));
  int t = static_cast<int>(lay.layers.size());
  std::vector<int> comp_id(g.n());
  // Deepest layer first.
  for (int i = t - 1; i >= 1; --i) {
    std::fill(comp_id.begin(), comp_id.end(), -1);
    for (int s = 0; s < g.n(); ++s) {
      if (lay.depth[s] < i || comp_id[s] >= 0) continue;
      std::vector<int> comp{s};
      comp_id[s] = s;
      std::set<int> shadow;
      for (std::size_t k = 0; k < comp.size(); ++k)
        for (int w : g.neighbours(comp[k])) {
          if (lay.depth[w] >= i && comp_id[w] < 0) {
            comp_id[w] = s;
            comp.push_back(w);
          } else if (lay.depth[w] == i - 1) {
            shadow.insert(w);
          }
        }
      std::vector<int> sh(shadow.begin(), shadow.end());
      for (std::size_t a = 0; a < sh.size(); ++a)
        for (std::size_t b = a + 1; b < sh.size(); ++b)
          if (!g.adjacent(sh[a], sh[b])) {
            std::sort(comp.begin(), comp.end());
            return ShadowWitness{i, comp, sh[a], sh[b]};
          }
    }
  }
  return std::nullopt;
}

bool is_shadow_complete(const Graph& g, const Layering& lay) { return !find_shadow_violation(g, lay); }

int TreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

int PathDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w - 1;
}

TreeDecomposition PathDecomposition::as_tree() const {
  TreeDecomposition td;
  td.tree = path_graph(static_cast<int>(bags.size()));
  td.bags = bags;
  return td;
}

DecompositionCheck validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  DecompositionCheck r;
  int nb = static_cast<int>(td.bags.size());
  if (td.tree.n() != nb) {
    r.violation = "tree has " + std::to_string(td.tree.n()) + " nodes but there are " + std::to_string(nb) + " bags";
    return r;
  }
  if (nb == 0) {
    if (g.n() == 0) {
      r.ok = true;
      r.width = -1;
    } else {
      r.violation = "no bags";
    }
    return r;
  }
  if (!is_tree(td.tree)) {
    r.violation = "decomposition tree is not a tree";
    return r;
  }
  std::vector<std::vector<int>> holders(g.n());
  for (int x = 0; x < nb; ++x) {
    std::vector<int> bag = td.bags[x];
    std::sort(bag.begin(), bag.end());
    if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      r.violation = "bag " + std::to_string(x) + " repeats a vertex";
      return r;
    }
    for (int v : bag) {
      if (v < 0 || v >= g.n()) {
        r.violation = "bag " + std::to_string(x) + " contains unknown vertex " + std::to_string(v);
        return r;
      }
      holders[v].push_back(x);
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (holders[v].empty()) {
      r.violation = "vertex " + std::to_string(v) + " is in no bag";
      return r;
    }
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (int x : holders[u])
      if (std::find(td.bags[x].begin(), td.bags[x].end(), v) != td.bags[x].end()) {
        found = true;
        break;
      }
    if (!found) {
      r.violation = "edge " + edge_text(u, v) + " is in no bag";
      return r;
    }
  }
  std::vector<int> mark(nb, -1);
  for (int v = 0; v < g.n(); ++v) {
    for (int x : holders[v]) mark[x] = v;
    std::vector<int> stack{holders[v][0]};
    std::vector<char> seen(nb, 0);
    seen[holders[v][0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : td.tree.neighbours(x))
        if (!seen[y] && mark[y] == v) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != holders[v].size()) {
      r.violation = "bags containing vertex " + std::to_string(v) + " are not connected in the tree";
      return r;
    }
  }
  r.ok = true;
  r.width = td.width();
  return r;
}

DecompositionCheck validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  return validate_tree_decomposition(g, pd.as_tree());
}

Graph chordal_complete(const Graph& g, const TreeDecomposition& td) {
  auto check = validate_tree_decomposition(g, td);
  if (!check.ok) throw InputError("invalid tree decomposition: " + check.violation);
  std::vector<Edge> e(g.edges());
  for (const auto& bag : td.bags)
    for (std::size_t i = 0; i < bag.size(); ++i)
      for (std::size_t j = i + 1; j < bag.size(); ++j) e.emplace_back(bag[i], bag[j]);
  return build_graph(g.n(), e);
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search; the reverse visiting order is a perfect
  // elimination ordering iff the graph is chordal.
  int n = g.n();
  std::vector<int> weight(n, 0), order, pos(n, -1);
  std::vector<char> done(n, 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
    done[best] = 1;
    pos[best] = step;
    order.push_back(best);
    for (int w : g.neighbours(best))
      if (!done[w]) ++weight[w];
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> earlier;
    for (int w : g.neighbours(v))
      if (pos[w] < pos[v]) earlier.push_back(w);
    if (earlier.empty()) continue;
    int parent = *std::max_element(earlier.begin(), earlier.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    for (int w : earlier)
      if (w != parent && !g.adjacent(w, parent)) return false;
  }
  return true;
}

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += __builtin_popcountll(w);
  return c;
}

void clique_search(const std::vector<Bits>& nbr, std::vector<int>& cur, Bits cand, std::vector<int>& best) {
  if (popcount(cand) == 0) {
    if (cur.size() > best.size()) best = cur;
    return;
  }
  while (true) {
    int cnt = popcount(cand);
    if (cnt == 0 || cur.size() + cnt <= best.size()) return;
    int v = -1;
    for (std::size_t w = 0; w < cand.size(); ++w)
      if (cand[w]) {
        v = static_cast<int>(w * 64 + __builtin_ctzll(cand[w]));
        break;
      }
    cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    Bits next(cand.size());
    for (std::size_t w = 0; w < cand.size(); ++w) next[w] = cand[w] & nbr[v][w];
    cur.push_back(v);
    clique_search(nbr, cur, next, best);
    cur.pop_back();
  }
}

std::vector<int> max_clique_impl(int n, const std::function<bool(int, int)>& adj) {
  int words = (n + 63) / 64;
  std::vector<Bits> nbr(n, Bits(words, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && adj(u, v)) nbr[u][v >> 6] |= std::uint64_t{1} << (v & 63);
  Bits all(words, 0);
  for (int v = 0; v < n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<int> cur, best;
  clique_search(nbr, cur, all, best);
  std::sort(best.begin(), best.end());
  return best;
}

}  // namespace

int clique_number(const Graph& g) {
  return static_cast<int>(max_clique_impl(g.n(), [&](int u, int v) { return g.adjacent(u, v); }).size());
}

std::vector<int> maximum_independent_set(const Graph& g) {
  return max_clique_impl(g.n(), [&](int u, int v) { return !g.adjacent(u, v); });
}

std::optional<std::string> embedding_violation(const Graph& g, const ProductEmbedding& emb) {
  if (static_cast<int>(emb.placement.size()) != g.n()) return "placement size differs from the vertex count";
  if (emb.ell < 1) return "clique size must be positive";
  if (!is_connected(emb.host_P) || emb.host_P.m() != emb.host_P.n() - 1 || emb.host_P.max_degree() > 2)
    return "host_P is not a path";
  std::set<std::array<int, 3>> used;
  for (int v = 0; v < g.n(); ++v) {
    auto p = emb.placement[v];
    if (p[0] < 0 || p[0] >= emb.host_H.n() || p[1] < 0 || p[1] >= emb.host_P.n() || p[2] < 0 || p[2] >= emb.ell)
      return "vertex " + std::to_string(v) + " is placed outside the host";
    if (!used.insert(p).second) return "placement is not injective at vertex " + std::to_string(v);
  }
  for (auto [u, v] : g.edges()) {
    auto a = emb.placement[u], b = emb.placement[v];
    bool h = a[0] == b[0] || emb.host_H.adjacent(a[0], b[0]);
    bool p = a[1] == b[1] || emb.host_P.adjacent(a[1], b[1]);
    if (!h || !p) return "edge " + edge_text(u, v) + " does not map to an edge of the host product";
  }
  return std::nullopt;
}

std::vector<int> path_order(const Graph& g) {
  if (g.n() == 0) return {};
  if (!is_connected(g) || g.m() != g.n() - 1 || g.max_degree() > 2) throw InputError("graph is not a path");
  int start = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < g.n()) {
    int next = -1;
    for (int w : g.neighbours(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
    order.push_back(cur);
  }
  return order;
}

}  // namespace thuelab
