#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

namespace thuelab::oracle {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_colouring(int n, int k, Rng& rng) {
  std::vector<int> c(n);
  for (int& x : c) x = uniform_int(rng, 0, k - 1);
  return c;
}

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return build_graph(n, e);
}

Graph random_tree(int n, Rng& rng) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(uniform_int(rng, 0, v - 1), v);
  // Relabel so the root is not always vertex 0.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : e) {
    a = perm[a];
    b = perm[b];
  }
  return build_graph(n, e);
}

Graph random_bounded_degree(int n, int delta, double p, Rng& rng) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution coin(p);
  std::vector<int> deg(n, 0);
  std::vector<Edge> e;
  for (auto [u, v] : all)
    if (deg[u] < delta && deg[v] < delta && coin(rng)) {
      e.emplace_back(u, v);
      ++deg[u];
      ++deg[v];
    }
  return build_graph(n, e);
}

DecomposedGraph random_partial_ktree(int n, int k, double keep, Rng& rng) {
  std::bernoulli_distribution coin(keep);
  std::vector<Edge> edges;
  std::vector<std::vector<int>> bags;
  std::vector<Edge> tree;
  int base = std::min(n, k + 1);
  std::vector<int> first(base);
  std::iota(first.begin(), first.end(), 0);
  bags.push_back(first);
  for (int u = 0; u < base; ++u)
    for (int v = u + 1; v < base; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  for (int v = base; v < n; ++v) {
    int b = uniform_int(rng, 0, static_cast<int>(bags.size()) - 1);
    std::vector<int> bag = bags[b];
    if (static_cast<int>(bag.size()) == k + 1) bag.erase(bag.begin() + uniform_int(rng, 0, k));
    for (int u : bag)
      if (coin(rng)) edges.emplace_back(u, v);
    bag.push_back(v);
    tree.emplace_back(b, static_cast<int>(bags.size()));
    bags.push_back(bag);
  }
  DecomposedGraph out;
  out.graph = build_graph(n, edges);
  out.td.bags = bags;
  out.td.tree = build_graph(static_cast<int>(bags.size()), tree);
  return out;
}

PathDecomposedGraph random_caterpillar(int n, Rng& rng) {
  int spine = std::max(1, uniform_int(rng, 1, std::max(1, n / 2)));
  spine = std::min(spine, n);
  std::vector<std::vector<int>> leaves(spine);
  for (int v = spine; v < n; ++v) leaves[uniform_int(rng, 0, spine - 1)].push_back(v);
  std::vector<Edge> edges;
  PathDecomposition pd;
  for (int i = 0; i < spine; ++i) {
    pd.bags.push_back({i});
    for (int l : leaves[i]) {
      edges.emplace_back(i, l);
      pd.bags.push_back({i, l});
    }
    if (i + 1 < spine) {
      edges.emplace_back(i, i + 1);
      pd.bags.push_back({i, i + 1});
    }
  }
  return {build_graph(n, edges), pd};
}

bool has_square(const std::vector<int>& w) {
  const std::size_t n = w.size();
  for (std::size_t h = 1; 2 * h <= n; ++h)
    for (std::size_t s = 0; s + 2 * h <= n; ++s)
      if (std::equal(w.begin() + s, w.begin() + s + h, w.begin() + s + h)) return true;
  return false;
}

namespace {

bool halves_match(const std::vector<int>& seq, const std::vector<int>& col) {
  std::size_t t = seq.size() / 2;
  for (std::size_t i = 0; i < t; ++i)
    if (col[seq[i]] != col[seq[t + i]]) return false;
  return true;
}

}  // namespace

bool path_repetitive(const Graph& g, const std::vector<int>& col) {
  const int n = g.n();
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  std::function<bool()> dfs = [&]() -> bool {
    if (seq.size() % 2 == 0 && halves_match(seq, col)) return true;
    for (int w = 0; w < n; ++w)
      if (!used[w] && g.adjacent(seq.back(), w)) {
        used[w] = 1;
        seq.push_back(w);
        if (dfs()) return true;
        seq.pop_back();
        used[w] = 0;
      }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    seq.assign(1, s);
    used.assign(n, 0);
    used[s] = 1;
    if (dfs()) return true;
  }
  return false;
}

bool walk_repetitive(const Graph& g, const std::vector<int>& col, Step step, Offdiag off, int max_half) {
  const int n = g.n();
  auto related = [&](int u, int v) { return g.adjacent(u, v) || (step == Step::touch && u == v); };
  using State = std::tuple<int, int, int, bool>;  // a_i, b_i, b_1, differs so far
  std::set<State> layer;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (col[a] != col[b]) continue;
      if (off == Offdiag::all && a == b) continue;
      layer.insert({a, b, b, a != b});
    }
  for (int t = 1; t <= max_half && !layer.empty(); ++t) {
    for (auto [a, b, b1, d] : layer)
      if (related(a, b1) && (off == Offdiag::all || d)) return true;
    std::set<State> next;
    for (auto [a, b, b1, d] : layer)
      for (int a2 = 0; a2 < n; ++a2) {
        if (!related(a, a2)) continue;
        for (int b2 = 0; b2 < n; ++b2) {
          if (!related(b, b2) || col[a2] != col[b2]) continue;
          if (off == Offdiag::all && a2 == b2) continue;
          next.insert({a2, b2, b1, d || a2 != b2});
        }
      }
    layer = std::move(next);
  }
  return false;
}

bool stroll_repetitive(const Graph& g, const std::vector<int>& col) {
  return walk_repetitive(g, col, Step::adjacent, Offdiag::all, 2 * g.n() * g.n());
}

bool walk_nonboring_repetitive(const Graph& g, const std::vector<int>& col) {
  return walk_repetitive(g, col, Step::adjacent, Offdiag::some, 2 * g.n() * g.n());
}

bool lazy_path_repetitive(const Graph& g, const std::vector<int>& col, int cap) {
  const int n = g.n();
  std::vector<int> seq;
  std::function<bool()> dfs = [&]() -> bool {
    if (seq.size() % 2 == 0 && seq.front() != seq.back() && halves_match(seq, col)) return true;
    if (static_cast<int>(seq.size()) >= cap) return false;
    int last = seq.back();
    for (int w = 0; w < n; ++w) {
      if (w != last && !g.adjacent(last, w)) continue;
      // A vertex may only repeat as a run of consecutive copies.
      if (w != last && std::find(seq.begin(), seq.end(), w) != seq.end()) continue;
      seq.push_back(w);
      if (dfs()) return true;
      seq.pop_back();
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    seq.assign(1, s);
    if (dfs()) return true;
  }
  return false;
}

bool edge_path_repetitive(const Graph& g, const std::vector<int>& edge_col) {
  const int n = g.n();
  std::vector<int> verts, cols;
  std::vector<char> used(n, 0);
  std::function<bool()> dfs = [&]() -> bool {
    std::size_t m = cols.size();
    if (m > 0 && m % 2 == 0 && std::equal(cols.begin(), cols.begin() + m / 2, cols.begin() + m / 2)) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      int e = g.edge_id(verts.back(), w);
      if (e < 0) continue;
      used[w] = 1;
      verts.push_back(w);
      cols.push_back(edge_col[e]);
      if (dfs()) return true;
      cols.pop_back();
      verts.pop_back();
      used[w] = 0;
    }
    return false;
  };
  for (int s = 0; s < n; ++s) {
    verts.assign(1, s);
    cols.clear();
    used.assign(n, 0);
    used[s] = 1;
    if (dfs()) return true;
  }
  return false;
}

namespace {

bool repetitive(const Graph& g, const std::vector<int>& col, Target t) {
  switch (t) {
    case Target::path: return path_repetitive(g, col);
    case Target::stroll: return stroll_repetitive(g, col);
    case Target::walk: return walk_nonboring_repetitive(g, col);
  }
  return true;
}

}  // namespace

int brute_chromatic(const Graph& g, Target target) {
  const int n = g.n();
  if (n == 0) return 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> col(n, 0);
    bool found = false;
    // Restricted growth strings: col[i] <= 1 + max(col[0..i-1]).
    std::function<void(int, int)> rec = [&](int i, int top) {
      if (found) return;
      if (i == n) {
        if (!repetitive(g, col, target)) found = true;
        return;
      }
      for (int c = 0; c <= std::min(top + 1, k - 1); ++c) {
        col[i] = c;
        rec(i + 1, std::max(top, c));
        if (found) return;
      }
    };
    rec(0, -1);
    if (found) return k;
  }
  return n;
}

BigInt brute_count(const Graph& g, const std::vector<std::vector<int>>& lists, Target target) {
  const int n = g.n();
  std::vector<int> col(n);
  BigInt total = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!repetitive(g, col, target)) ++total;
      return;
    }
    for (int c : lists[i]) {
      col[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return total;
}

}  // namespace thuelab::oracle
