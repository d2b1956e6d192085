#include "thuelab/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <numeric>

#include "thuelab/repetition.hpp"

namespace thuelab {

std::string parameter_name(Parameter p) {
  switch (p) {
    case Parameter::pi: return "pi";
    case Parameter::rho: return "rho";
    case Parameter::sigma: return "sigma";
    case Parameter::pi_prime: return "pi-prime";
    case Parameter::star: return "star";
  }
  return "unknown";
}

Parameter parse_parameter(const std::string& s) {
  for (Parameter p : {Parameter::pi, Parameter::rho, Parameter::sigma, Parameter::pi_prime, Parameter::star})
    if (parameter_name(p) == s) return p;
  throw InputError("unknown parameter '" + s + "' (expected pi, rho, sigma, pi-prime or star)");
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* s = std::getenv("THUELAB_BUDGET");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end) throw InputError(std::string("THUELAB_BUDGET is not a number: ") + s);
  return v;
}

namespace {

// Returns false if assigning col[v] created a forbidden structure.
using Check = std::function<bool(const std::vector<int>&, int)>;

struct Shared {
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t budget = 0;
  double time_limit = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

class Engine {
 public:
  Engine(const std::vector<int>& order, const Check& check, Shared& sh) : order_(order), check_(check), sh_(sh) {}

  bool run(std::vector<int>& col, int idx, int used, int k) {
    if (idx == static_cast<int>(order_.size())) return true;
    int v = order_[idx];
    int lim = std::min(k, used + 1);
    for (int c = 0; c < lim; ++c) {
      if (sh_.stop.load(std::memory_order_relaxed)) break;
      if (!tick()) break;
      col[v] = c;
      if (check_(col, v) && run(col, idx + 1, std::max(used, c + 1), k)) return true;
    }
    col[v] = -1;
    return false;
  }

 private:
  bool tick() {
    std::uint64_t n = sh_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (sh_.budget && n > sh_.budget) {
      sh_.exhausted = true;
      sh_.stop = true;
      return false;
    }
    if (sh_.time_limit > 0 && (n & 4095) == 0) {
      double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - sh_.start).count();
      if (el > sh_.time_limit) {
        sh_.exhausted = true;
        sh_.stop = true;
        return false;
      }
    }
    return true;
  }

  const std::vector<int>& order_;
  const Check& check_;
  Shared& sh_;
};

struct Feasibility {
  bool found = false;
  std::vector<int> col;
};

// Canonical prefixes of the first `depth` variables that pass the check.
void prefixes(const std::vector<int>& order, const Check& check, int depth, int k, std::vector<int>& col, int idx,
              int used, std::vector<std::pair<std::vector<int>, int>>& out) {
  if (idx == depth) {
    out.emplace_back(col, used);
    return;
  }
  int v = order[idx];
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    col[v] = c;
    if (check(col, v)) prefixes(order, check, depth, k, col, idx + 1, std::max(used, c + 1), out);
  }
  col[order[idx]] = -1;
}

Feasibility feasible(int nvars, const std::vector<int>& order, const Check& check, int k, Shared& sh, int threads) {
  Feasibility r;
  std::vector<int> col(nvars, -1);
  if (threads <= 1 || nvars < 4) {
    Engine e(order, check, sh);
    r.found = e.run(col, 0, 0, k);
    if (r.found) r.col = col;
    return r;
  }
  int depth = std::min(nvars - 1, 4);
  std::vector<std::pair<std::vector<int>, int>> tasks;
  prefixes(order, check, depth, k, col, 0, 0, tasks);
  std::atomic<std::size_t> next{0};
  std::vector<std::future<std::optional<std::vector<int>>>> futs;
  for (int t = 0; t < threads; ++t)
    futs.push_back(std::async(std::launch::async, [&]() -> std::optional<std::vector<int>> {
      Engine e(order, check, sh);
      while (!sh.stop.load()) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size()) break;
        std::vector<int> c = tasks[i].first;
        if (e.run(c, depth, tasks[i].second, k)) {
          sh.stop = true;
          return c;
        }
      }
      return std::nullopt;
    }));
  for (auto& f : futs) {
    auto c = f.get();
    if (c && !r.found) {
      r.found = true;
      r.col = *c;
    }
  }
  return r;
}

SolveResult deepen(Parameter p, int nvars, const std::vector<int>& order, const Check& check, int lb,
                   const std::vector<int>& fallback, const SolveOptions& opt) {
  SolveResult res;
  res.parameter = p;
  if (nvars == 0) {
    res.exact = true;
    return res;
  }
  Shared sh;
  sh.budget = opt.node_budget;
  sh.time_limit = opt.time_limit_seconds;
  for (int k = std::max(lb, 1); k <= nvars; ++k) {
    auto f = feasible(nvars, order, check, k, sh, opt.threads);
    if (sh.exhausted && !f.found) {
      res.lower_bound = k;
      res.value = opt.upper_hint ? *opt.upper_hint : compact(fallback).used();
      res.witness = fallback;
      res.nodes = sh.nodes;
      res.exact = false;
      return res;
    }
    sh.stop = false;
    if (f.found) {
      res.value = k;
      res.lower_bound = k;
      res.witness = f.col;
      res.nodes = sh.nodes;
      res.exact = true;
      return res;
    }
  }
  res.value = compact(fallback).used();
  res.lower_bound = res.value;
  res.witness = fallback;
  res.nodes = sh.nodes;
  res.exact = true;
  return res;
}

std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

std::vector<int> distinct(int n) {
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 0);
  return c;
}

bool proper_at(const Graph& g, const std::vector<int>& col, int v) {
  for (int w : g.neighbours(v))
    if (col[w] == col[v]) return false;
  return true;
}

bool no_bicoloured_p4_at(const Graph& g, const std::vector<int>& col, int v) {
  auto bad = [&](int a, int b, int c, int d) {
    return col[a] >= 0 && col[b] >= 0 && col[a] == col[c] && col[b] == col[d];
  };
  for (int b : g.neighbours(v)) {
    if (col[b] < 0) continue;
    for (int c : g.neighbours(b)) {
      if (c == v || col[c] < 0) continue;
      for (int d : g.neighbours(c))
        if (d != v && d != b && bad(v, b, c, d)) return false;
    }
  }
  for (int a : g.neighbours(v)) {
    if (col[a] < 0) continue;
    for (int c : g.neighbours(v)) {
      if (c == a || col[c] < 0) continue;
      for (int d : g.neighbours(c))
        if (d != v && d != a && bad(a, v, c, d)) return false;
    }
  }
  return true;
}

int vertex_lower_bound(const Graph& g) { return g.n() == 0 ? 0 : std::max(1, clique_number(g)); }

}  // namespace

bool is_star_colouring(const Graph& g, const std::vector<int>& col) {
  for (int v = 0; v < g.n(); ++v)
    if (!proper_at(g, col, v) || !no_bicoloured_p4_at(g, col, v)) return false;
  return true;
}

SolveResult pi_exact(const Graph& g, const SolveOptions& opt) {
  RepetitivePathFinder finder(g);
  Check check = [&](const std::vector<int>& col, int v) { return !finder.through(col, v); };
  return deepen(Parameter::pi, g.n(), degree_order(g), check, vertex_lower_bound(g), distinct(g.n()), opt);
}

SolveResult rho_exact(const Graph& g, const SolveOptions& opt) {
  Check check = [&](const std::vector<int>& col, int v) {
    return proper_at(g, col, v) && !find_repetitive_stroll(g, col);
  };
  return deepen(Parameter::rho, g.n(), degree_order(g), check, vertex_lower_bound(g), distinct(g.n()), opt);
}

SolveResult sigma_exact(const Graph& g, const SolveOptions& opt) {
  Check check = [&](const std::vector<int>& col, int v) {
    // Two equal colours at distance at most two always give the walk u,x,w,x.
    for (int x : g.neighbours(v)) {
      if (col[x] == col[v]) return false;
      for (int w : g.neighbours(x))
        if (w != v && col[w] == col[v]) return false;
    }
    return !find_repetitive_stroll(g, col);
  };
  int lb = g.n() == 0 ? 0 : std::max(vertex_lower_bound(g), g.max_degree() + 1);
  return deepen(Parameter::sigma, g.n(), degree_order(g), check, lb, distinct(g.n()), opt);
}

SolveResult star_chromatic_exact(const Graph& g, const SolveOptions& opt) {
  Check check = [&](const std::vector<int>& col, int v) {
    return proper_at(g, col, v) && no_bicoloured_p4_at(g, col, v);
  };
  return deepen(Parameter::star, g.n(), degree_order(g), check, vertex_lower_bound(g), distinct(g.n()), opt);
}

SolveResult pi_prime_exact(const Graph& g, const SolveOptions& opt) {
  // Edges in breadth-first order so partial colourings stay connected.
  std::vector<int> order;
  std::vector<char> seen(g.m(), 0);
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> vq{s};
    std::vector<char> vis(g.n(), 0);
    vis[s] = 1;
    for (std::size_t i = 0; i < vq.size(); ++i) {
      int v = vq[i];
      const auto& nb = g.neighbours(v);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        int e = g.incident_edges(v)[j];
        if (!seen[e]) {
          seen[e] = 1;
          order.push_back(e);
        }
        if (!vis[nb[j]]) {
          vis[nb[j]] = 1;
          vq.push_back(nb[j]);
        }
      }
    }
  }
  Check check = [&](const std::vector<int>& col, int) { return !find_repetitive_edge_path(g, col); };
  int lb = g.m() == 0 ? 0 : g.max_degree();
  return deepen(Parameter::pi_prime, g.m(), order, check, lb, distinct(g.m()), opt);
}

SolveResult solve(const Graph& g, Parameter p, const SolveOptions& opt) {
  switch (p) {
    case Parameter::pi: return pi_exact(g, opt);
    case Parameter::rho: return rho_exact(g, opt);
    case Parameter::sigma: return sigma_exact(g, opt);
    case Parameter::pi_prime: return pi_prime_exact(g, opt);
    case Parameter::star: return star_chromatic_exact(g, opt);
  }
  throw InputError("unknown parameter");
}

BigInt count_colourings(const Graph& g, const ListAssignment& lists, CountKind kind, std::uint64_t node_budget) {
  int n = g.n();
  if (lists.size() != n) throw InputError("list assignment does not match the vertex count");
  for (int v = 0; v < n; ++v)
    if (lists.lists[v].empty()) throw InputError("empty list at vertex " + std::to_string(v));
  if (n == 0) return 1;

  std::vector<int> order;
  {
    std::vector<char> vis(n, 0);
    for (int s = 0; s < n; ++s) {
      if (vis[s]) continue;
      vis[s] = 1;
      std::size_t begin = order.size();
      order.push_back(s);
      for (std::size_t i = begin; i < order.size(); ++i)
        for (int w : g.neighbours(order[i]))
          if (!vis[w]) {
            vis[w] = 1;
            order.push_back(w);
          }
    }
  }
  RepetitivePathFinder finder(g);
  std::vector<int> col(n, -1);
  auto ok = [&](int v) {
    if (!proper_at(g, col, v)) return false;
    if (kind == CountKind::path) return !finder.through(col, v);
    return !find_repetitive_stroll(g, col);
  };
  std::uint64_t nodes = 0;
  auto tick = [&] {
    if (node_budget && ++nodes > node_budget) throw BudgetExceeded("counting exceeded the node budget");
  };
  BigInt total = 0;

  // Uniform lists: only the equality pattern matters, so enumerate colourings
  // in first-occurrence order and weight each by a falling factorial.
  std::vector<int> sorted0 = lists.lists[0];
  std::sort(sorted0.begin(), sorted0.end());
  sorted0.erase(std::unique(sorted0.begin(), sorted0.end()), sorted0.end());
  bool uniform = lists.is_uniform();
  if (uniform) {
    int L = static_cast<int>(sorted0.size());
    std::vector<BigInt> falling(L + 1);
    falling[0] = 1;
    for (int i = 1; i <= L; ++i) falling[i] = falling[i - 1] * (L - i + 1);
    auto rec = [&](auto&& self, int idx, int used) -> void {
      if (idx == n) {
        total += falling[used];
        return;
      }
      int v = order[idx];
      for (int c = 0; c < std::min(L, used + 1); ++c) {
        tick();
        col[v] = c;
        if (ok(v)) self(self, idx + 1, std::max(used, c + 1));
      }
      col[v] = -1;
    };
    rec(rec, 0, 0);
    return total;
  }
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      total += 1;
      return;
    }
    int v = order[idx];
    std::vector<int> l = lists.lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    for (int c : l) {
      tick();
      col[v] = c;
      if (ok(v)) self(self, idx + 1);
    }
    col[v] = -1;
  };
  rec(rec, 0);
  return total;
}

}  // namespace thuelab
