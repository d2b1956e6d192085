#include "thuelab/subdiv.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>

#include "thuelab/bounds.hpp"

namespace thuelab {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Compacted copy of a nonrepetitive colouring of g; throws if it is not one.
std::vector<int> checked_phi(const Graph& g, const std::vector<int>& phi) {
  if (static_cast<int>(phi.size()) != g.n()) throw InputError("colouring does not match the graph");
  for (int c : phi)
    if (c < 0) throw InputError("colouring has an uncoloured vertex");
  RepetitivePathFinder finder(g);
  PathSearch s = finder.search(phi, std::nullopt, 100'000'000ULL);
  if (s.witness) throw InputError("base colouring is repetitive on path " + join(s.witness->sequence));
  if (!s.complete) throw InputError("base colouring could not be verified within the node budget");
  return compact(phi).colours;
}

int palette_of(const std::vector<int>& c) {
  int p = 0;
  for (int x : c) p = std::max(p, x + 1);
  return p;
}

SubdivColouring finish(SubdivisionMap map, std::vector<int> col, std::string scheme) {
  SubdivColouring out;
  out.map = std::move(map);
  out.colouring = compact(col);
  out.scheme = std::move(scheme);
  return out;
}

}  // namespace

SubdivColouring subdiv_plus(const Graph& g, const std::vector<int>& phi, const SubdivisionMap& sub,
                            const std::vector<char>& reverse) {
  if (sub.original.n() != g.n() || sub.original.edges() != g.edges())
    throw InputError("subdivision map is not over the given graph");
  if (!reverse.empty() && static_cast<int>(reverse.size()) != g.m())
    throw InputError("orientation must be given for every edge");
  std::vector<int> base = checked_phi(g, phi);
  const int k = palette_of(base);
  const int len = sub.max_chain();
  std::vector<int> col(sub.subdivided.n(), -1);
  for (int v = 0; v < g.n(); ++v) col[v] = base[v];
  Word word = len >= 3 ? thue_word(len) : Word{};
  for (int e = 0; e < g.m(); ++e) {
    const auto& ch = sub.chains[e];
    int d = static_cast<int>(ch.size());
    for (int p = 0; p < d; ++p) {
      int v = (!reverse.empty() && reverse[e]) ? ch[d - 1 - p] : ch[p];
      if (len <= 1) col[v] = k;
      else if (len == 2) col[v] = k + p;
      else col[v] = k + word[p];
    }
  }
  std::string scheme = len <= 0 ? "plus-none" : len == 1 ? "plus-a" : len == 2 ? "plus-b" : "plus-c";
  SubdivColouring out;
  out.map = sub;
  // Keep the base palette: the new colours sit above it.
  out.colouring = Colouring(col, palette_of(col));
  out.scheme = scheme;
  return out;
}

std::vector<Word> enumerate_nonrep_path_colourings(int t, int r, std::size_t limit) {
  return enumerate_square_free(t, r, limit);
}

SubdivColouring subdiv_lemma_colour(const Graph& g, const std::vector<int>& phi, int t, int r) {
  if (t < 1 || r < 1) throw InputError("need t >= 1 and r >= 1");
  std::vector<int> base = checked_phi(g, phi);
  const int k = std::max(1, palette_of(base));
  std::vector<Word> words = enumerate_square_free(t, r, static_cast<std::size_t>(k));
  if (static_cast<int>(words.size()) < k)
    throw InputError("only " + std::to_string(words.size()) + " square-free words of length " + std::to_string(t) +
                     " over " + std::to_string(r) + " symbols; the base colouring uses " + std::to_string(k));
  SubdivisionMap map = subdivide_uniform(g, 2 * t + 1);
  std::vector<int> col(map.subdivided.n());
  for (int v = 0; v < g.n(); ++v) col[v] = r;
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    const auto& ch = map.chains[e];
    for (int p = 0; p < t; ++p) col[ch[p]] = words[base[u]][p];
    col[ch[t]] = r + 1;
    for (int p = t + 1; p <= 2 * t; ++p) col[ch[p]] = words[base[v]][2 * t - p];
  }
  SubdivColouring out;
  out.map = std::move(map);
  out.colouring = Colouring(col, g.m() ? r + 2 : r + 1);
  out.scheme = "lemma";
  return out;
}

FiveSubdiv five_subdiv(const Graph& g, const std::vector<int>& phi, int k_upper) {
  int k = compact(phi).used();
  if (k_upper < std::max(k, 1)) throw InputError("k_upper is below the colours used by phi");
  int t = 1;
  while (static_cast<int>(enumerate_square_free(t, 3, static_cast<std::size_t>(k)).size()) < std::max(k, 1)) ++t;
  FiveSubdiv out;
  out.t = t;
  out.d = 2 * t + 1;
  out.guarantee = five_subdiv_d(k_upper);
  out.result = subdiv_lemma_colour(g, phi, t, 3);
  out.result.scheme = "five";
  return out;
}

SubdivColouring d_subdiv_colour(const Graph& g, const std::vector<int>& phi, int d) {
  if (d < 3 || d % 2 == 0) throw InputError("d must be odd and at least 3; even d is unsupported");
  int t = (d - 1) / 2;
  int k = std::max(1, compact(phi).used());
  int r = static_cast<int>(iroot_ceil(k, t)) + 2;
  SubdivColouring out = subdiv_lemma_colour(g, phi, t, r);
  out.scheme = "odd-d";
  return out;
}

SubdivColouring four_subdiv(const Graph& g, const std::vector<int>& order_in) {
  const int n = g.n();
  if (n == 0) return finish(subdivide_uniform(g, 0), {}, "four");
  if (!is_connected(g)) throw InputError("graph must be connected");
  std::vector<int> order = order_in;
  if (order.empty()) {
    std::vector<char> seen(n, 0);
    order.push_back(0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int w : g.neighbours(order[i]))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  if (static_cast<int>(order.size()) != n) throw InputError("order must list every vertex once");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) throw InputError("order must list every vertex once");
    pos[order[i]] = i;
  }
  std::vector<int> dist = bfs_distances(g, order[0]);
  for (int i = 1; i < n; ++i)
    if (dist[order[i]] < dist[order[i - 1]])
      throw InputError("order is not by non-decreasing distance from " + std::to_string(order[0]));
  std::vector<int> counts(g.m());
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    counts[e] = 2 * std::abs(pos[u] - pos[v]) - 1;
  }
  SubdivisionMap map = subdivide(g, counts);
  std::vector<int> depth(map.subdivided.n());
  for (int v = 0; v < n; ++v) depth[v] = 2 * pos[v];
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    int du = depth[u], step = depth[v] > du ? 1 : -1;
    for (std::size_t p = 0; p < map.chains[e].size(); ++p) depth[map.chains[e][p]] = du + step * static_cast<int>(p + 1);
  }
  std::vector<int> spine = path_sigma4(2 * n + 1);
  std::vector<int> col(depth.size());
  for (std::size_t v = 0; v < depth.size(); ++v) col[v] = spine[depth[v]];
  return finish(std::move(map), std::move(col), "four");
}

SubdivColouring complete_subdiv_colour(int n, int d, int a, int b) {
  if (n < 1) throw InputError("n must be positive");
  if (d < 2 || a < 1 || b < 2) throw InputError("need d >= 2, A >= 1 and B >= 2");
  long double cap = a * std::pow(static_cast<long double>(b), d);
  if (n > cap) throw InputError("n exceeds A*B^d");
  // c_1 = 0 followed by a square-free word over {1,2,3}.
  Word tail = thue_word(d - 1);
  std::vector<int> c{0};
  for (int x : tail) c.push_back(x + 1);
  // Mixed-radix labels (v_0, v_1, ..., v_d) with v_0 < A and v_i < B.
  std::vector<std::vector<int>> label(n, std::vector<int>(d + 1));
  for (int x = 0; x < n; ++x) {
    long long y = x;
    for (int i = d; i >= 1; --i) {
      label[x][i] = static_cast<int>(y % b);
      y /= b;
    }
    label[x][0] = static_cast<int>(y);
  }
  Graph kn = complete_graph(n);
  SubdivisionMap map = subdivide_uniform(kn, d);
  std::vector<int> col(map.subdivided.n());
  for (int x = 0; x < n; ++x) col[x] = label[x][0];
  for (int e = 0; e < kn.m(); ++e) {
    auto [v, w] = kn.edges()[e];
    for (int i = 1; i <= d; ++i) {
      int delta = label[v][i] == label[w][i] ? 1 : 0;
      col[map.chains[e][i - 1]] = a + ((delta * 4 + c[i - 1]) * b + label[v][i]);
    }
  }
  return finish(std::move(map), std::move(col), "complete");
}

SubdivColouring complete_subdiv1_colour(int n) {
  if (n < 1) throw InputError("n must be positive");
  const int N = static_cast<int>(iroot_ceil(n, 3));
  Graph kn = complete_graph(n);
  SubdivisionMap map = subdivide_uniform(kn, 1);
  std::vector<int> col(map.subdivided.n());
  auto gi = [&](int x) { return x / N; };
  auto gk = [&](int x) { return x % N; };
  for (int x = 0; x < n; ++x) col[x] = gi(x);
  for (int e = 0; e < kn.m(); ++e) {
    auto [x, y] = kn.edges()[e];
    int i = gi(x), j = gi(y), k = gk(x), l = gk(y);
    int c;
    if (i != j) {
      if (i > j) std::swap(k, l);
      c = N * N + k * N + l;
    } else {
      if (k > l) std::swap(k, l);
      // Index of the pair k < l among pairs over {0..N-1}.
      c = 2 * N * N + k * N - k * (k + 1) / 2 + (l - k - 1);
    }
    col[map.chains[e][0]] = c;
  }
  return finish(std::move(map), std::move(col), "complete-1");
}

SubdivColouring subdiv123_colour(const Graph& g, int variant, const std::vector<int>& phi,
                                 const std::vector<int>& proper) {
  std::vector<int> base = checked_phi(g, phi);
  const int p = std::max(1, palette_of(base));
  if (variant == 1) {
    std::vector<int> c = proper.empty() ? base : compact(proper).colours;
    if (static_cast<int>(c.size()) != g.n()) throw InputError("proper colouring does not match the graph");
    for (auto [u, v] : g.edges())
      if (c[u] == c[v]) throw InputError("colouring c is not proper at edge " + std::to_string(u) + "-" + std::to_string(v));
    const int chi = std::max(1, palette_of(c));
    const int k = static_cast<int>(iroot_ceil(static_cast<long long>(chi) * p, 3));
    const int asz = (k * k + chi - 1) / chi;
    SubdivisionMap map = subdivide_uniform(g, 1);
    std::vector<int> col(map.subdivided.n());
    for (int v = 0; v < g.n(); ++v) col[v] = c[v] * asz + base[v] / k;
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges()[e];
      if (c[u] > c[v]) std::swap(u, v);
      col[map.chains[e][0]] = chi * asz + (base[u] % k) * k + (base[v] % k);
    }
    return finish(std::move(map), std::move(col), "subdiv-1");
  }
  if (variant == 2) {
    const int k = static_cast<int>(iroot_ceil(p, 2));
    SubdivisionMap map = subdivide_uniform(g, 2);
    std::vector<int> col(map.subdivided.n());
    for (int v = 0; v < g.n(); ++v) col[v] = base[v] / k;
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges()[e];
      col[map.chains[e][0]] = k + base[u] % k;
      col[map.chains[e][1]] = 2 * k + base[v] % k;
    }
    return finish(std::move(map), std::move(col), "subdiv-2");
  }
  if (variant == 3) {
    const int k = static_cast<int>(iroot_ceil(p, 5));
    const int k2 = k * k;
    auto fa = [&](int f) { return f / (k2 * k); };
    auto fb = [&](int f) { return (f / k) % k2; };
    auto fc = [&](int f) { return f % k; };
    SubdivisionMap map = subdivide_uniform(g, 3);
    std::vector<int> col(map.subdivided.n());
    for (int v = 0; v < g.n(); ++v) col[v] = fa(base[v]);
    for (int e = 0; e < g.m(); ++e) {
      auto [u, v] = g.edges()[e];
      col[map.chains[e][0]] = k2 + fb(base[u]);
      col[map.chains[e][1]] = 2 * k2 + fc(base[u]) * k + fc(base[v]);
      col[map.chains[e][2]] = 3 * k2 + fb(base[v]);
    }
    return finish(std::move(map), std::move(col), "subdiv-3");
  }
  throw InputError("variant must be 1, 2 or 3");
}

namespace {

class ProjectionVerifier {
 public:
  ProjectionVerifier(const SubdivisionMap& map, const std::vector<int>& col, std::uint64_t budget)
      : map_(map), g_(map.original), col_(col), budget_(budget), on_path_(g_.n(), 0) {
    // Division vertices of each incident edge ordered outward from the vertex.
    near_.resize(g_.n());
    for (int v = 0; v < g_.n(); ++v)
      for (int e : g_.incident_edges(v)) {
        std::vector<int> ch = map_.chains[e];
        if (g_.edges()[e].first != v) std::reverse(ch.begin(), ch.end());
        near_[v].push_back({e, std::move(ch)});
      }
  }

  ProjectionResult run() {
    ProjectionResult res;
    for (int e = 0; e < g_.m(); ++e) {
      Word w;
      for (int x : map_.chains[e]) w.push_back(col_[x]);
      if (auto hit = find_square(w)) {
        Witness wit;
        wit.kind = RepKind::path;
        for (std::size_t i = hit->start; i < hit->start + 2 * hit->half; ++i) wit.sequence.push_back(map_.chains[e][i]);
        res.witness = wit;
        res.nodes = nodes_;
        return res;
      }
    }
    for (int s = 0; s < g_.n() && !found_ && !out_; ++s) {
      path_.assign(1, s);
      edges_.clear();
      on_path_[s] = 1;
      dfs();
      on_path_[s] = 0;
    }
    if (found_) {
      Witness wit;
      wit.kind = RepKind::path;
      wit.sequence = witness_;
      res.witness = wit;
    }
    res.complete = !out_ || found_;
    res.nodes = nodes_;
    return res;
  }

 private:
  struct Arm {
    int edge;
    std::vector<int> chain;  // outward from the vertex
  };

  bool tick() {
    ++nodes_;
    if (budget_ && nodes_ > budget_) out_ = true;
    return !out_;
  }

  void dfs() {
    if (!tick()) return;
    if (path_.size() == 1 || path_.front() < path_.back()) process();
    if (found_ || out_) return;
    int u = path_.back();
    const auto& nb = g_.neighbours(u);
    for (std::size_t i = 0; i < nb.size() && !found_ && !out_; ++i) {
      int w = nb[i];
      if (on_path_[w]) continue;
      on_path_[w] = 1;
      path_.push_back(w);
      edges_.push_back(g_.incident_edges(u)[i]);
      dfs();
      edges_.pop_back();
      path_.pop_back();
      on_path_[w] = 0;
    }
  }

  void process() {
    const int k = static_cast<int>(path_.size());
    core_.clear();
    for (int i = 0; i < k; ++i) {
      core_.push_back(path_[i]);
      if (i + 1 < k) {
        int e = edges_[i];
        const auto& ch = map_.chains[e];
        if (g_.edges()[e].first == path_[i]) core_.insert(core_.end(), ch.begin(), ch.end());
        else core_.insert(core_.end(), ch.rbegin(), ch.rend());
      }
    }
    const int cl = static_cast<int>(core_.size());
    int first_core_edge = k >= 2 ? edges_.front() : -1;
    int last_core_edge = k >= 2 ? edges_.back() : -1;
    left_.clear();
    right_.clear();
    for (const auto& arm : near_[path_.front()])
      if (arm.edge != first_core_edge && !arm.chain.empty()) left_.push_back(&arm);
    for (const auto& arm : near_[path_.back()])
      if (arm.edge != last_core_edge && !arm.chain.empty()) right_.push_back(&arm);
    int max_a = 0, max_b = 0;
    for (auto* a : left_) max_a = std::max(max_a, static_cast<int>(a->chain.size()));
    for (auto* b : right_) max_b = std::max(max_b, static_cast<int>(b->chain.size()));
    for (int a = 0; a <= max_a; ++a)
      for (int b = 0; b <= max_b; ++b) {
        int total = a + cl + b;
        if (total % 2) continue;
        int s = total / 2;
        if (!core_consistent(a, s)) continue;
        if (!tick()) return;
        try_arms(a, b, s);
        if (found_) return;
      }
  }

  // Positions p and p+s that both fall inside the core must agree.
  bool core_consistent(int a, int s) const {
    const int cl = static_cast<int>(core_.size());
    int lo = std::max(a, a - s);
    for (int p = std::max(lo, a); p < s && p < a + cl; ++p) {
      int q = p + s;
      if (q >= a + cl) break;
      if (col_[core_[p - a]] != col_[core_[q - a]]) return false;
    }
    return true;
  }

  void try_arms(int a, int b, int s) {
    static const Arm kEmpty{-1, {}};
    std::vector<const Arm*> ls, rs;
    if (a == 0) ls.push_back(&kEmpty);
    else
      for (auto* x : left_)
        if (static_cast<int>(x->chain.size()) >= a) ls.push_back(x);
    if (b == 0) rs.push_back(&kEmpty);
    else
      for (auto* x : right_)
        if (static_cast<int>(x->chain.size()) >= b) rs.push_back(x);
    const int k = static_cast<int>(path_.size());
    for (auto* l : ls)
      for (auto* r : rs) {
        if (a > 0 && b > 0 && l->edge == r->edge) {
          if (k == 1) continue;
          if (a + b > static_cast<int>(l->chain.size())) continue;
        }
        auto vertex_at = [&](int p) {
          if (p < a) return l->chain[a - 1 - p];
          p -= a;
          if (p < static_cast<int>(core_.size())) return core_[p];
          return r->chain[p - static_cast<int>(core_.size())];
        };
        bool rep = true;
        for (int p = 0; p < s && rep; ++p) rep = col_[vertex_at(p)] == col_[vertex_at(p + s)];
        if (rep) {
          witness_.clear();
          for (int p = 0; p < 2 * s; ++p) witness_.push_back(vertex_at(p));
          found_ = true;
          return;
        }
      }
  }

  const SubdivisionMap& map_;
  const Graph& g_;
  const std::vector<int>& col_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool out_ = false;
  bool found_ = false;
  std::vector<int> witness_;
  std::vector<char> on_path_;
  std::vector<int> path_, edges_, core_;
  std::vector<std::vector<Arm>> near_;
  std::vector<const Arm*> left_, right_;
};

}  // namespace

ProjectionResult verify_subdivision(const SubdivisionMap& map, const std::vector<int>& col, std::uint64_t node_budget) {
  if (static_cast<int>(col.size()) != map.subdivided.n()) throw InputError("colouring does not match the subdivision");
  return ProjectionVerifier(map, col, node_budget).run();
}

EdgeBoundReport subdiv_edge_bound_check(const SubdivisionMap& map, const std::vector<int>& col, int d,
                                        std::uint64_t node_budget) {
  if (d < 0) throw InputError("d must be non-negative");
  if (static_cast<int>(col.size()) != map.subdivided.n()) throw InputError("colouring does not match the subdivision");
  if (map.max_chain() > d) throw InputError("subdivision has a chain longer than d");
  RepetitivePathFinder finder(map.subdivided);
  PathSearch s = finder.search(col, 2 * d + 2, node_budget);
  if (s.witness)
    throw InputError("premise fails: repetitive path on " + std::to_string(s.witness->sequence.size()) +
                     " vertices: " + join(s.witness->sequence));
  if (!s.complete) throw InputError("premise could not be checked within the node budget");

  const Graph& g = map.original;
  EdgeBoundReport r;
  r.edges = g.m();
  r.vertices = g.n();
  r.d = d;
  r.colours = compact(col).used();
  r.exact_subdivision = std::all_of(map.chains.begin(), map.chains.end(),
                                    [&](const std::vector<int>& ch) { return static_cast<int>(ch.size()) == d; });
  const long double c = r.colours;
  long double zcap = 0;
  if (r.exact_subdivision) zcap = std::pow(c, d);
  else
    for (int i = 0; i <= d; ++i) zcap += std::pow(c, i);
  const long double half = r.vertices - (c + 1) / 2;
  r.literal_rhs = static_cast<double>((r.exact_subdivision ? 1 : 2) * std::pow(c, d + 1) * half);
  r.literal_holds = r.edges <= r.literal_rhs;
  std::map<int, long long> cls;
  for (int v = 0; v < g.n(); ++v) ++cls[col[v]];
  std::vector<long long> sizes;
  for (auto& [colour, count] : cls) sizes.push_back(count);
  long double forest = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    forest += sizes[i] - 1;
    for (std::size_t j = i + 1; j < sizes.size(); ++j) forest += sizes[i] + sizes[j] - 1;
  }
  r.class_rhs = static_cast<double>(zcap * forest);
  r.holds = r.edges <= r.class_rhs;
  if (r.vertices >= 2) {
    r.lower_bound = general_subdiv_lower(r.edges, r.vertices, d);
    r.lower_consistent = r.lower_bound <= r.colours + 1e-9;
  } else {
    r.lower_bound = 0;
    r.lower_consistent = true;
  }
  return r;
}

}  // namespace thuelab
