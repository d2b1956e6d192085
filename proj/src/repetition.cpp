#include "thuelab/repetition.hpp"

#include <algorithm>
#include <climits>
#include <deque>
#include <tuple>

namespace thuelab {

std::string kind_name(RepKind k) {
  switch (k) {
    case RepKind::word_square: return "word-square";
    case RepKind::path: return "path";
    case RepKind::stroll: return "stroll";
    case RepKind::walk: return "walk";
    case RepKind::lazy_walk: return "lazy-walk";
    case RepKind::lazy_stroll: return "lazy-stroll";
    case RepKind::lazy_path: return "lazy-path";
    case RepKind::edge_path: return "edge-path";
  }
  return "unknown";
}

RepKind parse_kind(const std::string& s) {
  for (RepKind k : {RepKind::word_square, RepKind::path, RepKind::stroll, RepKind::walk, RepKind::lazy_walk,
                    RepKind::lazy_stroll, RepKind::lazy_path, RepKind::edge_path})
    if (kind_name(k) == s) return k;
  throw InputError("unknown repetition kind '" + s + "'");
}

bool is_repetitive(const std::vector<int>& seq, const std::vector<int>& col) {
  if (seq.empty() || seq.size() % 2) return false;
  std::size_t t = seq.size() / 2;
  for (std::size_t i = 0; i < t; ++i)
    if (col[seq[i]] < 0 || col[seq[i]] != col[seq[i + t]]) return false;
  return true;
}

namespace {

void check_colouring(const Graph& g, const std::vector<int>& col) {
  if (static_cast<int>(col.size()) != g.n())
    throw InputError("colouring has " + std::to_string(col.size()) + " entries for " + std::to_string(g.n()) +
                     " vertices");
}

constexpr int kDistanceLimit = 3000;

// Grows two vertex-disjoint paths x and y in lockstep, keeping col(x_i) = col(y_i);
// x followed by y is a repetitively coloured path once x_t ~ y_1.
class PathGrower {
 public:
  PathGrower(const Graph& g, const std::vector<int>& col, const std::vector<int>& dist, int cap,
             std::uint64_t budget)
      : g_(g), col_(col), used_(g.n(), 0), dist_(dist), cap_(cap), budget_(budget) {}

  void search_all() {
    int n = g_.n();
    for (int a = 0; a < n && !stopped_; ++a) {
      if (col_[a] < 0) continue;
      for (int b = 0; b < n && !stopped_; ++b) {
        if (b == a || col_[b] != col_[a]) continue;
        x_.assign(1, a);
        y_.assign(1, b);
        used_[a] = used_[b] = 1;
        grow_lex();
        used_[a] = used_[b] = 0;
      }
    }
  }

  void search_through(int v, bool shortest) {
    shortest_ = shortest;
    int n = g_.n();
    for (int w = 0; w < n && !stopped_; ++w) {
      if (w == v || col_[w] < 0 || col_[w] != col_[v]) continue;
      for (int side = 0; side < 2 && !stopped_; ++side) {
        x_.assign(1, side ? w : v);
        y_.assign(1, side ? v : w);
        used_[v] = used_[w] = 1;
        grow_back();
        used_[v] = used_[w] = 0;
        if (found_ && !shortest_) stopped_ = true;
      }
    }
  }

  bool found() const { return found_; }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<int> best() const { return best_; }

 private:
  int distance(int a, int b) const {
    if (dist_.empty()) return 1;
    return dist_[static_cast<std::size_t>(a) * g_.n() + b];
  }

  bool tick() {
    ++nodes_;
    if (budget_ && nodes_ > budget_) {
      exhausted_ = true;
      stopped_ = true;
    }
    return !stopped_;
  }

  void record(int t, bool lex) {
    std::vector<int> seq(x_.begin(), x_.end());
    seq.insert(seq.end(), y_.begin(), y_.end());
    if (!found_ || t < best_t_ || (lex && t == best_t_ && seq < best_)) {
      best_ = std::move(seq);
      best_t_ = t;
      found_ = true;
    }
  }

  // Largest half-length still worth exploring.
  int limit(bool allow_tie) const {
    int l = cap_;
    if (found_) l = std::min(l, allow_tie ? best_t_ : best_t_ - 1);
    return l;
  }

  template <typename F>
  void extend(int xa, int yb, F&& each) {
    for (int a : g_.neighbours(xa)) {
      if (col_[a] < 0 || used_[a]) continue;
      for (int b : g_.neighbours(yb)) {
        if (b == a || used_[b] || col_[b] != col_[a]) continue;
        used_[a] = used_[b] = 1;
        each(a, b);
        used_[a] = used_[b] = 0;
        if (stopped_) return;
      }
    }
  }

  void grow_lex() {
    if (!tick()) return;
    int j = static_cast<int>(x_.size());
    if (g_.adjacent(x_.back(), y_.front())) {
      record(j, true);
      return;
    }
    int lim = limit(true);
    if (j + 1 > lim) return;
    if (distance(x_.back(), y_.front()) > lim - j + 1) return;
    extend(x_.back(), y_.back(), [&](int a, int b) {
      x_.push_back(a);
      y_.push_back(b);
      grow_lex();
      x_.pop_back();
      y_.pop_back();
    });
  }

  void grow_back() {
    grow_fwd();
    if (stopped_ || (found_ && !shortest_)) return;
    int len = static_cast<int>(x_.size());
    if (len + 1 > limit(false)) return;
    extend(x_.front(), y_.front(), [&](int a, int b) {
      x_.push_front(a);
      y_.push_front(b);
      grow_back();
      x_.pop_front();
      y_.pop_front();
    });
  }

  void grow_fwd() {
    if (!tick()) return;
    int len = static_cast<int>(x_.size());
    if (g_.adjacent(x_.back(), y_.front())) {
      record(len, false);
      return;
    }
    int lim = limit(false);
    if (len + 1 > lim) return;
    if (distance(x_.back(), y_.front()) > lim - len + 1) return;
    extend(x_.back(), y_.back(), [&](int a, int b) {
      x_.push_back(a);
      y_.push_back(b);
      grow_fwd();
      x_.pop_back();
      y_.pop_back();
    });
  }

  const Graph& g_;
  const std::vector<int>& col_;
  std::vector<char> used_;
  std::deque<int> x_, y_;
  const std::vector<int>& dist_;
  int cap_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool stopped_ = false;
  bool shortest_ = true;
  bool found_ = false;
  int best_t_ = INT_MAX;
  std::vector<int> best_;
};

int half_cap(const Graph& g, std::optional<int> max_half) {
  int cap = g.n() / 2;
  if (max_half) cap = std::min(cap, std::max(0, *max_half));
  return cap;
}

std::vector<int> all_distances(const Graph& g) {
  std::vector<int> dist;
  if (g.n() <= kDistanceLimit && g.n() > 0) {
    dist.resize(static_cast<std::size_t>(g.n()) * g.n());
    for (int s = 0; s < g.n(); ++s) {
      auto d = bfs_distances(g, s);
      for (int v = 0; v < g.n(); ++v) dist[static_cast<std::size_t>(s) * g.n() + v] = d[v] < 0 ? INT_MAX / 4 : d[v];
    }
  }
  return dist;
}

}  // namespace

RepetitivePathFinder::RepetitivePathFinder(const Graph& g) : g_(&g), dist_(all_distances(g)) {}

PathSearch RepetitivePathFinder::search(const std::vector<int>& col, std::optional<int> max_half,
                                        std::uint64_t node_budget) const {
  check_colouring(*g_, col);
  PathSearch r;
  PathGrower pg(*g_, col, dist_, half_cap(*g_, max_half), node_budget);
  pg.search_all();
  r.nodes = pg.nodes();
  r.complete = !pg.exhausted();
  if (pg.found()) r.witness = Witness{RepKind::path, pg.best(), {}};
  return r;
}

std::optional<Witness> RepetitivePathFinder::through(const std::vector<int>& col, int v, std::optional<int> max_half,
                                                     bool shortest) const {
  check_colouring(*g_, col);
  if (v < 0 || v >= g_->n() || col[v] < 0) return std::nullopt;
  PathGrower pg(*g_, col, dist_, half_cap(*g_, max_half), 0);
  pg.search_through(v, shortest);
  if (!pg.found()) return std::nullopt;
  return Witness{RepKind::path, pg.best(), {}};
}

PathSearch find_repetitive_path_budgeted(const Graph& g, const std::vector<int>& col, std::optional<int> max_half,
                                         std::uint64_t node_budget) {
  return RepetitivePathFinder(g).search(col, max_half, node_budget);
}

std::optional<Witness> find_repetitive_path(const Graph& g, const std::vector<int>& col, std::optional<int> max_half) {
  return find_repetitive_path_budgeted(g, col, max_half, 0).witness;
}

std::optional<Witness> find_repetitive_path_through(const Graph& g, const std::vector<int>& col, int v,
                                                    std::optional<int> max_half, bool shortest) {
  return RepetitivePathFinder(g).through(col, v, max_half, shortest);
}

namespace {

// Breadth-first search over pairs (a, b) of equally coloured vertices where
// consecutive pairs are related coordinatewise. A pair walk p_1..p_t whose
// last first coordinate relates to the second coordinate of p_1 yields the
// repetitive sequence first(p_1..p_t), second(p_1..p_t).
class PairSearch {
 public:
  PairSearch(const Graph& g, const std::vector<int>& col, bool touch, bool all_offdiag)
      : g_(g), col_(col), touch_(touch), all_offdiag_(all_offdiag) {}

  std::optional<std::vector<int>> run() {
    int n = g_.n();
    if (n == 0) return std::nullopt;
    std::size_t states = static_cast<std::size_t>(n) * n * 2;
    stamp_.assign(states, 0);
    parent_.assign(states, -1);
    int best_len = INT_MAX;
    std::vector<int> best;
    int round = 0;
    for (int b = 0; b < n; ++b) {
      if (col_[b] < 0) continue;
      ++round;
      std::vector<int> frontier;
      for (int a = 0; a < n; ++a) {
        if (col_[a] != col_[b] || (all_offdiag_ && a == b)) continue;
        int s = encode(a, b, a != b);
        stamp_[s] = round;
        parent_[s] = -1;
        frontier.push_back(s);
      }
      int depth = 1;
      bool hit = false;
      while (!frontier.empty() && depth <= best_len) {
        // Ties between shortest witnesses go to the smaller sequence.
        for (int s : frontier) {
          auto [c, d, f] = decode(s);
          if (!((f || all_offdiag_) && related(c, b))) continue;
          std::vector<int> chain;
          for (int x = s; x >= 0; x = parent_[x]) chain.push_back(x);
          std::reverse(chain.begin(), chain.end());
          std::vector<int> seq;
          for (int x : chain) seq.push_back(std::get<0>(decode(x)));
          for (int x : chain) seq.push_back(std::get<1>(decode(x)));
          if (depth < best_len || seq < best) {
            best_len = depth;
            best = std::move(seq);
          }
          hit = true;
        }
        if (hit || depth + 1 > best_len) break;
        std::vector<int> next;
        for (int s : frontier) {
          auto [c, d, f] = decode(s);
          for_related(c, [&](int c2) {
            if (col_[c2] < 0) return;
            for_related(d, [&](int d2) {
              if (col_[d2] != col_[c2]) return;
              if (all_offdiag_ && c2 == d2) return;
              int s2 = encode(c2, d2, f || c2 != d2);
              if (stamp_[s2] == round) return;
              stamp_[s2] = round;
              parent_[s2] = s;
              next.push_back(s2);
            });
          });
        }
        frontier = std::move(next);
        ++depth;
      }
    }
    if (best.empty()) return std::nullopt;
    return best;
  }

 private:
  int encode(int a, int b, bool f) const { return (a * g_.n() + b) * 2 + (f ? 1 : 0); }
  std::tuple<int, int, bool> decode(int s) const {
    int f = s & 1;
    int ab = s >> 1;
    return {ab / g_.n(), ab % g_.n(), f != 0};
  }
  bool related(int u, int v) const { return g_.adjacent(u, v) || (touch_ && u == v); }
  template <typename F>
  void for_related(int u, F&& f) const {
    if (touch_) f(u);
    for (int w : g_.neighbours(u)) f(w);
  }

  const Graph& g_;
  const std::vector<int>& col_;
  bool touch_;
  bool all_offdiag_;
  std::vector<int> stamp_;
  std::vector<int> parent_;
};

}  // namespace

std::optional<Witness> find_repetitive_stroll(const Graph& g, const std::vector<int>& col) {
  check_colouring(g, col);
  auto seq = PairSearch(g, col, false, true).run();
  if (!seq) return std::nullopt;
  return Witness{RepKind::stroll, *seq, {}};
}

std::optional<std::pair<int, int>> distance2_violation(const Graph& g, const std::vector<int>& col) {
  check_colouring(g, col);
  for (int u = 0; u < g.n(); ++u) {
    if (col[u] < 0) continue;
    int best = INT_MAX;
    for (int v : g.neighbours(u)) {
      if (v > u && col[v] == col[u]) best = std::min(best, v);
      for (int w : g.neighbours(v))
        if (w > u && col[w] == col[u]) best = std::min(best, w);
    }
    if (best != INT_MAX) return std::make_pair(u, best);
  }
  return std::nullopt;
}

bool is_distance2(const Graph& g, const std::vector<int>& col) { return !distance2_violation(g, col); }

std::optional<Witness> find_repetitive_walk_nonboring(const Graph& g, const std::vector<int>& col) {
  if (auto bad = distance2_violation(g, col)) {
    auto [u, w] = *bad;
    if (g.adjacent(u, w)) return Witness{RepKind::walk, {u, w}, {}};
    for (int v : g.neighbours(u))
      if (g.adjacent(v, w)) return Witness{RepKind::walk, {u, v, w, v}, {}};
  }
  if (auto s = find_repetitive_stroll(g, col)) return Witness{RepKind::walk, s->sequence, {}};
  return std::nullopt;
}

std::optional<Witness> find_repetitive_walk_direct(const Graph& g, const std::vector<int>& col) {
  check_colouring(g, col);
  auto seq = PairSearch(g, col, false, false).run();
  if (!seq) return std::nullopt;
  return Witness{RepKind::walk, *seq, {}};
}

namespace {

std::optional<std::vector<int>> lazy_path_search(const Graph& g, const std::vector<int>& col, int cap) {
  int n = g.n();
  std::vector<int> seq;
  std::vector<char> placed(n, 0);
  for (int t = 1; 2 * t <= cap; ++t) {
    bool found = false;
    auto rec = [&](auto&& self) -> void {
      int p = static_cast<int>(seq.size());
      if (p == 2 * t) {
        if (seq.front() != seq.back()) found = true;
        return;
      }
      int last = seq.back();
      std::vector<int> cand{last};
      for (int w : g.neighbours(last))
        if (!placed[w]) cand.push_back(w);
      std::sort(cand.begin(), cand.end());
      for (int w : cand) {
        if (col[w] < 0) continue;
        if (p >= t && col[w] != col[seq[p - t]]) continue;
        bool fresh = w != last;
        if (fresh) placed[w] = 1;
        seq.push_back(w);
        self(self);
        if (found) return;
        seq.pop_back();
        if (fresh) placed[w] = 0;
      }
    };
    for (int s = 0; s < n && !found; ++s) {
      if (col[s] < 0) continue;
      seq.assign(1, s);
      placed[s] = 1;
      rec(rec);
      if (found) return seq;
      placed[s] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace

LazyResult find_repetitive_lazy(const Graph& g, const std::vector<int>& col, LazyKind kind, int cap) {
  check_colouring(g, col);
  LazyResult r;
  switch (kind) {
    case LazyKind::walk_nonboring: {
      auto seq = PairSearch(g, col, true, false).run();
      if (seq) r.witness = Witness{RepKind::lazy_walk, *seq, {}};
      break;
    }
    case LazyKind::stroll: {
      auto seq = PairSearch(g, col, true, true).run();
      if (seq) r.witness = Witness{RepKind::lazy_stroll, *seq, {}};
      break;
    }
    case LazyKind::path: {
      r.cap = cap > 0 ? cap : 2 * g.n();
      auto seq = lazy_path_search(g, col, r.cap);
      if (seq)
        r.witness = Witness{RepKind::lazy_path, *seq, {}};
      else
        r.inconclusive = true;
      break;
    }
  }
  return r;
}

std::optional<Witness> find_repetitive_edge_path(const Graph& g, const std::vector<int>& edge_col) {
  if (static_cast<int>(edge_col.size()) != g.m())
    throw InputError("edge colouring has " + std::to_string(edge_col.size()) + " entries for " +
                     std::to_string(g.m()) + " edges");
  int n = g.n();
  std::vector<char> on(n, 0);
  std::vector<int> verts, es;
  std::vector<int> best_e, best_v;
  int best_t = INT_MAX;
  auto rec = [&](auto&& self) -> void {
    int k = static_cast<int>(es.size());
    if (k > 0 && k % 2 == 0) {
      int t = k / 2;
      bool rep = true;
      for (int i = 0; i < t && rep; ++i) rep = edge_col[es[i]] == edge_col[es[i + t]];
      if (rep && (t < best_t || (t == best_t && es < best_e))) {
        best_t = t;
        best_e = es;
        best_v = verts;
      }
    }
    if (k + 1 > n - 1 || (best_t != INT_MAX && k + 1 > 2 * best_t)) return;
    int v = verts.back();
    const auto& nb = g.neighbours(v);
    const auto& ids = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      int w = nb[i];
      if (on[w] || edge_col[ids[i]] < 0) continue;
      on[w] = 1;
      verts.push_back(w);
      es.push_back(ids[i]);
      self(self);
      es.pop_back();
      verts.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    verts.assign(1, s);
    on[s] = 1;
    rec(rec);
    on[s] = 0;
  }
  if (best_t == INT_MAX) return std::nullopt;
  return Witness{RepKind::edge_path, best_e, best_v};
}

std::optional<std::pair<int, int>> common_neighbour_clash(const Graph& g, const std::vector<int>& col,
                                                          const std::vector<int>& depth) {
  std::optional<std::pair<int, int>> best;
  for (int u = 0; u < g.n(); ++u) {
    const auto& nb = g.neighbours(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int v = nb[i], w = nb[j];
        if (depth[v] != depth[w] || col[v] != col[w]) continue;
        if (depth[u] != depth[v] && depth[u] != depth[v] - 1) continue;
        std::pair<int, int> p{v, w};
        if (!best || p < *best) best = p;
      }
  }
  return best;
}

}  // namespace thuelab
