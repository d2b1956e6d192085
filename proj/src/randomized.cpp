#include "thuelab/randomized.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace thuelab {

std::uint64_t SplitMix::next() {
  std::uint64_t z = seed_ + (++counter_) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  std::uint64_t limit = ~0ULL - (~0ULL % bound);
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return x % bound;
}

std::string EntropyRecord::bit_string() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

namespace {

std::optional<Witness> final_check(const Graph& g, const std::vector<int>& col, const EntropyOptions& opt,
                                   const RepetitivePathFinder& finder, std::optional<int> cap, std::string& how,
                                   bool& clean) {
  // Path graphs: a colouring is nonrepetitive iff its word is square-free.
  if (g.n() > 0 && is_connected(g) && g.m() == g.n() - 1 && g.max_degree() <= 2) {
    std::vector<int> order = path_order(g);
    Word w;
    for (int v : order) w.push_back(col[v]);
    how = "word";
    auto hit = find_square(w);
    clean = !hit;
    if (!hit) return std::nullopt;
    Witness wit;
    wit.kind = RepKind::path;
    for (std::size_t i = hit->start; i < hit->start + 2 * hit->half; ++i) wit.sequence.push_back(order[i]);
    return wit;
  }
  PathSearch s = finder.search(col, std::nullopt, opt.verify_budget);
  if (s.complete) {
    how = "exact";
    clean = !s.witness;
    return s.witness;
  }
  if (s.witness) {
    how = "exact";
    clean = false;
    return s.witness;
  }
  int c = cap.value_or(10);
  PathSearch capped = finder.search(col, c, 0);
  how = "capped:" + std::to_string(c);
  clean = !capped.witness;
  return capped.witness;
}

}  // namespace

EntropyResult entropy_colour(const Graph& g, const ListAssignment& lists, const EntropyOptions& opt) {
  const int n = g.n();
  if (lists.size() != n) throw InputError("list assignment does not match the vertex count");
  for (int v = 0; v < n; ++v)
    if (lists.lists[v].empty()) throw InputError("empty list at vertex " + std::to_string(v));
  std::vector<int> order = opt.order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  if (static_cast<int>(order.size()) != n) throw InputError("order must list every vertex once");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0) throw InputError("order must list every vertex once");
    pos[order[i]] = i;
  }
  std::optional<int> cap = opt.half_cap;
  if (!cap && g.max_degree() > 2) cap = 10;
  const std::uint64_t max_steps = opt.max_steps ? opt.max_steps : 50ULL * static_cast<std::uint64_t>(n);

  RepetitivePathFinder finder(g);
  SplitMix rng(opt.seed);
  EntropyResult res;
  std::vector<int> col(n, -1);
  std::set<int> pending;
  for (int i = 0; i < n; ++i) pending.insert(i);
  std::uint64_t zeros = 0, ones = 0;
  int coloured = 0;
  auto check_invariants = [&] {
    if (ones > zeros || zeros - ones != static_cast<std::uint64_t>(coloured))
      throw std::logic_error("entropy record lost the Dyck prefix property");
  };
  while (!pending.empty() && res.record.steps < max_steps) {
    int v = order[*pending.begin()];
    pending.erase(pending.begin());
    const auto& l = lists.lists[v];
    col[v] = l[rng.below(l.size())];
    ++coloured;
    ++zeros;
    ++res.record.steps;
    res.record.bits.push_back(0);
    check_invariants();
    auto w = finder.through(col, v, cap, true);
    if (!w) continue;
    ++res.record.repetitions;
    const auto& s = w->sequence;
    std::size_t t = s.size() / 2;
    std::size_t at = 0;
    while (s[at] != v) ++at;
    std::size_t from = at < t ? 0 : t;
    for (std::size_t i = from; i < from + t; ++i) {
      col[s[i]] = -1;
      pending.insert(pos[s[i]]);
      --coloured;
      ++ones;
      res.record.bits.push_back(1);
      check_invariants();
    }
  }
  res.colouring = Colouring(col, 0);
  int palette = 0;
  for (int c : col) palette = std::max(palette, c + 1);
  res.colouring.palette_size = palette;
  if (!pending.empty()) return res;
  if (opt.final_verify) {
    auto w = final_check(g, col, opt, finder, cap, res.verification, res.verified_clean);
    res.success = !w;
  } else {
    res.success = true;
  }
  return res;
}

EntropyResult entropy_colour(const Graph& g, int colours, const EntropyOptions& opt) {
  if (colours < 1) throw InputError("need at least one colour");
  return entropy_colour(g, ListAssignment::uniform(g.n(), colours), opt);
}

RetryResult random_colour_retry(const Graph& g, int colours, std::uint64_t seed, std::uint64_t max_restarts,
                                RepKind kind) {
  if (colours < 1) throw InputError("need at least one colour");
  SplitMix rng(seed);
  RepetitivePathFinder finder(g);
  RetryResult res;
  std::vector<int> col(g.n());
  for (std::uint64_t trial = 0; trial <= max_restarts; ++trial) {
    for (int& c : col) c = static_cast<int>(rng.below(colours));
    bool bad = false;
    switch (kind) {
      case RepKind::path: bad = finder.search(col).witness.has_value(); break;
      case RepKind::stroll: bad = find_repetitive_stroll(g, col).has_value(); break;
      case RepKind::walk: bad = find_repetitive_walk_nonboring(g, col).has_value(); break;
      default: throw InputError("retry sampler supports path, stroll and walk");
    }
    res.restarts = trial;
    if (!bad) {
      res.success = true;
      res.colouring = Colouring(col, colours);
      return res;
    }
  }
  return res;
}

}  // namespace thuelab
