#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "thuelab/bounds.hpp"
#include "thuelab/exact.hpp"
#include "thuelab/repetition.hpp"
#include "thuelab/subdiv.hpp"

using namespace thuelab;

namespace {

std::vector<int> distinct(int n) {
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = i;
  return c;
}

// Projection verifier, plus the generic detector and brute force when small.
bool clean(const SubdivColouring& s) {
  const auto& col = s.colouring.colours;
  auto proj = verify_subdivision(s.map, col);
  REQUIRE(proj.complete);
  bool ok = !proj.witness;
  if (s.map.subdivided.n() <= 24) CHECK(ok == !find_repetitive_path(s.map.subdivided, col));
  if (s.map.subdivided.n() <= 12) CHECK(ok == !oracle::path_repetitive(s.map.subdivided, col));
  CHECK(s.colouring.used() <= s.palette_size());
  return ok;
}

// Every chain has exactly d division vertices.
bool uniform_chains(const SubdivisionMap& m, int d) {
  for (const auto& c : m.chains)
    if (static_cast<int>(c.size()) != d) return false;
  return true;
}

}  // namespace

TEST_CASE("projection verifier agrees with the generic detector") {
  oracle::Rng rng(51);
  int dirty = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = oracle::uniform_int(rng, 2, 5);
    Graph g = oracle::random_graph(n, 0.6, rng);
    std::vector<int> counts(g.m());
    for (int& c : counts) c = oracle::uniform_int(rng, 0, 3);
    auto map = subdivide(g, counts);
    auto col = oracle::random_colouring(map.subdivided.n(), oracle::uniform_int(rng, 2, 5), rng);
    auto proj = verify_subdivision(map, col);
    REQUIRE(proj.complete);
    bool generic = find_repetitive_path(map.subdivided, col).has_value();
    CHECK(proj.witness.has_value() == generic);
    if (map.subdivided.n() <= 12) CHECK(generic == oracle::path_repetitive(map.subdivided, col));
    if (proj.witness) {
      ++dirty;
      const auto& seq = proj.witness->sequence;
      CHECK(is_repetitive(seq, col));
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) CHECK(map.subdivided.adjacent(seq[i], seq[i + 1]));
    }
  }
  CHECK(dirty > 0);
  CHECK(dirty < 300);
}

TEST_CASE("subdiv_plus") {
  Graph c4 = cycle_graph(4);
  auto p = subdiv_plus(c4, {0, 1, 0, 2}, subdivide_uniform(c4, 1));
  CHECK(p.colouring.used() == 4);
  CHECK(clean(p));
  Graph k4 = complete_graph(4);
  auto q = subdiv_plus(k4, distinct(4), subdivide_uniform(k4, 5));
  CHECK(q.colouring.used() == 7);
  CHECK(clean(q));
  auto e = subdiv_plus(Graph(3), {0, 0, 0}, subdivide_uniform(Graph(3), 2));
  CHECK(e.colouring.used() == 1);
  CHECK_THROWS_AS(subdiv_plus(c4, {0, 1, 0, 1}, subdivide_uniform(c4, 1)), InputError);
  oracle::Rng rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    int n = oracle::uniform_int(rng, 2, 6);
    Graph g = oracle::random_graph(n, 0.6, rng);
    auto phi = pi_exact(g).witness;
    std::vector<int> counts(g.m());
    int cap = oracle::uniform_int(rng, 1, 4);
    for (int& c : counts) c = oracle::uniform_int(rng, 0, cap);
    auto map = subdivide(g, counts);
    std::vector<char> rev(g.m());
    for (auto& r : rev) r = static_cast<char>(oracle::uniform_int(rng, 0, 1));
    auto s = subdiv_plus(g, phi, map, rev);
    CHECK(s.colouring.used() <= nonrep_sub_colours(Colouring(phi).used(), map.max_chain()));
    CHECK(clean(s));
  }
}

TEST_CASE("square-free word enumeration") {
  auto two = enumerate_nonrep_path_colourings(2, 3, 1000);
  CHECK(two == std::vector<Word>{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
  CHECK(enumerate_nonrep_path_colourings(6, 3, 5).size() == 5);
  for (int t = 1; t <= 20; ++t) {
    // Brute force over all 3^t words.
    std::size_t brute = 0;
    if (t <= 10) {
      long long total = 1;
      for (int i = 0; i < t; ++i) total *= 3;
      for (long long code = 0; code < total; ++code) {
        Word w;
        for (long long x = code, i = 0; i < t; ++i, x /= 3) w.push_back(static_cast<int>(x % 3));
        if (!oracle::has_square(w)) ++brute;
      }
    }
    auto words = enumerate_nonrep_path_colourings(t, 3, 1'000'000);
    if (t <= 10) CHECK(words.size() == brute);
    CHECK(std::is_sorted(words.begin(), words.end()));
    CHECK(static_cast<double>(words.size()) >= std::pow(2.0, t / 17.0));
    for (const auto& w : words) CHECK(!find_square(w));
  }
  CHECK(enumerate_nonrep_path_colourings(4, 3, 1000).size() == 18);
}

TEST_CASE("word-chain subdivision") {
  Graph k4 = complete_graph(4);
  auto a = subdiv_lemma_colour(k4, distinct(4), 4, 3);
  CHECK(uniform_chains(a.map, 9));
  CHECK(a.colouring.used() <= 5);
  CHECK(clean(a));
  Graph k5 = complete_graph(5);
  auto b = subdiv_lemma_colour(k5, distinct(5), 2, 5);
  CHECK(uniform_chains(b.map, 5));
  CHECK(b.colouring.used() <= 7);
  CHECK(clean(b));
  auto c = subdiv_lemma_colour(Graph(3), {0, 0, 0}, 3, 3);
  CHECK(c.colouring.used() <= 5);
  // Only 6 ternary square-free words of length 2.
  CHECK_THROWS_WITH_AS(subdiv_lemma_colour(complete_graph(7), distinct(7), 2, 3), doctest::Contains("6"), InputError);
  CHECK_THROWS_AS(subdiv_lemma_colour(cycle_graph(4), {0, 1, 0, 1}, 2, 3), InputError);
}

TEST_CASE("five-colour subdivision") {
  Graph k4 = complete_graph(4);
  auto f = five_subdiv(k4, distinct(4), 4);
  CHECK(f.t == 2);
  CHECK(f.d == 5);
  CHECK(f.result.colouring.used() <= 5);
  CHECK(clean(f.result));
  auto p = five_subdiv(path_graph(5), {0, 1, 2, 0, 1}, 3);
  CHECK(p.result.colouring.used() <= 5);
  CHECK(clean(p.result));
  auto one = five_subdiv(Graph(2), {0, 0}, 1);
  CHECK(one.t == 1);
  CHECK(one.d == 3);
  // Achieved divisions stay within the guarantee for k >= 2.
  for (int k = 2; k <= 64; ++k) {
    int t = 1;
    while (enumerate_nonrep_path_colourings(t, 3, k).size() < static_cast<std::size_t>(k)) ++t;
    CHECK(2 * t + 1 <= five_subdiv_d(k));
  }
  auto big = five_subdiv(complete_graph(6), distinct(6), 6);
  CHECK(big.d <= big.guarantee);
  CHECK(clean(big.result));
}

TEST_CASE("odd d subdivision") {
  // r = ceil(9^(1/2)) + 2 = 5, palette r + 2 = 7.
  auto a = d_subdiv_colour(complete_graph(9), distinct(9), 5);
  CHECK(a.colouring.used() <= 7);
  CHECK(verify_subdivision(a.map, a.colouring.colours).complete);
  CHECK(!verify_subdivision(a.map, a.colouring.colours).witness);
  // r = ceil(4^(1/1)) + 2 = 6, palette 8.
  auto b = d_subdiv_colour(complete_graph(4), distinct(4), 3);
  CHECK(b.colouring.used() <= 8);
  CHECK(b.colouring.used() <= d_subdiv_colours(4, 3));
  CHECK(clean(b));
  auto c = d_subdiv_colour(path_graph(4), {0, 1, 2, 0}, 3);
  CHECK(c.colouring.used() <= 3 + 4);
  CHECK(clean(c));
  CHECK_THROWS_AS(d_subdiv_colour(path_graph(4), {0, 1, 2, 0}, 4), InputError);
}

TEST_CASE("four-colour subdivision") {
  auto k6 = four_subdiv(complete_graph(6));
  CHECK(k6.colouring.used() <= 4);
  CHECK(clean(k6));
  // Edge v_i v_j carries 2|i - j| - 1 divisions with the identity BFS order of K6.
  for (int e = 0; e < k6.map.original.m(); ++e) {
    auto [u, v] = k6.map.original.edges()[e];
    CHECK(static_cast<int>(k6.map.chains[e].size()) == 2 * (v - u) - 1);
  }
  auto p3 = four_subdiv(path_graph(3));
  CHECK(uniform_chains(p3.map, 1));
  CHECK(clean(p3));
  auto k2 = four_subdiv(complete_graph(2));
  CHECK(uniform_chains(k2.map, 1));
  CHECK(k2.colouring.used() <= 4);
  CHECK_THROWS_AS(four_subdiv(path_graph(3), {2, 0, 1}), InputError);
  CHECK_THROWS_AS(four_subdiv(path_graph(3), {0, 0, 1}), InputError);
  oracle::Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    int n = oracle::uniform_int(rng, 2, 6);
    Graph g = oracle::random_graph(n, 0.6, rng);
    if (!is_connected(g)) continue;
    auto s = four_subdiv(g);
    CHECK(s.colouring.used() <= 4);
    CHECK(clean(s));
  }
}

TEST_CASE("complete graph subdivisions") {
  auto a = complete_subdiv_colour(8, 3, 1, 2);
  CHECK(uniform_chains(a.map, 3));
  CHECK(a.colouring.used() <= complete_subdiv_lemma_colours(1, 2));
  CHECK(clean(a));
  CHECK_THROWS_AS(complete_subdiv_colour(9, 3, 1, 2), InputError);
  CHECK(complete_subdiv_colour(1, 2, 1, 2).map.subdivided.n() == 1);
  CHECK_THROWS_AS(complete_subdiv_colour(4, 2, 4, 1), InputError);
  for (int n = 2; n <= 9; ++n)
    for (int d = 2; d <= 3; ++d) {
      long long m = iroot_ceil(n, d + 1);
      auto s = complete_subdiv_colour(n, d, static_cast<int>(m), static_cast<int>(m));
      CHECK(s.colouring.used() <= complete_subdiv_upper(n, d));
      CHECK(static_cast<double>(s.colouring.used()) >= complete_subdiv_lower(n, d));
      CHECK(clean(s));
    }
  auto k8 = complete_subdiv1_colour(8);
  CHECK(k8.colouring.used() <= 9);
  CHECK(uniform_chains(k8.map, 1));
  CHECK(clean(k8));
  CHECK(complete_subdiv1_colour(27).colouring.used() <= 21);
  CHECK(complete_subdiv1_colour(1).colouring.used() == 1);
  for (int n = 2; n <= 10; ++n) CHECK(clean(complete_subdiv1_colour(n)));
}

TEST_CASE("1-, 2- and 3-subdivisions") {
  Graph k4 = complete_graph(4);
  auto two = subdiv123_colour(k4, 2, distinct(4));
  CHECK(uniform_chains(two.map, 2));
  CHECK(two.colouring.used() <= 6);
  CHECK(clean(two));
  auto one = subdiv123_colour(k4, 1, distinct(4));
  CHECK(uniform_chains(one.map, 1));
  CHECK(one.colouring.used() <= 22);
  CHECK(clean(one));
  auto three = subdiv123_colour(k4, 3, distinct(4));
  CHECK(uniform_chains(three.map, 3));
  CHECK(three.colouring.used() <= 16);
  CHECK(clean(three));
  CHECK_THROWS_AS(subdiv123_colour(k4, 4, distinct(4)), InputError);
  CHECK_THROWS_AS(subdiv123_colour(path_graph(3), 1, {0, 1, 2}, {0, 0, 1}), InputError);
  oracle::Rng rng(54);
  for (int trial = 0; trial < 30; ++trial) {
    int n = oracle::uniform_int(rng, 2, 6);
    Graph g = oracle::random_graph(n, 0.6, rng);
    auto phi = pi_exact(g).witness;
    long long pi = Colouring(phi).used();
    auto s1 = subdiv123_colour(g, 1, phi);
    CHECK(s1.colouring.used() <= subdiv1_colours(pi, pi));
    CHECK(clean(s1));
    auto s2 = subdiv123_colour(g, 2, phi);
    CHECK(s2.colouring.used() <= subdiv2_colours(pi));
    CHECK(clean(s2));
    auto s3 = subdiv123_colour(g, 3, phi);
    CHECK(s3.colouring.used() <= subdiv3_colours(pi));
    CHECK(clean(s3));
  }
}

TEST_CASE("edge-count bound") {
  auto k5 = complete_subdiv1_colour(5);
  auto r = subdiv_edge_bound_check(k5.map, k5.colouring.colours, 1);
  CHECK(r.edges == 10);
  CHECK(r.vertices == 5);
  CHECK(r.exact_subdivision);
  CHECK(r.holds);
  CHECK(r.lower_consistent);
  CHECK(r.lower_bound == doctest::Approx(std::sqrt(10.0 / 4) - 3));
  for (const auto& s : {complete_subdiv_colour(8, 3, 1, 2), four_subdiv(complete_graph(5)),
                        subdiv_lemma_colour(complete_graph(4), distinct(4), 2, 3)}) {
    int d = s.map.max_chain();
    auto rep = subdiv_edge_bound_check(s.map, s.colouring.colours, d);
    CHECK(rep.holds);
    CHECK(rep.lower_consistent);
  }
  // A repetitive colouring is a premise failure.
  auto map = subdivide_uniform(cycle_graph(4), 1);
  CHECK_THROWS_AS(subdiv_edge_bound_check(map, std::vector<int>(8, 0), 1), InputError);
  // Chains longer than d.
  CHECK_THROWS_AS(subdiv_edge_bound_check(k5.map, k5.colouring.colours, 0), InputError);
}
