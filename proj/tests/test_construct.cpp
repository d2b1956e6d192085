#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "thuelab/bounds.hpp"
#include "thuelab/construct.hpp"
#include "thuelab/repetition.hpp"
#include "thuelab/words.hpp"

using namespace thuelab;

namespace {

int used(const std::vector<int>& c) { return Colouring(c).used(); }

bool stroll_clean(const Graph& g, const std::vector<int>& c) {
  bool clean = !find_repetitive_stroll(g, c);
  if (g.n() <= 8) CHECK(clean == !oracle::stroll_repetitive(g, c));
  return clean;
}

bool walk_clean(const Graph& g, const std::vector<int>& c) {
  bool clean = !find_repetitive_walk_nonboring(g, c);
  if (g.n() <= 6) CHECK(clean == !oracle::walk_nonboring_repetitive(g, c));
  return clean;
}

bool path_clean(const Graph& g, const std::vector<int>& c) {
  bool clean = !find_repetitive_path(g, c);
  if (g.n() <= 14) CHECK(clean == !oracle::path_repetitive(g, c));
  return clean;
}

// Random triangulation of the polygon 0..n-1 plus a random spanning subgraph.
struct OuterplanarInstance {
  Graph g;
  OuterplanarWitness w;
};

OuterplanarInstance random_outerplanar(int n, oracle::Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    if (n >= 2 && (i + 1) % n != i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  std::vector<std::pair<int, int>> todo{{0, n - 1}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    if (b - a < 2) continue;
    int c = oracle::uniform_int(rng, a + 1, b - 1);
    if (c - a >= 2) edges.emplace_back(a, c);
    if (b - c >= 2) edges.emplace_back(c, b);
    todo.emplace_back(a, c);
    todo.emplace_back(c, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (n == 2) edges = {{0, 1}};
  std::vector<Edge> keep;
  for (auto e : edges)
    if (oracle::uniform_int(rng, 0, 3) > 0) keep.push_back(e);
  OuterplanarInstance out;
  out.w.supergraph = build_graph(n, edges);
  for (int i = 0; i < n; ++i) out.w.cycle.push_back(i);
  out.g = build_graph(n, keep);
  return out;
}

}  // namespace

TEST_CASE("thue words") {
  CHECK(word_string(thue_word(13, ThueMethod::leech)) == "0121021201210");
  // Differences (1,0,-1,1,-1,0,1,0) shifted by one.
  CHECK(thue_word(8, ThueMethod::tm_diff) == Word{2, 1, 0, 2, 0, 1, 2, 1});
  CHECK(thue_word(0, ThueMethod::leech).empty());
  CHECK(thue_word(0, ThueMethod::tm_diff).empty());
  for (ThueMethod m : {ThueMethod::leech, ThueMethod::tm_diff}) {
    Word w = thue_word(10000, m);
    CHECK(w.size() == 10000);
    CHECK(!find_square(w));
    Word small = thue_word(300, m);
    CHECK(!oracle::has_square(small));
    CHECK(std::equal(small.begin(), small.end(), w.begin()));
  }
}

TEST_CASE("path_sigma4") {
  Word w = parse_word("012021012");
  // 123132123 -> 1243143241243 after shifting symbols down by one.
  CHECK(word_string(insert_separators(w)) == "0132032130132");
  CHECK(path_sigma4(1).size() == 1);
  for (int n = 1; n <= 60; ++n) {
    auto c = path_sigma4(n);
    CHECK(static_cast<int>(c.size()) == n);
    CHECK(used(c) <= 4);
    CHECK(walk_clean(path_graph(n), c));
  }
}

TEST_CASE("naive colouring") {
  auto k33 = naive_colouring(complete_bipartite(3, 3), std::vector<int>{0, 1, 2});
  CHECK(k33.colouring.used() == 4);
  CHECK(stroll_clean(complete_bipartite(3, 3), k33.colouring.colours));
  CHECK(naive_colouring(complete_graph(4)).colouring.used() == 4);
  CHECK(naive_colouring(Graph(5)).colouring.used() == 1);
  CHECK_THROWS_AS(naive_colouring(path_graph(3), std::vector<int>{0, 1}), InputError);
  oracle::Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    int n = oracle::uniform_int(rng, 1, 12);
    Graph g = oracle::random_graph(n, 0.4, rng);
    auto r = naive_colouring(g);
    CHECK(r.exact_independent_set);
    int alpha = static_cast<int>(r.independent_set.size());
    CHECK(r.colouring.used() == naive_upper_bound(n, alpha));
    CHECK(stroll_clean(g, r.colouring.colours));
    if (n <= 8) {
      // Exhaustive maximum independent set.
      int best = 0;
      for (int mask = 0; mask < (1 << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges())
          if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
      }
      CHECK(alpha == best);
    }
  }
}

TEST_CASE("shadow composition") {
  oracle::Rng rng(32);
  Graph t = oracle::random_tree(15, rng);
  Layering lay = bfs_layering(t, 0);
  auto c = shadow_compose(t, lay, std::vector<int>(15, 0), ComposeMode::rho);
  CHECK(c.used() <= 4);
  CHECK(stroll_clean(t, c.colours));
  CHECK_THROWS_AS(shadow_compose(cycle_graph(6), bfs_layering(cycle_graph(6), 0), std::vector<int>(6, 0),
                                 ComposeMode::rho),
                  InputError);
  Graph k3 = complete_graph(3);
  auto one = shadow_compose(k3, make_layering(k3, {0, 0, 0}), {0, 1, 2}, ComposeMode::pi);
  CHECK(one.used() == 3);
  // Layer colourings must satisfy the mode's premise.
  Graph p3 = path_graph(3);
  CHECK_THROWS_AS(shadow_compose(p3, make_layering(p3, {0, 0, 0}), {0, 1, 0}, ComposeMode::sigma), InputError);
  // Siblings sharing a parent need distinct colours in sigma mode.
  Graph s = star_graph(3);
  CHECK_THROWS_AS(shadow_compose(s, bfs_layering(s, 0), {0, 0, 0, 0}, ComposeMode::sigma), InputError);
  auto sc = shadow_compose(s, bfs_layering(s, 0), {0, 0, 1, 2}, ComposeMode::sigma);
  CHECK(walk_clean(s, sc.colours));
}

TEST_CASE("tree colourings") {
  Graph p4 = path_graph(4);
  CHECK(tree_rho4(p4, 0).used() <= 4);
  CHECK(stroll_clean(p4, tree_rho4(p4, 0).colours));
  CHECK(tree_rho4(star_graph(5)).used() == 2);
  CHECK(tree_rho4(Graph(1)).used() == 1);
  CHECK_THROWS_AS(tree_rho4(cycle_graph(4)), InputError);
  auto k13 = tree_sigma(star_graph(3));
  CHECK(k13.used() <= 12);
  CHECK(k13.used() >= 4);
  CHECK(walk_clean(star_graph(3), k13.colours));
  CHECK(walk_clean(path_graph(6), tree_sigma(path_graph(6)).colours));
  Graph spider = build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(walk_clean(spider, tree_sigma(spider).colours));
  oracle::Rng rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    int n = oracle::uniform_int(rng, 1, 40);
    Graph t = oracle::random_tree(n, rng);
    int root = oracle::uniform_int(rng, 0, n - 1);
    auto r = tree_rho4(t, root);
    CHECK(r.used() <= 4);
    CHECK(stroll_clean(t, r.colours));
    auto s = tree_sigma(t, root);
    CHECK(s.used() <= std::max(1, 4 * t.max_degree()));
    CHECK(walk_clean(t, s.colours));
    if (n <= 14) CHECK(path_clean(t, r.colours));
  }
}

TEST_CASE("treewidth colouring") {
  Graph k4 = complete_graph(4);
  TreeDecomposition single{Graph(1), {{0, 1, 2, 3}}};
  auto c = treewidth_colour(k4, single);
  CHECK(c.used() <= 64);
  CHECK(stroll_clean(k4, c.colours));
  CHECK(treewidth_colour(Graph(3), TreeDecomposition{build_graph(3, {{0, 1}, {1, 2}}), {{0}, {1}, {2}}}).used() == 1);
  TreeDecomposition bad{Graph(1), {{0, 1, 2}}};
  CHECK_THROWS_AS(treewidth_colour(k4, bad), InputError);
  oracle::Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    int k = oracle::uniform_int(rng, 1, 3);
    int n = oracle::uniform_int(rng, k + 1, k == 3 ? 20 : 40);
    auto dg = oracle::random_partial_ktree(n, k, 0.7, rng);
    int width = dg.td.width();
    auto col = treewidth_colour(dg.graph, dg.td);
    CHECK(col.used() <= class_bound(ClassSpec{GraphClass::treewidth, width}, Parameter::rho).value);
    CHECK(stroll_clean(dg.graph, col.colours));
    if (n <= 14) CHECK(path_clean(dg.graph, col.colours));
  }
  oracle::Rng rng2(35);
  for (int trial = 0; trial < 20; ++trial) {
    Graph t = oracle::random_tree(oracle::uniform_int(rng2, 2, 30), rng2);
    std::vector<std::vector<int>> bags;
    for (auto [u, v] : t.edges()) bags.push_back({u, v});
    // Bag tree: line-graph spanning structure through shared vertices.
    std::vector<Edge> tree_edges;
    for (int i = 1; i < static_cast<int>(bags.size()); ++i)
      for (int j = 0; j < i; ++j)
        if (bags[i][0] == bags[j][0] || bags[i][0] == bags[j][1] || bags[i][1] == bags[j][0] ||
            bags[i][1] == bags[j][1]) {
          tree_edges.emplace_back(j, i);
          break;
        }
    TreeDecomposition td{build_graph(static_cast<int>(bags.size()), tree_edges), bags};
    if (!validate_tree_decomposition(t, td).ok) continue;
    CHECK(treewidth_colour(t, td).used() <= 4);
  }
}

TEST_CASE("pathwidth colouring") {
  oracle::Rng rng(36);
  for (int trial = 0; trial < 100; ++trial) {
    auto pg = oracle::random_caterpillar(oracle::uniform_int(rng, 1, 40), rng);
    auto col = pathwidth_colour(pg.graph, pg.pd);
    CHECK(col.used() <= 9);
    CHECK(stroll_clean(pg.graph, col.colours));
    if (pg.graph.n() <= 14) CHECK(path_clean(pg.graph, col.colours));
  }
  for (int n = 2; n <= 30; ++n) {
    PathDecomposition pd;
    for (int i = 0; i + 1 < n; ++i) pd.bags.push_back({i, i + 1});
    auto col = pathwidth_colour(path_graph(n), pd);
    CHECK(col.used() <= 9);
    CHECK(stroll_clean(path_graph(n), col.colours));
  }
  PathDecomposition zero{{{0}, {1}, {2}}};
  CHECK(pathwidth_colour(Graph(3), zero).used() == 1);
  for (int trial = 0; trial < 40; ++trial) {
    int n = oracle::uniform_int(rng, 3, 24);
    auto dg = oracle::random_partial_ktree(n, 2, 0.8, rng);
    // Interval-style decomposition: consecutive windows of width 2.
    PathDecomposition pd;
    for (int i = 0; i + 2 < n; ++i) pd.bags.push_back({i, i + 1, i + 2});
    std::vector<Edge> keep;
    for (auto [u, v] : dg.graph.edges())
      if (v - u <= 2) keep.emplace_back(u, v);
    Graph g = build_graph(n, keep);
    REQUIRE(validate_path_decomposition(g, pd).ok);
    auto col = pathwidth_colour(g, pd);
    CHECK(col.used() <= 21);
    CHECK(stroll_clean(g, col.colours));
  }
  PathDecomposition bad{{{0}, {1}}};
  CHECK_THROWS_AS(pathwidth_colour(path_graph(2), bad), InputError);
}

TEST_CASE("outerplanar colouring") {
  Graph fan = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {0, 3}, {0, 4}});
  OuterplanarWitness fw{fan, {0, 1, 2, 3, 4, 5}};
  auto pi = outerplanar_colour(fan, fw, ComposeMode::pi);
  CHECK(pi.used() <= 12);
  CHECK(path_clean(fan, pi.colours));
  Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {0, 3}});
  CHECK(outerplanar_colour(c5, OuterplanarWitness{c5, {0, 1, 2, 3, 4}}, ComposeMode::pi).used() <= 12);
  Graph tri = complete_graph(3);
  CHECK(outerplanar_colour(tri, OuterplanarWitness{tri, {0, 1, 2}}, ComposeMode::pi).used() == 3);
  // K4 is not outerplanar.
  CHECK_THROWS_AS(validate_outerplanar_witness(complete_graph(4), OuterplanarWitness{complete_graph(4), {0, 1, 2, 3}}),
                  InputError);
  oracle::Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_outerplanar(oracle::uniform_int(rng, 3, 40), rng);
    auto p = outerplanar_colour(inst.g, inst.w, ComposeMode::pi);
    auto r = outerplanar_colour(inst.g, inst.w, ComposeMode::rho);
    CHECK(p.used() <= 12);
    CHECK(r.used() <= 16);
    CHECK(stroll_clean(inst.g, r.colours));
    if (inst.g.n() <= 14) CHECK(path_clean(inst.g, p.colours));
  }
}

TEST_CASE("product colourings") {
  auto k4 = product_colour(path_graph(2), path_graph(2), {0, 1}, {0, 1});
  CHECK(k4.product.graph.m() == 6);
  CHECK(k4.colouring.used() == 4);
  oracle::Rng rng(38);
  for (int trial = 0; trial < 30; ++trial) {
    Graph t = oracle::random_tree(oracle::uniform_int(rng, 1, 7), rng);
    auto pc = product_colour(t, path_graph(6), tree_rho4(t).colours, path_sigma4(6));
    CHECK(pc.colouring.used() <= 16);
    CHECK(stroll_clean(pc.product.graph, pc.colouring.colours));
  }
  for (int ell = 1; ell <= 4; ++ell) {
    std::vector<int> distinct(ell);
    for (int i = 0; i < ell; ++i) distinct[i] = i;
    auto pc = product_colour(path_graph(5), complete_graph(ell), tree_rho4(path_graph(5)).colours, distinct);
    CHECK(pc.colouring.used() <= 4 * ell);
  }
  // Premise failures.
  CHECK_THROWS_AS(product_colour(path_graph(2), path_graph(2), {0, 0}, {0, 1}), InputError);
  CHECK_THROWS_AS(product_colour(path_graph(2), path_graph(3), {0, 1}, {0, 1, 0}), InputError);
}

TEST_CASE("product colouring is clean for every admissible pair on P3 and P2") {
  Graph p3 = path_graph(3), p2 = path_graph(2);
  int pairs = 0;
  for (int a = 0; a < 27; ++a) {
    std::vector<int> alpha{a % 3, a / 3 % 3, a / 9};
    if (!stroll_clean(p3, alpha)) continue;
    for (int b = 0; b < 9; ++b) {
      std::vector<int> beta{b % 3, b / 3};
      if (!walk_clean(p2, beta)) continue;
      auto pc = product_colour(p3, p2, alpha, beta);
      CHECK(stroll_clean(pc.product.graph, pc.colouring.colours));
      ++pairs;
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("product structure colouring") {
  // 4x4 grid embedded coordinatewise in P4 x P4 x K1.
  std::vector<Edge> grid;
  auto id = [](int x, int y) { return 4 * x + y; };
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      if (x + 1 < 4) grid.emplace_back(id(x, y), id(x + 1, y));
      if (y + 1 < 4) grid.emplace_back(id(x, y), id(x, y + 1));
    }
  Graph g = build_graph(16, grid);
  ProductEmbedding emb{path_graph(4), path_graph(4), 1, {}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) emb.placement.push_back({x, y, 0});
  TreeDecomposition td{path_graph(3), {{0, 1}, {1, 2}, {2, 3}}};
  auto c = product_structure_colour(g, emb, td);
  CHECK(c.used() <= 16);
  CHECK(stroll_clean(g, c.colours));
  // Trivial host: a path placed along P.
  ProductEmbedding pe{Graph(1), path_graph(8), 1, {}};
  for (int i = 0; i < 8; ++i) pe.placement.push_back({0, i, 0});
  auto pc = product_structure_colour(path_graph(8), pe, TreeDecomposition{Graph(1), {{0}}});
  CHECK(pc.used() <= 4);
  CHECK(stroll_clean(path_graph(8), pc.colours));
  // Broken placement is rejected.
  emb.placement[1] = {3, 3, 0};
  CHECK_THROWS_AS(product_structure_colour(g, emb, td), InputError);
}

TEST_CASE("edge colouring of complete graphs") {
  for (int k = 1; k <= 3; ++k) {
    auto e = edge_colour_hypercube_complete(k);
    CHECK(e.graph.n() == (1 << k));
    CHECK(used(e.colours) == (1 << k) - 1);
    CHECK(!find_repetitive_edge_path(e.graph, e.colours));
    if (k <= 2) CHECK(!oracle::edge_path_repetitive(e.graph, e.colours));
  }
}

TEST_CASE("extremal examples") {
  auto e = extremal_witness(5, 3);
  CHECK(e.graph.m() == 7);
  CHECK(e.colouring.used() == 3);
  CHECK(stroll_clean(e.graph, e.colouring.colours));
  CHECK(extremal_witness(4, 4).graph.m() == 6);
  CHECK(extremal_witness(6, 1).graph.m() == 0);
  CHECK_THROWS_AS(extremal_witness(2, 3), InputError);
  for (int n = 1; n <= 12; ++n)
    for (int c = 1; c <= n; ++c) {
      auto w = extremal_witness(n, c);
      CHECK(w.colouring.used() <= c);
      CHECK(stroll_clean(w.graph, w.colouring.colours));
    }
  auto s = sigma_extremal_example(6, 2);
  CHECK(s.graph.n() == 12);
  CHECK(s.colouring.used() <= 8);
  CHECK(walk_clean(s.graph, s.colouring.colours));
  CHECK(sigma_extremal_example(1, 5).colouring.used() == 5);
  CHECK(sigma_extremal_example(1, 5).graph.m() == 10);
  CHECK(sigma_extremal_example(9, 1).colouring.used() <= 4);
}

TEST_CASE("mode names") {
  for (ComposeMode m : {ComposeMode::pi, ComposeMode::rho, ComposeMode::sigma}) CHECK(parse_mode(mode_name(m)) == m);
  CHECK_THROWS_AS(parse_mode("tau"), InputError);
}
