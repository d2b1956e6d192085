#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "thuelab/bounds.hpp"
#include "thuelab/construct.hpp"

using namespace thuelab;

TEST_CASE("ceilings and integer roots") {
  CHECK(ceil_nudged(3.0) == 3);
  CHECK(ceil_nudged(3.0 + 1e-12) == 3);
  CHECK(ceil_nudged(3.01) == 4);
  CHECK(ceil_nudged(-0.5) == 0);
  for (long long x = 0; x <= 1000; ++x)
    for (int k = 1; k <= 4; ++k) {
      long long m = iroot_ceil(x, k);
      CHECK(std::pow(static_cast<double>(m), k) >= static_cast<double>(x));
      if (m > 0) CHECK(std::pow(static_cast<double>(m - 1), k) < static_cast<double>(x));
    }
  CHECK(iroot_ceil(1'000'000'000'000LL, 3) == 10'000);
  CHECK(iroot_ceil(1'000'000'000'001LL, 3) == 10'001);
}

TEST_CASE("local lemma colour count") {
  CHECK(lll_colour_count(1) == 12);
  CHECK(lll_colour_count(3) == 54);
  CHECK(lll_colour_count(10) == 373);
  for (int d = 1; d <= 200; ++d) {
    double v = 2.0 * d * d + 4.0 * d * std::sqrt(d + 1.0) + 4.0 * d;
    CHECK(lll_colour_count(d) == static_cast<long long>(std::ceil(v - 1e-9)));
  }
}

TEST_CASE("Rosenfeld colour counts") {
  auto a = rosenfeld_colour_count(3, 0.389, false);
  CHECK(a.c == 19);
  CHECK(a.beta == doctest::Approx(4.0 / 0.389));
  for (double r : {0.05, 0.2, 0.5, 0.9}) CHECK(rosenfeld_colour_count(2, r, false).c >= 3);
  auto b = rosenfeld_colour_count(10, 0.36, true);
  CHECK(b.beta == doctest::Approx(25.0));
  CHECK(b.c == 50);
  CHECK(b.c <= static_cast<long long>(std::ceil(5.22 * 10)));
  for (int d = 2; d <= 30; ++d)
    for (double r : {0.1, 0.36, 0.389, 0.7}) {
      double beta = (d - 1.0) * (d - 1.0) / r;
      double c = std::ceil(beta + d / ((1 - r) * (1 - r)) - 1e-9);
      CHECK(rosenfeld_colour_count(d, r, false).c == static_cast<long long>(c));
    }
  CHECK_THROWS_AS(rosenfeld_colour_count(3, 0.0, false), InputError);
  CHECK_THROWS_AS(rosenfeld_colour_count(3, 1.0, false), InputError);
  CHECK_THROWS_AS(rosenfeld_colour_count(1, 0.5, false), InputError);
}

TEST_CASE("multicolour rate") {
  CHECK(multicolour_rate(4) == doctest::Approx(2.0));
  CHECK(multicolour_rate(5) == doctest::Approx((5 + std::sqrt(5.0)) / 2));
  CHECK(multicolour_rate(6) == doctest::Approx(3 + std::sqrt(3.0)));
  for (int r = 4; r <= 50; ++r) CHECK(multicolour_rate(r) >= r - 2 - 1e-12);
  CHECK_THROWS_AS(multicolour_rate(3.9), InputError);
}

TEST_CASE("extremal edge counts") {
  CHECK(extremal_max_edges(5, 3) == 7);
  CHECK(extremal_max_edges(10, 1) == 0);
  for (int c = 1; c <= 8; ++c) CHECK(extremal_max_edges(c, c) == c * (c - 1) / 2);
  CHECK_THROWS_AS(extremal_max_edges(2, 3), InputError);
  for (int n = 2; n <= 12; ++n)
    for (int c = 2; c <= n; ++c) CHECK(extremal_witness(n, c).graph.m() == extremal_max_edges(n, c));
}

TEST_CASE("small formulas") {
  CHECK(naive_upper_bound(6, 3) == 4);
  auto sb = sigma_bounds(4, 3);
  CHECK(sb.first == 4);
  CHECK(sb.second == 40);
  CHECK(sigma_bounds(2, 5).first == 6);
  CHECK(sigma_degenerate_bound(4, 2, 3) == 28);
  CHECK(treewidth_degree_rho_bound(1, 2) == doctest::Approx(120.0));
  double d = 10;
  double ds = d * d + 3 * std::pow(2, -2.0 / 3) * std::pow(d, 5.0 / 3) + std::pow(2, 2.0 / 3) * std::pow(d, 4.0 / 3) - d -
              std::pow(2, 4.0 / 3) * std::pow(d, 2.0 / 3) + 2;
  CHECK(delta_squared_bound(10) == doctest::Approx(ds));
  CHECK_THROWS_AS(delta_squared_bound(1), InputError);
}

TEST_CASE("class table") {
  CHECK(class_bound(parse_class("treewidth(3)"), Parameter::rho).value == 64);
  CHECK(class_bound(parse_class("planar"), Parameter::rho).value == 768);
  CHECK(class_bound(parse_class("pathwidth(1)"), Parameter::pi).value == 9);
  CHECK(class_bound(parse_class("pathwidth(2)"), Parameter::rho).value == 21);
  CHECK(class_bound(parse_class("outerplanar"), Parameter::pi).value == 12);
  CHECK(class_bound(parse_class("outerplanar"), Parameter::rho).value == 16);
  CHECK(class_bound(parse_class("genus(1)"), Parameter::rho).value == 768);
  CHECK(class_bound(parse_class("genus(4)"), Parameter::rho).value == 2048);
  CHECK(class_bound(parse_class("path"), Parameter::pi).value == 3);
  CHECK(class_bound(parse_class("path"), Parameter::sigma).value == 4);
  CHECK(class_bound(parse_class("tree"), Parameter::pi).value == 4);
  auto planar = class_bound(parse_class("planar"), Parameter::pi);
  REQUIRE(planar.lower);
  CHECK(*planar.lower == 11);
  ClassSpec tree = parse_class("tree");
  tree.delta = 5;
  CHECK(class_bound(tree, Parameter::sigma).value == 20);
  CHECK_THROWS_AS(class_bound(parse_class("tree"), Parameter::sigma), InputError);
  CHECK_THROWS_AS(parse_class("toroidal"), InputError);
  CHECK_THROWS_AS(class_bound(parse_class("path"), Parameter::star), InputError);
  for (const char* s : {"path", "cycle", "tree", "outerplanar", "planar", "treewidth(2)", "pathwidth(3)", "genus(2)"})
    CHECK(class_name(parse_class(s)) == s);
  for (int k = 1; k <= 6; ++k)
    CHECK(class_bound(ClassSpec{GraphClass::pathwidth, k}, Parameter::rho).value == 2 * k * k + 6 * k + 1);
}

TEST_CASE("subdivision formulas") {
  CHECK(complete_subdiv_lower(8, 2) == doctest::Approx(std::cbrt(4.0)));
  CHECK(complete_subdiv_upper(8, 2) == 18);
  CHECK(five_subdiv_d(4) == 69);
  CHECK(five_subdiv_d(1) == 1);
  CHECK(complete_subdiv1_colours(8) == 9);
  CHECK(complete_subdiv1_colours(27) == 21);
  CHECK(complete_subdiv_lemma_colours(2, 3) == 26);
  CHECK(subdiv2_colours(10) == 12);
  CHECK(subdiv3_colours(32) == 16);
  CHECK(subdiv3_colours(33) == 36);
  CHECK(subdiv1_colours(3, 9) == 21);
  CHECK(nonrep_sub_colours(4, 0) == 4);
  CHECK(nonrep_sub_colours(4, 7) == 7);
  CHECK(gen_subdiv_d(9, 5) == 5);
  CHECK(subdiv_division_lower(2, 5) == doctest::Approx(-1.0));
  CHECK(general_subdiv_lower(28, 8, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(d_subdiv_colours(4, 4), InputError);
  for (long long n = 2; n <= 200; ++n)
    for (int d = 0; d <= 4; ++d) {
      double lower = std::pow(n / 2.0, 1.0 / (d + 1));
      CHECK(complete_subdiv_lower(n, d) == doctest::Approx(lower));
      CHECK(static_cast<double>(complete_subdiv_upper(n, d)) >= lower);
    }
  auto reports = subdiv_bounds(SubdivQuery{8, 2, 4, 3});
  CHECK(reports.size() >= 5);
  for (const auto& r : reports) {
    CHECK(!r.name.empty());
    CHECK(!r.basis.empty());
  }
}
