#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "indpoly/checks.hpp"
#include "indpoly/engine.hpp"
#include "indpoly/families.hpp"

using indpoly::build_family_tree;
using indpoly::build_named_tree;
using indpoly::FamilyShape;
using indpoly::HubStyle;
using indpoly::NamedTree;
using indpoly::Polynomial;
using indpoly::Tree;

TEST_CASE("shape names round trip") {
  const auto& shapes = indpoly::known_family_shapes();
  REQUIRE(shapes.size() == 7);
  for (const auto& shape : shapes) {
    auto parsed = indpoly::parse_family_shape(indpoly::family_shape_name(shape));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == shape);
  }
  CHECK(indpoly::parse_family_shape("3kk") == FamilyShape{HubStyle::ThreeK2, 0});
  CHECK(indpoly::parse_family_shape("3skk3") == FamilyShape{HubStyle::P4TwoK2, 3});
  CHECK_FALSE(indpoly::parse_family_shape("3kk3").has_value());
  CHECK_FALSE(indpoly::parse_family_shape("").has_value());
  CHECK_FALSE(indpoly::parse_family_shape("bogus").has_value());
}

TEST_CASE("vertex counts") {
  // ThreeK2: 4 skeleton + 6 hub + 2(2k + j) cluster vertices.
  CHECK(build_family_tree({HubStyle::ThreeK2, 0}, 1).vertex_count() == 14);
  CHECK(build_family_tree({HubStyle::ThreeK2, 0}, 4).vertex_count() == 26);
  CHECK(build_family_tree({HubStyle::ThreeK2, 2}, 3).vertex_count() == 26);
  // P4TwoK2: two extra hub vertices.
  CHECK(build_family_tree({HubStyle::P4TwoK2, 0}, 1).vertex_count() == 16);
  CHECK(build_family_tree({HubStyle::P4TwoK2, 3}, 1).vertex_count() == 22);
}

TEST_CASE("deterministic numbering of the smallest ThreeK2 member") {
  Tree t = build_family_tree({HubStyle::ThreeK2, 0}, 1);
  CHECK(t.root() == 0);
  CHECK(t.parents() ==
        std::vector<int>{-1, 0, 0, 0, 1, 4, 1, 6, 1, 8, 2, 10, 3, 12});
}

TEST_CASE("deterministic numbering of the smallest P4TwoK2 member") {
  Tree t = build_family_tree({HubStyle::P4TwoK2, 0}, 1);
  // P4 numbered along the path from the hub, then the hub's two K2s,
  // then the v2 and v3 clusters.
  CHECK(t.parents() ==
        std::vector<int>{-1, 0, 0, 0, 1, 4, 5, 6, 1, 8, 1, 10, 2, 12, 3, 14});
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(build_family_tree({HubStyle::ThreeK2, 0}, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_family_tree({HubStyle::ThreeK2, -1}, 2), std::invalid_argument);
}

TEST_CASE("alpha matches the polynomial degree") {
  for (const auto& shape : indpoly::known_family_shapes()) {
    for (int k = 1; k <= 6; ++k) {
      Polynomial p = indpoly::independence_polynomial_tree(build_family_tree(shape, k));
      CHECK(p.degree() == indpoly::family_alpha(shape, k));
    }
  }
}

TEST_CASE("closed-form availability") {
  CHECK_FALSE(indpoly::has_closed_form({HubStyle::ThreeK2, 0}));
  CHECK_FALSE(indpoly::has_closed_form({HubStyle::P4TwoK2, 1}));
  CHECK(indpoly::has_closed_form({HubStyle::ThreeK2, 1}));
  CHECK(indpoly::has_closed_form({HubStyle::ThreeK2, 2}));
  CHECK(indpoly::has_closed_form({HubStyle::P4TwoK2, 0}));
  CHECK(indpoly::has_closed_form({HubStyle::P4TwoK2, 2}));
  CHECK(indpoly::has_closed_form({HubStyle::P4TwoK2, 3}));
  CHECK_FALSE(indpoly::family_top_coefficients({HubStyle::ThreeK2, 0}, 3).has_value());
}

TEST_CASE("closed-form spot values") {
  auto top_3kk1 = indpoly::family_top_coefficients({HubStyle::ThreeK2, 1}, 4);
  REQUIRE(top_3kk1.has_value());
  CHECK(top_3kk1->degree == 15);
  CHECK(top_3kk1->c1 == 68);
  CHECK(top_3kk1->c2 == 5606);

  auto top_3skk_3 = indpoly::family_top_coefficients({HubStyle::P4TwoK2, 0}, 3);
  REQUIRE(top_3skk_3.has_value());
  CHECK(top_3skk_3->c1 == 39);
  CHECK(top_3skk_3->c2 == 1329);
  CHECK(top_3skk_3->c1 * top_3skk_3->c1 >= top_3skk_3->c2);

  auto top_3skk_4 = indpoly::family_top_coefficients({HubStyle::P4TwoK2, 0}, 4);
  REQUIRE(top_3skk_4.has_value());
  CHECK(top_3skk_4->c1 == 57);
  CHECK(top_3skk_4->c2 == 4264);
  CHECK(top_3skk_4->c1 * top_3skk_4->c1 < top_3skk_4->c2);
}

TEST_CASE("closed forms match the dp across k") {
  for (const auto& shape : indpoly::known_family_shapes()) {
    if (!indpoly::has_closed_form(shape)) continue;
    for (int k = 1; k <= 8; ++k) {
      auto top = indpoly::family_top_coefficients(shape, k);
      REQUIRE(top.has_value());
      Polynomial p = indpoly::independence_polynomial_tree(build_family_tree(shape, k));
      REQUIRE(p.degree() == top->degree);
      CHECK(p.coeff(top->degree) == 1);
      CHECK(p.coeff(top->degree - 1) == top->c1);
      CHECK(p.coeff(top->degree - 2) == top->c2);
    }
  }
}

TEST_CASE("closed forms stay integral far out") {
  for (const auto& shape : indpoly::known_family_shapes()) {
    if (!indpoly::has_closed_form(shape)) continue;
    for (int k = 1; k <= 20; ++k) CHECK_NOTHROW(indpoly::family_top_coefficients(shape, k));
  }
}

TEST_CASE("thresholds sit between the last good and first bad k") {
  for (const auto& shape : indpoly::known_family_shapes()) {
    if (!indpoly::has_closed_form(shape)) continue;
    double threshold = indpoly::family_threshold(shape);
    int first_bad = indpoly::family_first_violating_k(shape);
    CHECK(threshold > first_bad - 1);
    CHECK(threshold < first_bad);
  }
}

TEST_CASE("threshold values") {
  auto near = [](double x, double y) { return std::abs(x - y) < 1e-3; };
  CHECK(near(indpoly::family_threshold({HubStyle::ThreeK2, 1}), 3.2329));
  CHECK(near(indpoly::family_threshold({HubStyle::ThreeK2, 2}), 3.61719));
  CHECK(near(indpoly::family_threshold({HubStyle::P4TwoK2, 0}), 3.31871));
  CHECK(near(indpoly::family_threshold({HubStyle::P4TwoK2, 2}), 2.83611));
  CHECK(near(indpoly::family_threshold({HubStyle::P4TwoK2, 3}), 3.76626));
  CHECK_THROWS_AS(indpoly::family_threshold({HubStyle::ThreeK2, 0}), std::invalid_argument);
}

TEST_CASE("first violating k per shape") {
  CHECK(indpoly::family_first_violating_k({HubStyle::ThreeK2, 1}) == 4);
  CHECK(indpoly::family_first_violating_k({HubStyle::ThreeK2, 2}) == 4);
  CHECK(indpoly::family_first_violating_k({HubStyle::P4TwoK2, 0}) == 4);
  CHECK(indpoly::family_first_violating_k({HubStyle::P4TwoK2, 2}) == 3);
  CHECK(indpoly::family_first_violating_k({HubStyle::P4TwoK2, 3}) == 4);
}

TEST_CASE("lemma-only shapes break exactly where expected") {
  // No closed form for these two; verify the top-coefficient comparison
  // directly on the dp output. ThreeK2 j=0 first fails at k=4, P4TwoK2
  // j=1 at k=3.
  struct Expectation {
    FamilyShape shape;
    int first_bad;
  };
  for (auto [shape, first_bad] :
       {Expectation{{HubStyle::ThreeK2, 0}, 4}, Expectation{{HubStyle::P4TwoK2, 1}, 3}}) {
    for (int k = 1; k <= 8; ++k) {
      Polynomial p = indpoly::independence_polynomial_tree(build_family_tree(shape, k));
      int d = p.degree();
      bool broken = p.coeff(d - 1) * p.coeff(d - 1) < p.coeff(d - 2);
      CHECK(broken == (k >= first_bad));
    }
  }
}

TEST_CASE("named trees resolve to the right family members") {
  CHECK(indpoly::independence_polynomial_tree(build_named_tree(NamedTree::T1)) ==
        indpoly::independence_polynomial_tree(build_family_tree({HubStyle::ThreeK2, 0}, 4)));
  CHECK(indpoly::independence_polynomial_tree(build_named_tree(NamedTree::T2)) ==
        indpoly::independence_polynomial_tree(build_family_tree({HubStyle::P4TwoK2, 1}, 3)));
}

TEST_CASE("named tree sizes and identities") {
  CHECK(build_named_tree(NamedTree::T1).vertex_count() == 26);
  CHECK(build_named_tree(NamedTree::T2).vertex_count() == 26);
  CHECK(build_named_tree(NamedTree::Ex28).vertex_count() == 28);
  CHECK(build_named_tree(NamedTree::Ex35).vertex_count() == 35);
  for (auto which : {NamedTree::T1, NamedTree::T2, NamedTree::Ex28, NamedTree::Ex35}) {
    auto parsed = indpoly::parse_named_tree(indpoly::named_tree_name(which));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == which);
    CHECK(indpoly::is_tree(build_named_tree(which).to_graph()));
  }
  CHECK_FALSE(indpoly::parse_named_tree("t3").has_value());
}

TEST_CASE("every family member below its threshold is log-concave") {
  for (const auto& shape : indpoly::known_family_shapes()) {
    if (!indpoly::has_closed_form(shape)) continue;
    int first_bad = indpoly::family_first_violating_k(shape);
    for (int k = 1; k <= 8; ++k) {
      Polynomial p = indpoly::independence_polynomial_tree(build_family_tree(shape, k));
      auto report = indpoly::check_log_concave(p);
      if (k < first_bad) {
        CHECK(report.log_concave);
      } else {
        CHECK_FALSE(report.log_concave);
        REQUIRE(report.violations.size() == 1);
        CHECK(report.violations[0].offset == 1);
        CHECK(indpoly::check_unimodal(p).unimodal);
      }
    }
  }
}
