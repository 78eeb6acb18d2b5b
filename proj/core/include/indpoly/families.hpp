#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

// The parameterized trees all share one skeleton: a center v0 with three
// branch vertices v1, v2, v3. v2 carries k pendant K2s, v3 carries k + j
// pendant K2s ("pendant K2" = a path of two new vertices hanging off the
// branch vertex). The two styles differ in what v1 carries.
enum class HubStyle {
  ThreeK2,  // v1 carries three pendant K2s
  P4TwoK2,  // v1 carries a pendant P4 (attached at a path end) plus two K2s
};

// A structure name fixes the hub style and the cluster offset j; k stays
// a free parameter. CLI names: "3kk", "3kk1", "3kk2" for the ThreeK2 style
// with j = 0, 1, 2 and "3skk" .. "3skk3" for the P4TwoK2 style with
// j = 0 .. 3.
struct FamilyShape {
  HubStyle hub;
  int j;

  friend bool operator==(const FamilyShape&, const FamilyShape&) = default;
};

std::optional<FamilyShape> parse_family_shape(std::string_view name);
std::string family_shape_name(const FamilyShape& shape);
// All seven named shapes, in CLI-name order.
const std::vector<FamilyShape>& known_family_shapes();

// Deterministic vertex numbering: v0 = 0, v1 = 1, v2 = 2, v3 = 3, then
// cluster vertices in cluster order (v1's, v2's, v3's). A pendant K2 is
// numbered (attachment, leaf); a pendant P4 is numbered along the path
// starting at the end adjacent to the branch vertex. Rooted at v0.
// Requires k >= 1, j >= 0.
Tree build_family_tree(const FamilyShape& shape, int k);

// Degree of the independence polynomial of build_family_tree(shape, k).
int family_alpha(const FamilyShape& shape, int k);

// Leading coefficients of the independence polynomial: the coefficient of
// x^degree is always 1, c1 sits at degree - 1 and c2 at degree - 2.
struct TopCoefficients {
  int degree;
  mpz_class c1;
  mpz_class c2;
};

// Exact closed forms, available for shapes 3kk1, 3kk2, 3skk, 3skk2 and
// 3skk3 (nullopt otherwise). Log-concavity fails at index degree - 1
// exactly when c1^2 < c2.
std::optional<TopCoefficients> family_top_coefficients(const FamilyShape& shape, int k);

bool has_closed_form(const FamilyShape& shape);

// Unique root of the continuous extension of k -> c1(k)^2 - c2(k) (with
// 2^k read as exp2(k)) on [1, 16], located by bisection to within 1e-6.
// Throws std::invalid_argument if the shape has no closed form and
// std::runtime_error if the sign change on [1, 16] is not unique.
double family_threshold(const FamilyShape& shape);

// Smallest integer k >= 1 with c1(k)^2 < c2(k), by exact comparison.
int family_first_violating_k(const FamilyShape& shape);

// Specific trees with frozen shapes. T1 and T2 are family members
// (ThreeK2 with k = 4, j = 0; P4TwoK2 with k = 3, j = 1). The other two
// are fixed 28- and 35-vertex trees: Ex28 stretches one of the hub's K2s
// into an end-attached six-vertex path, Ex35 extends T1's center with a
// fourth branch vertex carrying four K2s.
enum class NamedTree { T1, T2, Ex28, Ex35 };

std::optional<NamedTree> parse_named_tree(std::string_view name);
std::string named_tree_name(NamedTree which);

// Rooted at vertex 0, numbered with the same deterministic scheme as
// build_family_tree.
Tree build_named_tree(NamedTree which);

}  // namespace indpoly
