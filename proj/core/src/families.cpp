#include "indpoly/families.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace indpoly {

namespace {

mpz_class pow2(unsigned long e) { return mpz_class(1) << e; }

// Exact halving with an evenness assertion; the closed forms below are
// stated as halved sums whose numerators are provably even.
mpz_class half(mpz_class v) {
  if (v % 2 != 0) throw std::logic_error("closed form numerator must be even");
  return v / 2;
}

struct ShapeName {
  const char* name;
  FamilyShape shape;
};

constexpr HubStyle kThree = HubStyle::ThreeK2;
constexpr HubStyle kP4 = HubStyle::P4TwoK2;

const ShapeName kShapeNames[] = {
    {"3kk", {kThree, 0}},  {"3kk1", {kThree, 1}}, {"3kk2", {kThree, 2}}, {"3skk", {kP4, 0}},
    {"3skk1", {kP4, 1}},   {"3skk2", {kP4, 2}},   {"3skk3", {kP4, 3}},
};

}  // namespace

std::optional<FamilyShape> parse_family_shape(std::string_view name) {
  for (const auto& entry : kShapeNames) {
    if (name == entry.name) return entry.shape;
  }
  return std::nullopt;
}

std::string family_shape_name(const FamilyShape& shape) {
  for (const auto& entry : kShapeNames) {
    if (shape == entry.shape) return entry.name;
  }
  throw std::invalid_argument("unnamed family shape");
}

const std::vector<FamilyShape>& known_family_shapes() {
  static const std::vector<FamilyShape> shapes = [] {
    std::vector<FamilyShape> out;
    for (const auto& entry : kShapeNames) out.push_back(entry.shape);
    return out;
  }();
  return shapes;
}

namespace {

// Incremental builder over a parent array rooted at 0.
struct TreeSketch {
  std::vector<int> parent{-1};

  int add(int p) {
    parent.push_back(p);
    return static_cast<int>(parent.size()) - 1;
  }
  void add_k2(int at) { add(add(at)); }
  // Path of `len` new vertices hanging off `at`, attached at one end.
  void add_path(int at, int len) {
    for (int i = 0; i < len; ++i) at = add(at);
  }
  Tree build() && { return Tree(0, std::move(parent)); }
};

void check_family_params(int k, int j) {
  if (k < 1) throw std::invalid_argument("family parameter k must be >= 1");
  if (j < 0) throw std::invalid_argument("family offset j must be >= 0");
}

}  // namespace

Tree build_family_tree(const FamilyShape& shape, int k) {
  check_family_params(k, shape.j);
  TreeSketch t;
  int v1 = t.add(0), v2 = t.add(0), v3 = t.add(0);
  if (shape.hub == HubStyle::ThreeK2) {
    for (int i = 0; i < 3; ++i) t.add_k2(v1);
  } else {
    t.add_path(v1, 4);
    t.add_k2(v1);
    t.add_k2(v1);
  }
  for (int i = 0; i < k; ++i) t.add_k2(v2);
  for (int i = 0; i < k + shape.j; ++i) t.add_k2(v3);
  return std::move(t).build();
}

int family_alpha(const FamilyShape& shape, int k) {
  check_family_params(k, shape.j);
  return 2 * k + shape.j + (shape.hub == HubStyle::ThreeK2 ? 6 : 7);
}

bool has_closed_form(const FamilyShape& shape) {
  return !(shape == FamilyShape{kThree, 0} || shape == FamilyShape{kP4, 1});
}

std::optional<TopCoefficients> family_top_coefficients(const FamilyShape& shape, int k) {
  check_family_params(k, shape.j);
  if (!has_closed_form(shape)) return std::nullopt;
  const unsigned long uk = static_cast<unsigned long>(k);
  TopCoefficients top;
  top.degree = family_alpha(shape, k);
  if (shape.hub == HubStyle::ThreeK2 && shape.j == 1) {
    top.c1 = 3 * pow2(uk) + 2 * k + 12;
    top.c2 = 2 * k * k + 23 * k + 9 * pow2(2 * uk + 1) + pow2(uk - 1) * (9 * k + 70) + 26;
  } else if (shape.hub == HubStyle::ThreeK2 && shape.j == 2) {
    top.c1 = 5 * pow2(uk) + 2 * k + 13;
    top.c2 = half(2 * (61 * pow2(uk) + 9 * pow2(2 * uk + 2) + 38) +
                  k * (4 * k + 15 * pow2(uk) + 50));
  } else if (shape.hub == HubStyle::P4TwoK2 && shape.j == 0) {
    top.c1 = 2 * k + pow2(uk + 1) + 17;
    top.c2 = 2 * k * k + 33 * k + 13 * pow2(2 * uk) + pow2(uk) * (3 * k + 34) + 36;
  } else if (shape.hub == HubStyle::P4TwoK2 && shape.j == 2) {
    top.c1 = 2 * k + pow2(uk) + pow2(uk + 2) + 19;
    top.c2 = half(4 * k * k + 15 * k * pow2(uk) + 74 * k + 91 * pow2(uk + 1) +
                  13 * pow2(2 * uk + 3) + 142);
  } else if (shape.hub == HubStyle::P4TwoK2 && shape.j == 3) {
    top.c1 = 2 * k + 9 * pow2(uk) + 20;
    top.c2 = half(k * (4 * k + 27 * pow2(uk) + 78) + 13 * pow2(2 * uk + 4) +
                  21 * pow2(uk + 4) + 180);
  } else {
    return std::nullopt;
  }
  return top;
}

namespace {

// Continuous extension of c1(k)^2 - c2(k), with 2^k read as exp2(k).
// Positive while the family is log-concave near the top, negative once the
// second coefficient from the top overtakes c1^2.
double continuous_margin(const FamilyShape& shape, double t) {
  const double e = std::exp2(t);
  double c1 = 0, c2 = 0;
  if (shape.hub == kThree && shape.j == 1) {
    c1 = 3 * e + 2 * t + 12;
    c2 = 2 * t * t + 23 * t + 18 * e * e + 0.5 * e * (9 * t + 70) + 26;
  } else if (shape.hub == kThree && shape.j == 2) {
    c1 = 5 * e + 2 * t + 13;
    c2 = (2 * (61 * e + 36 * e * e + 38) + t * (4 * t + 15 * e + 50)) / 2;
  } else if (shape.hub == kP4 && shape.j == 0) {
    c1 = 2 * t + 2 * e + 17;
    c2 = 2 * t * t + 33 * t + 13 * e * e + e * (3 * t + 34) + 36;
  } else if (shape.hub == kP4 && shape.j == 2) {
    c1 = 2 * t + 5 * e + 19;
    c2 = (4 * t * t + 15 * t * e + 74 * t + 182 * e + 104 * e * e + 142) / 2;
  } else if (shape.hub == kP4 && shape.j == 3) {
    c1 = 2 * t + 9 * e + 20;
    c2 = (t * (4 * t + 27 * e + 78) + 208 * e * e + 336 * e + 180) / 2;
  } else {
    throw std::invalid_argument("no closed form for this family shape");
  }
  return c1 * c1 - c2;
}

}  // namespace

double family_threshold(const FamilyShape& shape) {
  if (!has_closed_form(shape)) throw std::invalid_argument("no closed form for this family shape");
  constexpr double kLo = 1.0, kHi = 16.0;
  constexpr int kGrid = 960;  // step 1/64
  double lo = 0, hi = 0;
  int crossings = 0;
  double prev_t = kLo, prev_f = continuous_margin(shape, kLo);
  for (int i = 1; i <= kGrid; ++i) {
    double t = kLo + (kHi - kLo) * i / kGrid;
    double f = continuous_margin(shape, t);
    if ((prev_f > 0) != (f > 0)) {
      ++crossings;
      lo = prev_t;
      hi = t;
    }
    prev_t = t;
    prev_f = f;
  }
  if (crossings != 1) throw std::runtime_error("margin must change sign exactly once on [1, 16]");
  for (int iter = 0; iter < 60 && hi - lo > 1e-7; ++iter) {
    double mid = (lo + hi) / 2;
    if ((continuous_margin(shape, lo) > 0) == (continuous_margin(shape, mid) > 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

int family_first_violating_k(const FamilyShape& shape) {
  for (int k = 1; k <= 64; ++k) {
    auto top = family_top_coefficients(shape, k);
    if (!top) throw std::invalid_argument("no closed form for this family shape");
    if (top->c1 * top->c1 < top->c2) return k;
  }
  throw std::runtime_error("no violating k found up to 64");
}

namespace {

const char* kNamedNames[] = {"t1", "t2", "ex28", "ex35"};

}  // namespace

std::optional<NamedTree> parse_named_tree(std::string_view name) {
  for (int i = 0; i < 4; ++i) {
    if (name == kNamedNames[i]) return static_cast<NamedTree>(i);
  }
  return std::nullopt;
}

std::string named_tree_name(NamedTree which) { return kNamedNames[static_cast<int>(which)]; }

Tree build_named_tree(NamedTree which) {
  switch (which) {
    case NamedTree::T1:
      return build_family_tree({HubStyle::ThreeK2, 0}, 4);
    case NamedTree::T2:
      return build_family_tree({HubStyle::P4TwoK2, 1}, 3);
    case NamedTree::Ex28: {
      // Hub carries one end-attached six-vertex path and two K2s; the
      // other branch vertices carry three and four K2s.
      TreeSketch t;
      int v1 = t.add(0), v2 = t.add(0), v3 = t.add(0);
      t.add_path(v1, 6);
      t.add_k2(v1);
      t.add_k2(v1);
      for (int i = 0; i < 3; ++i) t.add_k2(v2);
      for (int i = 0; i < 4; ++i) t.add_k2(v3);
      return std::move(t).build();
    }
    case NamedTree::Ex35: {
      // T1 with a fourth branch vertex carrying four K2s.
      TreeSketch t;
      int v1 = t.add(0), v2 = t.add(0), v3 = t.add(0);
      for (int i = 0; i < 3; ++i) t.add_k2(v1);
      for (int i = 0; i < 4; ++i) t.add_k2(v2);
      for (int i = 0; i < 4; ++i) t.add_k2(v3);
      int v4 = t.add(0);
      for (int i = 0; i < 4; ++i) t.add_k2(v4);
      return std::move(t).build();
    }
  }
  throw std::invalid_argument("unknown named tree");
}

}  // namespace indpoly
