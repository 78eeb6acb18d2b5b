#include "indpoly/verify.hpp"

#include <cmath>
#include <sstream>

#include "indpoly/checks.hpp"
#include "indpoly/engine.hpp"

namespace indpoly {

namespace {

Polynomial from_decimal(const std::vector<const char*>& decimals) {
  std::vector<mpz_class> coeffs;
  coeffs.reserve(decimals.size());
  for (const char* d : decimals) coeffs.emplace_back(d);
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial reference_polynomial(NamedTree which) {
  switch (which) {
    case NamedTree::T1:
      return from_decimal({"1", "26", "300", "2040", "9142", "28551", "63933", "103736", "121376",
                           "100144", "55499", "18683", "2979", "51", "1"});
    case NamedTree::T2:
      return from_decimal({"1", "26", "300", "2037", "9089", "28147", "62183", "98968", "112870",
                           "90178", "48086", "15498", "2372", "48", "1"});
    case NamedTree::Ex28:
      return from_decimal({"1", "28", "351", "2613", "12910", "44772", "112284", "206422",
                           "278417", "272268", "187731", "86526", "24020", "3139", "55", "1"});
    case NamedTree::Ex35:
      return from_decimal({"1", "35", "561", "5480", "36596", "177534", "648445", "1822331",
                           "3989058", "6835096", "9151478", "9489531", "7485954", "4355940",
                           "1773294", "458294", "60773", "1989", "71", "1"});
  }
  throw std::invalid_argument("unknown named tree");
}

namespace {

struct ExpectedViolation {
  int k;
  int offset;
  const char* lhs;
  const char* rhs;
};

const ExpectedViolation kExpectedViolations[] = {
    {13, 1, "2601", "2979"},        // t1
    {13, 1, "2304", "2372"},        // t2
    {14, 1, "3025", "3139"},        // ex28
    {17, 2, "3956121", "4314883"},  // ex35
};

struct ThresholdReference {
  const char* shape;
  double threshold;
  int first_violating_k;
};

const ThresholdReference kThresholdReferences[] = {
    {"3kk1", 3.2329, 4}, {"3kk2", 3.61719, 4},  {"3skk", 3.31871, 4},
    {"3skk2", 2.83611, 3}, {"3skk3", 3.76626, 4},
};

// The two shapes without closed forms, with the smallest k whose top pair
// breaks log-concavity.
struct LemmaReference {
  const char* shape;
  int first_violating_k;
};

const LemmaReference kLemmaReferences[] = {{"3kk", 4}, {"3skk1", 3}};

std::string coeffs_text(const Polynomial& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i].get_str();
  }
  os << "]";
  return os.str();
}

void check_named_polynomials(std::vector<ReferenceCheck>& out) {
  for (int i = 0; i < 4; ++i) {
    NamedTree which = static_cast<NamedTree>(i);
    const std::string name = named_tree_name(which);
    const Polynomial expected = reference_polynomial(which);
    const Tree tree = build_named_tree(which);

    Polynomial via_dp = independence_polynomial_tree(tree);
    out.push_back({name + " polynomial, tree dp", via_dp == expected,
                   via_dp == expected ? "" : "got " + coeffs_text(via_dp)});

    Polynomial via_general = independence_polynomial_general(tree.to_graph());
    out.push_back({name + " polynomial, general engine", via_general == expected,
                   via_general == expected ? "" : "got " + coeffs_text(via_general)});

    // Low-order coefficients have independent formulas: one empty set, n
    // singletons, and all pairs except the edges.
    const mpz_class n = tree.vertex_count();
    bool low_ok = expected.coeff(0) == 1 && expected.coeff(1) == n &&
                  expected.coeff(2) == n * (n - 1) / 2 - (n - 1);
    out.push_back({name + " low-order coefficients", low_ok, low_ok ? "" : "counting identity failed"});

    ConcavityReport concavity = check_log_concave(expected);
    const ExpectedViolation& want = kExpectedViolations[i];
    bool viol_ok = !concavity.log_concave && concavity.violations.size() == 1 &&
                   concavity.violations[0].k == want.k && concavity.violations[0].offset == want.offset &&
                   concavity.violations[0].lhs == mpz_class(want.lhs) &&
                   concavity.violations[0].rhs == mpz_class(want.rhs);
    std::ostringstream detail;
    if (!viol_ok) {
      detail << "expected single violation at k=" << want.k << ", got " << concavity.to_json();
    }
    out.push_back({name + " violation set", viol_ok, detail.str()});

    UnimodalityReport unimodality = check_unimodal(expected);
    out.push_back({name + " unimodal despite the violation", unimodality.unimodal,
                   unimodality.unimodal ? "" : "witness at " + std::to_string(unimodality.witness)});
  }
}

void check_closed_forms(std::vector<ReferenceCheck>& out) {
  for (const FamilyShape& shape : known_family_shapes()) {
    if (!has_closed_form(shape)) continue;
    bool ok = true;
    std::ostringstream detail;
    for (int k = 1; k <= 12 && ok; ++k) {
      auto top = family_top_coefficients(shape, k);
      Polynomial poly = independence_polynomial_tree(build_family_tree(shape, k));
      int deg = poly.degree();
      if (deg != top->degree || deg != family_alpha(shape, k)) {
        ok = false;
        detail << "k=" << k << ": degree " << deg << " vs closed form " << top->degree;
      } else if (poly.coeff(deg) != 1 || poly.coeff(deg - 1) != top->c1 ||
                 poly.coeff(deg - 2) != top->c2) {
        ok = false;
        detail << "k=" << k << ": top coefficients (1, " << poly.coeff(deg - 1).get_str() << ", "
               << poly.coeff(deg - 2).get_str() << ") vs closed form (1, " << top->c1.get_str()
               << ", " << top->c2.get_str() << ")";
      }
    }
    out.push_back({"closed form matches dp, " + family_shape_name(shape) + ", k=1..12", ok,
                   detail.str()});
  }
}

void check_thresholds(std::vector<ReferenceCheck>& out) {
  for (const auto& ref : kThresholdReferences) {
    FamilyShape shape = *parse_family_shape(ref.shape);
    double got = family_threshold(shape);
    int first_k = family_first_violating_k(shape);
    bool ok = std::abs(got - ref.threshold) <= 1e-3 && first_k == ref.first_violating_k;
    std::ostringstream detail;
    if (!ok) {
      detail << "threshold " << got << " (want " << ref.threshold << "), first violating k "
             << first_k << " (want " << ref.first_violating_k << ")";
    }
    out.push_back({std::string("threshold, ") + ref.shape, ok, detail.str()});
  }
}

void check_lemma_families(std::vector<ReferenceCheck>& out) {
  for (const auto& ref : kLemmaReferences) {
    FamilyShape shape = *parse_family_shape(ref.shape);
    bool ok = true;
    std::ostringstream detail;
    for (int k = 1; k <= 12 && ok; ++k) {
      Polynomial poly = independence_polynomial_tree(build_family_tree(shape, k));
      ConcavityReport report = check_log_concave(poly);
      if (k < ref.first_violating_k) {
        if (!report.log_concave) {
          ok = false;
          detail << "k=" << k << " should be log-concave, got " << report.to_json();
        }
      } else {
        // The break appears right below the top coefficient.
        bool top_violation = false;
        for (const auto& v : report.violations) top_violation |= v.offset == 1;
        if (!top_violation) {
          ok = false;
          detail << "k=" << k << " should violate at offset 1, got " << report.to_json();
        }
      }
    }
    out.push_back({std::string("top violation from k=") + std::to_string(ref.first_violating_k) +
                       " on, " + ref.shape + ", k=1..12",
                   ok, detail.str()});
  }
}

}  // namespace

std::vector<ReferenceCheck> run_reference_checks() {
  std::vector<ReferenceCheck> out;
  check_named_polynomials(out);
  check_closed_forms(out);
  check_thresholds(out);
  check_lemma_families(out);
  return out;
}

bool all_passed(const std::vector<ReferenceCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace indpoly
