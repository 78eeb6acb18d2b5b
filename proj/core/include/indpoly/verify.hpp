#pragma once

#include <string>
#include <vector>

#include "indpoly/families.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// Frozen independence polynomial of a named tree: the reference values the
// rest of the library is checked against.
Polynomial reference_polynomial(NamedTree which);

struct ReferenceCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // what diverged, on failure
};

// Recomputes every named tree, closed form, threshold and family claim
// from scratch and compares against the frozen references. All engines
// participate, so a regression in any of them trips at least one line.
std::vector<ReferenceCheck> run_reference_checks();

bool all_passed(const std::vector<ReferenceCheck>& checks);

}  // namespace indpoly
