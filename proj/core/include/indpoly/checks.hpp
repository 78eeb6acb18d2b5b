#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "indpoly/polynomial.hpp"

namespace indpoly {

// One failed log-concavity comparison: lhs < rhs at index k, where
// lhs = c_k^2 and rhs = c_{k-1} * c_{k+1}. offset is the distance from the
// top coefficient, degree - k.
struct ConcavityViolation {
  int k = 0;
  int offset = 0;
  mpz_class lhs;
  mpz_class rhs;
};

struct ConcavityReport {
  bool log_concave = true;
  int alpha = 0;  // degree of the checked polynomial
  std::vector<ConcavityViolation> violations;

  // {"log_concave": ..., "alpha": ..., "violations": [{"k": ..., "offset":
  // ..., "lhs": "...", "rhs": "..."}]} with exact decimal strings.
  std::string to_json() const;
};

// Checks c_k^2 >= c_{k-1} * c_{k+1} for every interior index of a nonzero
// polynomial, reporting all strict failures in ascending k.
ConcavityReport check_log_concave(const Polynomial& p);

struct UnimodalityReport {
  bool unimodal = true;
  // On success: first and last index attaining the maximum coefficient.
  int mode_low = 0;
  int mode_high = 0;
  // On failure: an index k whose coefficient is strictly below both some
  // earlier and some later coefficient.
  int witness = -1;

  std::string to_json() const;
};

// Checks that coefficients rise (weakly) to a plateau and then fall.
UnimodalityReport check_unimodal(const Polynomial& p);

}  // namespace indpoly
