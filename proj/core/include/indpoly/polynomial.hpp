#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace indpoly {

/**
 * Dense univariate polynomial with arbitrary-precision nonnegative integer
 * coefficients, stored ascending by exponent.
 *
 * Canonical form: no trailing zero coefficient; the zero polynomial is the
 * empty vector. All operations return canonical results, so two polynomials
 * are equal iff their coefficient vectors are equal.
 */
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<mpz_class> coeffs);

  static Polynomial one();
  static Polynomial zero();

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of a nonzero polynomial; throws std::logic_error on zero.
  int degree() const;

  // Coefficient of x^k; zero outside the stored range.
  const mpz_class& coeff(std::size_t k) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  // Multiplication by x (exponent shift by one).
  Polynomial shifted() const;

  mpz_class eval(const mpz_class& t) const;

  // Human-readable ascending rendering, e.g. "1 + 26x + 300x^2 + x^14".
  // Zero coefficients are omitted; unit coefficients print bare powers.
  std::string to_text() const;

  // JSON object with coefficients as decimal strings:
  // {"coeffs": ["1", "26", ...]}. Exact at any magnitude.
  std::string coeffs_json() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<mpz_class> coeffs_;

  void trim();
};

}  // namespace indpoly
