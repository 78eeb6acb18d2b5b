#include "indpoly/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace indpoly {

namespace {
const mpz_class kZero = 0;
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (const mpz_class& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("polynomial coefficients must be nonnegative");
  }
  trim();
}

Polynomial Polynomial::one() { return Polynomial({mpz_class(1)}); }

Polynomial Polynomial::zero() { return Polynomial(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int Polynomial::degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial is undefined");
  return static_cast<int>(coeffs_.size()) - 1;
}

const mpz_class& Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

Polynomial Polynomial::shifted() const {
  if (coeffs_.empty()) return Polynomial();
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size() + 1);
  out.emplace_back(0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  Polynomial p;
  p.coeffs_ = std::move(out);
  return p;
}

mpz_class Polynomial::eval(const mpz_class& t) const {
  mpz_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * t + coeffs_[i];
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<mpz_class> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  Polynomial p;
  p.coeffs_ = std::move(out);
  p.trim();
  return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string Polynomial::to_text() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeffs_[k].get_str();
    } else {
      if (coeffs_[k] != 1) os << coeffs_[k].get_str();
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::string Polynomial::coeffs_json() const {
  std::ostringstream os;
  os << "{\"coeffs\": [";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << '"' << coeffs_[k].get_str() << '"';
  }
  os << "]}";
  return os.str();
}

}  // namespace indpoly
