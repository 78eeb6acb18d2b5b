#include "indpoly/checks.hpp"

#include <sstream>
#include <stdexcept>

namespace indpoly {

ConcavityReport check_log_concave(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("log-concavity check needs a nonzero polynomial");
  ConcavityReport report;
  report.alpha = p.degree();
  const auto& c = p.coeffs();
  for (int k = 1; k + 1 <= report.alpha; ++k) {
    mpz_class lhs = c[k] * c[k];
    mpz_class rhs = c[k - 1] * c[k + 1];
    if (lhs < rhs) {
      report.log_concave = false;
      report.violations.push_back({k, report.alpha - k, std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

std::string ConcavityReport::to_json() const {
  std::ostringstream os;
  os << "{\"log_concave\": " << (log_concave ? "true" : "false") << ", \"alpha\": " << alpha
     << ", \"violations\": [";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << ", ";
    os << "{\"k\": " << v.k << ", \"offset\": " << v.offset << ", \"lhs\": \""
       << v.lhs.get_str() << "\", \"rhs\": \"" << v.rhs.get_str() << "\"}";
  }
  os << "]}";
  return os.str();
}

UnimodalityReport check_unimodal(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("unimodality check needs a nonzero polynomial");
  UnimodalityReport report;
  const auto& c = p.coeffs();
  const int size = static_cast<int>(c.size());

  int first_descent = size;  // first k with c[k] > c[k+1]
  for (int k = 0; k + 1 < size; ++k) {
    if (c[k] > c[k + 1]) {
      first_descent = k;
      break;
    }
  }
  for (int k = first_descent + 1; k + 1 < size; ++k) {
    if (c[k] < c[k + 1]) {
      // The run since first_descent is non-increasing, so some earlier
      // coefficient strictly exceeds c[k]: a genuine valley.
      report.unimodal = false;
      report.witness = k;
      return report;
    }
  }
  mpz_class top = c[0];
  for (const auto& v : c) {
    if (v > top) top = v;
  }
  report.mode_low = 0;
  while (c[report.mode_low] != top) ++report.mode_low;
  report.mode_high = size - 1;
  while (c[report.mode_high] != top) --report.mode_high;
  return report;
}

std::string UnimodalityReport::to_json() const {
  std::ostringstream os;
  if (unimodal) {
    os << "{\"unimodal\": true, \"mode_low\": " << mode_low << ", \"mode_high\": " << mode_high
       << "}";
  } else {
    os << "{\"unimodal\": false, \"witness\": " << witness << "}";
  }
  return os.str();
}

}  // namespace indpoly
