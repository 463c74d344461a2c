#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbmeas {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms.
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or a
/// zero denominator.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline const Integer& factorial(unsigned n) {
  static const std::vector<Integer> table = [] {
    std::vector<Integer> t(129);
    t[0] = 1;
    for (unsigned i = 1; i < t.size(); ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table.at(n);
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational pow(const Rational& base, unsigned e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return r;
}

}  // namespace orbmeas
