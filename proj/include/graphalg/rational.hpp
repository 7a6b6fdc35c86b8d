#pragma once

// Exact rational scalars. Everything in this library computes over Q; no
// floating point is used anywhere, including I/O. GMP keeps values in lowest
// terms after every operation.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace graphalg {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& r0) {
  Rational r = r0;  // two-argument construction can leave a value unreduced
  r.canonicalize();
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

// Reduced fraction from a possibly non-coprime pair.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", optional sign, surrounding spaces; also tolerates the
// typographic minus U+2212 that sneaks in via copy-paste.
inline Rational parse_rational(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (size_t i = 0; i < text.size(); i++) {
    unsigned char c = text[i];
    if (c == ' ' || c == '\t') continue;
    if (c == 0xe2 && i + 2 < text.size() && (unsigned char)text[i + 1] == 0x88 &&
        (unsigned char)text[i + 2] == 0x92) {
      s += '-';
      i += 2;
      continue;
    }
    s += (char)c;
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

// base^e with e >= 0 (e < 0 allowed for nonzero base).
inline Rational rational_pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("0 raised to a negative power");
    Rational inv(base.get_den(), base.get_num());
    inv.canonicalize();
    return rational_pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), (unsigned long)e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), (unsigned long)e);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// n(n-1)...(n-m+1); the denominator of injective counts.
inline Rational falling_factorial(long n, long m) {
  Rational r = 1;
  for (long i = 0; i < m; i++) r *= Rational(n - i);
  return r;
}

}  // namespace graphalg
