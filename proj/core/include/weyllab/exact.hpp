#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace weyl {

/// Arbitrary precision rational; always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

Rational makeRational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q". Throws SyntaxError on malformed text and
/// ZeroDenominator when q == 0.
Rational parseRational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string toString(const Rational& q);

int cmp(const Rational& a, const Rational& b);
int sign(const Rational& q);
Rational absValue(const Rational& q);
mpz_class floorOf(const Rational& q);
mpz_class ceilOf(const Rational& q);

/// Gaussian rational re + im*i.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational r) : re(std::move(r)), im(0) {}  // NOLINT(implicit)
  ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool isReal() const { return sgn(im) == 0; }

  ExactComplex conj() const { return {re, -im}; }
  /// |z|^2, the only metric quantity ever compared.
  Rational norm2() const { return re * re + im * im; }

  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
  friend bool operator<(const ExactComplex& a, const ExactComplex& b) { return compare(a, b) < 0; }

  /// Lexicographic on (re, im); used for canonical ordering only.
  static int compare(const ExactComplex& a, const ExactComplex& b);

  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  /// Throws std::domain_error on division by zero.
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b);
};

/// Re(a * conj(b)).
Rational realDot(const ExactComplex& a, const ExactComplex& b);

/// "p/q" when real, otherwise "p/q+r/si" / "p/q-r/si" (model-file syntax).
std::string toString(const ExactComplex& z);

/// Parses the model-file literal: "p/q", "p/q+r/si", "p/q-r/si", "r/si", "i".
ExactComplex parseComplex(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

}  // namespace weyl
