#include "weyllab/exact.hpp"

#include <cctype>
#include <stdexcept>

#include "weyllab/error.hpp"

namespace weyl {

Rational makeRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::ZeroDenominator, "zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

namespace {

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!allDigits(num) || !allDigits(den))
    throw Error(Errc::SyntaxError, "malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error(Errc::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string toString(const Rational& q) { return q.get_str(); }

int cmp(const Rational& a, const Rational& b) {
  int c = ::cmp(a, b);
  return (c > 0) - (c < 0);
}

int sign(const Rational& q) { return sgn(q); }

Rational absValue(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

mpz_class floorOf(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceilOf(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int ExactComplex::compare(const ExactComplex& a, const ExactComplex& b) {
  if (int c = weyl::cmp(a.re, b.re); c != 0) return c;
  return weyl::cmp(a.im, b.im);
}

ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
  Rational n = b.norm2();
  if (sgn(n) == 0) throw std::domain_error("complex division by zero");
  ExactComplex num = a * b.conj();
  return {num.re / n, num.im / n};
}

Rational realDot(const ExactComplex& a, const ExactComplex& b) { return a.re * b.re + a.im * b.im; }

std::string toString(const ExactComplex& z) {
  if (z.isReal()) return toString(z.re);
  std::string im = toString(absValue(z.im));
  if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + im + "i";
  return toString(z.re) + (sgn(z.im) < 0 ? "-" : "+") + im + "i";
}

ExactComplex parseComplex(std::string_view text) {
  if (text.empty()) throw Error(Errc::SyntaxError, "empty complex literal");
  if (text.back() != 'i') return ExactComplex(parseRational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // The split point is the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imagOf = [&](std::string_view s) -> Rational {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parseRational(s);
  };
  if (split == std::string_view::npos) return {Rational(0), imagOf(body)};
  return {parseRational(body.substr(0, split)), imagOf(body.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << toString(z); }

}  // namespace weyl
