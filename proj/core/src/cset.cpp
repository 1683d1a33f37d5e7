#include "weyllab/cset.hpp"

#include <algorithm>
#include <sstream>

#include "weyllab/error.hpp"
#include "weyllab/refinement.hpp"

namespace weyl {

namespace {

int compareTails(const SequenceTail& a, const SequenceTail& b);

int compareRationals(const Rational& a, const Rational& b) { return cmp(a, b); }

template <class T, class F>
int compareVectors(const std::vector<T>& a, const std::vector<T>& b, F elem) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (int c = elem(a[i], b[i])) return c;
  return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

int compareInts(std::int64_t a, std::int64_t b) { return a < b ? -1 : a > b ? 1 : 0; }

int compareTails(const SequenceTail& a, const SequenceTail& b) {
  if (int c = ExactComplex::compare(a.limit, b.limit)) return c;
  if (int c = ExactComplex::compare(a.rate, b.rate)) return c;
  if (int c = compareInts(a.start, b.start)) return c;
  return compareVectors(a.excluded, b.excluded, compareInts);
}

// |z_n - a|^2 n^2 = A n^2 + B n + C for z_n = c + r/n.
struct Radial {
  Rational a, b, c;
  Radial(const SequenceTail& s, const ExactComplex& center) {
    ExactComplex d = s.limit - center;
    a = d.norm2();
    b = 2 * realDot(d, s.rate);
    c = s.rate.norm2();
  }
  IndexSet outside(const Rational& r2) const { return positiveSet(a - r2, b, c); }
  IndexSet inside(const Rational& r2) const { return positiveSet(r2 - a, -b, -c); }
};

bool strictlyInside(const Annulus& an, const ExactComplex& p) {
  Rational d2 = (p - an.center).norm2();
  return an.inner * an.inner < d2 && d2 < an.outer * an.outer;
}

std::string joinPoints(const std::vector<ExactComplex>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) out += (i ? ", " : "") + toString(pts[i]);
  return out;
}

std::string describeTail(const SequenceTail& s) {
  std::string out = "Seq(c=" + toString(s.limit) + ", r=" + toString(s.rate) + ", n0=" + std::to_string(s.start);
  if (!s.excluded.empty()) {
    out += ", excl{";
    for (std::size_t i = 0; i < s.excluded.size(); ++i) out += (i ? ", " : "") + std::to_string(s.excluded[i]);
    out += "}";
  }
  return out + ")";
}

}  // namespace

ExactComplex SequenceTail::member(std::int64_t n) const {
  return limit + rate / ExactComplex(Rational(mpz_class(static_cast<long>(n))));
}

std::optional<std::int64_t> SequenceTail::familyIndexOf(const ExactComplex& p) const {
  if (p == limit) return std::nullopt;
  // rate = n (p - limit) for a positive integer n.
  const ExactComplex d = p - limit;
  if (rate.re * d.im != rate.im * d.re) return std::nullopt;
  const Rational n = sgn(d.re) != 0 ? Rational(rate.re / d.re) : Rational(rate.im / d.im);
  if (n.get_den() != 1 || sgn(n) <= 0 || !n.get_num().fits_slong_p()) return std::nullopt;
  return n.get_num().get_si();
}

bool cellContains(const Cell& cell, const ExactComplex& p) {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Point>) {
          return c.p == p;
        } else if constexpr (std::is_same_v<T, SequenceTail>) {
          auto n = c.familyIndexOf(p);
          return n && c.indices().contains(*n);
        } else if constexpr (std::is_same_v<T, Circle>) {
          if ((p - c.center).norm2() != c.radius * c.radius) return false;
          return std::find(c.excluded.begin(), c.excluded.end(), p) == c.excluded.end();
        } else {
          if (!strictlyInside(c, p)) return false;
          if (std::find(c.excludedPoints.begin(), c.excludedPoints.end(), p) != c.excludedPoints.end()) return false;
          for (const SequenceTail& s : c.excludedSeqs)
            if (cellContains(s, p)) return false;
          return true;
        }
      },
      cell);
}

void validateCell(const Cell& cell) {
  auto fail = [&](const std::string& why) { throw Error(Errc::MalformedCell, describe(cell) + ": " + why); };
  auto checkTail = [&](const SequenceTail& s) {
    if (s.rate.isZero()) fail("sequence rate must be nonzero");
    if (s.start < 1) fail("sequence start must be positive");
    for (std::int64_t e : s.excluded)
      if (e < s.start) fail("excluded index below the start");
  };
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, SequenceTail>) {
          checkTail(c);
        } else if constexpr (std::is_same_v<T, Circle>) {
          if (sgn(c.radius) <= 0) fail("radius must be positive");
          for (const ExactComplex& p : c.excluded)
            if ((p - c.center).norm2() != c.radius * c.radius) fail("excluded point " + toString(p) + " is off the circle");
        } else if constexpr (std::is_same_v<T, Annulus>) {
          if (sgn(c.inner) < 0) fail("inner radius must be nonnegative");
          if (c.outer <= c.inner) fail("outer radius must exceed the inner radius");
          for (const ExactComplex& p : c.excludedPoints)
            if (!strictlyInside(c, p)) fail("excluded point " + toString(p) + " is not strictly inside");
          for (const SequenceTail& s : c.excludedSeqs) {
            checkTail(s);
            Radial q(s, c.center);
            IndexSet inside = q.outside(c.inner * c.inner).intersect(q.inside(c.outer * c.outer));
            if (!s.indices().subtract(inside).empty()) fail("excluded sequence " + describeTail(s) + " leaves the annulus");
          }
        }
      },
      cell);
}

int compareCells(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
  return std::visit(
      [&](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, Point>) {
          return ExactComplex::compare(x.p, y.p);
        } else if constexpr (std::is_same_v<T, SequenceTail>) {
          return compareTails(x, y);
        } else if constexpr (std::is_same_v<T, Circle>) {
          if (int c = ExactComplex::compare(x.center, y.center)) return c;
          if (int c = compareRationals(x.radius, y.radius)) return c;
          return compareVectors(x.excluded, y.excluded, ExactComplex::compare);
        } else {
          if (int c = ExactComplex::compare(x.center, y.center)) return c;
          if (int c = compareRationals(x.inner, y.inner)) return c;
          if (int c = compareRationals(x.outer, y.outer)) return c;
          if (int c = compareVectors(x.excludedPoints, y.excludedPoints, ExactComplex::compare)) return c;
          return compareVectors(x.excludedSeqs, y.excludedSeqs, compareTails);
        }
      },
      a);
}

std::string describe(const Cell& cell) {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Point>) {
          return "Point(" + toString(c.p) + ")";
        } else if constexpr (std::is_same_v<T, SequenceTail>) {
          return describeTail(c);
        } else if constexpr (std::is_same_v<T, Circle>) {
          std::string out = "Circle(" + toString(c.center) + ", " + toString(c.radius);
          if (!c.excluded.empty()) out += ", excl{" + joinPoints(c.excluded) + "}";
          return out + ")";
        } else {
          std::string out = "Annulus(" + toString(c.center) + ", " + toString(c.inner) + ", " + toString(c.outer);
          if (!c.excludedPoints.empty()) out += ", exclPoints{" + joinPoints(c.excludedPoints) + "}";
          if (!c.excludedSeqs.empty()) {
            out += ", exclSeqs{";
            for (std::size_t i = 0; i < c.excludedSeqs.size(); ++i) out += (i ? ", " : "") + describeTail(c.excludedSeqs[i]);
            out += "}";
          }
          return out + ")";
        }
      },
      cell);
}

CellSet normalize(const std::vector<Cell>& cells) {
  Refinement r({cells});
  return r.assemble(r.inputMask(0));
}

CellSet setop(SetOp kind, const CellSet& a, const CellSet& b) {
  Refinement r({a.cells(), b.cells()});
  PieceMask m = r.inputMask(0);
  switch (kind) {
    case SetOp::Union: m |= r.inputMask(1); break;
    case SetOp::Intersect: m &= r.inputMask(1); break;
    case SetOp::Difference: m -= r.inputMask(1); break;
  }
  return r.assemble(m);
}

bool member(const CellSet& a, const ExactComplex& p) {
  return std::any_of(a.cells().begin(), a.cells().end(), [&](const Cell& c) { return cellContains(c, p); });
}

bool equals(const CellSet& a, const CellSet& b) { return a == b; }

bool isSubset(const CellSet& a, const CellSet& b) {
  Refinement r({a.cells(), b.cells()});
  return r.inputMask(0).is_subset_of(r.inputMask(1));
}

bool disjoint(const CellSet& a, const CellSet& b) {
  Refinement r({a.cells(), b.cells()});
  return !r.inputMask(0).intersects(r.inputMask(1));
}

CellSet accumulationPoints(const CellSet& a) {
  std::vector<Cell> hull;
  for (const Cell& cell : a.cells()) {
    if (const auto* s = std::get_if<SequenceTail>(&cell)) {
      hull.emplace_back(Point{s->limit});
    } else if (const auto* c = std::get_if<Circle>(&cell)) {
      hull.emplace_back(Circle{c->center, c->radius, {}});
    } else if (const auto* an = std::get_if<Annulus>(&cell)) {
      hull.emplace_back(Annulus{an->center, an->inner, an->outer, {}, {}});
      hull.emplace_back(Circle{an->center, an->outer, {}});
      if (sgn(an->inner) > 0) {
        hull.emplace_back(Circle{an->center, an->inner, {}});
      } else {
        hull.emplace_back(Point{an->center});
      }
    }
  }
  return normalize(hull);
}

Topology topology(const CellSet& a) {
  CellSet acc = accumulationPoints(a);
  Topology t;
  t.iso = difference(a, acc);
  t.accIn = intersect(a, acc);

  // Canonical form merges every circle squeezed between member annuli, so
  // interior points come only from annulus cells and their centers.
  std::vector<Cell> open;
  std::vector<Cell> holes;
  for (const Cell& cell : a.cells()) {
    const auto* an = std::get_if<Annulus>(&cell);
    if (!an) continue;
    open.push_back(cell);
    bool centerIsLimit = false;
    for (const SequenceTail& s : an->excludedSeqs) {
      holes.emplace_back(Point{s.limit});
      if (s.limit == an->center) centerIsLimit = true;
    }
    if (sgn(an->inner) == 0 && !centerIsLimit && member(a, an->center)) open.emplace_back(Point{an->center});
  }
  t.interior = difference(normalize(open), normalize(holes));
  return t;
}

std::ostream& operator<<(std::ostream& os, const CellSet& s) {
  os << "{";
  for (std::size_t i = 0; i < s.cells().size(); ++i) os << (i ? ", " : "") << describe(s.cells()[i]);
  return os << "}";
}

}  // namespace weyl
