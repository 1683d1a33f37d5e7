#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "weyllab/cset.hpp"

namespace weyl::test {

// Random cell sets over a fixed geometry: rings centered at 0 or 10 (radii at
// most 3, so rings around different centers never meet) and sequence tails
// whose rate is a function of the limit, so no two tails share a limit with
// different rates.
class RandomSets {
 public:
  explicit RandomSets(std::uint64_t seed) : rng_(seed), probes_(probes()) {}

  CellSet next() {
    std::vector<Cell> cells;
    for (int k = 0, n = int(below(5)); k < n; ++k) cells.push_back(cell());
    return normalize(cells);
  }

  // Points probing every feature of the geometry: grid points, circle
  // points, centers, limits and the first terms of each tail.
  std::vector<ExactComplex> probes() const {
    std::vector<ExactComplex> out;
    for (const ExactComplex& c : centers())
      for (int x = -7; x <= 7; ++x)
        for (int y = -7; y <= 7; y += 7) out.push_back(c + ExactComplex(half(x), half(y)));
    for (const ExactComplex& c : centers())
      for (const Rational& r : radii()) {
        out.push_back(c + ExactComplex(r));
        out.push_back(c + ExactComplex(Rational(0), r));
        out.push_back(c - ExactComplex(r));
      }
    for (std::size_t k = 0; k < limits().size(); ++k) {
      SequenceTail s{limits()[k], rates()[k], 1, {}};
      out.push_back(s.limit);
      for (std::int64_t n = 1; n <= 8; ++n) out.push_back(s.member(n));
    }
    return out;
  }

 private:
  static Rational half(int x) {
    Rational q(x, 2);
    q.canonicalize();
    return q;
  }

  static const std::vector<ExactComplex>& centers() {
    static const std::vector<ExactComplex> c = {ExactComplex(0), ExactComplex(10)};
    return c;
  }
  static const std::vector<Rational>& radii() {
    static const std::vector<Rational> r = {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    return r;
  }
  static const std::vector<ExactComplex>& limits() {
    static const std::vector<ExactComplex> l = {ExactComplex(0), ExactComplex(1), ExactComplex(10),
                                                ExactComplex(Rational(1, 2), Rational(1, 2)), ExactComplex(5)};
    return l;
  }
  static const std::vector<ExactComplex>& rates() {
    static const std::vector<ExactComplex> r = {ExactComplex(1), ExactComplex(Rational(1, 2)),
                                                ExactComplex(Rational(0), Rational(1)), ExactComplex(Rational(1, 4)),
                                                ExactComplex(Rational(-1))};
    return r;
  }

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  Cell cell() {
    const ExactComplex c = pick(centers());
    switch (below(4)) {
      case 0: {
        // Mostly points that land on other features.
        return Point{pick(probes_)};
      }
      case 1: {
        std::size_t k = below(limits().size());
        SequenceTail s{limits()[k], rates()[k], std::int64_t(1 + below(3)), {}};
        if (below(2)) s.excluded.push_back(s.start + std::int64_t(below(3)));
        return s;
      }
      case 2: {
        Rational r = radii()[1 + below(radii().size() - 1)];
        Circle circle{c, r, {}};
        if (below(2)) circle.excluded.push_back(c + ExactComplex(r));
        if (below(3) == 0) circle.excluded.push_back(c - ExactComplex(r));
        std::sort(circle.excluded.begin(), circle.excluded.end());
        return circle;
      }
      default: {
        std::size_t i = below(radii().size() - 1), j = i + 1 + below(radii().size() - 1 - i);
        Annulus a{c, radii()[i], radii()[j], {}, {}};
        if (below(3) == 0) a.excludedPoints.push_back(c + ExactComplex(Rational((a.inner + a.outer) / 2)));
        return a;
      }
    }
  }

  std::mt19937_64 rng_;
  std::vector<ExactComplex> probes_;
};

// Pointwise membership of every set operation on the probes, plus the
// algebraic identities and the subset/disjointness predicates. Returns the
// first failed fact, or an empty string.
inline std::string csetIdentityFailure(const CellSet& a, const CellSet& b, const CellSet& c,
                                       const std::vector<ExactComplex>& probes) {
  const CellSet u = unite(a, b), i = intersect(a, b), d = difference(a, b);
  for (const ExactComplex& p : probes) {
    const bool ma = member(a, p), mb = member(b, p);
    if (member(u, p) != (ma || mb)) return "union membership";
    if (member(i, p) != (ma && mb)) return "intersection membership";
    if (member(d, p) != (ma && !mb)) return "difference membership";
  }
  if (unite(d, i) != a) return "(A \\ B) ∪ (A ∩ B) = A";
  if (!disjoint(d, b)) return "A \\ B disjoint from B";
  if (!isSubset(i, a) || !isSubset(a, u)) return "A ∩ B ⊆ A ⊆ A ∪ B";
  if (unite(a, b) != unite(b, a) || intersect(a, b) != intersect(b, a)) return "commutativity";
  if (difference(a, unite(b, c)) != intersect(difference(a, b), difference(a, c))) return "De Morgan for difference";
  if (intersect(a, unite(b, c)) != unite(i, intersect(a, c))) return "distributivity";
  if (unite(u, c) != unite(a, unite(b, c))) return "associativity";
  if (difference(a, difference(a, b)) != i) return "A \\ (A \\ B) = A ∩ B";
  if (equals(a, b) != (isSubset(a, b) && isSubset(b, a))) return "equality as double inclusion";
  if (disjoint(a, b) != i.empty()) return "disjointness";
  return {};
}

}  // namespace weyl::test
