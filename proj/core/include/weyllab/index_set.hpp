#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "weyllab/exact.hpp"

namespace weyl {

/// A subset of the positive integers that is a finite union of intervals,
/// the last of which may be unbounded. Index sets of sequence tails are
/// always of this shape.
class IndexSet {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

  IndexSet() = default;

  static IndexSet all() { return range(1, kInf); }
  static IndexSet range(std::int64_t lo, std::int64_t hi);
  static IndexSet single(std::int64_t n) { return range(n, n); }
  /// {n >= start} minus the listed exceptions.
  static IndexSet tail(std::int64_t start, const std::vector<std::int64_t>& excluded);

  bool empty() const { return runs_.empty(); }
  bool finite() const { return runs_.empty() || runs_.back().second != kInf; }
  bool contains(std::int64_t n) const;
  /// Smallest element; undefined on the empty set.
  std::int64_t min() const { return runs_.front().first; }
  /// Elements of a finite set. Throws UnsupportedSet beyond `limit` elements.
  std::vector<std::int64_t> elements(std::size_t limit = 1u << 20) const;
  /// For an infinite set: the gaps between min() and the unbounded run.
  std::vector<std::int64_t> gaps(std::size_t limit = 1u << 20) const;

  IndexSet unite(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet subtract(const IndexSet& other) const;
  /// Complement within the positive integers.
  IndexSet complement() const;

  const std::vector<std::pair<std::int64_t, std::int64_t>>& runs() const { return runs_; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.runs_ == b.runs_; }

 private:
  void canonicalize();
  std::vector<std::pair<std::int64_t, std::int64_t>> runs_;
};

/// {n >= 1 : a n^2 + b n + c > 0}, decided exactly.
IndexSet positiveSet(const Rational& a, const Rational& b, const Rational& c);

}  // namespace weyl
