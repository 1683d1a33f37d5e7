#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "weyllab/exact.hpp"
#include "weyllab/index_set.hpp"

namespace weyl {

/// {limit + rate/n : n >= start, n not in excluded}.
struct SequenceTail {
  ExactComplex limit;
  ExactComplex rate;
  std::int64_t start = 1;
  std::vector<std::int64_t> excluded;  // sorted, each >= start

  IndexSet indices() const { return IndexSet::tail(start, excluded); }
  ExactComplex member(std::int64_t n) const;
  /// The index n with member(n) == p, if p lies on the family (ignoring
  /// start and exclusions).
  std::optional<std::int64_t> familyIndexOf(const ExactComplex& p) const;

  friend bool operator==(const SequenceTail&, const SequenceTail&) = default;
};

struct Point {
  ExactComplex p;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Circle {
  ExactComplex center;
  Rational radius;
  std::vector<ExactComplex> excluded;  // points on the circle, sorted
  friend bool operator==(const Circle&, const Circle&) = default;
};

/// {inner < |z - center| < outer} minus exclusions. The center is never a
/// member; an open disk is Annulus(a, 0, r) together with Point(a).
struct Annulus {
  ExactComplex center;
  Rational inner;
  Rational outer;
  std::vector<ExactComplex> excludedPoints;  // strictly inside, sorted
  std::vector<SequenceTail> excludedSeqs;    // every member strictly inside
  friend bool operator==(const Annulus&, const Annulus&) = default;
};

using Cell = std::variant<Point, SequenceTail, Circle, Annulus>;

bool cellContains(const Cell& cell, const ExactComplex& p);
/// Throws MalformedCell when the cell violates its invariants.
void validateCell(const Cell& cell);
int compareCells(const Cell& a, const Cell& b);
std::string describe(const Cell& cell);

/// Canonical finite union of pairwise disjoint cells. Two normalized sets are
/// equal as point sets iff they are structurally equal.
class CellSet {
 public:
  CellSet() = default;

  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }

  friend bool operator==(const CellSet&, const CellSet&) = default;

 private:
  friend class Refinement;
  explicit CellSet(std::vector<Cell> canonicalCells) : cells_(std::move(canonicalCells)) {}
  std::vector<Cell> cells_;
};

enum class SetOp { Union, Intersect, Difference };

CellSet normalize(const std::vector<Cell>& cells);
CellSet setop(SetOp kind, const CellSet& a, const CellSet& b);
inline CellSet unite(const CellSet& a, const CellSet& b) { return setop(SetOp::Union, a, b); }
inline CellSet intersect(const CellSet& a, const CellSet& b) { return setop(SetOp::Intersect, a, b); }
inline CellSet difference(const CellSet& a, const CellSet& b) { return setop(SetOp::Difference, a, b); }
bool member(const CellSet& a, const ExactComplex& p);
bool equals(const CellSet& a, const CellSet& b);
bool isSubset(const CellSet& a, const CellSet& b);
bool disjoint(const CellSet& a, const CellSet& b);

struct Topology {
  CellSet iso;       // points of A isolated in A
  CellSet accIn;     // A intersected with the accumulation points of A
  CellSet interior;  // topological interior of A
};

Topology topology(const CellSet& a);

/// Closure-style hull used for accumulation points: closed annuli, circles
/// and the limits of sequence tails.
CellSet accumulationPoints(const CellSet& a);

std::ostream& operator<<(std::ostream& os, const CellSet& s);

}  // namespace weyl
