#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <vector>

#include "weyllab/cset.hpp"

namespace weyl {

using PieceMask = boost::dynamic_bitset<>;

/// Common refinement of several cell lists into pairwise disjoint, nonempty
/// pieces such that every input cell is a union of pieces.
///
/// Pieces come in three shapes:
///  - points (listed points, exclusions, and coincidences between families),
///  - segments of a sequence family (an index set located in one ring piece
///    or in none),
///  - ring pieces (an open annulus between consecutive radii of one center,
///    or one circle), minus every point and segment located in them.
///
/// Any set built from whole pieces is assembled back into canonical form, so
/// set operations reduce to boolean algebra on piece masks.
class Refinement {
 public:
  explicit Refinement(const std::vector<std::vector<Cell>>& inputs);

  std::size_t pieceCount() const { return pieces_.size(); }
  std::size_t inputCount() const { return inputMasks_.size(); }

  /// Pieces contained in input `k`.
  const PieceMask& inputMask(std::size_t k) const { return inputMasks_[k]; }
  PieceMask emptyMask() const { return PieceMask(pieces_.size()); }

  /// Canonical set formed by the selected pieces.
  CellSet assemble(const PieceMask& selected) const;
  /// Cells covering exactly one piece (a finite segment yields several points).
  std::vector<Cell> pieceCells(std::size_t piece) const;
  /// Pieces of `s`; `s` must be a union of pieces of this refinement.
  PieceMask maskOf(const CellSet& s) const;

 private:
  struct Family {
    ExactComplex limit;
    ExactComplex rate;
    ExactComplex member(std::int64_t n) const;
  };
  struct Center {
    ExactComplex center;
    std::vector<Rational> radii;  // increasing, positive
  };
  // Ring piece 2k: open annulus (radii[k-1] or 0, radii[k]); 2k+1: circle radii[k].
  struct RingRef {
    std::size_t center;
    std::size_t slot;
    bool isCircle() const { return slot % 2 == 1; }
    std::size_t radiusIndex() const { return slot / 2; }
  };
  enum class Kind { Ring, Point, Segment };
  struct Piece {
    Kind kind = Kind::Ring;
    RingRef ring{};                  // Ring
    ExactComplex point;              // Point; representative for Segment
    std::size_t family = 0;          // Segment
    IndexSet indices;                // Segment
    std::optional<std::size_t> location;  // ring piece id containing a point/segment
  };

  std::optional<std::size_t> locate(const ExactComplex& p) const;
  IndexSet ringIndices(std::size_t family, const RingRef& ring) const;
  bool ringInCell(const RingRef& ring, const Cell& cell) const;
  bool pieceInCell(const Piece& piece, const Cell& cell) const;
  Rational innerRadius(const RingRef& ring) const;
  Rational outerRadius(const RingRef& ring) const;

  std::vector<Center> centers_;
  std::vector<Family> families_;
  std::vector<Piece> pieces_;
  std::vector<std::size_t> ringPieceId_;            // per (center, slot) flattened
  std::vector<std::size_t> ringOffset_;             // first flattened slot of each center
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> pointFamilies_;  // per piece
  std::vector<PieceMask> inputMasks_;
};

}  // namespace weyl
