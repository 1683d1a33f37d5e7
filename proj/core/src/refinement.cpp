#include "weyllab/refinement.hpp"

#include <algorithm>
#include <map>

#include "weyllab/error.hpp"

namespace weyl {

namespace {

void sortUnique(std::vector<ExactComplex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

SequenceTail makeTail(const ExactComplex& limit, const ExactComplex& rate, const IndexSet& indices) {
  return SequenceTail{limit, rate, indices.min(), indices.gaps()};
}

// Squared-modulus comparisons of the family members against a circle of
// radius^2 = r2 around `center`: |c + r/n - a|^2 n^2 = A n^2 + B n + C.
struct RadialQuadratic {
  Rational a, b, c;
  RadialQuadratic(const ExactComplex& limit, const ExactComplex& rate, const ExactComplex& center) {
    ExactComplex d = limit - center;
    a = d.norm2();
    b = 2 * realDot(d, rate);
    c = rate.norm2();
  }
  IndexSet outside(const Rational& r2) const { return positiveSet(a - r2, b, c); }
  IndexSet inside(const Rational& r2) const { return positiveSet(r2 - a, -b, -c); }
};

}  // namespace

ExactComplex Refinement::Family::member(std::int64_t n) const {
  return limit + rate / ExactComplex(Rational(mpz_class(static_cast<long>(n))));
}

Refinement::Refinement(const std::vector<std::vector<Cell>>& inputs) {
  std::vector<ExactComplex> specials;

  auto addRadius = [&](const ExactComplex& center, const Rational& r) {
    auto it = std::find_if(centers_.begin(), centers_.end(), [&](const Center& c) { return c.center == center; });
    if (it == centers_.end()) {
      centers_.push_back(Center{center, {}});
      it = std::prev(centers_.end());
    }
    it->radii.push_back(r);
  };
  auto addFamily = [&](const SequenceTail& s) {
    for (const Family& f : families_) {
      if (f.limit == s.limit) {
        if (f.rate != s.rate)
          throw Error(Errc::SameLimitSequences, "sequence tails at limit " + toString(s.limit) +
                                                    " with rates " + toString(f.rate) + " and " +
                                                    toString(s.rate));
        return;
      }
    }
    families_.push_back(Family{s.limit, s.rate});
  };

  for (const auto& input : inputs) {
    for (const Cell& cell : input) {
      validateCell(cell);
      std::visit(
          [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Point>) {
              specials.push_back(c.p);
            } else if constexpr (std::is_same_v<T, SequenceTail>) {
              addFamily(c);
            } else if constexpr (std::is_same_v<T, Circle>) {
              addRadius(c.center, c.radius);
              specials.insert(specials.end(), c.excluded.begin(), c.excluded.end());
            } else {
              if (sgn(c.inner) > 0) addRadius(c.center, c.inner);
              addRadius(c.center, c.outer);
              specials.insert(specials.end(), c.excludedPoints.begin(), c.excludedPoints.end());
              for (const SequenceTail& s : c.excludedSeqs) addFamily(s);
            }
          },
          cell);
    }
  }

  for (Center& c : centers_) {
    std::sort(c.radii.begin(), c.radii.end());
    c.radii.erase(std::unique(c.radii.begin(), c.radii.end()), c.radii.end());
  }
  std::sort(centers_.begin(), centers_.end(), [](const Center& x, const Center& y) { return x.center < y.center; });
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    for (std::size_t j = i + 1; j < centers_.size(); ++j) {
      Rational reach = centers_[i].radii.back() + centers_[j].radii.back();
      if ((centers_[i].center - centers_[j].center).norm2() <= reach * reach)
        throw Error(Errc::UnsupportedRegion, "non-concentric ring regions around " + toString(centers_[i].center) +
                                                 " and " + toString(centers_[j].center) + " overlap");
    }
  }
  std::sort(families_.begin(), families_.end(), [](const Family& x, const Family& y) {
    int c = ExactComplex::compare(x.limit, y.limit);
    return c != 0 ? c < 0 : ExactComplex::compare(x.rate, y.rate) < 0;
  });

  // Points shared by two families. If c1 + r1/n = c2 + r2/m then one of
  // |r1|/n, |r2|/m is at least |c1 - c2|/2, which bounds the search.
  for (std::size_t f = 0; f < families_.size(); ++f) {
    for (std::size_t g = 0; g < families_.size(); ++g) {
      if (f == g) continue;
      Rational gap2 = (families_[f].limit - families_[g].limit).norm2();
      Rational bound2 = 4 * families_[f].rate.norm2() / gap2;
      SequenceTail other{families_[g].limit, families_[g].rate, 1, {}};
      for (std::int64_t n = 1; Rational(mpz_class(static_cast<long>(n * n))) <= bound2; ++n) {
        ExactComplex z = families_[f].member(n);
        if (other.familyIndexOf(z)) specials.push_back(z);
      }
    }
  }
  sortUnique(specials);

  // Ring pieces.
  for (std::size_t c = 0; c < centers_.size(); ++c) {
    ringOffset_.push_back(ringPieceId_.size());
    for (std::size_t slot = 0; slot < 2 * centers_[c].radii.size(); ++slot) {
      ringPieceId_.push_back(pieces_.size());
      Piece p;
      p.kind = Kind::Ring;
      p.ring = RingRef{c, slot};
      pieces_.push_back(std::move(p));
    }
  }

  std::vector<IndexSet> exceptional(families_.size());
  for (const ExactComplex& z : specials) {
    Piece p;
    p.kind = Kind::Point;
    p.point = z;
    p.location = locate(z);
    std::vector<std::pair<std::size_t, std::int64_t>> owners;
    for (std::size_t f = 0; f < families_.size(); ++f) {
      SequenceTail fam{families_[f].limit, families_[f].rate, 1, {}};
      if (auto n = fam.familyIndexOf(z)) {
        owners.emplace_back(f, *n);
        exceptional[f] = exceptional[f].unite(IndexSet::single(*n));
      }
    }
    pieces_.push_back(std::move(p));
    pointFamilies_.resize(pieces_.size());
    pointFamilies_.back() = std::move(owners);
  }

  // Segments: the family's index line cut by every index set that matters.
  for (std::size_t f = 0; f < families_.size(); ++f) {
    std::vector<IndexSet> cuts;
    std::vector<std::pair<IndexSet, std::size_t>> ringSets;
    for (std::size_t c = 0; c < centers_.size(); ++c) {
      for (std::size_t slot = 0; slot < 2 * centers_[c].radii.size(); ++slot) {
        RingRef ring{c, slot};
        IndexSet s = ringIndices(f, ring);
        if (!s.empty()) {
          cuts.push_back(s);
          ringSets.emplace_back(s, ringPieceId_[ringOffset_[c] + slot]);
        }
      }
    }
    for (const auto& input : inputs) {
      for (const Cell& cell : input) {
        if (const auto* s = std::get_if<SequenceTail>(&cell)) {
          if (s->limit == families_[f].limit) cuts.push_back(s->indices());
        } else if (const auto* an = std::get_if<Annulus>(&cell)) {
          for (const SequenceTail& e : an->excludedSeqs)
            if (e.limit == families_[f].limit) cuts.push_back(e.indices());
        }
      }
    }
    std::vector<IndexSet> parts{IndexSet::all().subtract(exceptional[f])};
    for (const IndexSet& cut : cuts) {
      std::vector<IndexSet> next;
      for (const IndexSet& part : parts) {
        IndexSet in = part.intersect(cut), out = part.subtract(cut);
        if (!in.empty()) next.push_back(std::move(in));
        if (!out.empty()) next.push_back(std::move(out));
      }
      parts = std::move(next);
    }
    std::sort(parts.begin(), parts.end(), [](const IndexSet& x, const IndexSet& y) { return x.min() < y.min(); });
    for (IndexSet& part : parts) {
      if (part.empty()) continue;
      Piece p;
      p.kind = Kind::Segment;
      p.family = f;
      p.point = families_[f].member(part.min());
      for (const auto& [s, id] : ringSets)
        if (s.contains(part.min())) p.location = id;
      p.indices = std::move(part);
      pieces_.push_back(std::move(p));
    }
  }
  pointFamilies_.resize(pieces_.size());

  for (const auto& input : inputs) {
    PieceMask mask(pieces_.size());
    for (std::size_t k = 0; k < pieces_.size(); ++k) {
      for (const Cell& cell : input) {
        if (pieceInCell(pieces_[k], cell)) {
          mask.set(k);
          break;
        }
      }
    }
    inputMasks_.push_back(std::move(mask));
  }
}

Rational Refinement::innerRadius(const RingRef& ring) const {
  const auto& radii = centers_[ring.center].radii;
  if (ring.isCircle()) return radii[ring.radiusIndex()];
  return ring.radiusIndex() == 0 ? Rational(0) : radii[ring.radiusIndex() - 1];
}

Rational Refinement::outerRadius(const RingRef& ring) const {
  return centers_[ring.center].radii[ring.radiusIndex()];
}

std::optional<std::size_t> Refinement::locate(const ExactComplex& p) const {
  for (std::size_t c = 0; c < centers_.size(); ++c) {
    Rational d2 = (p - centers_[c].center).norm2();
    if (sgn(d2) == 0) return std::nullopt;
    const auto& radii = centers_[c].radii;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      int w = cmp(d2, radii[k] * radii[k]);
      if (w < 0) return ringPieceId_[ringOffset_[c] + 2 * k];
      if (w == 0) return ringPieceId_[ringOffset_[c] + 2 * k + 1];
    }
  }
  return std::nullopt;
}

IndexSet Refinement::ringIndices(std::size_t family, const RingRef& ring) const {
  const Family& fam = families_[family];
  const ExactComplex& center = centers_[ring.center].center;
  // Every member lies within |rate| <= bound of the limit; skip rings the
  // tail cannot reach.
  const Rational bound = absValue(fam.rate.re) + absValue(fam.rate.im);
  const Rational d2 = (fam.limit - center).norm2();
  const Rational far = outerRadius(ring) + bound, near = innerRadius(ring) - bound;
  if (d2 > far * far || (sgn(near) > 0 && d2 < near * near)) return IndexSet();
  RadialQuadratic q(fam.limit, fam.rate, center);
  if (ring.isCircle()) {
    Rational r2 = outerRadius(ring) * outerRadius(ring);
    return IndexSet::all().subtract(q.outside(r2)).subtract(q.inside(r2));
  }
  Rational in = innerRadius(ring), out = outerRadius(ring);
  return q.outside(in * in).intersect(q.inside(out * out));
}

bool Refinement::ringInCell(const RingRef& ring, const Cell& cell) const {
  const ExactComplex& center = centers_[ring.center].center;
  if (const auto* c = std::get_if<Circle>(&cell))
    return ring.isCircle() && c->center == center && c->radius == outerRadius(ring);
  if (const auto* a = std::get_if<Annulus>(&cell)) {
    if (a->center != center) return false;
    if (ring.isCircle()) return a->inner < outerRadius(ring) && outerRadius(ring) < a->outer;
    return a->inner <= innerRadius(ring) && outerRadius(ring) <= a->outer;
  }
  return false;
}

bool Refinement::pieceInCell(const Piece& piece, const Cell& cell) const {
  if (piece.kind == Kind::Ring) return ringInCell(piece.ring, cell);
  // Points and segments are uniform with respect to every input cell, so a
  // single representative decides.
  return cellContains(cell, piece.point);
}

std::vector<Cell> Refinement::pieceCells(std::size_t id) const {
  const Piece& piece = pieces_[id];
  std::vector<Cell> out;
  if (piece.kind == Kind::Point) {
    out.emplace_back(Point{piece.point});
    return out;
  }
  if (piece.kind == Kind::Segment) {
    const Family& fam = families_[piece.family];
    if (!piece.indices.finite()) {
      out.emplace_back(makeTail(fam.limit, fam.rate, piece.indices));
    } else {
      for (std::int64_t n : piece.indices.elements()) out.emplace_back(Point{fam.member(n)});
    }
    return out;
  }
  std::vector<ExactComplex> points;
  std::map<std::size_t, IndexSet> seqs;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const Piece& p = pieces_[k];
    if (p.kind == Kind::Ring || p.location != id) continue;
    if (p.kind == Kind::Point) {
      points.push_back(p.point);
    } else {
      seqs[p.family] = seqs[p.family].unite(p.indices);
    }
  }
  std::vector<SequenceTail> tails;
  for (const auto& [f, idx] : seqs) {
    if (idx.finite() || piece.ring.isCircle()) {
      for (std::int64_t n : idx.elements()) points.push_back(families_[f].member(n));
    } else {
      tails.push_back(makeTail(families_[f].limit, families_[f].rate, idx));
    }
  }
  sortUnique(points);
  const ExactComplex& center = centers_[piece.ring.center].center;
  if (piece.ring.isCircle()) {
    out.emplace_back(Circle{center, outerRadius(piece.ring), std::move(points)});
  } else {
    out.emplace_back(Annulus{center, innerRadius(piece.ring), outerRadius(piece.ring), std::move(points), std::move(tails)});
  }
  return out;
}

CellSet Refinement::assemble(const PieceMask& selected) const {
  struct RingOut {
    Cell cell;
    std::vector<std::size_t> excludedPoints{};      // point piece ids
    std::map<std::size_t, IndexSet> excludedIdx{};  // by family
  };
  std::vector<RingOut> rings;
  std::vector<std::optional<std::size_t>> ringOwner(pieces_.size());

  for (std::size_t c = 0; c < centers_.size(); ++c) {
    std::size_t slots = 2 * centers_[c].radii.size();
    const ExactComplex& center = centers_[c].center;
    std::size_t s = 0;
    while (s < slots) {
      if (!selected[ringPieceId_[ringOffset_[c] + s]]) {
        ++s;
        continue;
      }
      std::size_t e = s;
      while (e + 1 < slots && selected[ringPieceId_[ringOffset_[c] + e + 1]]) ++e;
      std::size_t firstAnnulus = s % 2 == 0 ? s : s + 1;
      std::size_t lastAnnulus = e % 2 == 0 ? e : e - 1;
      auto own = [&](std::size_t slot, std::size_t out) { ringOwner[ringPieceId_[ringOffset_[c] + slot]] = out; };
      if (firstAnnulus <= lastAnnulus && lastAnnulus != static_cast<std::size_t>(-1)) {
        if (s % 2 == 1) {
          own(s, rings.size());
          rings.push_back({Circle{center, outerRadius(RingRef{c, s}), {}}});
        }
        std::size_t annulusOut = rings.size();
        rings.push_back({Annulus{center, innerRadius(RingRef{c, firstAnnulus}), outerRadius(RingRef{c, lastAnnulus}), {}, {}}});
        for (std::size_t slot = firstAnnulus; slot <= lastAnnulus; ++slot) own(slot, annulusOut);
        if (e % 2 == 1) {
          own(e, rings.size());
          rings.push_back({Circle{center, outerRadius(RingRef{c, e}), {}}});
        }
      } else {
        own(s, rings.size());
        rings.push_back({Circle{center, outerRadius(RingRef{c, s}), {}}});
      }
      s = e + 1;
    }
  }

  std::vector<std::size_t> freePoints;
  std::map<std::size_t, IndexSet> freeIdx;
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const Piece& p = pieces_[k];
    if (p.kind == Kind::Ring) continue;
    std::optional<std::size_t> owner;
    if (p.location && selected[*p.location]) owner = ringOwner[*p.location];
    if (owner) {
      if (selected[k]) continue;  // absorbed by the ring cell
      if (p.kind == Kind::Point) {
        rings[*owner].excludedPoints.push_back(k);
      } else {
        auto& idx = rings[*owner].excludedIdx[p.family];
        idx = idx.unite(p.indices);
      }
    } else if (selected[k]) {
      if (p.kind == Kind::Point) {
        freePoints.push_back(k);
      } else {
        freeIdx[p.family] = freeIdx[p.family].unite(p.indices);
      }
    }
  }

  // A point lying on infinite sequence families is carried by the smallest
  // of them; everything else stays a point.
  auto distribute = [&](const std::vector<std::size_t>& pointIds, std::map<std::size_t, IndexSet>& famIdx,
                        std::vector<ExactComplex>& loosePoints) {
    std::vector<std::size_t> infinite;
    for (const auto& [f, idx] : famIdx)
      if (!idx.finite()) infinite.push_back(f);
    for (std::size_t k : pointIds) {
      bool carried = false;
      for (const auto& [f, n] : pointFamilies_[k]) {
        if (std::find(infinite.begin(), infinite.end(), f) != infinite.end()) {
          famIdx[f] = famIdx[f].unite(IndexSet::single(n));
          carried = true;
          break;
        }
      }
      if (!carried) loosePoints.push_back(pieces_[k].point);
    }
  };

  std::vector<Cell> cells;
  {
    std::vector<ExactComplex> loose;
    distribute(freePoints, freeIdx, loose);
    for (const auto& [f, idx] : freeIdx) {
      if (idx.finite()) {
        for (std::int64_t n : idx.elements()) loose.push_back(families_[f].member(n));
      } else {
        cells.emplace_back(makeTail(families_[f].limit, families_[f].rate, idx));
      }
    }
    for (const ExactComplex& z : loose) cells.emplace_back(Point{z});
  }
  for (RingOut& ring : rings) {
    std::vector<ExactComplex> loose;
    if (auto* an = std::get_if<Annulus>(&ring.cell)) {
      distribute(ring.excludedPoints, ring.excludedIdx, loose);
      for (const auto& [f, idx] : ring.excludedIdx) {
        if (idx.finite()) {
          for (std::int64_t n : idx.elements()) loose.push_back(families_[f].member(n));
        } else {
          an->excludedSeqs.push_back(makeTail(families_[f].limit, families_[f].rate, idx));
        }
      }
      sortUnique(loose);
      an->excludedPoints = std::move(loose);
    } else {
      auto& circle = std::get<Circle>(ring.cell);
      for (std::size_t k : ring.excludedPoints) loose.push_back(pieces_[k].point);
      for (const auto& [f, idx] : ring.excludedIdx)
        for (std::int64_t n : idx.elements()) loose.push_back(families_[f].member(n));
      sortUnique(loose);
      circle.excluded = std::move(loose);
    }
    cells.push_back(std::move(ring.cell));
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return compareCells(a, b) < 0; });
  return CellSet(std::move(cells));
}

PieceMask Refinement::maskOf(const CellSet& s) const {
  PieceMask mask(pieces_.size());
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const Piece& p = pieces_[k];
    bool in = false;
    if (p.kind == Kind::Ring) {
      for (const Cell& cell : s.cells())
        if ((in = ringInCell(p.ring, cell))) break;
    } else {
      in = member(s, p.point);
    }
    mask[k] = in;
  }
  return mask;
}

}  // namespace weyl
