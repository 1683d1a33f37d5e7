#include "weyllab/profile.hpp"

#include <optional>

#include "weyllab/error.hpp"

namespace weyl {

namespace {

std::string seqString(const EventuallyConstant<ExtNat>& s) {
  std::string out = "(";
  for (ExtNat v : s.prefix()) out += toString(v) + ",";
  return out + toString(s.tail()) + ",...)";
}

std::optional<std::size_t> firstZero(const EventuallyConstant<ExtNat>& s) {
  for (std::size_t n = 0; n <= s.settled(); ++n)
    if (s[n].isZero()) return n;
  return std::nullopt;
}

// Stages at which T_[n] is a semi-Fredholm map of R(T^n).
bool semiBStage(const PowerProfile& p, std::size_t n) {
  return p.closed[n] && p.closed[n + 1] && (p.alpha[n].finite() || p.beta[n].finite());
}

}  // namespace

std::string toString(ExtNat n) { return n.finite() ? std::to_string(n.value()) : "inf"; }

ExtIndex ExtIndex::difference(ExtNat a, ExtNat b) {
  if (a.finite() && b.finite())
    return ExtIndex(static_cast<std::int64_t>(a.value()) - static_cast<std::int64_t>(b.value()));
  if (a.finite()) return of(Kind::MinusInfinity);
  if (b.finite()) return of(Kind::PlusInfinity);
  return of(Kind::Undefined);
}

std::string toString(ExtIndex i) {
  switch (i.kind()) {
    case ExtIndex::Kind::Finite: return std::to_string(i.value());
    case ExtIndex::Kind::PlusInfinity: return "+inf";
    case ExtIndex::Kind::MinusInfinity: return "-inf";
    case ExtIndex::Kind::Undefined: return "undefined";
  }
  return "undefined";
}

PowerProfile resolventProfile() {
  return PowerProfile{EventuallyConstant<ExtNat>::constant(0), EventuallyConstant<ExtNat>::constant(0),
                      EventuallyConstant<bool>::constant(true)};
}

PowerProfile directSum(const PowerProfile& p, const PowerProfile& q) {
  auto add = [](ExtNat a, ExtNat b) { return a + b; };
  PowerProfile s{EventuallyConstant<ExtNat>::zip(p.alpha, q.alpha, add),
                 EventuallyConstant<ExtNat>::zip(p.beta, q.beta, add),
                 EventuallyConstant<bool>::zip(p.closed, q.closed, [](bool a, bool b) { return a && b; })};
  try {
    validate(s);
  } catch (const Error& e) {
    throw Error(Errc::InvalidProfile, std::string("direct sum is not a valid profile: ") + e.what());
  }
  return s;
}

AscentDescent ascentDescent(const PowerProfile& p) {
  auto a = firstZero(p.alpha), d = firstZero(p.beta);
  return {a ? ExtNat(*a) : ExtNat::infinity(), d ? ExtNat(*d) : ExtNat::infinity()};
}

ClassVector classify(const PowerProfile& p) {
  ClassVector v;
  const std::size_t horizon = p.horizon();
  const ExtNat a0 = p.alpha[0], b0 = p.beta[0];

  v.invertible = a0.isZero() && b0.isZero() && p.closed[1];
  v.boundedBelow = a0.isZero() && p.closed[1];
  v.inSpectrum = !v.invertible;
  v.inApproxSpectrum = !v.boundedBelow;
  v.eigenvalue = !a0.isZero();
  v.finiteMultiplicity = a0.finite();

  v.upperSemiFredholm = p.closed[1] && a0.finite();
  v.fredholm = v.upperSemiFredholm && b0.finite();
  v.index = ExtIndex::difference(a0, b0);
  v.weyl = v.fredholm && v.index.isZero();
  v.upperSemiWeyl = v.upperSemiFredholm && v.index.nonPositive();

  AscentDescent ad = ascentDescent(p);
  v.ascent = ad.ascent;
  v.descent = ad.descent;
  v.browder = v.fredholm && ad.ascent.finite() && ad.descent.finite();
  v.upperSemiBrowder = v.upperSemiFredholm && ad.ascent.finite();
  v.drazinInvertible = ad.ascent.finite() && ad.descent.finite();
  v.leftDrazinInvertible = ad.ascent.finite() && p.closed[ad.ascent.value() + 1];

  v.upperSemiBFredholm = v.bFredholm = v.bWeyl = false;
  v.bIndex = ExtIndex::of(ExtIndex::Kind::Undefined);
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (!p.closed[n] || !p.closed[n + 1]) continue;
    if (p.alpha[n].finite() && !v.upperSemiBFredholm) {
      v.upperSemiBFredholm = true;
      v.bIndex = ExtIndex::difference(p.alpha[n], p.beta[n]);
    }
    if (p.alpha[n].finite() && p.beta[n].finite()) {
      v.bFredholm = true;
      if (p.alpha[n] == p.beta[n]) v.bWeyl = true;
    }
  }
  v.upperSemiBWeyl = v.upperSemiBFredholm && v.bIndex.nonPositive();
  return v;
}

void validate(const PowerProfile& p) {
  if (!p.closed[0]) throw Error(Errc::InvalidProfile, "closed[0] must hold");
  const std::size_t horizon = p.horizon();
  for (std::size_t n = 0; n < horizon; ++n) {
    if (p.alpha[n + 1] > p.alpha[n]) throw Error(Errc::NonMonotone, "alpha increases: " + seqString(p.alpha));
    if (p.beta[n + 1] > p.beta[n]) throw Error(Errc::NonMonotone, "beta increases: " + seqString(p.beta));
  }

  // Once T^n maps R(T^n) bijectively onto itself every later range is R(T^n).
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (!p.alpha[n].isZero() || !p.beta[n].isZero()) continue;
    for (std::size_t m = n; m <= horizon + 1; ++m)
      if (!p.closed[m])
        throw Error(Errc::IncoherentInvertibility,
                    "alpha[" + std::to_string(n) + "] = beta[" + std::to_string(n) + "] = 0 but R(T^" +
                        std::to_string(m) + ") is not closed");
    break;
  }
  AscentDescent ad = ascentDescent(p);
  if (ad.ascent.finite() && ad.descent.finite() && ad.ascent != ad.descent)
    throw Error(Errc::IncoherentInvertibility,
                "finite ascent " + toString(ad.ascent) + " and descent " + toString(ad.descent) + " differ");

  std::optional<ExtIndex> index;
  for (std::size_t n = 0; n <= horizon; ++n) {
    if (!semiBStage(p, n)) continue;
    ExtIndex here = ExtIndex::difference(p.alpha[n], p.beta[n]);
    if (index && !(*index == here))
      throw Error(Errc::IndexInconstant, "index changes from " + toString(*index) + " to " + toString(here) +
                                             " at stage " + std::to_string(n));
    index = here;
  }
}

std::string describe(const PowerProfile& p) {
  std::string closed = "(";
  for (bool c : p.closed.prefix()) closed += c ? "1," : "0,";
  closed += std::string(p.closed.tail() ? "1" : "0") + ",...)";
  return "alpha=" + seqString(p.alpha) + " beta=" + seqString(p.beta) + " closed=" + closed;
}

}  // namespace weyl
