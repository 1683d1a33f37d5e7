#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace weyl {

/// A natural number or infinity; addition saturates.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t n) : value_(n) {}  // NOLINT(implicit)
  static constexpr ExtNat infinity() {
    ExtNat x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool finite() const { return !infinite_; }
  constexpr bool isZero() const { return finite() && value_ == 0; }
  /// Only meaningful when finite().
  constexpr std::uint64_t value() const { return value_; }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    return a.infinite_ || b.infinite_ ? infinity() : ExtNat(a.value_ + b.value_);
  }
  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

std::string toString(ExtNat n);

/// alpha - beta with finite - inf = -inf, inf - finite = +inf, inf - inf undefined.
class ExtIndex {
 public:
  enum class Kind { Finite, PlusInfinity, MinusInfinity, Undefined };

  constexpr ExtIndex() = default;
  constexpr explicit ExtIndex(std::int64_t v) : value_(v) {}
  static constexpr ExtIndex of(Kind k) {
    ExtIndex x;
    x.kind_ = k;
    return x;
  }
  static ExtIndex difference(ExtNat a, ExtNat b);

  constexpr Kind kind() const { return kind_; }
  constexpr bool finite() const { return kind_ == Kind::Finite; }
  constexpr std::int64_t value() const { return value_; }
  /// The semi-Weyl sign condition "index <= 0"; false when undefined.
  constexpr bool nonPositive() const { return kind_ == Kind::MinusInfinity || (finite() && value_ <= 0); }
  constexpr bool isZero() const { return finite() && value_ == 0; }

  friend constexpr bool operator==(ExtIndex a, ExtIndex b) {
    return a.kind_ == b.kind_ && (!a.finite() || a.value_ == b.value_);
  }

 private:
  Kind kind_ = Kind::Finite;
  std::int64_t value_ = 0;
};

std::string toString(ExtIndex i);

/// Sequence given by an explicit prefix followed by a constant tail. Kept
/// canonical: the last prefix entry never equals the tail.
template <class T>
class EventuallyConstant {
 public:
  EventuallyConstant() = default;
  EventuallyConstant(std::vector<T> prefix, T tail) : prefix_(std::move(prefix)), tail_(tail) { trim(); }
  static EventuallyConstant constant(T value) { return EventuallyConstant({}, value); }

  T operator[](std::size_t n) const { return n < prefix_.size() ? prefix_[n] : tail_; }
  const std::vector<T>& prefix() const { return prefix_; }
  const T& tail() const { return tail_; }
  /// First index from which the sequence is constant.
  std::size_t settled() const { return prefix_.size(); }

  template <class F>
  static EventuallyConstant zip(const EventuallyConstant& a, const EventuallyConstant& b, F f) {
    std::size_t n = std::max(a.settled(), b.settled());
    std::vector<T> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(f(a[k], b[k]));
    return EventuallyConstant(std::move(out), f(a.tail_, b.tail_));
  }

  friend bool operator==(const EventuallyConstant&, const EventuallyConstant&) = default;

 private:
  void trim() {
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
  }
  std::vector<T> prefix_;
  T tail_{};
};

/// Local spectral data of T - lambda at one point:
///   alpha[n] = dim N(T) ∩ R(T^n), beta[n] = dim R(T^n) / R(T^(n+1)),
///   closed[n] = "R(T^n) is closed" (closed[0] is always true).
struct PowerProfile {
  EventuallyConstant<ExtNat> alpha;
  EventuallyConstant<ExtNat> beta;
  EventuallyConstant<bool> closed = EventuallyConstant<bool>::constant(true);

  /// Last index any of the three sequences can still change at.
  std::size_t horizon() const { return std::max({alpha.settled(), beta.settled(), closed.settled()}); }

  friend bool operator==(const PowerProfile&, const PowerProfile&) = default;
};

/// Profile of an invertible operator.
PowerProfile resolventProfile();

struct ClassVector {
  bool inSpectrum = false;
  bool inApproxSpectrum = false;
  bool invertible = true;
  bool boundedBelow = true;
  bool upperSemiFredholm = true;
  bool fredholm = true;
  bool weyl = true;
  bool browder = true;
  bool upperSemiBrowder = true;
  bool upperSemiWeyl = true;  // SF_+^-
  bool upperSemiBFredholm = true;
  bool bFredholm = true;
  bool bWeyl = true;
  bool upperSemiBWeyl = true;  // SBF_+^-
  bool drazinInvertible = true;
  bool leftDrazinInvertible = true;
  bool eigenvalue = false;
  bool finiteMultiplicity = true;
  ExtNat ascent = 0;
  ExtNat descent = 0;
  ExtIndex index{0};
  ExtIndex bIndex{0};

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

/// Pointwise sum of nullities/defects and conjunction of closedness.
/// Throws InvalidProfile if the sum is not a valid profile.
PowerProfile directSum(const PowerProfile& p, const PowerProfile& q);

struct AscentDescent {
  ExtNat ascent;
  ExtNat descent;
};

/// a = min{n : alpha[n] = 0}, d = min{n : beta[n] = 0}, using
/// N(T^(n+1)) / N(T^n) ≅ N(T) ∩ R(T^n) and its range counterpart.
AscentDescent ascentDescent(const PowerProfile& p);

ClassVector classify(const PowerProfile& p);

/// Throws NonMonotone, IncoherentInvertibility or IndexInconstant (and
/// InvalidProfile when closed[0] is false).
void validate(const PowerProfile& p);

std::string describe(const PowerProfile& p);

}  // namespace weyl
