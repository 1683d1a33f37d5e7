#include "weyllab/index_set.hpp"

#include <algorithm>

#include "weyllab/error.hpp"

namespace weyl {

namespace {

constexpr std::int64_t kSearchCeiling = std::int64_t{1} << 62;

std::int64_t toIndex(const mpz_class& z) {
  if (z > kSearchCeiling) throw Error(Errc::UnsupportedSet, "sequence index threshold too large");
  if (z < -kSearchCeiling) return -kSearchCeiling;
  return z.get_si();
}

// First index in [lo, hi] where a monotone false..true predicate holds; hi + 1 if none.
template <class Pred>
std::int64_t firstTrue(std::int64_t lo, std::int64_t hi, Pred pred) {
  std::int64_t answer = hi + 1;
  while (lo <= hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      answer = mid;
      hi = mid - 1;
    } else {
      lo = mid + 1;
    }
  }
  return answer;
}

// Last index in [lo, hi] where a monotone true..false predicate holds; lo - 1 if none.
template <class Pred>
std::int64_t lastTrue(std::int64_t lo, std::int64_t hi, Pred pred) {
  std::int64_t answer = lo - 1;
  while (lo <= hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      answer = mid;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return answer;
}

}  // namespace

IndexSet IndexSet::range(std::int64_t lo, std::int64_t hi) {
  IndexSet s;
  lo = std::max<std::int64_t>(lo, 1);
  if (lo <= hi) s.runs_.emplace_back(lo, hi);
  return s;
}

IndexSet IndexSet::tail(std::int64_t start, const std::vector<std::int64_t>& excluded) {
  IndexSet s = range(start, kInf);
  for (std::int64_t e : excluded) s = s.subtract(single(e));
  return s;
}

bool IndexSet::contains(std::int64_t n) const {
  for (const auto& [lo, hi] : runs_)
    if (lo <= n && n <= hi) return true;
  return false;
}

std::vector<std::int64_t> IndexSet::elements(std::size_t limit) const {
  if (!finite()) throw Error(Errc::UnsupportedSet, "cannot enumerate an infinite index set");
  std::vector<std::int64_t> out;
  for (const auto& [lo, hi] : runs_) {
    if (out.size() + static_cast<std::size_t>(hi - lo + 1) > limit)
      throw Error(Errc::UnsupportedSet, "index set too large to enumerate");
    for (std::int64_t n = lo; n <= hi; ++n) out.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> IndexSet::gaps(std::size_t limit) const {
  std::vector<std::int64_t> out;
  for (std::size_t k = 1; k < runs_.size(); ++k) {
    std::int64_t from = runs_[k - 1].second + 1, to = runs_[k].first - 1;
    if (out.size() + static_cast<std::size_t>(to - from + 1) > limit)
      throw Error(Errc::UnsupportedSet, "index set gaps too large to enumerate");
    for (std::int64_t n = from; n <= to; ++n) out.push_back(n);
  }
  return out;
}

void IndexSet::canonicalize() {
  std::sort(runs_.begin(), runs_.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> merged;
  for (const auto& run : runs_) {
    if (!merged.empty() && (merged.back().second == kInf || run.first <= merged.back().second + 1)) {
      merged.back().second = std::max(merged.back().second, run.second);
    } else {
      merged.push_back(run);
    }
  }
  runs_ = std::move(merged);
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  IndexSet s;
  s.runs_ = runs_;
  s.runs_.insert(s.runs_.end(), other.runs_.begin(), other.runs_.end());
  s.canonicalize();
  return s;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  IndexSet s;
  std::size_t i = 0, j = 0;
  while (i < runs_.size() && j < other.runs_.size()) {
    std::int64_t lo = std::max(runs_[i].first, other.runs_[j].first);
    std::int64_t hi = std::min(runs_[i].second, other.runs_[j].second);
    if (lo <= hi) s.runs_.emplace_back(lo, hi);
    if (runs_[i].second < other.runs_[j].second) ++i; else ++j;
  }
  return s;
}

IndexSet IndexSet::complement() const {
  IndexSet s;
  std::int64_t next = 1;
  for (const auto& [lo, hi] : runs_) {
    if (lo > next) s.runs_.emplace_back(next, lo - 1);
    if (hi == kInf) return s;
    next = hi + 1;
  }
  s.runs_.emplace_back(next, kInf);
  return s;
}

IndexSet IndexSet::subtract(const IndexSet& other) const { return intersect(other.complement()); }

IndexSet positiveSet(const Rational& a, const Rational& b, const Rational& c) {
  auto value = [&](std::int64_t n) -> Rational {
    Rational x(mpz_class(static_cast<long>(n)));
    return a * x * x + b * x + c;
  };
  auto positive = [&](std::int64_t n) { return sgn(value(n)) > 0; };

  if (sgn(a) == 0) {
    if (sgn(b) == 0) return sgn(c) > 0 ? IndexSet::all() : IndexSet();
    Rational root = -c / b;
    if (sgn(b) > 0) return IndexSet::range(toIndex(floorOf(root) + 1), IndexSet::kInf);
    mpz_class last = ceilOf(root) - 1;
    if (last < 1) return IndexSet();
    return IndexSet::range(1, toIndex(last));
  }

  // Past this index the leading term dominates: |a| n^2 > |b| n + |c|.
  std::int64_t bound = toIndex(ceilOf((absValue(b) + absValue(c)) / absValue(a)) + 1);
  Rational vertex = -b / (2 * a);
  std::int64_t split = std::clamp<std::int64_t>(toIndex(floorOf(vertex)), 0, bound);

  IndexSet result;
  if (sgn(a) > 0) {
    // Decreasing on [1, split], increasing (or settled) beyond.
    std::int64_t k = lastTrue(1, split, positive);
    if (k >= 1) result = result.unite(IndexSet::range(1, k));
    std::int64_t m = firstTrue(split + 1, std::max(split + 1, bound), positive);
    result = result.unite(IndexSet::range(m, IndexSet::kInf));
  } else {
    std::int64_t m = firstTrue(1, split, positive);
    if (m <= split) result = result.unite(IndexSet::range(m, split));
    std::int64_t k = lastTrue(split + 1, std::max(split + 1, bound), positive);
    if (k >= split + 1) result = result.unite(IndexSet::range(split + 1, k));
  }
  return result;
}

}  // namespace weyl
