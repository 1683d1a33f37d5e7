#include "weyllab/oracle.hpp"

#include <algorithm>
#include <optional>

#include "weyllab/error.hpp"

namespace weyl {

namespace oracle {

std::size_t exactRank(Matrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].isZero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    ExactComplex inv = ExactComplex(1) / m[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][col].isZero()) continue;
      ExactComplex factor = m[r][col] * inv;
      for (std::size_t c = col; c < cols; ++c)
        if (!m[rank][c].isZero()) m[r][c] = m[r][c] - factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  Matrix out(n, std::vector<ExactComplex>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].isZero()) continue;
      for (std::size_t c = 0; c < p; ++c)
        if (!b[j][c].isZero()) out[i][c] = out[i][c] + a[i][j] * b[j][c];
    }
  return out;
}

Matrix jordanSumMatrix(const OperatorModel& m) {
  std::size_t dim = 0;
  for (const Atom& a : m.atoms) {
    if (a.kind != AtomKind::Jordan) throw Error(Errc::NotFiniteDimensional, describe(a) + " is not a Jordan block");
    validateAtom(a);
    dim += static_cast<std::size_t>(a.size);
  }
  Matrix out(dim, std::vector<ExactComplex>(dim));
  std::size_t base = 0;
  for (const Atom& a : m.atoms) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.size); ++i) {
      out[base + i][base + i] = a.point;
      if (i + 1 < static_cast<std::size_t>(a.size)) out[base + i][base + i + 1] = ExactComplex(1);
    }
    base += static_cast<std::size_t>(a.size);
  }
  return out;
}

std::vector<std::size_t> powerRanks(const Matrix& m, const ExactComplex& lambda, std::size_t maxPower) {
  const std::size_t dim = m.size();
  Matrix shifted = m;
  for (std::size_t i = 0; i < dim; ++i) shifted[i][i] = shifted[i][i] - lambda;
  std::vector<std::size_t> ranks{dim};
  Matrix power = shifted;
  for (std::size_t n = 1; n <= maxPower; ++n) {
    ranks.push_back(exactRank(power));
    if (n < maxPower) power = multiply(power, shifted);
  }
  return ranks;
}

}  // namespace oracle

SpectralSnapshot oracleSnapshot(const OperatorModel& m) {
  if (m.atoms.empty()) throw Error(Errc::EmptyModel, "model has no atoms");
  oracle::Matrix matrix = oracle::jordanSumMatrix(m);
  const std::size_t dim = matrix.size();

  std::vector<ExactComplex> candidates;
  for (std::size_t i = 0; i < dim; ++i) candidates.push_back(matrix[i][i]);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::array<std::vector<Cell>, kSetCount> sets;
  auto add = [&](SetId id, const ExactComplex& z) { sets[static_cast<std::size_t>(id)].emplace_back(Point{z}); };

  for (const ExactComplex& lambda : candidates) {
    // r[n] = dim R((T - lambda)^n) and k[n] = dim N((T - lambda)^n) for n <= dim + 1;
    // both sequences are stationary from n = dim on.
    const std::size_t top = dim + 1;
    std::vector<std::size_t> r = oracle::powerRanks(matrix, lambda, top);
    std::vector<std::size_t> k(r.size());
    for (std::size_t n = 0; n < r.size(); ++n) k[n] = dim - r[n];
    const bool rangesClosed = true;  // finite dimension

    std::optional<std::size_t> ascent, descent;
    for (std::size_t n = 0; n < top && !ascent; ++n)
      if (k[n] == k[n + 1]) ascent = n;
    for (std::size_t n = 0; n < top && !descent; ++n)
      if (r[n] == r[n + 1]) descent = n;

    const std::size_t nullity = k[1];
    const std::size_t defect = dim - r[1];
    const bool boundedBelow = nullity == 0 && rangesClosed;
    const bool invertible = boundedBelow && defect == 0;
    if (invertible) continue;

    const bool upperSemiFredholm = rangesClosed;  // nullity is finite
    const bool fredholm = upperSemiFredholm;      // defect is finite
    const long index = static_cast<long>(nullity) - static_cast<long>(defect);
    const bool weyl = fredholm && index == 0;
    const bool browder = fredholm && ascent && descent;
    const bool upperSemiBrowder = upperSemiFredholm && ascent;

    // T_[n] maps R(T^n) onto R(T^(n+1)): kernel N(T) ∩ R(T^n) has dimension
    // r[n] - r[n+1] and the cokernel R(T^n) / R(T^(n+1)) has dimension r[n] - r[n+1].
    bool bWeyl = false;
    std::optional<long> bIndex;
    for (std::size_t n = 0; n < top; ++n) {
      long kernel = static_cast<long>(r[n] - r[n + 1]);
      long cokernel = static_cast<long>(r[n] - r[n + 1]);
      if (!bIndex) bIndex = kernel - cokernel;
      if (kernel == cokernel) bWeyl = true;
    }
    const std::size_t maxAD = std::max(ascent.value_or(top), descent.value_or(top));
    const bool pole = ascent && descent && maxAD > 0;
    const bool drazin = ascent && descent;
    const bool leftDrazin = ascent && rangesClosed;
    // A finite spectrum has only isolated points.
    const bool eigenvalue = nullity > 0;

    add(SetId::Sigma, lambda);
    if (!boundedBelow) add(SetId::SigmaA, lambda);
    if (!weyl) add(SetId::SigmaW, lambda);
    if (!bWeyl) add(SetId::SigmaBW, lambda);
    if (!browder) add(SetId::SigmaB, lambda);
    if (!drazin) add(SetId::SigmaD, lambda);
    if (!leftDrazin) add(SetId::SigmaLD, lambda);
    if (!upperSemiBrowder) add(SetId::SigmaUB, lambda);
    if (!(upperSemiFredholm && index <= 0)) add(SetId::SigmaSFpm, lambda);
    if (!(bIndex && *bIndex <= 0)) add(SetId::SigmaSBFpm, lambda);
    if (eigenvalue) {
      add(SetId::E, lambda);
      add(SetId::E0, lambda);
      if (!boundedBelow) {
        add(SetId::Ea, lambda);
        add(SetId::Ea0, lambda);
      }
    }
    if (pole) {
      add(SetId::Pi, lambda);
      add(SetId::Pi0, lambda);
    }
    if (!boundedBelow && leftDrazin) {
      add(SetId::PiA, lambda);
      add(SetId::PiA0, lambda);
    }
  }

  SpectralSnapshot s;
  for (std::size_t k = 0; k < kSetCount; ++k) s.sets[k] = normalize(sets[k]);
  return s;
}

}  // namespace weyl
