#pragma once

#include <cstddef>
#include <vector>

#include "weyllab/engine.hpp"

namespace weyl::oracle {

using Matrix = std::vector<std::vector<ExactComplex>>;

/// Rank over Q(i) by Gaussian elimination.
std::size_t exactRank(Matrix m);

Matrix multiply(const Matrix& a, const Matrix& b);

/// Block-diagonal matrix of the Jordan atoms, in model order.
Matrix jordanSumMatrix(const OperatorModel& m);

/// rank (M - lambda)^n for n = 0..maxPower.
std::vector<std::size_t> powerRanks(const Matrix& m, const ExactComplex& lambda, std::size_t maxPower);

}  // namespace weyl::oracle
