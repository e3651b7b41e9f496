#pragma once

// Exact rational linear algebra: Gaussian elimination for solving and rank.

#include "basics.hpp"

#include <vector>

namespace nullcone {

using RatMat = std::vector<std::vector<Rat>>;
using RatVec = std::vector<Rat>;

struct SolveResult {
  enum class Status { Unique, Underdetermined, Inconsistent };

  Status status = Status::Inconsistent;
  // A particular solution (free variables zero); empty when inconsistent.
  RatVec x;
};

// Solve A x = b exactly; A is rows x cols, b has rows entries.
SolveResult solve_linear(RatMat a, RatVec b);

int rank(RatMat a);

// Fraction-free integer rank (Bareiss); faster than rational elimination
// on large integer matrices.
int rank_int(std::vector<std::vector<Int>> a);

// Scale every row by the least common denominator and compute the rank of
// the resulting integer matrix.
int rank_rational(const RatMat& a);

}  // namespace nullcone
