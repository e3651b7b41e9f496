#pragma once

// The digit weight on tableaux and the straightening of arbitrary minor
// products into integer combinations of standard monomials, with the
// leading-term witness of the lattice (Hibi) degeneration.

#include "basics.hpp"
#include "polynomial.hpp"
#include "tableaux.hpp"

#include <utility>
#include <vector>

namespace nullcone {

struct WeightConfig {
  int n = 0, m = 0;
  Int base;  // must exceed 2(n+m)

  // Default base: 2(n+m) + 1, the smallest legal value.
  static WeightConfig make(int n, int m);
  static WeightConfig make(int n, int m, const Int& base);
};

// wt([I:J]) = sum_r (m + r - q_r) base^{n-r} over the xi image q of [I:J];
// the weight of a double tableau adds over columns.  Digits stay within
// (-base/2, base/2), so numeric order equals digit-lex order.
Int weight(const OneLineTableau& t, const WeightConfig& cfg);
Int weight(const DoubleTableau& t, const WeightConfig& cfg);

struct StandardCombination {
  // Coefficient-tableau pairs, weight descending, ties broken by the
  // serialized tableau text ascending; no zero coefficients.
  std::vector<std::pair<Int, DoubleTableau>> terms;

  bool operator==(const StandardCombination&) const = default;
};

// Expand the product exactly, enumerate the standard tableaux with the same
// row- and column-content multisets, and solve for the unique integer
// combination with an identical expansion.
StandardCombination straighten(const std::vector<OneLineTableau>& product, const Lattice& lat,
                               const WeightConfig& cfg, Guard& guard);

// For incomparable members A, B: the weight-maximal term of the straightened
// product, asserted to be the two-column tableau (A meet B, A join B) with
// coefficient 1.
std::pair<DoubleTableau, Int> leading_term(const OneLineTableau& a, const OneLineTableau& b, const Lattice& lat,
                                           const WeightConfig& cfg, Guard& guard);

// Partial sums of column lengths of a dominate those of b.
bool column_dominates(const Shape& a, const Shape& b);

// The dominance-maximal shape among the combination's terms.
Shape shape_leading(const StandardCombination& c);

}  // namespace nullcone
