#pragma once

// Exact sparse polynomials in the matrix entries x_{ij}, determinantal
// minors, point evaluation, and exterior-algebra elements over C^{2n}.

#include "basics.hpp"
#include "tableaux.hpp"

#include <array>
#include <map>
#include <vector>

namespace nullcone {

// Sparse exponent list, entries (i, j, e) with e > 0, sorted by (i, j).
using Monomial = std::vector<std::array<int, 3>>;

// Graded lexicographic order: total degree first, then the earlier variable
// (row-major) with the higher exponent wins.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct SparsePolynomial {
  int rows = 0, cols = 0;  // variable ambient: x_{ij}, i <= rows, j <= cols
  std::map<Monomial, Int, MonomialLess> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const SparsePolynomial&) const = default;
};

SparsePolynomial poly_zero(int rows, int cols);
SparsePolynomial poly_const(int rows, int cols, const Int& c);
SparsePolynomial poly_variable(int rows, int cols, int i, int j);

SparsePolynomial add(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial sub(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial negate(const SparsePolynomial& p);
SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q);
SparsePolynomial scalar_mul(const Int& c, const SparsePolynomial& p);

// Leibniz expansion of the minor with rows I and columns J.
SparsePolynomial minor_poly(const OneLineTableau& t, int rows, int cols);

using RatMatrix = std::vector<std::vector<Rat>>;

Rat evaluate(const SparsePolynomial& p, const RatMatrix& point);

// Exact determinant evaluation of the minor at a point: same value as
// evaluate(minor_poly(t)), without expanding the polynomial.
Rat evaluate_minor(const OneLineTableau& t, const RatMatrix& point);

// Element of the exterior algebra Lambda C^{2n}, homogeneous of the given
// degree; keys are strictly increasing index sets of that size.
struct ExteriorElement {
  int two_n = 0;
  int degree = 0;
  std::map<std::vector<int>, Int> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const ExteriorElement&) const = default;
};

ExteriorElement ext_zero(int two_n, int degree);
ExteriorElement ext_basis(int two_n, const std::vector<int>& indices);  // e_K
ExteriorElement ext_add(const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement ext_scalar_mul(const Int& c, const ExteriorElement& a);
ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);

// omega = sum_u e_{2u-1} ^ e_{2u}: the symplectic form element.
ExteriorElement omega(int n);

}  // namespace nullcone
