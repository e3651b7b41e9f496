#pragma once

// The isotropic-locus ring of a k x 2n matrix space: basic invariants r_ij,
// omega-sums and theta relations, rewriting onto the admissible-column
// standard basis, dimension oracles, and exact point sampling.

#include "basics.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "straighten.hpp"
#include "tableaux.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace nullcone {

struct NullconeContext {
  int k = 0, n = 0;
  Lattice lattice;      // the admissible-column lattice on the k x 2n matrix
  WeightConfig weight;  // ambient (k, 2n)

  static NullconeContext make(int k, int n);
  static NullconeContext make(int k, int n, const Int& weight_base);

  std::vector<int> floor_column() const { return tilde_column(n); }
};

// r_ij = sum_u (x_{i,2u-1} x_{j,2u} - x_{j,2u-1} x_{i,2u}), 1 <= i < j <= k;
// the pairing convention is <e_{2u-1}, e_{2u}> = 1 throughout.
SparsePolynomial basic_invariant(int i, int j, const NullconeContext& ctx);

struct OmegaSum {
  int p = 0;  // common size of the index sets
  // Index set -> coefficient; the lex-smallest key has coefficient 1.
  std::map<std::vector<int>, Rat> terms;
  // Combination sum_i coef_i e_{K_i} with omega ^ certificate = terms.
  std::vector<std::pair<Rat, std::vector<int>>> certificate;
};

// true iff J dominates the floor column in the tableau order (|J| <= n and
// J_d >= 2d-1 entrywise); columns failing this are the rewrite targets.
bool column_admissible(const std::vector<int>& j, int n);

// A combination of p-sets, wedge-certified in omega ^ Lambda^{p-2}, whose
// lex-smallest term is J with coefficient 1.  Exists iff J is inadmissible;
// admissible J raises a domain error.
OmegaSum omega_sum_for(const std::vector<int>& j, const NullconeContext& ctx, Guard& guard);

// sum_d c_d minor([I : J_d]), denominators cleared to integers; lies in the
// invariant ideal (every sample point annihilates it).
SparsePolynomial theta_element(const std::vector<int>& i, const OmegaSum& s, const NullconeContext& ctx);

// Straighten over the full k x 2n matrix, then rewrite every inadmissible
// column through its omega-sum (the lex-smallest term is eliminated, the
// strictly lex-larger ones remain) and re-straighten until every term lies
// in the admissible lattice.  The result equals the input modulo the
// invariant ideal; verified by evaluation at sampled points.
struct NStraightenOptions {
  int verify_points = 25;
  std::uint64_t seed = 12345;
  std::uint64_t fuel = 100000;  // rewrite-step budget
};

StandardCombination n_straighten(const std::vector<OneLineTableau>& product, const NullconeContext& ctx,
                                 Guard& guard, const NStraightenOptions& opt = {});

std::pair<DoubleTableau, Int> n_leading_term(const OneLineTableau& a, const OneLineTableau& b,
                                             const NullconeContext& ctx, Guard& guard);

std::vector<DoubleTableau> enumerate_n_standard(const Shape& shape, const NullconeContext& ctx, Guard& guard);

// Dimension oracles: tableau count and the Weyl product formula, computed
// independently and asserted equal.
Int dim_gl(const Shape& shape, int k);
Int dim_sp(const Shape& shape, int n);

// Exact k x 2n matrix whose row span is isotropic: a random rational left
// factor applied to a transvected Lagrangian frame.  Deterministic per seed.
RatMatrix sample_nullcone_point(const NullconeContext& ctx, std::uint64_t seed);

Rat evaluate_product(const std::vector<OneLineTableau>& product, const RatMatrix& point);
Rat evaluate_combination(const StandardCombination& c, const RatMatrix& point);

struct IndependenceReport {
  int candidates = 0;
  int rank = 0;
  int points_used = 0;
  bool full_rank = false;
};

// Column rank of the evaluation matrix of the candidate monomials at
// sampled points; deficiency is retried with more points, then reported.
IndependenceReport independence_check(const std::vector<DoubleTableau>& candidates, const NullconeContext& ctx,
                                      int num_points, std::uint64_t seed, Guard& guard);

// All admissible-lattice standard tableaux of total box count <= max_degree
// (the empty tableau included), canonical order.
std::vector<DoubleTableau> n_standard_up_to_degree(int max_degree, const NullconeContext& ctx, Guard& guard);

}  // namespace nullcone
