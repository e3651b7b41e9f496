#pragma once

// Triangular posets of pattern cells, integer patterns on them, the
// pattern<->tableau bijection, reduction modulo the top column, gluing,
// the symplectic half-triangle, and lattice-cone computations.
//
// A cell (a, b) sits in row a (1-based from the bottom row of size 1 up to
// the top row), position b.  Down-steps go (a,b) -> (a-1,b) and
// (a,b) -> (a+1,b+1); a pattern assigns a non-negative integer to every
// cell, weakly decreasing along down-steps.  Rows of a valid pattern read
// as weakly decreasing shapes.

#include "basics.hpp"
#include "tableaux.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nullcone {

struct Cell {
  int a = 0, b = 0;

  auto operator<=>(const Cell&) const = default;
};

// x <= y in the ambient triangle order (any triangle containing both):
// reachability of x from y by down-steps.
bool cell_leq(Cell x, Cell y);

class GTPoset {
 public:
  enum class Kind {
    Triangle,  // 1 <= b <= a <= m: the full pattern triangle
    Reduced,   // b <= n and a-b < m inside the (m+n)-triangle
    Nullcone,  // the reduced (k,2n) cells minus the two excised regions
    SpHalf,    // left half 2b <= a+1 of the 2n-triangle
  };

  static GTPoset triangle(int m);
  static GTPoset reduced(int n, int m);
  static GTPoset nullcone(int k, int n);
  static GTPoset sp_half(int n);

  Kind kind() const { return kind_; }
  int param_n() const { return n_; }
  int param_m() const { return m_; }
  int param_k() const { return k_; }

  int ambient() const;       // side of the containing triangle
  int top_data_row() const;  // the row a that carries the prescribed shape
  bool contains(Cell c) const;
  int size() const { return static_cast<int>(cells_.size()); }

  // Canonical cell order: row a descending (top row first), b ascending.
  const std::vector<Cell>& cells() const { return cells_; }
  int index_of(Cell c) const;  // -1 when absent

  bool leq(Cell x, Cell y) const;  // induced order; both cells must belong

  // (lower, upper) index pairs of the covering relation of the induced order.
  std::vector<std::pair<int, int>> covering_pairs() const;
  std::vector<int> minimal_cell_indices() const;

  // Non-empty rows, top first: (a, cells of row a with b ascending).
  std::vector<std::pair<int, std::vector<Cell>>> rows() const;

  bool operator==(const GTPoset&) const = default;

 private:
  GTPoset() = default;
  void build_cells();

  Kind kind_ = Kind::Triangle;
  int n_ = 0, m_ = 0, k_ = 0;
  std::vector<Cell> cells_;
};

struct GTPattern {
  GTPoset poset;
  std::vector<std::int64_t> values;  // aligned with poset.cells()

  std::int64_t at(Cell c) const;  // 0 for cells outside the poset
  bool operator==(const GTPattern&) const = default;
};

// Non-negative and weakly decreasing along the induced order.
bool pattern_valid(const GTPattern& p);
void validate_pattern(const GTPattern& p);

GTPattern zero_pattern(const GTPoset& poset);

// Row a of the pattern as a shape (padded with zeros over missing cells of
// the triangle row when pad_to > 0).
std::vector<std::int64_t> pattern_row(const GTPattern& p, int a);

// Row i of the triangle pattern = shape of the sub-tableau of entries <= i.
GTPattern pattern_from_tableau(const SemistandardTableau& t, int m);
SemistandardTableau tableau_from_pattern(const GTPattern& p);

GTPattern pattern_add(const GTPattern& p, const GTPattern& q);

// Canonical representative modulo the top-column pattern: requires support
// in columns b <= n with constant value on the up-set of (m+n, n), then
// restricts to the reduced poset.
GTPattern reduce_mod_top(const GTPattern& p, int n, int m);

// Fiber product over the shared (trimmed) top row: rows 1..m copy p_plus,
// row m+r maps cell (m+r, b) to p_minus(n-r, b-r).  Inverse: split_glued.
GTPattern glue(const GTPattern& p_minus, const GTPattern& p_plus);
std::pair<GTPattern, GTPattern> split_glued(const GTPattern& p);

// Restriction to the left half; the right half must carry only zeros.
GTPattern sp_restrict(const GTPattern& p);
// Zero-extension of a half pattern back onto its full triangle.
GTPattern sp_embed(const GTPattern& p);

// Restriction of a reduced (k, 2n) pattern to the nullcone poset; the
// excised cells must carry only zeros.
GTPattern nullcone_restrict(const GTPattern& p, int k, int n);

// Membership of a reduced-(k,2n) cell in the nullcone poset.
bool in_nullcone_poset(Cell z, int k, int n);

// Pattern of a standard tableau over D(n,m): the xi image's triangle
// pattern reduced to the (n,m) cells.
GTPattern pattern_of_tableau(const DoubleTableau& t, int n, int m);

// Values on the top data row, trimmed to a shape.
Shape pattern_top_shape(const GTPattern& p);

// All patterns on the poset whose top data row equals the given shape.
std::vector<GTPattern> enumerate_cone_points(const GTPoset& poset, const Shape& top, Guard& guard);

// H-representation of the pattern cone: one row of coefficients plus a
// trailing right-hand side (always 0) per inequality; covering relations
// first (x_upper - x_lower >= 0), then x >= 0 for minimal cells.
struct HRep {
  int dim = 0;
  std::vector<std::vector<std::int64_t>> inequalities;
};

HRep cone_inequalities(const GTPoset& poset);

Int count_linear_extensions(const GTPoset& poset, Guard& guard);

}  // namespace nullcone
