#pragma once

// One-line and double tableaux, the tableau partial order, the finite
// lattices built from it, and their enumerations.
//
// A one-line tableau [I:J] is a pair of equal-size strictly increasing index
// sets, the row and column indices of a minor of an n x m matrix.  The order
// is [I:J] <= [I':J'] iff len(I) >= len(I') and i_k <= i'_k, j_k <= j'_k for
// all k up to len(I'); longer tableaux sit lower.

#include "basics.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nullcone {

// Weakly decreasing non-negative row lengths; canonical form trims zeros.
using Shape = std::vector<int>;

bool shape_valid(const Shape& s);
void validate_shape(const Shape& s);  // throws DomainError
Shape shape_trim(Shape s);
Shape shape_conjugate(const Shape& s);
int shape_size(const Shape& s);

struct OneLineTableau {
  std::vector<int> I, J;

  int len() const { return static_cast<int>(I.size()); }
  auto operator<=>(const OneLineTableau&) const = default;
};

// Concatenation of one-line tableaux with weakly decreasing lengths.
struct DoubleTableau {
  std::vector<OneLineTableau> columns;

  auto operator<=>(const DoubleTableau&) const = default;
};

// sh(t): the transpose of the column-length sequence.
Shape shape_of(const DoubleTableau& t);

// Compact text form used for CLI input and canonical tie-breaking:
// "[1 2:1 3],[2:1]".
std::string format_column(const OneLineTableau& t);
std::string format_product(const std::vector<OneLineTableau>& columns);
std::string format_product(const DoubleTableau& t);
std::vector<OneLineTableau> parse_product(const std::string& text);

enum class Cmp { Less, Equal, Greater, Incomparable };

// x <= y in the tableau order.
bool leq(const OneLineTableau& x, const OneLineTableau& y);
Cmp compare(const OneLineTableau& x, const OneLineTableau& y);

// Columns form a multiple chain, weakly increasing left to right.
bool is_standard(const DoubleTableau& t);

struct SemistandardTableau {
  std::vector<std::vector<int>> rows;
  int max_entry = 0;

  Shape shape() const;
  std::vector<int> column(int c) const;  // 0-based, top to bottom
  auto operator<=>(const SemistandardTableau&) const = default;
};

// Rows weakly increase, columns strictly increase, entries in 1..max_entry.
bool ssyt_valid(const SemistandardTableau& t);
void validate_ssyt(const SemistandardTableau& t);

// Column-wise split of a standard double tableau into the row-index and
// column-index semistandard halves; rows/cols bound the two entry alphabets.
std::pair<SemistandardTableau, SemistandardTableau> split(const DoubleTableau& t, int rows, int cols);

// Order isomorphism from the [I:J] order onto entrywise order of length-n
// index sets in {1..m+n}; the top [m+1..m+n] has no preimage.
std::vector<int> xi(const OneLineTableau& t, int n, int m);
OneLineTableau xi_inverse(const std::vector<int>& plucker, int n, int m);

// Column-wise xi image of a standard tableau: every column becomes a full
// length-n column with entries in 1..m+n, so the result is a semistandard
// rectangle with n rows.
SemistandardTableau xi_image(const DoubleTableau& t, int n, int m);

// [1,3,...,2n-1]: the floor column for the isotropic-side lattice.
std::vector<int> tilde_column(int n);

struct Lattice {
  enum class Kind {
    D,   // all [I:J] on an n x m matrix
    L,   // I = [1..len] initial; carried by J
    Pl,  // fixed length n inside {1..m+n}, the image of xi plus the top
    DN,  // columns admissible on the isotropic locus of a k x 2n matrix
  };

  Kind kind = Kind::D;
  int n = 0, m = 0, k = 0;  // D/L/Pl use n,m; DN uses k,n

  static Lattice D(int n, int m);
  static Lattice L(int n, int m);
  static Lattice Pl(int n, int m);
  static Lattice DN(int k, int n);

  int rows() const;     // row-index alphabet size
  int cols() const;     // column-index alphabet size
  int max_len() const;  // maximal column length
  bool contains(const OneLineTableau& t) const;
  void validate_member(const OneLineTableau& t) const;
  bool operator==(const Lattice&) const = default;
};

// Canonical order: length descending, then lex on (I, J).
std::vector<OneLineTableau> enumerate_lattice(const Lattice& lat, Guard& guard);

// Greatest lower / least upper bound inside the lattice.  Equal-length pairs
// take the entrywise min/max fast path; mixed lengths search the members.
OneLineTableau meet(const Lattice& lat, const OneLineTableau& x, const OneLineTableau& y);
OneLineTableau join(const Lattice& lat, const OneLineTableau& x, const OneLineTableau& y);

// Exact multiset content (sorted) for standard enumeration filters.
struct ContentFilter {
  std::vector<int> row_content;
  std::vector<int> col_content;
};

// Standard tableaux of the given shape, columns drawn from the lattice,
// in lexicographic column order; optional exact content filter.
std::vector<DoubleTableau> enumerate_standard(const Lattice& lat, const Shape& shape, Guard& guard,
                                              const std::optional<ContentFilter>& filter = std::nullopt);

// Standard tableaux of every shape with exactly the given content.
std::vector<DoubleTableau> enumerate_standard_by_content(const Lattice& lat, const ContentFilter& filter,
                                                         Guard& guard);

// All maximal chains (bottom to top along covers) of the lattice.
std::vector<std::vector<OneLineTableau>> maximal_chains(const Lattice& lat, Guard& guard);

// Semistandard fillings of the shape with entries in 1..max_entry; when a
// floor column is given, every column must dominate it entrywise and fit
// inside its length.
std::vector<SemistandardTableau> enumerate_ssyt(const Shape& shape, int max_entry, Guard& guard,
                                                const std::optional<std::vector<int>>& column_floor = std::nullopt);

}  // namespace nullcone
