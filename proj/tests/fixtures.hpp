#pragma once

// Frozen expected values for the test suite.  Everything here was computed
// by hand (or by an independent counting argument) before the library code
// existed; tests must never regenerate these from the code under test.

#include "tableaux.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fixtures {

using nullcone::SemistandardTableau;
using PatternRows = std::vector<std::vector<std::int64_t>>;  // top row first

// ---- worked example on the 3x4 matrix ---------------------------------

// Shape (4,4,4), entries bounded by 7.
inline const SemistandardTableau kGl7Tableau{{{1, 1, 2, 5}, {2, 3, 5, 6}, {3, 4, 6, 7}}, 7};

// Its full 7-triangle pattern: row i = shape of the entries <= i.
inline const PatternRows kGl7Rows{{4, 4, 4, 0, 0, 0, 0}, {4, 4, 3, 0, 0, 0}, {4, 3, 2, 0, 0}, {3, 2, 2, 0},
                                  {3, 2, 1},             {3, 1},             {2}};

// The same pattern reduced to the (3,4) cells.
inline const PatternRows kReduced34Rows{{3}, {3, 2}, {3, 2, 2}, {3, 2, 1}, {3, 1}, {2}};

// Its two glue factors.
inline const PatternRows kGl3Rows{{3, 2, 2}, {3, 2}, {3}};
inline const PatternRows kGl4Rows{{3, 2, 2, 0}, {3, 2, 1}, {3, 1}, {2}};

// ---- worked example on the isotropic locus of the 4x6 matrix ----------

// Admissible standard tableau of shape (5,4,2) over D(4,6), k = 4, n = 3.
inline const std::string kSpProduct = "[1 2 3:1 3 5],[1 2 4:1 3 6],[1 2:2 4],[1 3:3 5],[1:4]";

// Column-wise xi images (length-4 index sets in 1..10).
inline const std::vector<std::vector<int>> kSpXiImages{
    {1, 3, 5, 7}, {1, 3, 6, 8}, {2, 4, 7, 8}, {3, 5, 7, 9}, {4, 7, 8, 9}};

// The xi image assembled as a semistandard rectangle with 4 rows, max 10.
inline const SemistandardTableau kSpPlTableau{
    {{1, 1, 2, 3, 4}, {3, 3, 4, 5, 7}, {5, 6, 7, 7, 8}, {7, 8, 8, 9, 9}}, 10};

inline const PatternRows kSpGl10Rows{{5, 5, 5, 5, 0, 0, 0, 0, 0, 0},
                                     {5, 5, 5, 5, 0, 0, 0, 0, 0},
                                     {5, 5, 5, 3, 0, 0, 0, 0},
                                     {5, 5, 4, 1, 0, 0, 0},
                                     {5, 4, 2, 0, 0, 0},
                                     {5, 4, 1, 0, 0},
                                     {5, 3, 0, 0},
                                     {4, 2, 0},
                                     {3, 0},
                                     {2}};

// Reduction to the (4,6) cells.
inline const PatternRows kReduced46Rows{{5},          {5, 3},       {5, 4, 1}, {5, 4, 2, 0}, {5, 4, 1, 0},
                                        {5, 3, 0, 0}, {4, 2, 0},    {3, 0},    {2}};

// split_glued factors of the reduced pattern.
inline const PatternRows kSpMinusGl4Rows{{5, 4, 2, 0}, {5, 4, 1}, {5, 3}, {5}};
inline const PatternRows kSpPlusGl6Rows{{5, 4, 2, 0, 0, 0}, {5, 4, 1, 0, 0}, {5, 3, 0, 0}, {4, 2, 0}, {3, 0}, {2}};

// The plus factor restricted to the left half-triangle (rows ceil(a/2)).
inline const PatternRows kSpHalfRows{{5, 4, 2}, {5, 4, 1}, {5, 3}, {4, 2}, {3}, {2}};

// Zeros of the reduced pattern sit exactly on the cells excised from the
// nullcone poset of (k, n) = (4, 3); the poset keeps 18 of the 24 cells.
inline constexpr int kDigamma46Size = 18;

// Row/column halves of the tableau itself (alphabets 4 and 6).
inline const SemistandardTableau kSpTMinus{{{1, 1, 1, 1, 1}, {2, 2, 2, 3}, {3, 4}}, 4};
inline const SemistandardTableau kSpTPlus{{{1, 1, 2, 3, 4}, {3, 3, 4, 5}, {5, 6}}, 6};

// ---- split display on the 4x5 matrix ----------------------------------

inline const std::string kSplitProduct = "[1 2 3:1 2 4],[1 3:2 3],[2:3],[4:5]";
inline const SemistandardTableau kSplitTMinus{{{1, 1, 2, 4}, {2, 3}, {3}}, 4};
inline const SemistandardTableau kSplitTPlus{{{1, 2, 3, 5}, {2, 3}, {4}}, 5};

// ---- counts ------------------------------------------------------------

inline constexpr int kSizeD22 = 5;    // lattice on the 2x2 matrix
inline constexpr int kSizeD23 = 9;
inline constexpr int kSizeD33 = 19;
inline constexpr int kSizeD11 = 1;
inline constexpr int kSizeDn21 = 4;   // admissible columns, k = 2, n = 1
inline constexpr int kSizeDn22 = 13;  // k = 2, n = 2

inline constexpr int kStandard2Dn21 = 9;    // shape (2) over the k=2, n=1 lattice
inline constexpr int kStandard11D22 = 1;    // shape (1,1) over D(2,2)
inline constexpr int kSsyt11Floor13 = 5;    // shape (1,1), max 4, floor [1,3]
inline constexpr int kSsyt21Max3 = 8;       // shape (2,1), max 3

inline constexpr int kChainsD22 = 2;
inline constexpr int kChainsD23 = 5;
inline constexpr int kChainsD33 = 42;
inline constexpr int kChainsDn21 = 2;

// Linear extensions of the matching cell posets.
inline constexpr int kExtGamma22 = 2;
inline constexpr int kExtGamma23 = 5;
inline constexpr int kExtGamma33 = 42;
inline constexpr int kExtDigamma22 = 2;

// Cone points with prescribed top row.
inline constexpr int kConeGamma12Top1 = 2;  // reduced (1,2) poset, top (1)
// nullcone poset (k,n) = (2,1): top (d) gives (d+1)^2 points.
inline const std::vector<int> kConeDigamma21Counts{1, 4, 9, 16, 25};  // d = 0..4

// Degree-d standard monomial count over the 2x2 matrix, d = 0..4.
inline const std::vector<int> kCauchyD22Counts{1, 4, 10, 20, 35};

// Dimension oracles.
inline constexpr int kDimGl2_2 = 3;
inline constexpr int kDimGl21_3 = 8;
inline constexpr int kDimSp11_2 = 5;
inline constexpr int kDimSp2_2 = 10;

// Independence candidate counts, total degree <= 3 (empty tableau included).
inline constexpr int kDegree3CandidatesK2N1 = 30;   // 1 + 4 + 9 + 16
inline constexpr int kDegree3CandidatesK2N2 = 156;  // 1 + 8 + 35 + 112

// ---- weights and straightening -----------------------------------------

// Over the 4x6 ambient with base 21: 3*21^3 + 21^2 + 21 + 1.
inline constexpr long kWeight14Base21 = 28246;

// straighten([1:2],[2:1]) over D(2,2): +1 on the meet/join pair, -1 on the
// full 2x2 minor.
inline const std::string kStraightenLeading = "[1:1],[2:2]";
inline const std::string kStraightenTrailing = "[1 2:1 2]";

// n_straighten of the same product at k = 2, n = 1 keeps only the pair.
inline const std::string kNStraightenResult = "[1:1],[2:2]";

// Pattern round-trips on the 3-triangle with top row (2,1).
inline constexpr int kTriangle3Top21Patterns = 8;

}  // namespace fixtures
