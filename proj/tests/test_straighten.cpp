#include "fixtures.hpp"
#include "polynomial.hpp"
#include "straighten.hpp"

#include <doctest.h>

#include <map>
#include <vector>

using namespace nullcone;

namespace {

SparsePolynomial expand_product(const std::vector<OneLineTableau>& cols, int n, int m) {
  auto p = poly_const(n, m, Int(1));
  for (const auto& c : cols) p = multiply(p, minor_poly(c, n, m));
  return p;
}

SparsePolynomial expand_combination(const StandardCombination& c, int n, int m) {
  auto p = poly_zero(n, m);
  for (const auto& [coef, t] : c.terms) {
    auto q = poly_const(n, m, coef);
    for (const auto& col : t.columns) q = multiply(q, minor_poly(col, n, m));
    p = add(p, q);
  }
  return p;
}

}  // namespace

TEST_CASE("weight configuration") {
  CHECK(WeightConfig::make(2, 2).base == 9);
  CHECK(WeightConfig::make(4, 6).base == 21);
  CHECK(WeightConfig::make(2, 2, Int(10)).base == 10);
  CHECK(WeightConfig::make(2, 2, Int(9)).base == 9);  // smallest legal value
  CHECK_THROWS_AS(WeightConfig::make(2, 2, Int(8)), ParamError);
  CHECK_THROWS_AS(WeightConfig::make(2, 2, Int(0)), ParamError);
}

TEST_CASE("digit weight values") {
  const auto cfg46 = WeightConfig::make(4, 6);
  CHECK(weight(OneLineTableau{{1}, {4}}, cfg46) == fixtures::kWeight14Base21);

  const auto cfg = WeightConfig::make(2, 2, Int(9));
  const auto wt = [&](const char* text) { return weight(DoubleTableau{parse_product(text)}, cfg); };
  CHECK(wt("[1:1],[2:2]") == wt("[1:1]") + wt("[2:2]"));  // additive over columns
  CHECK(wt("[1:1],[2:2]") == 28);
  CHECK(wt("[1 2:1 2]") == 20);
  CHECK(wt("[1:1],[2:2]") > wt("[1 2:1 2]"));
}

TEST_CASE("weight respects meet and join") {
  // For incomparable pairs, wt(meet) + wt(join) = wt(a) + wt(b) and the
  // meet-join pair strictly dominates: wt(meet) > max(wt(a), wt(b)).
  const auto lat = Lattice::D(2, 3);
  const auto cfg = WeightConfig::make(2, 3);
  Guard guard;
  const auto members = enumerate_lattice(lat, guard);
  int incomparable = 0;
  for (const auto& a : members)
    for (const auto& b : members) {
      if (compare(a, b) != Cmp::Incomparable) continue;
      ++incomparable;
      const auto lo = meet(lat, a, b);
      const auto hi = join(lat, a, b);
      CHECK(weight(lo, cfg) + weight(hi, cfg) == weight(a, cfg) + weight(b, cfg));
      CHECK(weight(lo, cfg) > weight(a, cfg));
      CHECK(weight(lo, cfg) > weight(b, cfg));
    }
  CHECK(incomparable > 0);
}

TEST_CASE("straightening the basic incomparable pair") {
  const auto lat = Lattice::D(2, 2);
  const auto cfg = WeightConfig::make(2, 2);
  Guard guard;
  const auto c = straighten(parse_product("[1:2],[2:1]"), lat, cfg, guard);
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[0].first == 1);
  CHECK(format_product(c.terms[0].second) == fixtures::kStraightenLeading);
  CHECK(c.terms[1].first == -1);
  CHECK(format_product(c.terms[1].second) == fixtures::kStraightenTrailing);
}

TEST_CASE("straightening fixes standard products") {
  const auto lat = Lattice::D(2, 3);
  const auto cfg = WeightConfig::make(2, 3);
  Guard guard;
  for (const char* text : {"[1:1]", "[1 2:1 2],[1:3]", "[1 2:2 3],[1 2:2 3]", "[2:1],[2:3]"}) {
    const auto t = parse_product(text);
    REQUIRE(is_standard(DoubleTableau{t}));
    const auto c = straighten(t, lat, cfg, guard);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].first == 1);
    CHECK(format_product(c.terms[0].second) == text);
  }
}

TEST_CASE("straightening preserves the polynomial") {
  // Exhaustive over all two-column products in D(2,2).
  const auto lat = Lattice::D(2, 2);
  const auto cfg = WeightConfig::make(2, 2);
  Guard guard{100'000'000};
  const auto members = enumerate_lattice(lat, guard);
  for (const auto& a : members)
    for (const auto& b : members) {
      const std::vector<OneLineTableau> product{a, b};
      const auto c = straighten(product, lat, cfg, guard);
      CHECK(expand_combination(c, 2, 2) == expand_product(product, 2, 2));
      for (const auto& [coef, t] : c.terms) {
        CHECK(coef != 0);
        CHECK(is_standard(t));
      }
      // Terms arrive weight-descending.
      for (std::size_t i = 1; i < c.terms.size(); ++i)
        CHECK(weight(c.terms[i - 1].second, cfg) >= weight(c.terms[i].second, cfg));
    }
}

TEST_CASE("leading term of an incomparable product") {
  const auto lat = Lattice::D(2, 3);
  const auto cfg = WeightConfig::make(2, 3);
  Guard guard{100'000'000};
  const auto members = enumerate_lattice(lat, guard);
  int checked = 0;
  for (const auto& a : members)
    for (const auto& b : members) {
      if (compare(a, b) != Cmp::Incomparable) continue;
      ++checked;
      const auto [t, coef] = leading_term(a, b, lat, cfg, guard);
      CHECK(coef == 1);
      REQUIRE(t.columns.size() == 2);
      CHECK(t.columns[0] == meet(lat, a, b));
      CHECK(t.columns[1] == join(lat, a, b));
    }
  CHECK(checked > 0);
  CHECK_THROWS_AS(leading_term(parse_product("[1:1]")[0], parse_product("[2:2]")[0], lat, cfg, guard),
                  DomainError);
}

TEST_CASE("shape dominance") {
  // Deeper shapes dominate: partial sums of column lengths must majorize.
  CHECK(column_dominates({2, 1, 1}, {2, 2}));
  CHECK(column_dominates({1, 1, 1}, {3}));
  CHECK(column_dominates({2, 1}, {2, 1}));
  CHECK(column_dominates({1, 1}, {2}));
  CHECK_FALSE(column_dominates({2, 2}, {2, 1, 1}));
  CHECK_FALSE(column_dominates({3}, {1, 1, 1}));
  CHECK_FALSE(column_dominates({2}, {1, 1}));

  const auto lat = Lattice::D(2, 2);
  const auto cfg = WeightConfig::make(2, 2);
  Guard guard;
  const auto c = straighten(parse_product("[1:2],[2:1]"), lat, cfg, guard);
  CHECK(shape_leading(c) == Shape{1, 1});
}
