#include "fixtures.hpp"
#include "nullcone_ring.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace nullcone;

TEST_CASE("context construction") {
  const auto ctx = NullconeContext::make(2, 2);
  CHECK(ctx.lattice.kind == Lattice::Kind::DN);
  CHECK(ctx.floor_column() == std::vector<int>{1, 3});
  CHECK(ctx.weight.n == 2);
  CHECK(ctx.weight.m == 4);
  CHECK_THROWS_AS(NullconeContext::make(0, 1), ParamError);
  CHECK_THROWS_AS(NullconeContext::make(1, 0), ParamError);
}

TEST_CASE("basic invariants") {
  const auto ctx1 = NullconeContext::make(2, 1);
  CHECK(basic_invariant(1, 2, ctx1) == minor_poly(OneLineTableau{{1, 2}, {1, 2}}, 2, 2));

  const auto ctx2 = NullconeContext::make(2, 2);
  const auto r12 = basic_invariant(1, 2, ctx2);
  const auto expected = add(minor_poly(OneLineTableau{{1, 2}, {1, 2}}, 2, 4),
                            minor_poly(OneLineTableau{{1, 2}, {3, 4}}, 2, 4));
  CHECK(r12 == expected);

  CHECK_THROWS_AS(basic_invariant(2, 1, ctx2), ParamError);
  CHECK_THROWS_AS(basic_invariant(1, 1, ctx2), ParamError);
  CHECK_THROWS_AS(basic_invariant(1, 3, ctx2), ParamError);
}

TEST_CASE("column admissibility") {
  CHECK(column_admissible({1}, 2));
  CHECK(column_admissible({2, 3}, 2));
  CHECK(column_admissible({1, 3}, 2));
  CHECK_FALSE(column_admissible({1, 2}, 2));
  CHECK_FALSE(column_admissible({1, 2, 3}, 2));   // too long for n = 2
  CHECK_FALSE(column_admissible({2, 3, 4}, 3));   // 4 < 5 in the third slot
  CHECK(column_admissible({1, 3, 5}, 3));
}

TEST_CASE("omega sums") {
  Guard guard;
  {
    const auto ctx = NullconeContext::make(2, 2);
    const auto s = omega_sum_for({1, 2}, ctx, guard);
    CHECK(s.p == 2);
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms.at({1, 2}) == 1);
    CHECK(s.terms.at({3, 4}) == 1);
    REQUIRE(s.certificate.size() == 1);
    CHECK(s.certificate[0].first == 1);
    CHECK(s.certificate[0].second.empty());
  }
  {
    const auto ctx = NullconeContext::make(4, 2);
    const auto s = omega_sum_for({1, 2, 3}, ctx, guard);
    CHECK(s.p == 3);
    REQUIRE(s.terms.size() == 1);
    CHECK(s.terms.at({1, 2, 3}) == 1);
    REQUIRE(s.certificate.size() == 1);
    CHECK(s.certificate[0].second == std::vector<int>{3});

    CHECK_THROWS_AS(omega_sum_for({2, 3}, ctx, guard), DomainError);   // admissible
    CHECK_THROWS_AS(omega_sum_for({1, 3}, ctx, guard), DomainError);   // admissible
    CHECK_THROWS_AS(omega_sum_for({2, 2}, ctx, guard), DomainError);   // not increasing
    CHECK_THROWS_AS(omega_sum_for({0, 1}, ctx, guard), DomainError);   // out of range
  }

  // Certificate soundness: omega ^ cert re-expands to the terms, for every
  // inadmissible J with 2 <= |J| <= 4 at n = 2.
  const auto ctx = NullconeContext::make(4, 2);
  const auto om = omega(2);
  int verified = 0;
  std::vector<std::vector<int>> sets;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b) {
      sets.push_back({a, b});
      for (int c = b + 1; c <= 4; ++c) {
        sets.push_back({a, b, c});
        for (int d = c + 1; d <= 4; ++d) sets.push_back({a, b, c, d});
      }
    }
  for (const auto& j : sets) {
    if (column_admissible(j, 2)) continue;
    const auto s = omega_sum_for(j, ctx, guard);
    auto lhs = ext_zero(4, s.p);
    for (const auto& [coef, k] : s.certificate) {
      REQUIRE(coef.get_den() == 1);
      lhs = ext_add(lhs, ext_scalar_mul(Int(coef.get_num()), wedge(om, ext_basis(4, k))));
    }
    auto rhs = ext_zero(4, s.p);
    for (const auto& [key, coef] : s.terms) {
      REQUIRE(coef.get_den() == 1);
      rhs = ext_add(rhs, ext_scalar_mul(Int(coef.get_num()), ext_basis(4, key)));
    }
    CHECK(lhs == rhs);
    CHECK(s.terms.begin()->first == j);
    CHECK(s.terms.begin()->second == 1);
    ++verified;
  }
  CHECK(verified > 0);
}

TEST_CASE("theta elements annihilate sample points") {
  Guard guard;
  const auto ctx2 = NullconeContext::make(2, 2);
  const auto s12 = omega_sum_for({1, 2}, ctx2, guard);
  CHECK(theta_element({1, 2}, s12, ctx2) == basic_invariant(1, 2, ctx2));
  CHECK_THROWS_AS(theta_element({1}, s12, ctx2), DomainError);  // |I| must equal p

  const auto ctx = NullconeContext::make(3, 2);
  const auto s = omega_sum_for({1, 2}, ctx, guard);
  for (std::uint64_t seed : {1u, 2u, 77u}) {
    const auto pt = sample_nullcone_point(ctx, seed);
    for (int i = 1; i < 3; ++i)
      for (int j = i + 1; j <= 3; ++j) CHECK(evaluate(basic_invariant(i, j, ctx), pt) == 0);
    CHECK(evaluate(theta_element({1, 2}, s, ctx), pt) == 0);
    CHECK(evaluate(theta_element({2, 3}, s, ctx), pt) == 0);
  }
}

TEST_CASE("sample points are deterministic and isotropic") {
  const auto ctx = NullconeContext::make(3, 2);
  const auto a = sample_nullcone_point(ctx, 42);
  const auto b = sample_nullcone_point(ctx, 42);
  const auto c = sample_nullcone_point(ctx, 43);
  CHECK(a == b);
  CHECK(a != c);
  REQUIRE(a.size() == 3);
  REQUIRE(a[0].size() == 4);

  // Isotropy directly: sum_u (p_{i,2u-1} p_{j,2u} - p_{j,2u-1} p_{i,2u}) = 0.
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto pt = sample_nullcone_point(ctx, seed);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        Rat acc;
        for (int u = 0; u < 2; ++u) acc += pt[i][2 * u] * pt[j][2 * u + 1] - pt[j][2 * u] * pt[i][2 * u + 1];
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("rewriting onto the admissible basis") {
  Guard guard{100'000'000};
  {
    const auto ctx = NullconeContext::make(2, 1);
    const auto c = n_straighten(parse_product("[1:2],[2:1]"), ctx, guard);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].first == 1);
    CHECK(format_product(c.terms[0].second) == fixtures::kNStraightenResult);
  }
  {
    // Already admissible and standard: unchanged.
    const auto ctx = NullconeContext::make(2, 2);
    const auto c = n_straighten(parse_product("[1:1],[2:3]"), ctx, guard);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].first == 1);
    CHECK(format_product(c.terms[0].second) == "[1:1],[2:3]");
  }
  {
    // Inadmissible column [1 2:1 2] at n = 2, k = 2: rewriting replaces it.
    const auto ctx = NullconeContext::make(2, 2);
    const auto c = n_straighten(parse_product("[1 2:1 2]"), ctx, guard);
    for (const auto& [coef, t] : c.terms) {
      CHECK(coef != 0);
      CHECK(is_standard(t));
      for (const auto& col : t.columns) {
        CHECK(column_admissible(col.J, 2));
        CHECK(ctx.lattice.contains(col));
      }
    }
    // Modulo the invariant ideal the results agree at isotropic points.
    for (std::uint64_t seed : {5u, 6u}) {
      const auto pt = sample_nullcone_point(ctx, seed);
      CHECK(evaluate_product(parse_product("[1 2:1 2]"), pt) == evaluate_combination(c, pt));
    }
  }
}

TEST_CASE("rewriting agrees with evaluation on random products") {
  Guard guard{100'000'000};
  const auto ctx = NullconeContext::make(2, 2);
  const auto gl = Lattice::D(2, 4);
  const auto members = enumerate_lattice(gl, guard);
  // All two-column products over D(2, 4) with len <= 2 would be large; take
  // every seventh pair for coverage.
  int step = 0, covered = 0;
  for (const auto& a : members)
    for (const auto& b : members) {
      if (++step % 7 != 0) continue;
      const std::vector<OneLineTableau> product{a, b};
      const auto c = n_straighten(product, ctx, guard);
      for (const auto& [coef, t] : c.terms)
        for (const auto& col : t.columns) CHECK(column_admissible(col.J, 2));
      const auto pt = sample_nullcone_point(ctx, 1000 + static_cast<std::uint64_t>(step));
      CHECK(evaluate_product(product, pt) == evaluate_combination(c, pt));
      ++covered;
    }
  CHECK(covered > 10);
}

TEST_CASE("leading term in the admissible lattice") {
  Guard guard{100'000'000};
  const auto ctx = NullconeContext::make(2, 2);
  const auto a = parse_product("[1:3]")[0];
  const auto b = parse_product("[2:1]")[0];
  REQUIRE(compare(a, b) == Cmp::Incomparable);
  const auto [t, coef] = n_leading_term(a, b, ctx, guard);
  CHECK(coef == 1);
  REQUIRE(t.columns.size() == 2);
  CHECK(t.columns[0] == meet(ctx.lattice, a, b));
  CHECK(t.columns[1] == join(ctx.lattice, a, b));
  CHECK(format_column(t.columns[0]) == "[1:1]");
  CHECK(format_column(t.columns[1]) == "[2:3]");

  // Exhaustive over the incomparable pairs of DN(2, 2).
  const auto members = enumerate_lattice(ctx.lattice, guard);
  int checked = 0;
  for (const auto& x : members)
    for (const auto& y : members) {
      if (compare(x, y) != Cmp::Incomparable) continue;
      const auto [lead, cf] = n_leading_term(x, y, ctx, guard);
      CHECK(cf == 1);
      CHECK(lead.columns[0] == meet(ctx.lattice, x, y));
      CHECK(lead.columns[1] == join(ctx.lattice, x, y));
      ++checked;
    }
  CHECK(checked > 0);
}

TEST_CASE("admissible standard enumeration") {
  Guard guard;
  const auto ctx = NullconeContext::make(2, 1);
  const auto two = enumerate_n_standard({2}, ctx, guard);
  CHECK(two.size() == 9);
  for (const auto& t : two) {
    CHECK(is_standard(t));
    for (const auto& col : t.columns) CHECK(ctx.lattice.contains(col));
  }
  CHECK(enumerate_n_standard({1}, ctx, guard).size() == 4);

  // Shapes taller than min(k, n) have no admissible tableaux.
  CHECK(enumerate_n_standard({2, 2}, ctx, guard).empty());
}

TEST_CASE("dimension oracles") {
  CHECK(dim_gl({2}, 2) == fixtures::kDimGl2_2);
  CHECK(dim_gl({2, 1}, 3) == fixtures::kDimGl21_3);
  CHECK(dim_gl({1}, 4) == 4);
  CHECK(dim_gl({1, 1, 1}, 2) == 0);  // more rows than k
  CHECK(dim_gl({}, 3) == 1);

  CHECK(dim_sp({1, 1}, 2) == fixtures::kDimSp11_2);
  CHECK(dim_sp({2}, 2) == fixtures::kDimSp2_2);
  CHECK(dim_sp({2}, 1) == 3);
  CHECK(dim_sp({1}, 3) == 6);
  CHECK(dim_sp({1, 1, 1}, 2) == 0);  // more rows than n
  CHECK(dim_sp({}, 2) == 1);

  CHECK_THROWS_AS(dim_gl({1, 2}, 2), DomainError);  // not weakly decreasing
  CHECK_THROWS_AS(dim_sp({1, 2}, 2), DomainError);
  CHECK(dim_sp({0}, 2) == 1);  // zero rows trim away
}

TEST_CASE("counting matches the dimension product") {
  Guard guard;
  const auto ctx21 = NullconeContext::make(2, 1);
  CHECK(Int(enumerate_n_standard({2}, ctx21, guard).size()) == dim_gl({2}, 2) * dim_sp({2}, 1));
  CHECK(Int(enumerate_n_standard({1}, ctx21, guard).size()) == dim_gl({1}, 2) * dim_sp({1}, 1));

  const auto ctx22 = NullconeContext::make(2, 2);
  const auto one = enumerate_n_standard({1}, ctx22, guard);
  CHECK(Int(one.size()) == dim_gl({1}, 2) * dim_sp({1}, 2));
  const auto two = enumerate_n_standard({2}, ctx22, guard);
  CHECK(Int(two.size()) == dim_gl({2}, 2) * dim_sp({2}, 2));
  const auto hook = enumerate_n_standard({2, 1}, ctx22, guard);
  CHECK(Int(hook.size()) == dim_gl({2, 1}, 2) * dim_sp({2, 1}, 2));
}

TEST_CASE("degree enumeration and independence") {
  Guard guard{100'000'000};
  const auto ctx = NullconeContext::make(2, 1);
  const auto upto2 = n_standard_up_to_degree(2, ctx, guard);
  CHECK(upto2.size() == 14);
  const auto upto3 = n_standard_up_to_degree(3, ctx, guard);
  CHECK(upto3.size() == fixtures::kDegree3CandidatesK2N1);

  std::set<std::string> texts;
  for (const auto& t : upto3) texts.insert(format_product(t));
  CHECK(texts.size() == upto3.size());

  const auto report = independence_check(upto2, ctx, 20, 9001, guard);
  CHECK(report.candidates == 14);
  CHECK(report.rank == 14);
  CHECK(report.full_rank);
  CHECK(report.points_used >= 14);
}
