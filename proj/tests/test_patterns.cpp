#include "helpers.hpp"
#include "patterns.hpp"

#include <doctest.h>

#include <set>

using namespace nullcone;
using helpers::make_pattern;
using helpers::rows_of;

namespace {

std::vector<std::size_t> row_sizes(const GTPoset& poset) {
  std::vector<std::size_t> out;
  for (const auto& [a, cells] : poset.rows()) out.push_back(cells.size());
  return out;
}

}  // namespace

TEST_CASE("cell order") {
  CHECK(cell_leq({1, 1}, {2, 1}));       // straight down-step
  CHECK(cell_leq({3, 2}, {2, 1}));       // diagonal down-step
  CHECK(cell_leq({3, 3}, {3, 2}));       // composite
  CHECK_FALSE(cell_leq({2, 1}, {1, 1}));
  CHECK_FALSE(cell_leq({3, 1}, {3, 2}));
  CHECK(cell_leq({2, 2}, {2, 2}));
}

TEST_CASE("poset construction") {
  const auto t3 = GTPoset::triangle(3);
  CHECK(t3.size() == 6);
  CHECK(t3.ambient() == 3);
  CHECK(t3.top_data_row() == 3);
  CHECK(row_sizes(t3) == std::vector<std::size_t>{3, 2, 1});

  const auto r23 = GTPoset::reduced(2, 3);
  CHECK(r23.size() == 6);
  CHECK(r23.ambient() == 5);
  CHECK(r23.top_data_row() == 3);
  CHECK(row_sizes(r23) == std::vector<std::size_t>{1, 2, 2, 1});

  const auto r46 = GTPoset::reduced(4, 6);
  CHECK(r46.size() == 24);
  CHECK(row_sizes(r46) == std::vector<std::size_t>{1, 2, 3, 4, 4, 4, 3, 2, 1});

  const auto f21 = GTPoset::nullcone(2, 1);
  CHECK(f21.size() == 3);
  CHECK(f21.top_data_row() == 2);

  const auto f43 = GTPoset::nullcone(4, 3);
  CHECK(f43.size() == fixtures::kDigamma46Size);

  const auto h3 = GTPoset::sp_half(3);
  CHECK(h3.size() == 12);
  CHECK(h3.top_data_row() == 6);
  CHECK(row_sizes(h3) == std::vector<std::size_t>{3, 3, 2, 2, 1, 1});

  CHECK_THROWS_AS(GTPoset::triangle(0), ParamError);
  CHECK_THROWS_AS(GTPoset::nullcone(1, 0), ParamError);
}

TEST_CASE("posets have a unique maximal cell") {
  for (const auto& poset : {GTPoset::triangle(3), GTPoset::reduced(2, 3), GTPoset::reduced(4, 6),
                            GTPoset::nullcone(2, 1), GTPoset::nullcone(2, 2), GTPoset::sp_half(3)}) {
    const auto& cells = poset.cells();
    std::vector<Cell> maximal;
    for (const auto& x : cells) {
      bool is_max = true;
      for (const auto& y : cells)
        if (x != y && poset.leq(x, y)) is_max = false;
      if (is_max) maximal.push_back(x);
    }
    REQUIRE(maximal.size() == 1);
    CHECK(maximal.front().b == 1);
  }
}

TEST_CASE("covering pairs bound the order") {
  const auto poset = GTPoset::reduced(2, 3);
  const auto& cells = poset.cells();
  for (const auto& [lo, hi] : poset.covering_pairs()) {
    const Cell x = cells[static_cast<std::size_t>(lo)], y = cells[static_cast<std::size_t>(hi)];
    CHECK(poset.leq(x, y));
    CHECK(x != y);
    for (const auto& z : cells)
      if (poset.leq(x, z) && poset.leq(z, y)) CHECK((z == x || z == y));
  }
  // Every strict relation is a chain of covers: count reachability.
  std::size_t related = 0;
  for (const auto& x : cells)
    for (const auto& y : cells)
      if (x != y && poset.leq(x, y)) ++related;
  // Transitive closure of the covers must reproduce the order.
  const int sz = poset.size();
  std::vector<std::vector<bool>> reach(static_cast<std::size_t>(sz), std::vector<bool>(static_cast<std::size_t>(sz)));
  for (const auto& [lo, hi] : poset.covering_pairs()) reach[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] = true;
  for (int k = 0; k < sz; ++k)
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j)
        if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
            reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
          reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
  std::size_t closed = 0;
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j)
      if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) ++closed;
  CHECK(closed == related);
}

TEST_CASE("pattern validity") {
  const auto t3 = GTPoset::triangle(3);
  GTPattern p = make_pattern(t3, {{2, 1, 0}, {2, 1}, {1}});
  CHECK(pattern_valid(p));
  p.values[static_cast<std::size_t>(t3.index_of({1, 1}))] = 5;  // exceeds everything above
  CHECK_FALSE(pattern_valid(p));
  GTPattern q = zero_pattern(t3);
  q.values[0] = -1;
  CHECK_FALSE(pattern_valid(q));
  GTPattern r = zero_pattern(t3);
  r.values.pop_back();
  CHECK_FALSE(pattern_valid(r));
  CHECK_THROWS_AS(validate_pattern(r), DomainError);
}

TEST_CASE("triangle pattern of a tableau") {
  const GTPattern p7 = pattern_from_tableau(fixtures::kGl7Tableau, 7);
  CHECK(rows_of(p7) == fixtures::kGl7Rows);
  CHECK(pattern_valid(p7));
  CHECK(tableau_from_pattern(p7) == fixtures::kGl7Tableau);

  const GTPattern p10 = pattern_from_tableau(fixtures::kSpPlTableau, 10);
  CHECK(rows_of(p10) == fixtures::kSpGl10Rows);
  CHECK(tableau_from_pattern(p10) == fixtures::kSpPlTableau);

  // Round trip over an enumerated family.
  Guard guard;
  for (const auto& t : enumerate_ssyt({2, 1}, 3, guard)) {
    const auto p = pattern_from_tableau(t, 3);
    CHECK(pattern_valid(p));
    CHECK(tableau_from_pattern(p) == t);
  }

  CHECK_THROWS_AS(pattern_from_tableau(SemistandardTableau{{{1, 1}, {1}}, 2}, 2), DomainError);
  CHECK_THROWS_AS(pattern_from_tableau(fixtures::kGl7Tableau, 5), DomainError);  // entries exceed the triangle
}

TEST_CASE("reduction modulo the top column") {
  const GTPattern p7 = pattern_from_tableau(fixtures::kGl7Tableau, 7);
  const GTPattern r34 = reduce_mod_top(p7, 3, 4);
  CHECK(r34.poset == GTPoset::reduced(3, 4));
  CHECK(rows_of(r34) == fixtures::kReduced34Rows);

  const GTPattern p10 = pattern_from_tableau(fixtures::kSpPlTableau, 10);
  const GTPattern r46 = reduce_mod_top(p10, 4, 6);
  CHECK(rows_of(r46) == fixtures::kReduced46Rows);

  // Support outside the first n columns is rejected.
  CHECK_THROWS_AS(reduce_mod_top(p7, 2, 5), DomainError);
  // Kind and size must match a triangle of side n + m.
  CHECK_THROWS_AS(reduce_mod_top(p7, 3, 5), ParamError);
}

TEST_CASE("glue and split_glued") {
  const GTPattern r46 = reduce_mod_top(pattern_from_tableau(fixtures::kSpPlTableau, 10), 4, 6);
  const auto [minus, plus] = split_glued(r46);
  CHECK(minus.poset == GTPoset::triangle(4));
  CHECK(plus.poset == GTPoset::triangle(6));
  CHECK(rows_of(minus) == fixtures::kSpMinusGl4Rows);
  CHECK(rows_of(plus) == fixtures::kSpPlusGl6Rows);
  CHECK(glue(minus, plus) == r46);

  const GTPattern r34 = reduce_mod_top(pattern_from_tableau(fixtures::kGl7Tableau, 7), 3, 4);
  const auto [m34, p34] = split_glued(r34);
  CHECK(rows_of(m34) == fixtures::kGl3Rows);
  CHECK(rows_of(p34) == fixtures::kGl4Rows);
  CHECK(glue(m34, p34) == r34);

  // Gluing needs equal trimmed top rows.
  const GTPattern wrong = make_pattern(GTPoset::triangle(4), {{1, 0, 0, 0}, {1, 0, 0}, {1, 0}, {1}});
  CHECK_THROWS_AS(glue(wrong, p34), DomainError);
}

TEST_CASE("symplectic restriction") {
  const GTPattern r46 = reduce_mod_top(pattern_from_tableau(fixtures::kSpPlTableau, 10), 4, 6);
  const auto plus = split_glued(r46).second;
  const GTPattern half = sp_restrict(plus);
  CHECK(half.poset == GTPoset::sp_half(3));
  CHECK(rows_of(half) == fixtures::kSpHalfRows);
  CHECK(sp_embed(half) == plus);

  GTPattern bad = make_pattern(GTPoset::triangle(2), {{1, 1}, {1}});
  CHECK(pattern_valid(bad));
  CHECK_THROWS_AS(sp_restrict(bad), DomainError);  // right half carries a value
}

TEST_CASE("nullcone poset restriction") {
  const GTPattern r46 = reduce_mod_top(pattern_from_tableau(fixtures::kSpPlTableau, 10), 4, 6);
  const GTPattern nc = nullcone_restrict(r46, 4, 3);
  CHECK(nc.poset == GTPoset::nullcone(4, 3));
  CHECK(pattern_valid(nc));
  for (const auto& c : nc.poset.cells()) CHECK(nc.at(c) == r46.at(c));

  // The excised cells of the reduced pattern are exactly its zeros here.
  for (const auto& c : r46.poset.cells())
    if (!in_nullcone_poset(c, 4, 3)) CHECK(r46.at(c) == 0);

  GTPattern bad = r46;
  for (std::size_t i = 0; i < bad.values.size(); ++i)
    if (!in_nullcone_poset(bad.poset.cells()[i], 4, 3)) bad.values[i] = 1;
  CHECK_THROWS_AS(nullcone_restrict(bad, 4, 3), DomainError);
}

TEST_CASE("pattern of a standard product") {
  const DoubleTableau sp{parse_product(fixtures::kSpProduct)};
  const GTPattern p = pattern_of_tableau(sp, 4, 6);
  CHECK(rows_of(p) == fixtures::kReduced46Rows);
  CHECK(pattern_top_shape(p) == shape_of(sp));

  Guard guard;
  for (const auto& t : enumerate_standard(Lattice::D(2, 3), {2, 1}, guard)) {
    const auto q = pattern_of_tableau(t, 2, 3);
    CHECK(pattern_valid(q));
    CHECK(pattern_top_shape(q) == shape_of(t));
  }

  // Distinct standard tableaux give distinct patterns (the map is injective).
  std::set<fixtures::PatternRows> images;
  const auto all = enumerate_standard(Lattice::D(2, 3), {2, 1}, guard);
  for (const auto& t : all) images.insert(rows_of(pattern_of_tableau(t, 2, 3)));
  CHECK(images.size() == all.size());
}

TEST_CASE("pattern addition") {
  const auto lat = Lattice::D(2, 3);
  Guard guard;
  const auto ms = enumerate_lattice(lat, guard);
  for (const auto& x : ms)
    for (const auto& y : ms) {
      const auto px = pattern_of_tableau(DoubleTableau{{x}}, 2, 3);
      const auto py = pattern_of_tableau(DoubleTableau{{y}}, 2, 3);
      const auto plo = pattern_of_tableau(DoubleTableau{{meet(lat, x, y)}}, 2, 3);
      const auto phi = pattern_of_tableau(DoubleTableau{{join(lat, x, y)}}, 2, 3);
      CHECK(pattern_add(px, py) == pattern_add(plo, phi));
    }

  const auto t3 = GTPoset::triangle(3);
  CHECK_THROWS_AS(pattern_add(zero_pattern(t3), zero_pattern(GTPoset::triangle(4))), ParamError);
}

TEST_CASE("cone points") {
  Guard guard;
  CHECK(enumerate_cone_points(GTPoset::triangle(3), {2, 1}, guard).size() == fixtures::kTriangle3Top21Patterns);
  CHECK(enumerate_cone_points(GTPoset::reduced(1, 2), {1}, guard).size() == fixtures::kConeGamma12Top1);
  for (int d = 0; d <= 4; ++d) {
    const Shape top = d == 0 ? Shape{} : Shape{d};
    CHECK(enumerate_cone_points(GTPoset::nullcone(2, 1), top, guard).size() ==
          static_cast<std::size_t>(fixtures::kConeDigamma21Counts[static_cast<std::size_t>(d)]));
  }

  // Every point is a valid pattern with the prescribed top data row.
  const auto poset = GTPoset::reduced(2, 2);
  const auto pts = enumerate_cone_points(poset, {2, 1}, guard);
  for (const auto& p : pts) {
    CHECK(pattern_valid(p));
    CHECK(pattern_top_shape(p) == Shape{2, 1});
  }

  CHECK_THROWS_AS(enumerate_cone_points(GTPoset::reduced(2, 2), {1, 1, 1}, guard), DomainError);
  CHECK_THROWS_AS(enumerate_cone_points(GTPoset::triangle(1), {2, 1}, guard), DomainError);
  Guard tiny;
  tiny.limit = 2;
  CHECK_THROWS_AS(enumerate_cone_points(GTPoset::triangle(3), {2, 1}, tiny), ResourceError);
}

TEST_CASE("cone inequalities") {
  const auto h12 = cone_inequalities(GTPoset::reduced(1, 2));
  CHECK(h12.dim == 2);
  REQUIRE(h12.inequalities.size() == 2);
  CHECK(h12.inequalities[0] == std::vector<std::int64_t>{1, -1, 0});
  CHECK(h12.inequalities[1] == std::vector<std::int64_t>{0, 1, 0});

  const auto poset = GTPoset::triangle(3);
  const auto h = cone_inequalities(poset);
  CHECK(h.dim == 6);
  CHECK(h.inequalities.size() == 7);

  // The integral points of the cone with the prescribed top row are exactly
  // the enumerated patterns: brute-force the small box.
  Guard guard;
  const auto pts = enumerate_cone_points(poset, {2, 1}, guard);
  std::set<std::vector<std::int64_t>> expect;
  for (const auto& p : pts) expect.insert(p.values);
  std::set<std::vector<std::int64_t>> got;
  std::vector<std::int64_t> v(6, 0);
  const auto& cells = poset.cells();
  auto sweep = [&](auto&& self, std::size_t i) -> void {
    if (i == v.size()) {
      for (const auto& row : h.inequalities) {
        std::int64_t dot = 0;
        for (std::size_t j = 0; j < v.size(); ++j) dot += row[j] * v[j];
        if (dot < -row.back()) return;
      }
      // match the prescribed top row (2,1,0)
      std::vector<std::int64_t> top;
      for (std::size_t j = 0; j < cells.size(); ++j)
        if (cells[j].a == 3) top.push_back(v[j]);
      if (top != std::vector<std::int64_t>{2, 1, 0}) return;
      got.insert(v);
      return;
    }
    for (std::int64_t x = 0; x <= 2; ++x) {
      v[i] = x;
      self(self, i + 1);
    }
  };
  sweep(sweep, 0);
  CHECK(got == expect);
}

TEST_CASE("linear extension counts") {
  Guard guard;
  CHECK(count_linear_extensions(GTPoset::reduced(2, 2), guard) == fixtures::kExtGamma22);
  CHECK(count_linear_extensions(GTPoset::reduced(2, 3), guard) == fixtures::kExtGamma23);
  CHECK(count_linear_extensions(GTPoset::reduced(3, 3), guard) == fixtures::kExtGamma33);
  CHECK(count_linear_extensions(GTPoset::nullcone(2, 1), guard) == fixtures::kExtDigamma22);

  // Matching maximal-chain counts of the tableau lattices.
  CHECK(count_linear_extensions(GTPoset::reduced(2, 3), guard) ==
        Int(static_cast<long>(maximal_chains(Lattice::D(2, 3), guard).size())));

  CHECK_THROWS_AS(count_linear_extensions(GTPoset::triangle(12), guard), ResourceError);
}
