#include "verify.hpp"

#include "nullcone_ring.hpp"
#include "patterns.hpp"
#include "polynomial.hpp"
#include "straighten.hpp"
#include "tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace nullcone {
namespace {

using Rows = std::vector<std::vector<std::int64_t>>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

bool rows_equal(const GTPattern& p, const Rows& want) {
  const auto rows = p.poset.rows();
  if (rows.size() != want.size()) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& cells = rows[r].second;
    if (cells.size() != want[r].size()) return false;
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (p.at(cells[b]) != want[r][b]) return false;
  }
  return true;
}

std::vector<Shape> partitions(int d) {
  std::vector<Shape> out;
  Shape cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

SparsePolynomial expand_product(const std::vector<OneLineTableau>& cols, int rows, int columns) {
  SparsePolynomial p = poly_const(rows, columns, 1);
  for (const auto& c : cols) p = multiply(p, minor_poly(c, rows, columns));
  return p;
}

std::string check_golden_reduction() {
  const SemistandardTableau t{{{1, 1, 2, 5}, {2, 3, 5, 6}, {3, 4, 6, 7}}, 7};
  const GTPattern p = pattern_from_tableau(t, 7);
  require(rows_equal(p, Rows{{4, 4, 4, 0, 0, 0, 0},
                             {4, 4, 3, 0, 0, 0},
                             {4, 3, 2, 0, 0},
                             {3, 2, 2, 0},
                             {3, 2, 1},
                             {3, 1},
                             {2}}),
          "full triangle of the golden tableau is off");
  require(tableau_from_pattern(p) == t, "triangle-to-tableau inverse is off");
  const GTPattern r = reduce_mod_top(p, 3, 4);
  require(rows_equal(r, Rows{{3}, {3, 2}, {3, 2, 2}, {3, 2, 1}, {3, 1}, {2}}),
          "reduced triangle of the golden tableau is off");
  return "28 + 12 entries matched";
}

std::string check_golden_split() {
  const std::vector<OneLineTableau> cols = parse_product("[1 2 3:1 3 5],[1 2 4:1 3 6],[1 2:2 4],[1 3:3 5],[1:4]");
  const DoubleTableau dt{cols};
  require(is_standard(dt), "golden product is not standard");
  const std::vector<std::vector<int>> images = {
      {1, 3, 5, 7}, {1, 3, 6, 8}, {2, 4, 7, 8}, {3, 5, 7, 9}, {4, 7, 8, 9}};
  for (std::size_t c = 0; c < cols.size(); ++c)
    require(xi(cols[c], 4, 6) == images[c], "column image is off");
  const SemistandardTableau rect = xi_image(dt, 4, 6);
  require(rect == SemistandardTableau{{{1, 1, 2, 3, 4}, {3, 3, 4, 5, 7}, {5, 6, 7, 7, 8}, {7, 8, 8, 9, 9}}, 10},
          "rectangle image is off");
  const GTPattern p = pattern_of_tableau(dt, 4, 6);
  require(rows_equal(p, Rows{{5},
                             {5, 3},
                             {5, 4, 1},
                             {5, 4, 2, 0},
                             {5, 4, 1, 0},
                             {5, 3, 0, 0},
                             {4, 2, 0},
                             {3, 0},
                             {2}}),
          "reduced pattern of the golden product is off");
  const auto [minus, plus] = split_glued(p);
  require(rows_equal(minus, Rows{{5, 4, 2, 0}, {5, 4, 1}, {5, 3}, {5}}), "row-side factor is off");
  require(rows_equal(sp_restrict(plus), Rows{{5, 4, 2}, {5, 4, 1}, {5, 3}, {4, 2}, {3}, {2}}),
          "half-triangle factor is off");
  require(glue(minus, plus) == p, "gluing does not invert the split");
  const auto [t_minus, t_plus] = split(dt, 4, 6);
  require(t_minus == SemistandardTableau{{{1, 1, 1, 1, 1}, {2, 2, 2, 3}, {3, 4}}, 4}, "row-index half is off");
  require(t_plus == SemistandardTableau{{{1, 1, 2, 3, 4}, {3, 3, 4, 5}, {5, 6}}, 6}, "column-index half is off");
  return "5 columns, 4 patterns, 2 halves matched";
}

int soundness_over(const Lattice& lat, const std::vector<OneLineTableau>& members, Guard& guard) {
  const WeightConfig cfg = WeightConfig::make(lat.rows(), lat.cols());
  int checked = 0;
  for (const auto& a : members)
    for (const auto& b : members) {
      const StandardCombination c = straighten({a, b}, lat, cfg, guard);
      const SparsePolynomial lhs = expand_product({a, b}, lat.rows(), lat.cols());
      SparsePolynomial rhs = poly_zero(lat.rows(), lat.cols());
      for (const auto& [coef, term] : c.terms)
        rhs = add(rhs, scalar_mul(coef, expand_product(term.columns, lat.rows(), lat.cols())));
      require(lhs == rhs, "expansion mismatch at " + format_product({a, b}));
      const DoubleTableau mj{{meet(lat, a, b), join(lat, a, b)}};
      Int found = 0;
      for (const auto& [coef, term] : c.terms)
        if (term == mj) found = coef;
      require(found == 1, "meet-join coefficient differs from 1 at " + format_product({a, b}));
      ++checked;
    }
  return checked;
}

std::string check_straightening_soundness() {
  Guard guard;
  const Lattice d23 = Lattice::D(2, 3);
  const int first = soundness_over(d23, enumerate_lattice(d23, guard), guard);
  const Lattice d33 = Lattice::D(3, 3);
  std::vector<OneLineTableau> short_members;
  for (const auto& t : enumerate_lattice(d33, guard))
    if (t.len() <= 2) short_members.push_back(t);
  const int second = soundness_over(d33, short_members, guard);
  std::ostringstream ss;
  ss << first << " + " << second << " products straightened";
  return ss.str();
}

std::string check_leading_terms(std::uint64_t) {
  Guard guard;
  int witnesses = 0;
  {
    const Lattice lat = Lattice::D(2, 3);
    const WeightConfig cfg = WeightConfig::make(2, 3);
    const auto members = enumerate_lattice(lat, guard);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (compare(members[i], members[j]) != Cmp::Incomparable) continue;
        leading_term(members[i], members[j], lat, cfg, guard);
        ++witnesses;
      }
  }
  {
    const NullconeContext ctx = NullconeContext::make(2, 2);
    const auto members = enumerate_lattice(ctx.lattice, guard);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (compare(members[i], members[j]) != Cmp::Incomparable) continue;
        n_leading_term(members[i], members[j], ctx, guard);
        ++witnesses;
      }
  }
  std::ostringstream ss;
  ss << witnesses << " incomparable pairs witnessed";
  return ss.str();
}

std::string check_dimension_counts(int max_size) {
  Guard guard;
  const int cap = std::min(3, max_size);
  int cases = 0;
  for (int k = 1; k <= cap; ++k)
    for (int n = 1; n <= cap; ++n) {
      const NullconeContext ctx = NullconeContext::make(k, n);
      for (int d = 0; d <= 4; ++d)
        for (const Shape& s : partitions(d)) {
          if (static_cast<int>(s.size()) > std::min(k, n)) continue;
          const Int want = dim_gl(s, k) * dim_sp(s, n);
          const Int got(static_cast<long>(enumerate_n_standard(s, ctx, guard).size()));
          std::ostringstream at;
          at << "k=" << k << " n=" << n << " d=" << d;
          require(got == want, "count differs from the dimension product at " + at.str());
          ++cases;
        }
    }
  std::ostringstream ss;
  ss << cases << " shape cases counted";
  return ss.str();
}

std::string check_independence(int max_size, std::uint64_t seed) {
  Guard guard;
  guard.limit = 100'000'000;
  std::ostringstream ss;
  bool first = true;
  for (int n = 1; n <= std::min(2, max_size); ++n) {
    const NullconeContext ctx = NullconeContext::make(2, n);
    const auto candidates = n_standard_up_to_degree(3, ctx, guard);
    const int expected = n == 1 ? 30 : 156;
    require(static_cast<int>(candidates.size()) == expected, "candidate count is off");
    const IndependenceReport rep =
        independence_check(candidates, ctx, static_cast<int>(candidates.size()) + 5, seed, guard);
    require(rep.full_rank, "evaluation matrix is rank-deficient");
    if (!first) ss << ", ";
    ss << "n=" << n << " rank " << rep.rank << "/" << rep.candidates;
    first = false;
  }
  return ss.str();
}

std::string check_cone_counts(int max_size) {
  Guard guard;
  int cases = 0;
  const int cap = std::min(3, max_size);
  for (int n = 1; n <= cap; ++n)
    for (int m = 1; m <= cap; ++m) {
      const Lattice lat = Lattice::D(n, m);
      const GTPoset poset = GTPoset::reduced(n, m);
      for (int d = 0; d <= 4; ++d)
        for (const Shape& s : partitions(d)) {
          if (static_cast<int>(s.size()) > std::min(n, m)) continue;
          const std::size_t tableaux = enumerate_standard(lat, s, guard).size();
          const std::size_t points = enumerate_cone_points(poset, s, guard).size();
          std::ostringstream at;
          at << "n=" << n << " m=" << m << " d=" << d;
          require(tableaux == points, "cone count differs from the tableau count at " + at.str());
          ++cases;
        }
    }
  const int ncap = std::min(2, max_size);
  for (int k = 1; k <= ncap; ++k)
    for (int n = 1; n <= ncap; ++n) {
      const NullconeContext ctx = NullconeContext::make(k, n);
      const GTPoset poset = GTPoset::nullcone(k, n);
      for (int d = 0; d <= 4; ++d)
        for (const Shape& s : partitions(d)) {
          if (static_cast<int>(s.size()) > std::min(k, n)) continue;
          const std::size_t tableaux = enumerate_n_standard(s, ctx, guard).size();
          const std::size_t points = enumerate_cone_points(poset, s, guard).size();
          std::ostringstream at;
          at << "k=" << k << " n=" << n << " d=" << d;
          require(tableaux == points, "cone count differs from the tableau count at " + at.str());
          ++cases;
        }
    }
  std::ostringstream ss;
  ss << cases << " top rows compared";
  return ss.str();
}

std::string check_column_rewriting() {
  Guard guard;
  const NullconeContext ctx = NullconeContext::make(2, 2);
  int rewritable = 0, admissible = 0;
  std::vector<std::vector<int>> sets;
  for (int p = 2; p <= 4; ++p) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
      if (static_cast<int>(cur.size()) == p) {
        sets.push_back(cur);
        return;
      }
      for (int v = next; v <= 4; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
  }
  for (const auto& j : sets) {
    if (column_admissible(j, 2)) {
      bool threw = false;
      try {
        omega_sum_for(j, ctx, guard);
      } catch (const DomainError&) {
        threw = true;
      }
      require(threw, "admissible column unexpectedly rewrote");
      ++admissible;
      continue;
    }
    const OmegaSum s = omega_sum_for(j, ctx, guard);
    require(!s.terms.empty() && s.terms.begin()->first == j && s.terms.begin()->second == 1,
            "rewriting does not lead with its column");
    // Re-expand the certificate and compare with the claimed combination.
    std::map<std::vector<int>, Rat> rebuilt;
    for (const auto& [c, key] : s.certificate) {
      const ExteriorElement w = wedge(omega(2), ext_basis(4, key));
      for (const auto& [term, coef] : w.terms) {
        const Rat delta = c * Rat(coef);
        auto [it, fresh] = rebuilt.emplace(term, delta);
        if (!fresh) {
          it->second += delta;
          if (it->second == 0) rebuilt.erase(it);
        }
      }
    }
    require(rebuilt == s.terms, "certificate does not re-expand to the combination");
    ++rewritable;
  }
  std::ostringstream ss;
  ss << rewritable << " rewritable + " << admissible << " admissible columns";
  return ss.str();
}

std::string check_lattice_law_and_degrees() {
  Guard guard;
  const Lattice lat = Lattice::L(3, 3);
  const auto members = enumerate_lattice(lat, guard);
  int law_pairs = 0;
  for (const auto& x : members)
    for (const auto& y : members) {
      const GTPattern sum =
          pattern_add(pattern_of_tableau(DoubleTableau{{x}}, 3, 3), pattern_of_tableau(DoubleTableau{{y}}, 3, 3));
      const OneLineTableau lo = meet(lat, x, y), hi = join(lat, x, y);
      const GTPattern bound =
          pattern_add(pattern_of_tableau(DoubleTableau{{lo}}, 3, 3), pattern_of_tableau(DoubleTableau{{hi}}, 3, 3));
      require(sum == bound, "lattice law fails at " + format_column(x) + ", " + format_column(y));
      ++law_pairs;
    }
  const Lattice d22 = Lattice::D(2, 2);
  const long expected[] = {1, 4, 10, 20, 35};
  for (int d = 0; d <= 4; ++d) {
    long standard = 0;
    for (const Shape& s : partitions(d)) standard += static_cast<long>(enumerate_standard(d22, s, guard).size());
    long brute = 0;
    for (int e1 = 0; e1 <= d; ++e1)
      for (int e2 = 0; e2 + e1 <= d; ++e2)
        for (int e3 = 0; e3 + e2 + e1 <= d; ++e3) ++brute;
    require(standard == expected[d], "standard count is off at degree " + std::to_string(d));
    require(standard == brute, "standard count misses the monomial dimension at degree " + std::to_string(d));
  }
  std::ostringstream ss;
  ss << law_pairs << " pairs, degrees 0..4 matched";
  return ss.str();
}

CheckResult run_one(const std::string& name, const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  try {
    r.detail = body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_all_checks(int max_size, std::uint64_t seed) {
  if (max_size < 1) throw ParamError("size cap must be positive");
  std::vector<CheckResult> out;
  out.push_back(run_one("golden-pattern-reduction", check_golden_reduction));
  out.push_back(run_one("golden-split-gluing", check_golden_split));
  out.push_back(run_one("straightening-soundness", check_straightening_soundness));
  out.push_back(run_one("leading-term-witness", [&] { return check_leading_terms(seed); }));
  out.push_back(run_one("dimension-counts", [&] { return check_dimension_counts(max_size); }));
  out.push_back(run_one("independence-rank", [&] { return check_independence(max_size, seed); }));
  out.push_back(run_one("cone-point-counts", [&] { return check_cone_counts(max_size); }));
  out.push_back(run_one("column-rewriting", check_column_rewriting));
  out.push_back(run_one("lattice-law-and-degrees", check_lattice_law_and_degrees));
  return out;
}

int render_checks(const std::vector<CheckResult>& results, std::string& out) {
  std::ostringstream ss;
  int failures = 0;
  for (const auto& r : results) {
    ss << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) ss << "  (" << r.detail << ")";
    ss << "\n";
    if (!r.pass) ++failures;
  }
  ss << results.size() << " checks, " << (static_cast<int>(results.size()) - failures) << " passed, " << failures
     << " failed\n";
  out = ss.str();
  return failures;
}

}  // namespace nullcone
