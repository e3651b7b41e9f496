#include "nullcone_ring.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>

namespace nullcone {

NullconeContext NullconeContext::make(int k, int n) { return make(k, n, Int(2 * (k + 2 * n) + 1)); }

NullconeContext NullconeContext::make(int k, int n, const Int& weight_base) {
  NullconeContext ctx;
  ctx.k = k;
  ctx.n = n;
  ctx.lattice = Lattice::DN(k, n);
  ctx.weight = WeightConfig::make(k, 2 * n, weight_base);
  return ctx;
}

SparsePolynomial basic_invariant(int i, int j, const NullconeContext& ctx) {
  if (i < 1 || j <= i || j > ctx.k) throw ParamError("basic invariant needs 1 <= i < j <= k");
  SparsePolynomial p = poly_zero(ctx.k, 2 * ctx.n);
  for (int u = 1; u <= ctx.n; ++u)
    p = add(p, minor_poly(OneLineTableau{{i, j}, {2 * u - 1, 2 * u}}, ctx.k, 2 * ctx.n));
  return p;
}

bool column_admissible(const std::vector<int>& j, int n) {
  if (static_cast<int>(j.size()) > n) return false;
  for (std::size_t d = 0; d < j.size(); ++d)
    if (j[d] < 2 * static_cast<int>(d) + 1) return false;
  return true;
}

// All q-subsets of {1..n} in ascending lexicographic order.
static void for_each_subset(int n, int q, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == q) {
      fn(cur);
      return;
    }
    const int room = q - static_cast<int>(cur.size());
    for (int v = next; v <= n - room + 1; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

OmegaSum omega_sum_for(const std::vector<int>& j, const NullconeContext& ctx, Guard& guard) {
  const int two_n = 2 * ctx.n;
  for (std::size_t d = 0; d < j.size(); ++d) {
    if (j[d] < 1 || j[d] > two_n) throw DomainError("column entry outside 1..2n");
    if (d > 0 && j[d] <= j[d - 1]) throw DomainError("column entries must strictly increase");
  }
  if (column_admissible(j, ctx.n)) throw DomainError("admissible column has no rewriting");
  const int p = static_cast<int>(j.size());
  if (p < 2) throw InternalError("inadmissible column of size below 2");
  const int q = p - 2;
  const ExteriorElement om = omega(ctx.n);

  OmegaSum out;
  out.p = p;

  // Fast path: a single generator omega ^ e_K already leads with j.
  std::optional<std::vector<int>> single;
  for_each_subset(two_n, q, [&](const std::vector<int>& k) {
    if (single) return;
    guard.charge();
    const ExteriorElement w = wedge(om, ext_basis(two_n, k));
    if (!w.is_zero() && w.terms.begin()->first == j) single = k;
  });
  if (single) {
    const ExteriorElement w = wedge(om, ext_basis(two_n, *single));
    const Int lead = w.terms.at(j);
    for (const auto& [key, c] : w.terms) {
      Rat ratio(c, lead);
      ratio.canonicalize();
      out.terms.emplace(key, ratio);
    }
    Rat scale(Int(1), lead);
    scale.canonicalize();
    out.certificate.push_back({scale, *single});
    return out;
  }

  // General combination: coefficient 1 at j, 0 at every lex-smaller p-set.
  std::vector<std::vector<int>> gens;
  std::vector<ExteriorElement> wedges;
  for_each_subset(two_n, q, [&](const std::vector<int>& k) {
    guard.charge();
    ExteriorElement w = wedge(om, ext_basis(two_n, k));
    if (w.is_zero()) return;
    gens.push_back(k);
    wedges.push_back(std::move(w));
  });
  std::vector<std::vector<int>> row_keys;
  for_each_subset(two_n, p, [&](const std::vector<int>& s) {
    if (s <= j) row_keys.push_back(s);
  });
  std::map<std::vector<int>, std::size_t> row_of;
  for (std::size_t r = 0; r < row_keys.size(); ++r) row_of.emplace(row_keys[r], r);
  RatMat a(row_keys.size(), RatVec(gens.size(), Rat(0)));
  RatVec b(row_keys.size(), Rat(0));
  b[row_of.at(j)] = 1;
  for (std::size_t c = 0; c < wedges.size(); ++c)
    for (const auto& [key, coef] : wedges[c].terms) {
      const auto it = row_of.find(key);
      if (it != row_of.end()) a[it->second][c] = Rat(coef);
    }
  guard.charge(row_keys.size() * gens.size());
  const SolveResult sol = solve_linear(std::move(a), std::move(b));
  if (sol.status == SolveResult::Status::Inconsistent)
    throw InternalError("no rewriting certificate for an inadmissible column");

  for (std::size_t c = 0; c < gens.size(); ++c) {
    if (sol.x[c] == 0) continue;
    out.certificate.push_back({sol.x[c], gens[c]});
    for (const auto& [key, coef] : wedges[c].terms) {
      const Rat delta = sol.x[c] * Rat(coef);
      auto [it, fresh] = out.terms.emplace(key, delta);
      if (!fresh) {
        it->second += delta;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  }
  if (out.terms.empty() || out.terms.begin()->first != j || out.terms.begin()->second != 1)
    throw InternalError("certificate does not lead with the requested column");
  return out;
}

SparsePolynomial theta_element(const std::vector<int>& i, const OmegaSum& s, const NullconeContext& ctx) {
  if (static_cast<int>(i.size()) != s.p) throw DomainError("row set size must match the column sets");
  for (std::size_t d = 0; d < i.size(); ++d) {
    if (i[d] < 1 || i[d] > ctx.k) throw DomainError("row entry outside 1..k");
    if (d > 0 && i[d] <= i[d - 1]) throw DomainError("row entries must strictly increase");
  }
  Int lcm = 1;
  for (const auto& [key, c] : s.terms) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  SparsePolynomial p = poly_zero(ctx.k, 2 * ctx.n);
  for (const auto& [key, c] : s.terms) {
    const Rat scaled = c * Rat(lcm);
    if (scaled.get_den() != 1) throw InternalError("scaling failed to clear a denominator");
    p = add(p, scalar_mul(Int(scaled.get_num()), minor_poly(OneLineTableau{i, key}, ctx.k, 2 * ctx.n)));
  }
  return p;
}

static void sort_combination(StandardCombination& c, const WeightConfig& cfg) {
  std::vector<std::pair<std::pair<Int, std::string>, std::size_t>> keys;
  keys.reserve(c.terms.size());
  for (std::size_t i = 0; i < c.terms.size(); ++i)
    keys.push_back({{weight(c.terms[i].second, cfg), format_product(c.terms[i].second)}, i});
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::vector<std::pair<Int, DoubleTableau>> sorted;
  sorted.reserve(c.terms.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(c.terms[i]));
  c.terms = std::move(sorted);
}

StandardCombination n_straighten(const std::vector<OneLineTableau>& product, const NullconeContext& ctx,
                                 Guard& guard, const NStraightenOptions& opt) {
  const Lattice full = Lattice::D(ctx.k, 2 * ctx.n);
  for (const auto& col : product) full.validate_member(col);

  std::map<DoubleTableau, Rat> acc;
  {
    const StandardCombination first = straighten(product, full, ctx.weight, guard);
    for (const auto& [c, t] : first.terms) acc.emplace(t, Rat(c));
  }

  std::uint64_t fuel = opt.fuel;
  for (;;) {
    auto bad = acc.end();
    std::size_t bad_col = 0;
    for (auto it = acc.begin(); it != acc.end() && bad == acc.end(); ++it)
      for (std::size_t ci = 0; ci < it->first.columns.size(); ++ci)
        if (!column_admissible(it->first.columns[ci].J, ctx.n)) {
          bad = it;
          bad_col = ci;
          break;
        }
    if (bad == acc.end()) break;
    if (fuel == 0) throw ResourceError("rewrite budget exhausted");
    --fuel;

    const DoubleTableau tab = bad->first;
    const Rat coef = bad->second;
    acc.erase(bad);
    if (coef == 0) continue;

    const OmegaSum s = omega_sum_for(tab.columns[bad_col].J, ctx, guard);
    for (const auto& [jprime, c] : s.terms) {
      if (jprime == tab.columns[bad_col].J) continue;
      std::vector<OneLineTableau> cols = tab.columns;
      cols[bad_col].J = jprime;
      const StandardCombination sc = straighten(cols, full, ctx.weight, guard);
      for (const auto& [ic, t2] : sc.terms) {
        const Rat delta = -(coef * c * Rat(ic));
        auto [it2, fresh] = acc.emplace(t2, delta);
        if (!fresh) {
          it2->second += delta;
          if (it2->second == 0) acc.erase(it2);
        }
      }
    }
  }

  StandardCombination out;
  for (const auto& [t, c] : acc) {
    if (c == 0) continue;
    if (c.get_den() != 1) throw InternalError("non-integral rewriting coefficient");
    out.terms.push_back({Int(c.get_num()), t});
  }
  sort_combination(out, ctx.weight);

  for (int sample = 0; sample < opt.verify_points; ++sample) {
    const RatMatrix point = sample_nullcone_point(ctx, opt.seed + static_cast<std::uint64_t>(sample));
    if (evaluate_product(product, point) != evaluate_combination(out, point))
      throw InternalError("rewriting changed the sampled values");
    guard.charge();
  }
  return out;
}

std::pair<DoubleTableau, Int> n_leading_term(const OneLineTableau& a, const OneLineTableau& b,
                                             const NullconeContext& ctx, Guard& guard) {
  ctx.lattice.validate_member(a);
  ctx.lattice.validate_member(b);
  if (compare(a, b) != Cmp::Incomparable) throw DomainError("leading term needs an incomparable pair");
  const StandardCombination c = n_straighten({a, b}, ctx, guard);
  if (c.terms.empty()) throw InternalError("empty rewriting of a minor product");
  if (c.terms.size() > 1 && weight(c.terms[0].second, ctx.weight) == weight(c.terms[1].second, ctx.weight))
    throw InternalError("weight-maximal term is not unique");
  const DoubleTableau expected{{meet(ctx.lattice, a, b), join(ctx.lattice, a, b)}};
  if (c.terms[0].second != expected || c.terms[0].first != 1)
    throw InternalError("leading term differs from the meet-join pair");
  return {c.terms[0].second, c.terms[0].first};
}

std::vector<DoubleTableau> enumerate_n_standard(const Shape& shape, const NullconeContext& ctx, Guard& guard) {
  return enumerate_standard(ctx.lattice, shape, guard);
}

Int dim_gl(const Shape& shape, int k) {
  validate_shape(shape);
  if (k < 1) throw ParamError("alphabet size must be positive");
  const Shape s = shape_trim(shape);
  if (static_cast<int>(s.size()) > k) return 0;
  Guard guard;
  const Int count(static_cast<long>(enumerate_ssyt(s, k, guard).size()));
  std::vector<long> lam(static_cast<std::size_t>(k), 0);
  for (std::size_t i = 0; i < s.size(); ++i) lam[i] = s[i];
  Rat dim = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      dim *= make_rat(lam[static_cast<std::size_t>(i - 1)] - lam[static_cast<std::size_t>(j - 1)] + j - i, j - i);
  if (dim.get_den() != 1 || Int(dim.get_num()) != count) throw InternalError("dimension oracles disagree");
  return count;
}

Int dim_sp(const Shape& shape, int n) {
  validate_shape(shape);
  if (n < 1) throw ParamError("rank must be positive");
  const Shape s = shape_trim(shape);
  if (static_cast<int>(s.size()) > n) return 0;
  Guard guard;
  const Int count(static_cast<long>(enumerate_ssyt(s, 2 * n, guard, tilde_column(n)).size()));
  std::vector<long> l(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const long lam = i <= static_cast<int>(s.size()) ? s[static_cast<std::size_t>(i - 1)] : 0;
    l[static_cast<std::size_t>(i - 1)] = lam + n - i + 1;
    m[static_cast<std::size_t>(i - 1)] = n - i + 1;
  }
  Rat dim = 1;
  for (int i = 0; i < n; ++i) dim *= make_rat(l[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      dim *= make_rat(l[static_cast<std::size_t>(i)] * l[static_cast<std::size_t>(i)] -
                          l[static_cast<std::size_t>(j)] * l[static_cast<std::size_t>(j)],
                      m[static_cast<std::size_t>(i)] * m[static_cast<std::size_t>(i)] -
                          m[static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(j)]);
  if (dim.get_den() != 1 || Int(dim.get_num()) != count) throw InternalError("dimension oracles disagree");
  return count;
}

RatMatrix sample_nullcone_point(const NullconeContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = ctx.n, k = ctx.k, two_n = 2 * ctx.n;
  // rng()%r keeps the draw sequence identical across platforms.
  auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };

  std::vector<std::vector<Int>> frame(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(two_n), 0));
  for (int r = 0; r < n; ++r) frame[static_cast<std::size_t>(r)][static_cast<std::size_t>(2 * r)] = 1;
  auto form = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
    Int v = 0;
    for (int u = 0; u < n; ++u)
      v += x[static_cast<std::size_t>(2 * u)] * y[static_cast<std::size_t>(2 * u + 1)] -
           x[static_cast<std::size_t>(2 * u + 1)] * y[static_cast<std::size_t>(2 * u)];
    return v;
  };
  for (int step = 0; step < 6; ++step) {
    std::vector<Int> v(static_cast<std::size_t>(two_n));
    for (auto& e : v) e = pick(-2, 2);
    const long c = pick(-2, 2);
    for (auto& row : frame) {
      const Int f = form(row, v) * c;
      for (int col = 0; col < two_n; ++col) row[static_cast<std::size_t>(col)] += f * v[static_cast<std::size_t>(col)];
    }
  }
  RatMatrix out(static_cast<std::size_t>(k), std::vector<Rat>(static_cast<std::size_t>(two_n), Rat(0)));
  for (int i = 0; i < k; ++i) {
    std::vector<Rat> mix(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) mix[static_cast<std::size_t>(r)] = make_rat(pick(-9, 9), pick(1, 3));
    for (int col = 0; col < two_n; ++col) {
      Rat total = 0;
      for (int r = 0; r < n; ++r)
        total += mix[static_cast<std::size_t>(r)] * Rat(frame[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
      out[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = total;
    }
  }
  return out;
}

Rat evaluate_product(const std::vector<OneLineTableau>& product, const RatMatrix& point) {
  Rat v = 1;
  for (const auto& col : product) v *= evaluate_minor(col, point);
  return v;
}

Rat evaluate_combination(const StandardCombination& c, const RatMatrix& point) {
  Rat total = 0;
  for (const auto& [coef, t] : c.terms) {
    Rat v(coef);
    for (const auto& col : t.columns) v *= evaluate_minor(col, point);
    total += v;
  }
  return total;
}

IndependenceReport independence_check(const std::vector<DoubleTableau>& candidates, const NullconeContext& ctx,
                                      int num_points, std::uint64_t seed, Guard& guard) {
  if (num_points < 1) throw ParamError("point count must be positive");
  IndependenceReport rep;
  rep.candidates = static_cast<int>(candidates.size());
  if (candidates.empty()) {
    rep.full_rank = true;
    return rep;
  }
  RatMat mat;
  std::uint64_t next_seed = seed;
  int goal = num_points;
  for (int round = 0; round < 4; ++round) {
    while (static_cast<int>(mat.size()) < goal) {
      const RatMatrix point = sample_nullcone_point(ctx, next_seed++);
      RatVec row(candidates.size());
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        Rat v = 1;
        for (const auto& col : candidates[c].columns) v *= evaluate_minor(col, point);
        row[c] = v;
        guard.charge();
      }
      mat.push_back(std::move(row));
    }
    rep.rank = rank_rational(mat);
    rep.points_used = static_cast<int>(mat.size());
    if (rep.rank == rep.candidates) break;
    goal *= 2;
  }
  rep.full_rank = rep.rank == rep.candidates;
  return rep;
}

std::vector<DoubleTableau> n_standard_up_to_degree(int max_degree, const NullconeContext& ctx, Guard& guard) {
  if (max_degree < 0) throw ParamError("degree must be non-negative");
  std::vector<DoubleTableau> out;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Shape> shapes;
    Shape cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
      if (remaining == 0) {
        shapes.push_back(cur);
        return;
      }
      for (int part = std::min(cap, remaining); part >= 1; --part) {
        cur.push_back(part);
        self(self, remaining - part, part);
        cur.pop_back();
      }
    };
    rec(rec, d, d);
    for (const Shape& s : shapes) {
      const auto batch = enumerate_standard(ctx.lattice, s, guard);
      out.insert(out.end(), batch.begin(), batch.end());
    }
  }
  return out;
}

}  // namespace nullcone
