#include "straighten.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <map>

namespace nullcone {

WeightConfig WeightConfig::make(int n, int m) { return make(n, m, Int(2 * (n + m) + 1)); }

WeightConfig WeightConfig::make(int n, int m, const Int& base) {
  if (n < 1 || m < 1) throw ParamError("weight parameters must be positive");
  if (base <= 2 * (n + m)) throw ParamError("weight base must exceed 2(n+m)");
  return WeightConfig{n, m, base};
}

Int weight(const OneLineTableau& t, const WeightConfig& cfg) {
  const std::vector<int> q = xi(t, cfg.n, cfg.m);
  Int total = 0;
  for (int r = 1; r <= cfg.n; ++r) total = total * cfg.base + (cfg.m + r - q[static_cast<std::size_t>(r - 1)]);
  return total;
}

Int weight(const DoubleTableau& t, const WeightConfig& cfg) {
  Int total = 0;
  for (const auto& col : t.columns) total += weight(col, cfg);
  return total;
}

static void sort_terms(std::vector<std::pair<Int, DoubleTableau>>& terms, const WeightConfig& cfg) {
  std::vector<std::pair<std::pair<Int, std::string>, std::size_t>> keys;
  keys.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    keys.push_back({{weight(terms[i].second, cfg), format_product(terms[i].second)}, i});
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::vector<std::pair<Int, DoubleTableau>> sorted;
  sorted.reserve(terms.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(terms[i]));
  terms = std::move(sorted);
}

StandardCombination straighten(const std::vector<OneLineTableau>& product, const Lattice& lat,
                               const WeightConfig& cfg, Guard& guard) {
  if (cfg.n != lat.rows() || cfg.m != lat.cols()) throw ParamError("weight ambient must match the lattice");
  for (const auto& col : product) lat.validate_member(col);
  if (product.empty()) return StandardCombination{{{Int(1), DoubleTableau{}}}};

  SparsePolynomial target = poly_const(lat.rows(), lat.cols(), 1);
  ContentFilter filter;
  for (const auto& col : product) {
    target = multiply(target, minor_poly(col, lat.rows(), lat.cols()));
    guard.charge(target.terms.size());
    filter.row_content.insert(filter.row_content.end(), col.I.begin(), col.I.end());
    filter.col_content.insert(filter.col_content.end(), col.J.begin(), col.J.end());
  }
  std::sort(filter.row_content.begin(), filter.row_content.end());
  std::sort(filter.col_content.begin(), filter.col_content.end());

  const std::vector<DoubleTableau> candidates = enumerate_standard_by_content(lat, filter, guard);
  if (candidates.empty()) throw InternalError("no standard tableau matches the product content");

  std::map<Monomial, std::size_t, MonomialLess> row_of;
  for (const auto& [mono, c] : target.terms) row_of.emplace(mono, row_of.size());
  std::vector<SparsePolynomial> expansions;
  expansions.reserve(candidates.size());
  for (const auto& cand : candidates) {
    SparsePolynomial p = poly_const(lat.rows(), lat.cols(), 1);
    for (const auto& col : cand.columns) p = multiply(p, minor_poly(col, lat.rows(), lat.cols()));
    guard.charge(p.terms.size());
    for (const auto& [mono, c] : p.terms) row_of.emplace(mono, row_of.size());
    expansions.push_back(std::move(p));
  }

  RatMat a(row_of.size(), RatVec(candidates.size(), Rat(0)));
  RatVec b(row_of.size(), Rat(0));
  for (const auto& [mono, c] : target.terms) b[row_of.at(mono)] = Rat(c);
  for (std::size_t j = 0; j < expansions.size(); ++j)
    for (const auto& [mono, c] : expansions[j].terms) a[row_of.at(mono)][j] = Rat(c);
  guard.charge(row_of.size() * candidates.size());

  const SolveResult sol = solve_linear(std::move(a), std::move(b));
  if (sol.status == SolveResult::Status::Inconsistent) throw InternalError("product lies outside the standard span");
  if (sol.status == SolveResult::Status::Underdetermined)
    throw InternalError("standard expansions came out linearly dependent");

  StandardCombination out;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    const Rat& c = sol.x[j];
    if (c == 0) continue;
    if (c.get_den() != 1) throw InternalError("non-integral straightening coefficient");
    out.terms.push_back({Int(c.get_num()), candidates[j]});
  }
  sort_terms(out.terms, cfg);
  return out;
}

std::pair<DoubleTableau, Int> leading_term(const OneLineTableau& a, const OneLineTableau& b, const Lattice& lat,
                                           const WeightConfig& cfg, Guard& guard) {
  lat.validate_member(a);
  lat.validate_member(b);
  if (compare(a, b) != Cmp::Incomparable) throw DomainError("leading term needs an incomparable pair");
  const StandardCombination c = straighten({a, b}, lat, cfg, guard);
  if (c.terms.empty()) throw InternalError("empty straightening of a minor product");
  if (c.terms.size() > 1 && weight(c.terms[0].second, cfg) == weight(c.terms[1].second, cfg))
    throw InternalError("weight-maximal term is not unique");
  const DoubleTableau expected{{meet(lat, a, b), join(lat, a, b)}};
  if (c.terms[0].second != expected || c.terms[0].first != 1)
    throw InternalError("leading term differs from the meet-join pair");
  return {c.terms[0].second, c.terms[0].first};
}

bool column_dominates(const Shape& a, const Shape& b) {
  const Shape ca = shape_conjugate(a), cb = shape_conjugate(b);
  long suma = 0, sumb = 0;
  const std::size_t len = std::max(ca.size(), cb.size());
  for (std::size_t t = 0; t < len; ++t) {
    suma += t < ca.size() ? ca[t] : 0;
    sumb += t < cb.size() ? cb[t] : 0;
    if (suma < sumb) return false;
  }
  return true;
}

Shape shape_leading(const StandardCombination& c) {
  if (c.terms.empty()) throw DomainError("empty combination has no leading shape");
  std::vector<Shape> shapes;
  shapes.reserve(c.terms.size());
  for (const auto& [coef, t] : c.terms) shapes.push_back(shape_of(t));
  for (const Shape& s : shapes) {
    bool top = true;
    for (const Shape& t : shapes)
      if (!column_dominates(s, t)) {
        top = false;
        break;
      }
    if (top) return s;
  }
  throw DomainError("no dominance-maximal shape among the terms");
}

}  // namespace nullcone
