#include "polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace nullcone {

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
  long da = 0, db = 0;
  for (const auto& t : a) da += t[2];
  for (const auto& t : b) db += t[2];
  if (da != db) return da < db;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const auto ka = std::pair(a[i][0], a[i][1]);
    const auto kb = std::pair(b[j][0], b[j][1]);
    if (ka < kb) return false;  // a holds the earlier variable, so a is larger
    if (kb < ka) return true;
    if (a[i][2] != b[j][2]) return a[i][2] < b[j][2];
    ++i;
    ++j;
  }
  if (i < a.size()) return false;
  return j < b.size();
}

static void check_ambient(int rows, int cols) {
  if (rows < 0 || cols < 0) throw ParamError("negative variable ambient");
}

SparsePolynomial poly_zero(int rows, int cols) {
  check_ambient(rows, cols);
  return SparsePolynomial{rows, cols, {}};
}

SparsePolynomial poly_const(int rows, int cols, const Int& c) {
  SparsePolynomial p = poly_zero(rows, cols);
  if (c != 0) p.terms.emplace(Monomial{}, c);
  return p;
}

SparsePolynomial poly_variable(int rows, int cols, int i, int j) {
  check_ambient(rows, cols);
  if (i < 1 || i > rows || j < 1 || j > cols) throw ParamError("variable index outside the matrix");
  SparsePolynomial p = poly_zero(rows, cols);
  p.terms.emplace(Monomial{{i, j, 1}}, 1);
  return p;
}

SparsePolynomial add(const SparsePolynomial& p, const SparsePolynomial& q) {
  SparsePolynomial r = poly_zero(std::max(p.rows, q.rows), std::max(p.cols, q.cols));
  r.terms = p.terms;
  for (const auto& [mono, c] : q.terms) {
    auto [it, fresh] = r.terms.emplace(mono, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

SparsePolynomial negate(const SparsePolynomial& p) {
  SparsePolynomial r = p;
  for (auto& [mono, c] : r.terms) c = -c;
  return r;
}

SparsePolynomial sub(const SparsePolynomial& p, const SparsePolynomial& q) { return add(p, negate(q)); }

static Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && std::pair(a[i][0], a[i][1]) < std::pair(b[j][0], b[j][1]))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || std::pair(b[j][0], b[j][1]) < std::pair(a[i][0], a[i][1])) {
      r.push_back(b[j++]);
    } else {
      r.push_back({a[i][0], a[i][1], a[i][2] + b[j][2]});
      ++i;
      ++j;
    }
  }
  return r;
}

SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q) {
  SparsePolynomial r = poly_zero(std::max(p.rows, q.rows), std::max(p.cols, q.cols));
  for (const auto& [ma, ca] : p.terms)
    for (const auto& [mb, cb] : q.terms) {
      Monomial m = mono_mul(ma, mb);
      const Int c = ca * cb;
      auto [it, fresh] = r.terms.emplace(std::move(m), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

SparsePolynomial scalar_mul(const Int& c, const SparsePolynomial& p) {
  if (c == 0) return poly_zero(p.rows, p.cols);
  SparsePolynomial r = p;
  for (auto& [mono, coef] : r.terms) coef *= c;
  return r;
}

static void validate_minor_sets(const OneLineTableau& t, int rows, int cols) {
  if (t.len() < 1) throw DomainError("minor needs a non-empty index pair");
  if (t.I.size() != t.J.size()) throw DomainError("minor needs equal-size index sets");
  for (std::size_t r = 0; r < t.I.size(); ++r) {
    if (t.I[r] < 1 || t.I[r] > rows || t.J[r] < 1 || t.J[r] > cols) throw DomainError("minor index outside the matrix");
    if (r > 0 && (t.I[r] <= t.I[r - 1] || t.J[r] <= t.J[r - 1]))
      throw DomainError("minor index sets must strictly increase");
  }
}

SparsePolynomial minor_poly(const OneLineTableau& t, int rows, int cols) {
  check_ambient(rows, cols);
  validate_minor_sets(t, rows, cols);
  const int l = t.len();
  if (l > 10) throw ResourceError("minor expansion capped at order 10");
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  SparsePolynomial p = poly_zero(rows, cols);
  do {
    int inversions = 0;
    for (int x = 0; x < l; ++x)
      for (int y = x + 1; y < l; ++y)
        if (perm[static_cast<std::size_t>(x)] > perm[static_cast<std::size_t>(y)]) ++inversions;
    Monomial mono;
    for (int r = 0; r < l; ++r)
      mono.push_back({t.I[static_cast<std::size_t>(r)], t.J[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])], 1});
    std::sort(mono.begin(), mono.end(),
              [](const auto& x, const auto& y) { return std::pair(x[0], x[1]) < std::pair(y[0], y[1]); });
    p.terms.emplace(std::move(mono), inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

Rat evaluate(const SparsePolynomial& p, const RatMatrix& point) {
  Rat total = 0;
  for (const auto& [mono, c] : p.terms) {
    Rat value(c);
    for (const auto& [i, j, e] : mono) {
      if (i < 1 || static_cast<std::size_t>(i) > point.size() || j < 1 ||
          static_cast<std::size_t>(j) > point[static_cast<std::size_t>(i - 1)].size())
        throw ParamError("point matrix smaller than the variable ambient");
      for (int rep = 0; rep < e; ++rep) value *= point[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
    total += value;
  }
  return total;
}

Rat evaluate_minor(const OneLineTableau& t, const RatMatrix& point) {
  const int l = t.len();
  if (l < 1) throw DomainError("minor needs a non-empty index pair");
  RatMatrix sub(static_cast<std::size_t>(l), std::vector<Rat>(static_cast<std::size_t>(l)));
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) {
      const int i = t.I[static_cast<std::size_t>(r)], j = t.J[static_cast<std::size_t>(c)];
      if (i < 1 || static_cast<std::size_t>(i) > point.size() || j < 1 ||
          static_cast<std::size_t>(j) > point[static_cast<std::size_t>(i - 1)].size())
        throw ParamError("point matrix smaller than the minor indices");
      sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          point[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
  // Gaussian elimination, tracking the product of pivots and the swap sign.
  Rat det = 1;
  for (int col = 0; col < l; ++col) {
    int sel = -1;
    for (int r = col; r < l; ++r)
      if (sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return 0;
    if (sel != col) {
      std::swap(sub[static_cast<std::size_t>(sel)], sub[static_cast<std::size_t>(col)]);
      det = -det;
    }
    const Rat pivot = sub[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det *= pivot;
    for (int r = col + 1; r < l; ++r) {
      const Rat f = sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / pivot;
      if (f == 0) continue;
      for (int c = col; c < l; ++c)
        sub[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            f * sub[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
    }
  }
  return det;
}

ExteriorElement ext_zero(int two_n, int degree) {
  if (two_n < 0 || degree < 0) throw ParamError("negative exterior parameters");
  return ExteriorElement{two_n, degree, {}};
}

static void validate_indices(int two_n, const std::vector<int>& indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || indices[i] > two_n) throw DomainError("exterior index outside 1..2n");
    if (i > 0 && indices[i] <= indices[i - 1]) throw DomainError("exterior indices must strictly increase");
  }
}

ExteriorElement ext_basis(int two_n, const std::vector<int>& indices) {
  ExteriorElement e = ext_zero(two_n, static_cast<int>(indices.size()));
  validate_indices(two_n, indices);
  e.terms.emplace(indices, 1);
  return e;
}

ExteriorElement ext_add(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.two_n != b.two_n || a.degree != b.degree) throw ParamError("exterior sum needs matching space and degree");
  ExteriorElement r = a;
  for (const auto& [key, c] : b.terms) {
    auto [it, fresh] = r.terms.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

ExteriorElement ext_scalar_mul(const Int& c, const ExteriorElement& a) {
  if (c == 0) return ext_zero(a.two_n, a.degree);
  ExteriorElement r = a;
  for (auto& [key, coef] : r.terms) coef *= c;
  return r;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  if (a.two_n != b.two_n) throw ParamError("wedge needs a common ambient space");
  ExteriorElement r = ext_zero(a.two_n, a.degree + b.degree);
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      int inversions = 0;
      bool shared = false;
      for (int x : ka)
        for (int y : kb) {
          if (x == y) shared = true;
          if (x > y) ++inversions;
        }
      if (shared) continue;
      std::vector<int> merged;
      merged.reserve(ka.size() + kb.size());
      std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(merged));
      Int c = ca * cb;
      if (inversions % 2 != 0) c = -c;
      auto [it, fresh] = r.terms.emplace(std::move(merged), c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

ExteriorElement omega(int n) {
  if (n < 1) throw ParamError("the form element needs n >= 1");
  ExteriorElement e = ext_zero(2 * n, 2);
  for (int u = 1; u <= n; ++u) e.terms.emplace(std::vector<int>{2 * u - 1, 2 * u}, 1);
  return e;
}

}  // namespace nullcone
