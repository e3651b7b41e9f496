#include "patterns.hpp"

#include <algorithm>
#include <unordered_map>

namespace nullcone {

bool cell_leq(Cell x, Cell y) { return x.b >= y.b && x.a - x.b <= y.a - y.b; }

GTPoset GTPoset::triangle(int m) {
  if (m < 1) throw ParamError("triangle size must be positive");
  GTPoset p;
  p.kind_ = Kind::Triangle;
  p.m_ = m;
  p.build_cells();
  return p;
}

GTPoset GTPoset::reduced(int n, int m) {
  if (n < 1 || m < 1) throw ParamError("poset parameters must be positive");
  GTPoset p;
  p.kind_ = Kind::Reduced;
  p.n_ = n;
  p.m_ = m;
  p.build_cells();
  return p;
}

GTPoset GTPoset::nullcone(int k, int n) {
  if (k < 1 || n < 1) throw ParamError("poset parameters must be positive");
  GTPoset p;
  p.kind_ = Kind::Nullcone;
  p.k_ = k;
  p.n_ = n;
  p.build_cells();
  return p;
}

GTPoset GTPoset::sp_half(int n) {
  if (n < 1) throw ParamError("poset parameters must be positive");
  GTPoset p;
  p.kind_ = Kind::SpHalf;
  p.n_ = n;
  p.build_cells();
  return p;
}

int GTPoset::ambient() const {
  switch (kind_) {
    case Kind::Triangle: return m_;
    case Kind::Reduced: return m_ + n_;
    case Kind::Nullcone: return 2 * n_ + k_;
    case Kind::SpHalf: return 2 * n_;
  }
  throw InternalError("bad poset kind");
}

int GTPoset::top_data_row() const {
  switch (kind_) {
    case Kind::Triangle: return m_;
    case Kind::Reduced: return m_;
    case Kind::Nullcone:
    case Kind::SpHalf: return 2 * n_;
  }
  throw InternalError("bad poset kind");
}

bool GTPoset::contains(Cell c) const {
  if (c.b < 1 || c.a < c.b || c.a > ambient()) return false;
  switch (kind_) {
    case Kind::Triangle: return true;
    case Kind::Reduced: return c.b <= n_ && c.a - c.b < m_;
    case Kind::SpHalf: return 2 * c.b <= c.a + 1;
    case Kind::Nullcone: {
      const int two_n = 2 * n_;
      if (c.b > k_ || c.a - c.b >= two_n) return false;
      if (c.a <= two_n && 2 * c.b > c.a + 1) return false;
      const int cap = std::min(k_, n_);
      if (c.b >= cap + 1 && c.a - c.b <= two_n - cap - 1) return false;
      return true;
    }
  }
  return false;
}

void GTPoset::build_cells() {
  cells_.clear();
  for (int a = ambient(); a >= 1; --a)
    for (int b = 1; b <= a; ++b)
      if (contains({a, b})) cells_.push_back({a, b});
}

int GTPoset::index_of(Cell c) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] == c) return static_cast<int>(i);
  return -1;
}

bool GTPoset::leq(Cell x, Cell y) const {
  if (!contains(x) || !contains(y)) throw DomainError("cell outside the poset");
  return cell_leq(x, y);
}

std::vector<std::pair<int, int>> GTPoset::covering_pairs() const {
  std::vector<std::pair<int, int>> out;
  const int count = size();
  for (int u = 0; u < count; ++u) {
    for (int l = 0; l < count; ++l) {
      if (l == u || !cell_leq(cells_[static_cast<std::size_t>(l)], cells_[static_cast<std::size_t>(u)])) continue;
      bool cover = true;
      for (int z = 0; z < count && cover; ++z) {
        if (z == l || z == u) continue;
        if (cell_leq(cells_[static_cast<std::size_t>(l)], cells_[static_cast<std::size_t>(z)]) &&
            cell_leq(cells_[static_cast<std::size_t>(z)], cells_[static_cast<std::size_t>(u)]))
          cover = false;
      }
      if (cover) out.emplace_back(l, u);
    }
  }
  return out;
}

std::vector<int> GTPoset::minimal_cell_indices() const {
  std::vector<int> out;
  const int count = size();
  for (int i = 0; i < count; ++i) {
    bool minimal = true;
    for (int j = 0; j < count && minimal; ++j)
      if (j != i && cell_leq(cells_[static_cast<std::size_t>(j)], cells_[static_cast<std::size_t>(i)])) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, std::vector<Cell>>> GTPoset::rows() const {
  std::vector<std::pair<int, std::vector<Cell>>> out;
  for (const Cell& c : cells_) {
    if (out.empty() || out.back().first != c.a) out.push_back({c.a, {}});
    out.back().second.push_back(c);
  }
  return out;
}

std::int64_t GTPattern::at(Cell c) const {
  const int idx = poset.index_of(c);
  return idx < 0 ? 0 : values[static_cast<std::size_t>(idx)];
}

bool pattern_valid(const GTPattern& p) {
  if (p.values.size() != static_cast<std::size_t>(p.poset.size())) return false;
  for (const auto v : p.values)
    if (v < 0) return false;
  const auto& cells = p.poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (i != j && cell_leq(cells[i], cells[j]) && p.values[i] > p.values[j]) return false;
  return true;
}

void validate_pattern(const GTPattern& p) {
  if (!pattern_valid(p))
    throw DomainError("not a pattern: values must be non-negative and weakly increasing along the order");
}

GTPattern zero_pattern(const GTPoset& poset) {
  return GTPattern{poset, std::vector<std::int64_t>(static_cast<std::size_t>(poset.size()), 0)};
}

std::vector<std::int64_t> pattern_row(const GTPattern& p, int a) {
  std::vector<std::int64_t> out;
  const auto& cells = p.poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].a == a) out.push_back(p.values[i]);
  return out;
}

GTPattern pattern_from_tableau(const SemistandardTableau& t, int m) {
  validate_ssyt(t);
  for (const auto& row : t.rows)
    for (int v : row)
      if (v > m) throw DomainError("tableau entries exceed the triangle size");
  GTPattern p = zero_pattern(GTPoset::triangle(m));
  const auto& cells = p.poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [a, b] = cells[i];
    if (static_cast<std::size_t>(b) > t.rows.size()) continue;
    const auto& row = t.rows[static_cast<std::size_t>(b - 1)];
    p.values[i] = static_cast<std::int64_t>(std::count_if(row.begin(), row.end(), [&](int v) { return v <= a; }));
  }
  return p;
}

SemistandardTableau tableau_from_pattern(const GTPattern& p) {
  if (p.poset.kind() != GTPoset::Kind::Triangle) throw ParamError("tableau conversion needs a full triangle pattern");
  validate_pattern(p);
  const int m = p.poset.param_m();
  const auto top = pattern_row(p, m);
  std::size_t height = top.size();
  while (height > 0 && top[height - 1] == 0) --height;
  SemistandardTableau t;
  t.max_entry = m;
  t.rows.assign(height, {});
  std::vector<std::int64_t> prev(height, 0);
  for (int a = 1; a <= m; ++a) {
    for (std::size_t r = 0; r < height; ++r) {
      const std::int64_t cur = p.at({a, static_cast<int>(r) + 1});
      for (std::int64_t pos = prev[r]; pos < cur; ++pos) t.rows[r].push_back(a);
      prev[r] = cur;
    }
  }
  validate_ssyt(t);
  return t;
}

GTPattern pattern_add(const GTPattern& p, const GTPattern& q) {
  if (p.poset != q.poset) throw ParamError("pattern addition needs a common poset");
  GTPattern r = p;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += q.values[i];
  return r;
}

GTPattern reduce_mod_top(const GTPattern& p, int n, int m) {
  if (p.poset.kind() != GTPoset::Kind::Triangle || p.poset.param_m() != m + n)
    throw ParamError("reduction needs a pattern on the (m+n)-triangle");
  validate_pattern(p);
  const std::int64_t c = p.at({m + n, n});
  const auto& cells = p.poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [a, b] = cells[i];
    if (b > n && p.values[i] != 0)
      throw DomainError("reduction needs support in the first n columns");
    if (b <= n && a - b >= m && p.values[i] != c)
      throw DomainError("reduction needs a constant value above the top-column cell");
  }
  GTPattern out = zero_pattern(GTPoset::reduced(n, m));
  const auto& rcells = out.poset.cells();
  for (std::size_t i = 0; i < rcells.size(); ++i) out.values[i] = p.at(rcells[i]);
  return out;
}

GTPattern glue(const GTPattern& p_minus, const GTPattern& p_plus) {
  if (p_minus.poset.kind() != GTPoset::Kind::Triangle || p_plus.poset.kind() != GTPoset::Kind::Triangle)
    throw ParamError("gluing needs two full triangle patterns");
  validate_pattern(p_minus);
  validate_pattern(p_plus);
  const int n = p_minus.poset.param_m();
  const int m = p_plus.poset.param_m();
  auto trim = [](std::vector<std::int64_t> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  if (trim(pattern_row(p_minus, n)) != trim(pattern_row(p_plus, m)))
    throw DomainError("gluing needs equal top rows");
  GTPattern out = zero_pattern(GTPoset::reduced(n, m));
  const auto& cells = out.poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [a, b] = cells[i];
    out.values[i] = a <= m ? p_plus.at({a, b}) : p_minus.at({n - (a - m), b - (a - m)});
  }
  if (!pattern_valid(out)) throw InternalError("glued pattern not order-preserving");
  return out;
}

std::pair<GTPattern, GTPattern> split_glued(const GTPattern& p) {
  if (p.poset.kind() != GTPoset::Kind::Reduced) throw ParamError("splitting needs a reduced pattern");
  validate_pattern(p);
  const int n = p.poset.param_n();
  const int m = p.poset.param_m();
  GTPattern minus = zero_pattern(GTPoset::triangle(n));
  const auto& mcells = minus.poset.cells();
  for (std::size_t i = 0; i < mcells.size(); ++i) {
    const auto [j, c] = mcells[i];
    minus.values[i] = j == n ? p.at({m, c}) : p.at({m + n - j, c + n - j});
  }
  GTPattern plus = zero_pattern(GTPoset::triangle(m));
  const auto& pcells = plus.poset.cells();
  for (std::size_t i = 0; i < pcells.size(); ++i) plus.values[i] = p.at(pcells[i]);
  if (!pattern_valid(minus) || !pattern_valid(plus)) throw InternalError("split factors not order-preserving");
  return {std::move(minus), std::move(plus)};
}

GTPattern sp_restrict(const GTPattern& p) {
  if (p.poset.kind() != GTPoset::Kind::Triangle || p.poset.param_m() % 2 != 0)
    throw ParamError("half restriction needs a full triangle pattern of even size");
  validate_pattern(p);
  const int n = p.poset.param_m() / 2;
  const auto& cells = p.poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (2 * cells[i].b > cells[i].a + 1 && p.values[i] != 0)
      throw DomainError("half restriction needs a vanishing right half");
  GTPattern out = zero_pattern(GTPoset::sp_half(n));
  const auto& hcells = out.poset.cells();
  for (std::size_t i = 0; i < hcells.size(); ++i) out.values[i] = p.at(hcells[i]);
  return out;
}

GTPattern sp_embed(const GTPattern& p) {
  if (p.poset.kind() != GTPoset::Kind::SpHalf) throw ParamError("embedding needs a half-triangle pattern");
  validate_pattern(p);
  GTPattern out = zero_pattern(GTPoset::triangle(2 * p.poset.param_n()));
  const auto& cells = out.poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) out.values[i] = p.at(cells[i]);
  if (!pattern_valid(out)) throw InternalError("zero extension not order-preserving");
  return out;
}

GTPattern nullcone_restrict(const GTPattern& p, int k, int n) {
  if (p.poset.kind() != GTPoset::Kind::Reduced || p.poset.param_n() != k || p.poset.param_m() != 2 * n)
    throw ParamError("nullcone restriction needs a reduced (k, 2n) pattern");
  validate_pattern(p);
  const GTPoset target = GTPoset::nullcone(k, n);
  const auto& cells = p.poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!target.contains(cells[i]) && p.values[i] != 0)
      throw DomainError("support meets the excised cells");
  GTPattern out = zero_pattern(target);
  const auto& tcells = target.cells();
  for (std::size_t i = 0; i < tcells.size(); ++i) out.values[i] = p.at(tcells[i]);
  return out;
}

bool in_nullcone_poset(Cell z, int k, int n) {
  if (!GTPoset::reduced(k, 2 * n).contains(z)) throw DomainError("cell outside the reduced (k, 2n) poset");
  return GTPoset::nullcone(k, n).contains(z);
}

GTPattern pattern_of_tableau(const DoubleTableau& t, int n, int m) {
  const SemistandardTableau image = xi_image(t, n, m);
  return reduce_mod_top(pattern_from_tableau(image, m + n), n, m);
}

Shape pattern_top_shape(const GTPattern& p) {
  const auto row = pattern_row(p, p.poset.top_data_row());
  Shape s;
  for (const auto v : row) s.push_back(static_cast<int>(v));
  return shape_trim(s);
}

std::vector<GTPattern> enumerate_cone_points(const GTPoset& poset, const Shape& top, Guard& guard) {
  validate_shape(top);
  const int row = poset.top_data_row();
  std::vector<int> top_cells;  // canonical indices of the prescribed row
  const auto& cells = poset.cells();
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].a == row) top_cells.push_back(static_cast<int>(i));
  if (top.size() > top_cells.size()) throw DomainError("top row longer than the poset's row capacity");

  // Process in a descending linear extension: larger cells first.
  std::vector<int> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    const Cell cx = cells[static_cast<std::size_t>(x)], cy = cells[static_cast<std::size_t>(y)];
    if (cx.b != cy.b) return cx.b < cy.b;
    if (cx.a - cx.b != cy.a - cy.b) return cx.a - cx.b > cy.a - cy.b;
    return false;
  });
  // above[i]: canonical indices of cells strictly greater than cell i.
  std::vector<std::vector<int>> above(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells.size(); ++j)
      if (i != j && cell_leq(cells[i], cells[j])) above[i].push_back(static_cast<int>(j));
  std::vector<std::int64_t> prescribed(cells.size(), -1);
  for (std::size_t b = 0; b < top_cells.size(); ++b)
    prescribed[static_cast<std::size_t>(top_cells[b])] = b < top.size() ? top[b] : 0;

  std::vector<GTPattern> out;
  std::vector<std::int64_t> vals(cells.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      guard.charge();
      out.push_back(GTPattern{poset, vals});
      return;
    }
    const auto i = static_cast<std::size_t>(order[pos]);
    bool bounded = false;
    std::int64_t ub = 0;
    for (int j : above[i]) {
      const std::int64_t v = vals[static_cast<std::size_t>(j)];
      ub = bounded ? std::min(ub, v) : v;
      bounded = true;
    }
    if (prescribed[i] >= 0) {
      const std::int64_t v = prescribed[i];
      if (v <= ub || !bounded) {
        vals[i] = v;
        guard.charge();
        self(self, pos + 1);
      }
      return;
    }
    if (!bounded) throw InternalError("free cell with no upper bound");
    for (std::int64_t v = 0; v <= ub; ++v) {
      vals[i] = v;
      guard.charge();
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return out;
}

HRep cone_inequalities(const GTPoset& poset) {
  HRep h;
  h.dim = poset.size();
  for (const auto& [lower, upper] : poset.covering_pairs()) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(h.dim) + 1, 0);
    row[static_cast<std::size_t>(upper)] = 1;
    row[static_cast<std::size_t>(lower)] = -1;
    h.inequalities.push_back(std::move(row));
  }
  for (int w : poset.minimal_cell_indices()) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(h.dim) + 1, 0);
    row[static_cast<std::size_t>(w)] = 1;
    h.inequalities.push_back(std::move(row));
  }
  return h;
}

Int count_linear_extensions(const GTPoset& poset, Guard& guard) {
  const int count = poset.size();
  if (count > 64) throw ResourceError("linear extension counting capped at 64 cells");
  const auto& cells = poset.cells();
  // strictly-below masks: below[i] has bit j iff cell j < cell i
  std::vector<std::uint64_t> below(static_cast<std::size_t>(count), 0);
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && cell_leq(cells[static_cast<std::size_t>(j)], cells[static_cast<std::size_t>(i)]))
        below[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  std::unordered_map<std::uint64_t, Int> memo;
  auto rec = [&](auto&& self, std::uint64_t s) -> Int {
    if (s == 0) return 1;
    auto it = memo.find(s);
    if (it != memo.end()) return it->second;
    guard.charge();
    Int total = 0;
    for (int i = 0; i < count; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(s & bit)) continue;
      // i is maximal in s when nothing above it remains in s
      bool maximal = true;
      for (int j = 0; j < count && maximal; ++j)
        if (j != i && (s & (std::uint64_t{1} << j)) && (below[static_cast<std::size_t>(j)] & bit)) maximal = false;
      if (maximal) total += self(self, s & ~bit);
    }
    memo.emplace(s, total);
    return total;
  };
  const std::uint64_t full = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  return rec(rec, full);
}

}  // namespace nullcone
