#include "tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace nullcone {

bool shape_valid(const Shape& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0) return false;
    if (i > 0 && s[i] > s[i - 1]) return false;
  }
  return true;
}

void validate_shape(const Shape& s) {
  if (!shape_valid(s)) throw DomainError("shape rows must be weakly decreasing and non-negative");
}

Shape shape_trim(Shape s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
  return s;
}

Shape shape_conjugate(const Shape& s) {
  Shape t = shape_trim(s);
  if (t.empty()) return {};
  Shape c(static_cast<std::size_t>(t[0]), 0);
  for (int r : t)
    for (int j = 0; j < r; ++j) ++c[static_cast<std::size_t>(j)];
  return c;
}

int shape_size(const Shape& s) {
  int total = 0;
  for (int r : s) total += r;
  return total;
}

Shape shape_of(const DoubleTableau& t) {
  Shape lens;
  lens.reserve(t.columns.size());
  for (const auto& c : t.columns) lens.push_back(c.len());
  return shape_conjugate(lens);
}

std::string format_column(const OneLineTableau& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.I.size(); ++i) os << (i ? " " : "") << t.I[i];
  os << ':';
  for (std::size_t j = 0; j < t.J.size(); ++j) os << (j ? " " : "") << t.J[j];
  os << ']';
  return os.str();
}

std::string format_product(const std::vector<OneLineTableau>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += format_column(columns[i]);
  }
  return out;
}

std::string format_product(const DoubleTableau& t) { return format_product(t.columns); }

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream is(text);
  int v = 0;
  while (is >> v) out.push_back(v);
  if (!is.eof()) throw ParamError("expected space-separated integers, got '" + text + "'");
  return out;
}

}  // namespace

std::vector<OneLineTableau> parse_product(const std::string& text) {
  std::vector<OneLineTableau> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParamError("empty product");
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') throw ParamError("expected '[' in product at offset " + std::to_string(pos));
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos) throw ParamError("unterminated '[' in product");
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::size_t colon = body.find(':');
    if (colon == std::string::npos) throw ParamError("expected ':' inside '" + body + "'");
    OneLineTableau t{parse_int_list(body.substr(0, colon)), parse_int_list(body.substr(colon + 1))};
    if (t.I.size() != t.J.size()) throw ParamError("row and column index sets differ in size in '" + body + "'");
    if (t.I.empty()) throw ParamError("empty index sets in '" + body + "'");
    out.push_back(std::move(t));
    pos = close + 1;
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParamError("expected ',' between columns at offset " + std::to_string(pos));
    ++pos;
  }
  return out;
}

bool leq(const OneLineTableau& x, const OneLineTableau& y) {
  if (x.len() < y.len()) return false;
  for (int i = 0; i < y.len(); ++i)
    if (x.I[static_cast<std::size_t>(i)] > y.I[static_cast<std::size_t>(i)] ||
        x.J[static_cast<std::size_t>(i)] > y.J[static_cast<std::size_t>(i)])
      return false;
  return true;
}

Cmp compare(const OneLineTableau& x, const OneLineTableau& y) {
  const bool le = leq(x, y), ge = leq(y, x);
  if (le && ge) return Cmp::Equal;
  if (le) return Cmp::Less;
  if (ge) return Cmp::Greater;
  return Cmp::Incomparable;
}

bool is_standard(const DoubleTableau& t) {
  for (std::size_t i = 0; i + 1 < t.columns.size(); ++i)
    if (!leq(t.columns[i], t.columns[i + 1])) return false;
  return true;
}

Shape SemistandardTableau::shape() const {
  Shape s;
  s.reserve(rows.size());
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

std::vector<int> SemistandardTableau::column(int c) const {
  std::vector<int> out;
  for (const auto& r : rows) {
    if (static_cast<std::size_t>(c) >= r.size()) break;
    out.push_back(r[static_cast<std::size_t>(c)]);
  }
  return out;
}

bool ssyt_valid(const SemistandardTableau& t) {
  if (!shape_valid(t.shape())) return false;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.rows[r].empty()) return false;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      const int v = t.rows[r][c];
      if (v < 1 || v > t.max_entry) return false;
      if (c > 0 && t.rows[r][c - 1] > v) return false;
      if (r > 0 && t.rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

void validate_ssyt(const SemistandardTableau& t) {
  if (!ssyt_valid(t))
    throw DomainError("not a semistandard tableau (rows weakly increasing, columns strictly increasing, entries in 1..max_entry)");
}

std::pair<SemistandardTableau, SemistandardTableau> split(const DoubleTableau& t, int rows, int cols) {
  if (t.columns.empty()) throw DomainError("cannot split an empty tableau");
  if (!is_standard(t)) throw DomainError("split requires a standard tableau");
  for (const auto& c : t.columns) {
    if (c.I.front() < 1 || c.I.back() > rows) throw DomainError("row index out of range in " + format_column(c));
    if (c.J.front() < 1 || c.J.back() > cols) throw DomainError("column index out of range in " + format_column(c));
  }
  SemistandardTableau minus, plus;
  minus.max_entry = rows;
  plus.max_entry = cols;
  const int height = t.columns.front().len();
  for (int r = 0; r < height; ++r) {
    std::vector<int> mi, pl;
    for (const auto& c : t.columns) {
      if (c.len() <= r) break;
      mi.push_back(c.I[static_cast<std::size_t>(r)]);
      pl.push_back(c.J[static_cast<std::size_t>(r)]);
    }
    minus.rows.push_back(std::move(mi));
    plus.rows.push_back(std::move(pl));
  }
  validate_ssyt(minus);
  validate_ssyt(plus);
  return {std::move(minus), std::move(plus)};
}

namespace {

void validate_index_set(const std::vector<int>& v, int bound, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > bound)
      throw DomainError(std::string(what) + " index out of range 1.." + std::to_string(bound));
    if (i > 0 && v[i] <= v[i - 1]) throw DomainError(std::string(what) + " indices must strictly increase");
  }
}

}  // namespace

std::vector<int> xi(const OneLineTableau& t, int n, int m) {
  if (t.I.size() != t.J.size() || t.I.empty()) throw DomainError("xi needs equal non-empty index sets");
  validate_index_set(t.I, n, "row");
  validate_index_set(t.J, m, "column");
  std::vector<bool> in_I(static_cast<std::size_t>(n) + 1, false);
  for (int i : t.I) in_I[static_cast<std::size_t>(i)] = true;
  std::vector<int> us;
  for (int c = 1; c <= n; ++c)
    if (!in_I[static_cast<std::size_t>(c)]) us.push_back(n + 1 - c);
  std::sort(us.begin(), us.end());
  std::vector<int> out = t.J;
  for (int u : us) out.push_back(m + u);
  return out;
}

OneLineTableau xi_inverse(const std::vector<int>& plucker, int n, int m) {
  if (static_cast<int>(plucker.size()) != n) throw DomainError("xi_inverse needs exactly n indices");
  validate_index_set(plucker, m + n, "plucker");
  OneLineTableau t;
  std::vector<bool> drop(static_cast<std::size_t>(n) + 1, false);
  for (int q : plucker) {
    if (q <= m)
      t.J.push_back(q);
    else
      drop[static_cast<std::size_t>(n + 1 - (q - m))] = true;
  }
  if (t.J.empty()) throw DomainError("the top index set [m+1..m+n] has no preimage");
  for (int i = 1; i <= n; ++i)
    if (!drop[static_cast<std::size_t>(i)]) t.I.push_back(i);
  if (t.I.size() != t.J.size()) throw InternalError("xi_inverse size mismatch");
  return t;
}

SemistandardTableau xi_image(const DoubleTableau& t, int n, int m) {
  if (t.columns.empty()) return SemistandardTableau{{}, m + n};
  if (!is_standard(t)) throw DomainError("xi image requires a standard tableau");
  SemistandardTableau out;
  out.max_entry = m + n;
  out.rows.assign(static_cast<std::size_t>(n), {});
  for (const auto& c : t.columns) {
    const auto k = xi(c, n, m);
    for (int r = 0; r < n; ++r) out.rows[static_cast<std::size_t>(r)].push_back(k[static_cast<std::size_t>(r)]);
  }
  validate_ssyt(out);
  return out;
}

std::vector<int> tilde_column(int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int d = 1; d <= n; ++d) out.push_back(2 * d - 1);
  return out;
}

Lattice Lattice::D(int n, int m) {
  if (n < 1 || m < 1) throw ParamError("lattice parameters must be positive");
  return Lattice{Kind::D, n, m, 0};
}
Lattice Lattice::L(int n, int m) {
  if (n < 1 || m < 1) throw ParamError("lattice parameters must be positive");
  return Lattice{Kind::L, n, m, 0};
}
Lattice Lattice::Pl(int n, int m) {
  if (n < 1 || m < 1) throw ParamError("lattice parameters must be positive");
  return Lattice{Kind::Pl, n, m, 0};
}
Lattice Lattice::DN(int k, int n) {
  if (k < 1 || n < 1) throw ParamError("lattice parameters must be positive");
  Lattice lat;
  lat.kind = Kind::DN;
  lat.k = k;
  lat.n = n;
  return lat;
}

int Lattice::rows() const {
  switch (kind) {
    case Kind::D:
    case Kind::L:
    case Kind::Pl: return n;
    case Kind::DN: return k;
  }
  throw InternalError("bad lattice kind");
}

int Lattice::cols() const {
  switch (kind) {
    case Kind::D:
    case Kind::L: return m;
    case Kind::Pl: return m + n;
    case Kind::DN: return 2 * n;
  }
  throw InternalError("bad lattice kind");
}

int Lattice::max_len() const {
  switch (kind) {
    case Kind::D:
    case Kind::L: return std::min(n, m);
    case Kind::Pl: return n;
    case Kind::DN: return std::min(k, n);
  }
  throw InternalError("bad lattice kind");
}

bool Lattice::contains(const OneLineTableau& t) const {
  const int l = t.len();
  if (l < 1 || l > max_len() || t.J.size() != t.I.size()) return false;
  for (std::size_t i = 0; i < t.I.size(); ++i) {
    if (t.I[i] < 1 || t.I[i] > rows() || t.J[i] < 1 || t.J[i] > cols()) return false;
    if (i > 0 && (t.I[i] <= t.I[i - 1] || t.J[i] <= t.J[i - 1])) return false;
  }
  switch (kind) {
    case Kind::D: return true;
    case Kind::L:
    case Kind::Pl:
      if (kind == Kind::Pl && l != n) return false;
      for (int i = 0; i < l; ++i)
        if (t.I[static_cast<std::size_t>(i)] != i + 1) return false;
      return true;
    case Kind::DN: {
      const auto floor = tilde_column(n);
      for (int d = 0; d < l; ++d)
        if (t.J[static_cast<std::size_t>(d)] < floor[static_cast<std::size_t>(d)]) return false;
      return true;
    }
  }
  return false;
}

void Lattice::validate_member(const OneLineTableau& t) const {
  if (!contains(t)) throw DomainError(format_column(t) + " is not a member of the lattice");
}

namespace {

// All size-l subsets of {1..bound} in lex order.
void for_each_subset(int bound, int l, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  if (l == 0 || l > bound) return;
  while (true) {
    fn(cur);
    int i = l - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == bound - (l - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<OneLineTableau> enumerate_lattice(const Lattice& lat, Guard& guard) {
  std::vector<OneLineTableau> out;
  const int lmax = lat.max_len();
  const int lmin = lat.kind == Lattice::Kind::Pl ? lat.n : 1;
  for (int l = lmax; l >= lmin; --l) {
    for_each_subset(lat.rows(), l, [&](const std::vector<int>& I) {
      if ((lat.kind == Lattice::Kind::L || lat.kind == Lattice::Kind::Pl) && I.back() != l) return;
      for_each_subset(lat.cols(), l, [&](const std::vector<int>& J) {
        OneLineTableau t{I, J};
        if (!lat.contains(t)) return;
        guard.charge();
        out.push_back(std::move(t));
      });
    });
  }
  return out;
}

namespace {

OneLineTableau entrywise(const OneLineTableau& x, const OneLineTableau& y, bool take_min) {
  OneLineTableau r;
  const std::size_t l = x.I.size();
  r.I.resize(l);
  r.J.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    r.I[i] = take_min ? std::min(x.I[i], y.I[i]) : std::max(x.I[i], y.I[i]);
    r.J[i] = take_min ? std::min(x.J[i], y.J[i]) : std::max(x.J[i], y.J[i]);
  }
  return r;
}

OneLineTableau bound_by_search(const Lattice& lat, const OneLineTableau& x, const OneLineTableau& y, bool lower) {
  Guard guard;
  const auto members = enumerate_lattice(lat, guard);
  std::vector<const OneLineTableau*> bounds;
  for (const auto& z : members) {
    const bool ok = lower ? (leq(z, x) && leq(z, y)) : (leq(x, z) && leq(y, z));
    if (ok) bounds.push_back(&z);
  }
  for (const auto* w : bounds) {
    bool extreme = true;
    for (const auto* z : bounds) {
      const bool fits = lower ? leq(*z, *w) : leq(*w, *z);
      if (!fits) {
        extreme = false;
        break;
      }
    }
    if (extreme) return *w;
  }
  throw InternalError(std::string(lower ? "meet" : "join") + " does not exist for " + format_column(x) + ", " +
                      format_column(y));
}

}  // namespace

OneLineTableau meet(const Lattice& lat, const OneLineTableau& x, const OneLineTableau& y) {
  lat.validate_member(x);
  lat.validate_member(y);
  if (leq(x, y)) return x;
  if (leq(y, x)) return y;
  if (x.len() == y.len()) {
    auto r = entrywise(x, y, true);
    if (!lat.contains(r)) throw InternalError("entrywise meet left the lattice");
    return r;
  }
  return bound_by_search(lat, x, y, true);
}

OneLineTableau join(const Lattice& lat, const OneLineTableau& x, const OneLineTableau& y) {
  lat.validate_member(x);
  lat.validate_member(y);
  if (leq(x, y)) return y;
  if (leq(y, x)) return x;
  if (x.len() == y.len()) {
    auto r = entrywise(x, y, false);
    if (!lat.contains(r)) throw InternalError("entrywise join left the lattice");
    return r;
  }
  return bound_by_search(lat, x, y, false);
}

namespace {

struct ContentPool {
  // remaining multiplicity per index value
  std::vector<int> row_left, col_left;
  int boxes_left = 0;

  static ContentPool make(const Lattice& lat, const ContentFilter& f) {
    ContentPool p;
    p.row_left.assign(static_cast<std::size_t>(lat.rows()) + 1, 0);
    p.col_left.assign(static_cast<std::size_t>(lat.cols()) + 1, 0);
    for (int i : f.row_content) {
      if (i < 1 || i > lat.rows()) throw DomainError("row content index out of range");
      ++p.row_left[static_cast<std::size_t>(i)];
    }
    for (int j : f.col_content) {
      if (j < 1 || j > lat.cols()) throw DomainError("column content index out of range");
      ++p.col_left[static_cast<std::size_t>(j)];
    }
    if (f.row_content.size() != f.col_content.size()) throw DomainError("content multisets must have equal size");
    p.boxes_left = static_cast<int>(f.row_content.size());
    return p;
  }

  bool take(const OneLineTableau& t) {
    for (int i : t.I)
      if (row_left[static_cast<std::size_t>(i)] == 0) return false;
    for (int j : t.J)
      if (col_left[static_cast<std::size_t>(j)] == 0) return false;
    for (int i : t.I) --row_left[static_cast<std::size_t>(i)];
    for (int j : t.J) --col_left[static_cast<std::size_t>(j)];
    boxes_left -= t.len();
    return true;
  }

  void put_back(const OneLineTableau& t) {
    for (int i : t.I) ++row_left[static_cast<std::size_t>(i)];
    for (int j : t.J) ++col_left[static_cast<std::size_t>(j)];
    boxes_left += t.len();
  }
};

}  // namespace

std::vector<DoubleTableau> enumerate_standard(const Lattice& lat, const Shape& shape, Guard& guard,
                                              const std::optional<ContentFilter>& filter) {
  validate_shape(shape);
  const Shape lens = shape_conjugate(shape);
  std::vector<DoubleTableau> out;
  if (lens.empty()) {
    if (!filter || filter->row_content.empty()) out.push_back(DoubleTableau{});
    return out;
  }
  if (lens[0] > lat.max_len()) return out;
  const auto members = enumerate_lattice(lat, guard);
  std::optional<ContentPool> pool;
  if (filter) {
    if (shape_size(shape) != static_cast<int>(filter->row_content.size())) return out;
    pool = ContentPool::make(lat, *filter);
  }
  DoubleTableau cur;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == lens.size()) {
      guard.charge();
      out.push_back(cur);
      return;
    }
    const int want = lens[pos];
    for (const auto& cand : members) {
      if (cand.len() != want) continue;
      if (!cur.columns.empty() && !leq(cur.columns.back(), cand)) continue;
      guard.charge();
      if (pool && !pool->take(cand)) continue;
      cur.columns.push_back(cand);
      self(self, pos + 1);
      cur.columns.pop_back();
      if (pool) pool->put_back(cand);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<DoubleTableau> enumerate_standard_by_content(const Lattice& lat, const ContentFilter& filter,
                                                         Guard& guard) {
  std::vector<DoubleTableau> out;
  auto pool = ContentPool::make(lat, filter);
  if (pool.boxes_left == 0) {
    out.push_back(DoubleTableau{});
    return out;
  }
  const auto members = enumerate_lattice(lat, guard);
  DoubleTableau cur;
  auto rec = [&](auto&& self) -> void {
    if (pool.boxes_left == 0) {
      guard.charge();
      out.push_back(cur);
      return;
    }
    for (const auto& cand : members) {
      if (cand.len() > pool.boxes_left) continue;
      if (!cur.columns.empty() && !leq(cur.columns.back(), cand)) continue;
      guard.charge();
      if (!pool.take(cand)) continue;
      cur.columns.push_back(cand);
      self(self);
      cur.columns.pop_back();
      pool.put_back(cand);
    }
  };
  rec(rec);
  return out;
}

std::vector<std::vector<OneLineTableau>> maximal_chains(const Lattice& lat, Guard& guard) {
  const auto members = enumerate_lattice(lat, guard);
  const std::size_t count = members.size();
  // covers[i]: indices j with members[j] covering members[i]
  std::vector<std::vector<std::size_t>> covers(count);
  std::vector<bool> is_min(count, true), is_max(count, true);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !leq(members[i], members[j])) continue;
      is_max[i] = false;
      is_min[j] = false;
      bool cover = true;
      for (std::size_t z = 0; z < count; ++z) {
        if (z == i || z == j) continue;
        if (leq(members[i], members[z]) && leq(members[z], members[j])) {
          cover = false;
          break;
        }
      }
      guard.charge();
      if (cover) covers[i].push_back(j);
    }
  }
  std::vector<std::vector<OneLineTableau>> out;
  std::vector<std::size_t> path;
  auto rec = [&](auto&& self, std::size_t at) -> void {
    path.push_back(at);
    if (is_max[at]) {
      guard.charge();
      std::vector<OneLineTableau> chain;
      chain.reserve(path.size());
      for (std::size_t idx : path) chain.push_back(members[idx]);
      out.push_back(std::move(chain));
    } else {
      for (std::size_t nxt : covers[at]) self(self, nxt);
    }
    path.pop_back();
  };
  for (std::size_t i = 0; i < count; ++i)
    if (is_min[i]) rec(rec, i);
  return out;
}

std::vector<SemistandardTableau> enumerate_ssyt(const Shape& shape, int max_entry, Guard& guard,
                                                const std::optional<std::vector<int>>& column_floor) {
  validate_shape(shape);
  if (max_entry < 1) throw ParamError("max_entry must be positive");
  const Shape rows = shape_trim(shape);
  std::vector<SemistandardTableau> out;
  if (rows.empty()) {
    out.push_back(SemistandardTableau{{}, max_entry});
    return out;
  }
  if (column_floor) {
    validate_index_set(*column_floor, max_entry, "floor");
    if (rows.size() > column_floor->size()) return out;  // columns taller than the floor cannot dominate it
  }
  SemistandardTableau cur;
  cur.max_entry = max_entry;
  cur.rows.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) cur.rows[r].assign(static_cast<std::size_t>(rows[r]), 0);
  auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      guard.charge();
      out.push_back(cur);
      return;
    }
    const auto [nr, nc] = c + 1 < cur.rows[r].size() ? std::pair{r, c + 1} : std::pair{r + 1, std::size_t{0}};
    int lo = 1;
    if (c > 0) lo = std::max(lo, cur.rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, cur.rows[r - 1][c] + 1);
    if (column_floor) lo = std::max(lo, (*column_floor)[r]);
    for (int v = lo; v <= max_entry; ++v) {
      guard.charge();
      cur.rows[r][c] = v;
      self(self, nr, nc);
    }
    cur.rows[r][c] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace nullcone
