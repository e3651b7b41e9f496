#include "linalg.hpp"

namespace nullcone {

SolveResult solve_linear(RatMat a, RatVec b) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw ParamError("system and right-hand side sizes differ");
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw ParamError("ragged system matrix");

  std::vector<std::size_t> pivot_cols;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < cols && prow < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = prow; r < rows; ++r)
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[prow], a[sel]);
    std::swap(b[prow], b[sel]);
    const Rat pivot = a[prow][col];
    for (std::size_t j = col; j < cols; ++j) a[prow][j] /= pivot;
    b[prow] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == prow || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[prow][j];
      b[r] -= f * b[prow];
    }
    pivot_cols.push_back(col);
    ++prow;
  }
  for (std::size_t r = prow; r < rows; ++r)
    if (b[r] != 0) return SolveResult{SolveResult::Status::Inconsistent, {}};
  SolveResult out;
  out.status = pivot_cols.size() == cols ? SolveResult::Status::Unique : SolveResult::Status::Underdetermined;
  out.x.assign(cols, Rat(0));
  for (std::size_t t = 0; t < pivot_cols.size(); ++t) out.x[pivot_cols[t]] = b[t];
  return out;
}

int rank(RatMat a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw ParamError("ragged matrix");
  int rk = 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rk) < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t r = static_cast<std::size_t>(rk); r < rows; ++r)
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[static_cast<std::size_t>(rk)], a[sel]);
    const Rat pivot = a[static_cast<std::size_t>(rk)][col];
    for (std::size_t r = static_cast<std::size_t>(rk) + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const Rat f = a[r][col] / pivot;
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[static_cast<std::size_t>(rk)][j];
    }
    ++rk;
  }
  return rk;
}

int rank_int(std::vector<std::vector<Int>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  for (const auto& row : a)
    if (row.size() != cols) throw ParamError("ragged matrix");
  int rk = 0;
  Int prev = 1;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rk) < rows; ++col) {
    const auto pr = static_cast<std::size_t>(rk);
    std::size_t sel = rows;
    for (std::size_t r = pr; r < rows; ++r)
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == rows) continue;
    std::swap(a[pr], a[sel]);
    for (std::size_t r = pr + 1; r < rows; ++r) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Int num = a[pr][col] * a[r][j] - a[r][col] * a[pr][j];
        mpz_divexact(a[r][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[pr][col];
    ++rk;
  }
  return rk;
}

int rank_rational(const RatMat& a) {
  std::vector<std::vector<Int>> scaled;
  scaled.reserve(a.size());
  for (const auto& row : a) {
    Int lcm = 1;
    for (const Rat& q : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<Int> out;
    out.reserve(row.size());
    for (const Rat& q : row) out.push_back(q.get_num() * (lcm / q.get_den()));
    scaled.push_back(std::move(out));
  }
  return rank_int(std::move(scaled));
}

}  // namespace nullcone
