#include "sl3ido/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl3ido {

namespace {

const Rat kZero = 0;

using IRow = std::map<int, Int>;
using QRow = std::map<int, Rat>;

// row <- (p * row - a * pivot_row) / prev, dropping column c and zeros.
// All divisions are exact (Bareiss).
IRow bareiss_combine(const IRow& row, const IRow& pivot, const Int& p,
                     const Int& a, const Int& prev, int c) {
  IRow out;
  auto it = row.begin(), jt = pivot.begin();
  while (it != row.end() || jt != pivot.end()) {
    int col;
    Int v = 0;
    if (jt == pivot.end() || (it != row.end() && it->first < jt->first)) {
      col = it->first;
      v = p * it->second;
      ++it;
    } else if (it == row.end() || jt->first < it->first) {
      col = jt->first;
      v = -a * jt->second;
      ++jt;
    } else {
      col = it->first;
      v = p * it->second - a * jt->second;
      ++it;
      ++jt;
    }
    if (col <= c || v == 0) continue;
    Int q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
    out.emplace_hint(out.end(), col, std::move(q));
  }
  return out;
}

// Clears denominators and strips content; rank is unaffected.
std::vector<IRow> to_primitive_int_rows(
    const std::vector<std::map<int, Rat>>& data) {
  std::vector<IRow> rows;
  rows.reserve(data.size());
  for (const auto& r : data) {
    IRow out;
    if (!r.empty()) {
      Int l = 1;
      for (const auto& [c, v] : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
      Int g = 0;
      std::vector<std::pair<int, Int>> tmp;
      tmp.reserve(r.size());
      for (const auto& [c, v] : r) {
        Int w = v.get_num() * (l / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.get_mpz_t());
        tmp.emplace_back(c, std::move(w));
      }
      for (auto& [c, w] : tmp) {
        Int q;
        mpz_divexact(q.get_mpz_t(), w.get_mpz_t(), g.get_mpz_t());
        out.emplace_hint(out.end(), c, std::move(q));
      }
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

}  // namespace

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative size");
}

const Rat& RatMatrix::at(int r, int c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? kZero : it->second;
}

void RatMatrix::set(int r, int c, const Rat& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("RatMatrix::set");
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void RatMatrix::add_at(int r, int c, const Rat& v) {
  if (v == 0) return;
  Rat& slot = data_[r][c];
  slot += v;
  if (slot == 0) data_[r].erase(c);
}

long RatMatrix::nnz() const {
  long n = 0;
  for (const auto& r : data_) n += static_cast<long>(r.size());
  return n;
}

int RatMatrix::rank() const {
  std::vector<IRow> rows = to_primitive_int_rows(data_);
  // Empty rows never become pivots; drop them up front.
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const IRow& r) { return r.empty(); }),
             rows.end());
  const int n = static_cast<int>(rows.size());
  Int prev = 1;
  int r = 0;
  for (int c = 0; c < cols_ && r < n; ++c) {
    // Pivot: sparsest remaining row with a nonzero in column c.
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (rows[i].count(c) &&
          (piv < 0 || rows[i].size() < rows[piv].size()))
        piv = i;
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const Int p = rows[r].at(c);
#pragma omp parallel for schedule(dynamic) if (n - r > 8)
    for (int i = r + 1; i < n; ++i) {
      auto it = rows[i].find(c);
      Int a = (it == rows[i].end()) ? Int(0) : it->second;
      rows[i] = bareiss_combine(rows[i], rows[r], p, a, prev, c);
    }
    prev = p;
    ++r;
  }
  return r;
}

int RatMatrix::rank_serial() const {
  std::vector<QRow> rows(data_.begin(), data_.end());
  const int n = static_cast<int>(rows.size());
  int r = 0;
  for (int c = 0; c < cols_ && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (rows[i].count(c)) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const Rat p = rows[r].at(c);
    for (int i = r + 1; i < n; ++i) {
      auto it = rows[i].find(c);
      if (it == rows[i].end()) continue;
      Rat f = it->second / p;
      QRow out;
      auto a = rows[i].begin();
      auto b = rows[r].begin();
      while (a != rows[i].end() || b != rows[r].end()) {
        int col;
        Rat v;
        if (b == rows[r].end() || (a != rows[i].end() && a->first < b->first)) {
          col = a->first; v = a->second; ++a;
        } else if (a == rows[i].end() || b->first < a->first) {
          col = b->first; v = -f * b->second; ++b;
        } else {
          col = a->first; v = a->second - f * b->second; ++a; ++b;
        }
        if (col > c && v != 0) out.emplace_hint(out.end(), col, std::move(v));
      }
      rows[i] = std::move(out);
    }
    ++r;
  }
  return r;
}

RatMatrix RatMatrix::rref(std::vector<int>* pivot_cols) const {
  std::vector<QRow> rows(data_.begin(), data_.end());
  const int n = static_cast<int>(rows.size());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (rows[i].count(c) &&
          (piv < 0 || rows[i].size() < rows[piv].size()))
        piv = i;
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    { // normalize pivot row
      Rat p = rows[r].at(c);
      for (auto& [col, v] : rows[r]) v /= p;
    }
    const QRow& prow = rows[r];
#pragma omp parallel for schedule(dynamic) if (n > 8)
    for (int i = 0; i < n; ++i) {
      if (i == r) continue;
      auto it = rows[i].find(c);
      if (it == rows[i].end()) continue;
      Rat f = it->second;
      QRow out;
      auto a = rows[i].begin();
      auto b = prow.begin();
      while (a != rows[i].end() || b != prow.end()) {
        int col;
        Rat v;
        if (b == prow.end() || (a != rows[i].end() && a->first < b->first)) {
          col = a->first; v = a->second; ++a;
        } else if (a == rows[i].end() || b->first < a->first) {
          col = b->first; v = -f * b->second; ++b;
        } else {
          col = a->first; v = a->second - f * b->second; ++a; ++b;
        }
        if (v != 0) out.emplace_hint(out.end(), col, std::move(v));
      }
      rows[i] = std::move(out);
    }
    pivots.push_back(c);
    ++r;
  }
  RatMatrix out(rows_, cols_);
  // nonzero rows first, in pivot order
  std::stable_sort(rows.begin(), rows.end(),
                   [](const QRow& a, const QRow& b) {
                     if (a.empty()) return false;
                     if (b.empty()) return true;
                     return a.begin()->first < b.begin()->first;
                   });
  for (int i = 0; i < n; ++i) out.data_[i] = std::move(rows[i]);
  if (pivot_cols) {
    std::sort(pivots.begin(), pivots.end());
    *pivot_cols = std::move(pivots);
  }
  return out;
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
  std::vector<int> pivots;
  RatMatrix R = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("RatMatrix::apply: size mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, a] : data_[r]) out[r] += a * v[c];
  return out;
}

bool RatMatrix::solve(const std::vector<Rat>& b, std::vector<Rat>& x) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("RatMatrix::solve: size mismatch");
  RatMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (const auto& [c, v] : data_[r]) aug.set(r, c, v);
    aug.set(r, cols_, b[r]);
  }
  std::vector<int> pivots;
  RatMatrix R = aug.rref(&pivots);
  for (int c : pivots)
    if (c == cols_) return false;  // pivot in the constant column
  x.assign(cols_, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = R.at(static_cast<int>(i), cols_);
  return true;
}

}  // namespace sl3ido
