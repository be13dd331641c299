#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "clasp/error.hpp"

namespace clasp {

using BigInt = boost::multiprecision::cpp_int;

enum class Ring { Z, Q, F2 };

inline std::string to_string(Ring r) {
  switch (r) {
    case Ring::Z: return "Z";
    case Ring::Q: return "Q";
    case Ring::F2: return "F2";
  }
  return "?";
}

inline Ring parse_ring(std::string_view s) {
  if (s == "Z" || s == "z") return Ring::Z;
  if (s == "Q" || s == "q" || s == "C") return Ring::Q;
  if (s == "F2" || s == "f2" || s == "Z2" || s == "Z/2") return Ring::F2;
  throw InputError("unknown coefficient ring '" + std::string(s) + "'");
}

struct MatrixEntry {
  int row = 0;
  int col = 0;
  std::int64_t value = 0;
  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Integer matrix in coordinate form, sorted by (row, col), no stored zeros.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols, std::vector<MatrixEntry> entries = {})
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
    for (const MatrixEntry& e : entries_)
      if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols) throw InputError("matrix entry out of range");
    std::sort(entries_.begin(), entries_.end(),
              [](const MatrixEntry& a, const MatrixEntry& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
    std::vector<MatrixEntry> merged;
    for (const MatrixEntry& e : entries_) {
      if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
        if (__builtin_add_overflow(merged.back().value, e.value, &merged.back().value))
          throw InputError("matrix entry overflows 64 bits");
      } else {
        merged.push_back(e);
      }
      if (merged.back().value == 0) merged.pop_back();
    }
    entries_ = std::move(merged);
  }

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
    std::vector<MatrixEntry> e;
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw InputError("ragged dense matrix");
      for (int j = 0; j < c; ++j)
        if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
          e.push_back({i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    }
    return SparseMatrix(r, c, std::move(e));
  }

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] const std::vector<MatrixEntry>& entries() const { return entries_; }
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

/// Exact product over Z.
inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  std::vector<std::vector<std::pair<int, std::int64_t>>> brows(static_cast<std::size_t>(b.rows()));
  for (const MatrixEntry& e : b.entries()) brows[static_cast<std::size_t>(e.row)].emplace_back(e.col, e.value);
  std::vector<MatrixEntry> out;
  for (const MatrixEntry& e : a.entries())
    for (const auto& [col, v] : brows[static_cast<std::size_t>(e.col)]) {
      std::int64_t p;
      if (__builtin_mul_overflow(e.value, v, &p)) throw InputError("matrix product overflows 64 bits");
      out.push_back({e.row, col, p});
    }
  return SparseMatrix(a.rows(), b.cols(), std::move(out));
}

namespace detail {

struct Overflow {};

inline std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <class T>
using Row = std::vector<std::pair<int, T>>;

/// row -= f * pivot, both sorted by column.
template <class T>
void axpy(Row<T>& row, const T& f, const Row<T>& pivot, std::vector<int>* fill) {
  Row<T> out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, sub_mul(T(0), f, pivot[j].second));
      if (fill) fill->push_back(pivot[j].first);
      ++j;
    } else {
      T v = sub_mul(row[i].second, f, pivot[j].second);
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i, ++j;
    }
  }
  row = std::move(out);
}

template <class T>
const T* find(const Row<T>& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

/// Eliminates with +-1 pivots only, choosing short rows and sparse columns
/// first. Returns the number of pivots; rows left nonempty are the residual.
template <class T>
std::size_t unit_eliminate(std::vector<Row<T>>& rows, int cols) {
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[static_cast<std::size_t>(c)].push_back(static_cast<int>(r));
  std::vector<bool> alive(rows.size(), true);
  std::size_t pivots = 0;
  for (;;) {
    int best_row = -1, best_col = -1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      const std::size_t len = rows[r].size() - 1;
      if (len * 1 >= best_cost) continue;
      for (const auto& [c, v] : rows[r]) {
        if (!is_unit(v)) continue;
        const std::size_t cost = len * (col_rows[static_cast<std::size_t>(c)].size());
        if (cost < best_cost) {
          best_cost = cost;
          best_row = static_cast<int>(r);
          best_col = c;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_row < 0) break;
    ++pivots;
    alive[static_cast<std::size_t>(best_row)] = false;
    const Row<T>& prow = rows[static_cast<std::size_t>(best_row)];
    const T p = *find(prow, best_col);
    std::vector<int> users;
    users.swap(col_rows[static_cast<std::size_t>(best_col)]);
    for (int r2 : users) {
      if (r2 == best_row || !alive[static_cast<std::size_t>(r2)]) continue;
      Row<T>& row = rows[static_cast<std::size_t>(r2)];
      const T* v = find(row, best_col);
      if (!v) continue;
      const T f = *v * p;  // p is +-1, so v / p == v * p
      std::vector<int> fill;
      axpy(row, f, prow, &fill);
      for (int c : fill) col_rows[static_cast<std::size_t>(c)].push_back(r2);
    }
    rows[static_cast<std::size_t>(best_row)].clear();
  }
  return pivots;
}

inline std::vector<Row<BigInt>> to_big(const std::vector<Row<std::int64_t>>& rows) {
  std::vector<Row<BigInt>> out;
  for (const auto& r : rows) {
    if (r.empty()) continue;
    Row<BigInt> b;
    b.reserve(r.size());
    for (const auto& [c, v] : r) b.emplace_back(c, BigInt(v));
    out.push_back(std::move(b));
  }
  return out;
}

template <class T>
std::vector<Row<T>> rows_of(const SparseMatrix& m) {
  std::vector<Row<T>> rows(static_cast<std::size_t>(m.rows()));
  for (const MatrixEntry& e : m.entries()) rows[static_cast<std::size_t>(e.row)].emplace_back(e.col, T(e.value));
  return rows;
}

/// Runs the unit phase in 64-bit arithmetic, redoing it with big integers if
/// any intermediate value overflows. Returns pivots and the residual rows.
inline std::pair<std::size_t, std::vector<Row<BigInt>>> unit_phase(const SparseMatrix& m) {
  try {
    auto rows = rows_of<std::int64_t>(m);
    const std::size_t p = unit_eliminate(rows, m.cols());
    return {p, to_big(rows)};
  } catch (const Overflow&) {
    auto rows = rows_of<BigInt>(m);
    const std::size_t p = unit_eliminate(rows, m.cols());
    std::vector<Row<BigInt>> residual;
    for (auto& r : rows)
      if (!r.empty()) residual.push_back(std::move(r));
    return {p, std::move(residual)};
  }
}

/// Fraction-free elimination over Q; rows are divided by their content
/// after every update to keep entries small.
inline std::size_t rational_rank(std::vector<Row<BigInt>> rows) {
  std::size_t rank = 0;
  for (;;) {
    std::size_t best = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!rows[r].empty() && (best == rows.size() || rows[r].size() < rows[best].size())) best = r;
    if (best == rows.size()) return rank;
    ++rank;
    Row<BigInt> prow = std::move(rows[best]);
    rows[best].clear();
    const int col = prow.front().first;
    const BigInt p = prow.front().second;
    for (auto& row : rows) {
      const BigInt* v = find(row, col);
      if (!v) continue;
      const BigInt f = *v;
      for (auto& e : row) e.second *= p;
      axpy<BigInt>(row, f, prow, nullptr);
      BigInt g = 0;
      for (const auto& e : row) g = gcd(g, e.second);
      if (g > 1)
        for (auto& e : row) e.second /= g;
    }
  }
}

/// Invariant factors of a small dense integer matrix, ascending, nonzero only.
inline std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto move_min_to_pivot = [&]() -> bool {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == m) return false;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      return true;
    };
    if (!move_min_to_pivot()) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // a smaller remainder now sits in row or column t
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < m; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
        for (std::size_t j = t; j < n; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
        std::swap(a[t], a[bi]);
        for (auto& row : a) std::swap(row[t], row[bj]);
        continue;
      }
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace detail

/// Rank over F2: dense bit-packed elimination on the entries mod 2.
inline std::size_t rank_f2(const SparseMatrix& m) {
  const std::size_t words = (static_cast<std::size_t>(m.cols()) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(static_cast<std::size_t>(m.rows()), std::vector<std::uint64_t>(words, 0));
  for (const MatrixEntry& e : m.entries())
    if (e.value & 1) rows[static_cast<std::size_t>(e.row)][static_cast<std::size_t>(e.col) / 64] |= std::uint64_t{1} << (e.col % 64);
  std::size_t rank = 0;
  for (std::size_t w = 0; w < words; ++w) {
    for (int bit = 0; bit < 64; ++bit) {
      const std::uint64_t mask = std::uint64_t{1} << bit;
      std::size_t pivot = rows.size();
      for (std::size_t r = rank; r < rows.size(); ++r)
        if (rows[r][w] & mask) {
          pivot = r;
          break;
        }
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t r = rank + 1; r < rows.size(); ++r)
        if (rows[r][w] & mask)
          for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
      ++rank;
    }
  }
  return rank;
}

inline std::size_t rank_q(const SparseMatrix& m) {
  auto [pivots, residual] = detail::unit_phase(m);
  return pivots + detail::rational_rank(std::move(residual));
}

enum class Field { F2, Q };

inline std::size_t rank(const SparseMatrix& m, Field f) { return f == Field::F2 ? rank_f2(m) : rank_q(m); }

/// Invariant factors d1 | d2 | ... of length min(rows, cols); zeros trail.
inline std::vector<BigInt> smith_normal_form(const SparseMatrix& m) {
  auto [pivots, residual] = detail::unit_phase(m);
  std::vector<int> cols;
  for (const auto& r : residual)
    for (const auto& e : r) cols.push_back(e.first);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::vector<std::vector<BigInt>> dense(residual.size(), std::vector<BigInt>(cols.size()));
  for (std::size_t i = 0; i < residual.size(); ++i)
    for (const auto& [c, v] : residual[i])
      dense[i][static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin())] = v;
  std::vector<BigInt> out(pivots, BigInt(1));
  for (BigInt& d : detail::dense_smith(std::move(dense))) out.push_back(std::move(d));
  const std::size_t len = static_cast<std::size_t>(std::min(m.rows(), m.cols()));
  if (out.size() > len) throw InternalError("Smith normal form longer than the matrix diagonal");
  out.resize(len, BigInt(0));
  return out;
}

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, ascending
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Rank and torsion of the incoming map: for Z the torsion of the cokernel.
struct MapData {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

inline MapData analyse_map(const SparseMatrix& m, Ring ring) {
  MapData out;
  if (ring == Ring::F2) {
    out.rank = rank_f2(m);
  } else if (ring == Ring::Q) {
    out.rank = rank_q(m);
  } else {
    for (BigInt& d : smith_normal_form(m)) {
      if (d == 0) continue;
      ++out.rank;
      if (d > 1) out.torsion.push_back(std::move(d));
    }
  }
  return out;
}

/// Homology at the middle group of C_in -> C -> C_out, where d_in maps into
/// C and d_out maps out of it. Over Z the torsion is the non-unit part of the
/// Smith form of d_in; the free rank is dim C - rank d_out - rank d_in.
inline HomologyGroup homology(const SparseMatrix& d_in, const SparseMatrix& d_out, Ring ring) {
  if (d_in.rows() != d_out.cols()) throw InputError("boundary maps do not compose");
  const SparseMatrix dd = multiply(d_out, d_in);
  bool zero = true;
  for (const MatrixEntry& e : dd.entries())
    if (ring != Ring::F2 || (e.value & 1)) zero = false;
  if (!zero) throw InternalError("boundary maps compose to a nonzero map");
  const MapData in = analyse_map(d_in, ring);
  const MapData out = analyse_map(d_out, ring);
  HomologyGroup h;
  h.free_rank = static_cast<std::size_t>(d_in.rows()) - in.rank - out.rank;
  h.torsion = in.torsion;
  return h;
}

}  // namespace clasp
