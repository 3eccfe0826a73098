#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "shortcode/error.hpp"

namespace shortcode {

/// Multiplicative inverses of 1..p-1 modulo a small prime.
inline std::vector<std::uint8_t> prime_field_inverses(int p) {
  std::vector<std::uint8_t> inv(static_cast<std::size_t>(p), 0);
  for (int a = 1; a < p; ++a) {
    for (int b = 1; b < p; ++b) {
      if ((a * b) % p == 1) {
        inv[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
  return inv;
}

/// Dense row-major matrix over GF(p), p < 256.
class MatrixGFp {
 public:
  MatrixGFp() = default;
  MatrixGFp(int p, std::size_t rows, std::size_t cols)
      : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static MatrixGFp identity(int p, std::size_t n) {
    MatrixGFp id(p, n, n);
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return id;
  }

  static MatrixGFp from_rows(int p, std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<int>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(p, v);
  }

  static MatrixGFp from_rows(int p, const std::vector<std::vector<int>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    MatrixGFp m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error(ErrorCode::IndexOutOfRange, "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = static_cast<std::uint8_t>(((rows[r][c] % p) + p) % p);
      }
    }
    return m;
  }

  int p() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const std::uint8_t> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw Error(ErrorCode::IndexOutOfRange, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  MatrixGFp transpose() const {
    MatrixGFp t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  MatrixGFp select_columns(std::span<const std::size_t> cols) const {
    MatrixGFp s(p_, rows_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
      for (std::size_t r = 0; r < rows_; ++r) s(r, j) = (*this)(r, cols[j]);
    }
    return s;
  }

  /// Keeps every column whose index is not in `drop` (which must be sorted).
  MatrixGFp drop_columns(std::span<const std::size_t> drop) const {
    std::vector<std::size_t> keep;
    keep.reserve(cols_);
    std::size_t d = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (d < drop.size() && drop[d] == c) {
        ++d;
        continue;
      }
      keep.push_back(c);
    }
    return select_columns(keep);
  }

  MatrixGFp operator*(const MatrixGFp& rhs) const {
    if (cols_ != rhs.rows_) throw Error(ErrorCode::IndexOutOfRange, "matrix shape mismatch");
    MatrixGFp out(p_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const unsigned a = (*this)(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < rhs.cols_; ++c) {
          out(r, c) = static_cast<std::uint8_t>((out(r, c) + a * rhs(k, c)) % static_cast<unsigned>(p_));
        }
      }
    }
    return out;
  }

  bool is_zero() const {
    for (auto v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const MatrixGFp&, const MatrixGFp&) = default;

 private:
  int p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

struct RrefResult {
  MatrixGFp reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

inline RrefResult rref(const MatrixGFp& m) {
  RrefResult out{m, 0, {}};
  MatrixGFp& a = out.reduced;
  const unsigned p = static_cast<unsigned>(m.p());
  const auto inv = prime_field_inverses(m.p());
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols() && pivot_row < a.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows() && a(r, c) == 0) ++r;
    if (r == a.rows()) continue;
    if (r != pivot_row) {
      auto x = a.row(r);
      auto y = a.row(pivot_row);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const unsigned scale = inv[a(pivot_row, c)];
    if (scale != 1) {
      for (auto& v : a.row(pivot_row)) v = static_cast<std::uint8_t>((v * scale) % p);
    }
    for (std::size_t rr = 0; rr < a.rows(); ++rr) {
      if (rr == pivot_row || a(rr, c) == 0) continue;
      const unsigned factor = p - a(rr, c);
      auto src = a.row(pivot_row);
      auto dst = a.row(rr);
      for (std::size_t k = c; k < a.cols(); ++k) {
        dst[k] = static_cast<std::uint8_t>((dst[k] + factor * src[k]) % p);
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

inline std::size_t rank(const MatrixGFp& m) { return rref(m).rank; }

/// Reduced generator of the row space: the nonzero rows of rref(m).
inline MatrixGFp row_basis(const MatrixGFp& m) {
  auto r = rref(m);
  MatrixGFp out(m.p(), 0, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.reduced.row(i));
  return out;
}

/// Basis of {v : M v^T = 0}, one vector per row.
inline MatrixGFp nullspace(const MatrixGFp& m) {
  const auto r = rref(m);
  const unsigned p = static_cast<unsigned>(m.p());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  MatrixGFp basis(m.p(), 0, m.cols());
  std::vector<std::uint8_t> v(m.cols());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivots[i]] = static_cast<std::uint8_t>((p - r.reduced(i, f)) % p);
    }
    basis.append_row(v);
  }
  return basis;
}

/// True iff the selected columns are linearly dependent over GF(p).
inline bool columns_dependent(const MatrixGFp& m, std::span<const std::size_t> cols) {
  return rank(m.select_columns(cols)) < cols.size();
}

/// True iff some vector with no zero entry lies in the kernel of the selected
/// columns, i.e. a weight-exactly-|cols| dual codeword is supported there.
inline bool has_full_support_dependency(const MatrixGFp& m, std::span<const std::size_t> cols) {
  const auto sub = m.select_columns(cols);
  const auto kernel = nullspace(sub);
  if (kernel.rows() == 0) return false;
  const unsigned p = static_cast<unsigned>(m.p());
  const std::size_t w = cols.size();
  if (p == 2) {
    // over GF(2) the only full-support vector is all-ones
    for (std::size_t r = 0; r < sub.rows(); ++r) {
      unsigned s = 0;
      for (std::size_t c = 0; c < w; ++c) s ^= sub(r, c);
      if (s) return false;
    }
    return true;
  }
  std::size_t combos = 1;
  for (std::size_t i = 0; i < kernel.rows(); ++i) {
    combos *= p;
    if (combos > (std::size_t{1} << 24)) throw Error(ErrorCode::BudgetExceeded, "kernel too large to scan");
  }
  std::vector<unsigned> coeff(kernel.rows(), 0);
  std::vector<unsigned> v(w);
  for (std::size_t iter = 1; iter < combos; ++iter) {
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      if (++coeff[i] < p) break;
      coeff[i] = 0;
    }
    std::fill(v.begin(), v.end(), 0u);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      if (!coeff[i]) continue;
      for (std::size_t c = 0; c < w; ++c) v[c] = (v[c] + coeff[i] * kernel(i, c)) % p;
    }
    bool full = true;
    for (auto x : v) full = full && x != 0;
    if (full) return true;
  }
  return false;
}

/// Solves A x = b. Returns nullopt if inconsistent; `unique` reports whether
/// the solution is the only one.
struct LinearSolve {
  std::vector<std::uint8_t> x;
  bool unique = false;
};

inline std::optional<LinearSolve> solve(const MatrixGFp& a, std::span<const std::uint8_t> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::IndexOutOfRange, "rhs length mismatch");
  MatrixGFp aug(a.p(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == a.cols()) return std::nullopt;
  LinearSolve out;
  out.x.assign(a.cols(), 0);
  for (std::size_t i = 0; i < red.rank; ++i) out.x[red.pivots[i]] = red.reduced(i, a.cols());
  out.unique = red.rank == a.cols();
  return out;
}

}  // namespace shortcode
