#include "liedelta/exact.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace liedelta {

namespace {

[[noreturn]] void overflow(const char* op) {
  throw std::overflow_error(std::string("64-bit overflow in ") + op);
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

std::int64_t checked_neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) overflow("neg");
  return -a;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw std::invalid_argument("Rational with zero denominator");
  if (den_ < 0) {
    num_ = checked_neg(num_);
    den_ = checked_neg(den_);
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("Rational division by zero");
  return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = checked_neg(num_);
  r.den_ = den_;
  return r;
}

bool Rational::operator<(const Rational& o) const {
  return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

std::int64_t integer_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;

  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const std::int64_t t =
            checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j]));
        m[i][j] = t / prev;  // exact by Bareiss
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return checked_mul(sign, m[n - 1][n - 1]);
}

bool solvable_over_integers(IntMatrix m, std::vector<std::int64_t> v) {
  const std::size_t rows = m.size();
  if (v.size() != rows) throw std::invalid_argument("dimension mismatch in lattice solve");
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("ragged matrix in lattice solve");

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
  };
  auto submul_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t r = 0; r < rows; ++r)
      m[r][dst] = checked_sub(m[r][dst], checked_mul(q, m[r][src]));
  };

  // Column echelon form: after the loop, pivot (r, c) pairs have
  // m[r][j] == 0 for every active column j > c.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t c = 0;
  for (std::size_t r = 0; r < rows && c < cols; ++r) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j)
        if (m[r][j] != 0 && (best == cols || std::llabs(m[r][j]) < std::llabs(m[r][best])))
          best = j;
      if (best == cols) break;  // row has no pivot among active columns
      swap_cols(c, best);
      bool cleared = true;
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        submul_col(j, c, m[r][j] / m[r][c]);
        if (m[r][j] != 0) cleared = false;
      }
      if (cleared) {
        pivots.emplace_back(r, c);
        ++c;
        break;
      }
    }
  }

  // Forward substitution in pivot order; rows without a pivot must have a
  // zero residual for the system to be solvable.
  std::vector<std::int64_t> y(cols, 0);
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    std::int64_t residual = v[r];
    for (std::size_t p = 0; p < next_pivot; ++p)
      residual = checked_sub(residual, checked_mul(m[r][pivots[p].second], y[pivots[p].second]));
    if (next_pivot < pivots.size() && pivots[next_pivot].first == r) {
      const std::int64_t pivot_value = m[r][pivots[next_pivot].second];
      if (residual % pivot_value != 0) return false;
      y[pivots[next_pivot].second] = residual / pivot_value;
      ++next_pivot;
    } else if (residual != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace liedelta
