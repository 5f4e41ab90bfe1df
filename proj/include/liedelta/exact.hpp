#pragma once

#include <cstdint>
#include <vector>

namespace liedelta {

// 64-bit integer arithmetic that refuses to wrap. Each op throws
// std::overflow_error instead of returning a truncated value.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

// Exact fraction on 64-bit parts, always normalized: den > 0 and
// gcd(|num|, den) = 1.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const = default;
  bool operator<(const Rational& o) const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Exact determinant of a square integer matrix via Bareiss
// fraction-free elimination; every intermediate division is exact.
std::int64_t integer_determinant(IntMatrix m);

// Whether m * x = v admits an integer solution x, i.e. whether v lies in
// the lattice generated by the columns of m. Hermite-style column
// reduction followed by forward substitution with divisibility checks.
bool solvable_over_integers(IntMatrix m, std::vector<std::int64_t> v);

}  // namespace liedelta
