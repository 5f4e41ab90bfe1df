#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "liedelta/exact.hpp"
#include "liedelta/lie_type.hpp"

namespace liedelta {

// An integral weight in fundamental-weight coordinates. Index arguments are
// the 1-based node labels used everywhere in this library; node 0 and nodes
// beyond the rank wrap via j mod (rank + 1), with the 0 slot contributing
// nothing (fundamental(rank, j) is the zero weight when j wraps to 0).
class Weight {
public:
  explicit Weight(std::vector<std::int64_t> coeffs);
  static Weight zero(int rank);
  static Weight fundamental(int rank, int node);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  std::int64_t coeff(int node) const;                       // node in 1..rank
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_dominant() const;
  void add_multiple_of_fundamental(int node, std::int64_t c);  // node wraps mod rank+1

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(std::int64_t c) const;

  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  std::string to_string() const;  // "[m1,m2,...]"

private:
  std::vector<std::int64_t> coeffs_;
};

// A root written in the simple-root basis.
class RootVector {
public:
  explicit RootVector(std::vector<std::int64_t> coeffs);
  static RootVector simple(int rank, int node);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  std::int64_t coeff(int node) const;  // node in 1..rank
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t height() const;

  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;

  std::string to_string() const;

private:
  std::vector<std::int64_t> coeffs_;
};

// All static data of a finite root system, computed eagerly and exactly at
// construction: Cartan matrix, symmetrizer, the full set of positive roots,
// the highest long root theta with its marks and comarks, the miniscule
// coweight indices, and the fundamental group order det(Cartan).
//
// Cartan convention: row i is the expansion of alpha_i in fundamental
// weights, so cartan()[i-1][j-1] = <alpha_i, alpha_j^vee> and the columns
// hold simple-coroot coordinates.
class RootSystem {
public:
  explicit RootSystem(LieType type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank(); }

  const IntMatrix& cartan() const { return cartan_; }
  std::int64_t cartan_entry(int i, int j) const;  // 1-based

  // Normalized so the long roots have d = 1; entries lie in {1, 1/2, 1/3}.
  const std::vector<Rational>& symmetrizer() const { return symmetrizer_; }

  // Sorted by height, then lexicographically.
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }

  const RootVector& highest_long_root() const { return theta_; }
  const Weight& highest_long_root_weight() const { return theta_weight_; }

  const std::vector<std::int64_t>& marks() const { return theta_.coeffs(); }
  const std::vector<std::int64_t>& comarks() const { return comarks_; }

  // Nodes i with mark a_i = 1, increasing. Empty for E8, F4, G2.
  const std::vector<int>& miniscule_coweight_indices() const { return miniscule_; }
  bool is_miniscule(int node) const;

  std::int64_t fundamental_group_order() const { return fundamental_group_order_; }

  // <lambda, theta> = sum_j comark_j * m_j; the level constraint for an
  // admissible pair (k, lambda) is this value being at most k.
  std::int64_t pairing_with_theta(const Weight& w) const;

  // Squared length normalized so long roots have length^2 = 2.
  Rational squared_length(const RootVector& r) const;

  // Weight coordinates of a root: w_j = sum_i r_i * cartan[i][j].
  Weight root_to_weight(const RootVector& r) const;

  // Whether an integer coweight vector (coordinates in the fundamental
  // coweight basis, i.e. a column vector paired against the stored Cartan
  // columns) lies in the coroot lattice.
  bool coweight_in_coroot_lattice(const std::vector<std::int64_t>& v) const;

private:
  LieType type_;
  IntMatrix cartan_;
  std::vector<Rational> symmetrizer_;
  std::vector<RootVector> positive_roots_;
  RootVector theta_;
  Weight theta_weight_;
  std::vector<std::int64_t> comarks_;
  std::vector<int> miniscule_;
  std::int64_t fundamental_group_order_ = 0;
};

// The Cartan matrix alone, without the rest of the aggregate.
IntMatrix cartan_matrix(const LieType& type);

}  // namespace liedelta
