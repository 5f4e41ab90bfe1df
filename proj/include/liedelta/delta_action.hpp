#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "liedelta/root_system.hpp"
#include "liedelta/weyl.hpp"

namespace liedelta {

// A level together with a dominant weight satisfying the level constraint
// <lambda, theta> <= k. Construction validates both and throws
// std::invalid_argument on violation.
struct LevelWeight {
  LevelWeight(const RootSystem& rs, std::int64_t level, Weight weight);

  std::int64_t level;
  Weight weight;
};

bool is_admissible(const RootSystem& rs, std::int64_t k, const Weight& w);

// The weight shift induced by the operator attached to the miniscule node i
// at level k, per-family closed form. Requires k >= 1, i miniscule and
// (k, w) admissible.
Weight delta_closed_form(const RootSystem& rs, std::int64_t k, const Weight& w, int i);

// The same shift computed the long way: apply the canonical word for node i
// to the weight, then add k times the fundamental weight at the node the
// word sends alpha_0 to. Same preconditions as the closed form.
Weight delta_brute_force(const RootSystem& rs, std::int64_t k, const Weight& w, int i);

// All admissible dominant weights at level k, in lexicographic order of
// their coordinate vectors. k = 0 yields the zero weight only.
std::vector<Weight> enumerate_admissible(const RootSystem& rs, std::int64_t k);

// Closure of a weight under every miniscule-node operator at level k,
// as a sorted set. A type with no miniscule node yields {w}.
std::set<Weight> orbit(const RootSystem& rs, std::int64_t k, const Weight& w);

// The full action at level k: for each miniscule node, the permutation the
// operator induces on the admissible weights. Construction verifies each
// map is an admissibility-preserving bijection and throws std::logic_error
// otherwise.
class ActionTable {
public:
  ActionTable(const RootSystem& rs, std::int64_t k);

  const LieType& type() const { return type_; }
  std::int64_t level() const { return level_; }
  const std::vector<Weight>& domain() const { return domain_; }
  const std::vector<int>& coweights() const { return coweights_; }

  // Image list aligned with domain(); node must be miniscule.
  const std::vector<Weight>& images(int node) const;

private:
  LieType type_;
  std::int64_t level_;
  std::vector<Weight> domain_;
  std::vector<int> coweights_;
  std::map<int, std::vector<Weight>> images_;
};

}  // namespace liedelta
