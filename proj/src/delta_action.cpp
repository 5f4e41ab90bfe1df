#include "liedelta/delta_action.hpp"

#include <stdexcept>
#include <string>

namespace liedelta {

namespace {

void require_action_inputs(const RootSystem& rs, std::int64_t k, const Weight& w, int i) {
  if (k < 1) throw std::invalid_argument("operator action requires level k >= 1");
  if (!rs.is_miniscule(i))
    throw std::invalid_argument("node " + std::to_string(i) + " is not a miniscule coweight of " +
                                rs.type().name());
  if (!is_admissible(rs, k, w))
    throw std::invalid_argument("weight " + w.to_string() + " is not admissible at level " +
                                std::to_string(k));
}

}  // namespace

LevelWeight::LevelWeight(const RootSystem& rs, std::int64_t level_in, Weight weight_in)
    : level(level_in), weight(std::move(weight_in)) {
  if (level < 0) throw std::invalid_argument("level must be nonnegative");
  if (!is_admissible(rs, level, weight))
    throw std::invalid_argument("weight " + weight.to_string() + " is not admissible at level " +
                                std::to_string(level));
}

bool is_admissible(const RootSystem& rs, std::int64_t k, const Weight& w) {
  if (w.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  if (k < 0) return false;
  return w.is_dominant() && rs.pairing_with_theta(w) <= k;
}

Weight delta_closed_form(const RootSystem& rs, std::int64_t k, const Weight& w, int i) {
  require_action_inputs(rs, k, w, i);
  const int l = rs.rank();
  const std::int64_t c = checked_sub(k, rs.pairing_with_theta(w));
  const auto m = [&](int j) { return w.coeff(j); };
  Weight out = Weight::zero(l);
  const auto add = [&](int node, std::int64_t v) { out.add_multiple_of_fundamental(node, v); };

  switch (rs.type().family()) {
    case Family::A:
      for (int j = 1; j <= l; ++j) add(j + i, m(j));
      add(i, c);
      break;
    case Family::B:
      add(1, c);
      for (int j = 2; j <= l; ++j) add(j, m(j));
      break;
    case Family::C:
      for (int j = 1; j <= l; ++j) add(l - j, m(j));
      add(l, c);
      break;
    case Family::D:
      if (i == 1) {
        add(1, c);
        for (int j = 2; j <= l - 2; ++j) add(j, m(j));
        add(l - 1, m(l));
        add(l, m(l - 1));
      } else if (i == l - 1) {
        add(1, l % 2 == 1 ? m(l - 1) : m(l));
        for (int j = 2; j <= l - 2; ++j) add(l - j, m(j));
        add(l - 1, c);
        add(l, m(1));
      } else {
        add(1, l % 2 == 1 ? m(l) : m(l - 1));
        for (int j = 2; j <= l - 2; ++j) add(l - j, m(j));
        add(l - 1, m(1));
        add(l, c);
      }
      break;
    case Family::E:
      if (l == 6 && i == 1) {
        out = Weight({c, m(5), m(2), m(4), m(3), m(1)});
      } else if (l == 6 && i == 6) {
        out = Weight({m(6), m(3), m(5), m(4), m(2), c});
      } else {
        out = Weight({m(6), m(2), m(5), m(4), m(3), m(1), c});
      }
      break;
    case Family::F:
    case Family::G:
      break;  // unreachable: no miniscule nodes
  }
  return out;
}

Weight delta_brute_force(const RootSystem& rs, std::int64_t k, const Weight& w, int i) {
  require_action_inputs(rs, k, w, i);
  Weight out = apply_word(rs, canonical_word(rs.type(), i), w);
  out.add_multiple_of_fundamental(i, k);
  return out;
}

std::vector<Weight> enumerate_admissible(const RootSystem& rs, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("level must be nonnegative");
  const int l = rs.rank();
  const auto& comarks = rs.comarks();
  std::vector<Weight> result;
  std::vector<std::int64_t> cur(l, 0);
  const auto rec = [&](const auto& self, int pos, std::int64_t budget) -> void {
    if (pos == l) {
      result.push_back(Weight(cur));
      return;
    }
    for (std::int64_t v = 0;; ++v) {
      const std::int64_t cost = checked_mul(v, comarks[pos]);
      if (cost > budget) break;
      cur[pos] = v;
      self(self, pos + 1, budget - cost);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, k);
  return result;
}

std::set<Weight> orbit(const RootSystem& rs, std::int64_t k, const Weight& w) {
  if (k < 1) throw std::invalid_argument("operator action requires level k >= 1");
  if (!is_admissible(rs, k, w))
    throw std::invalid_argument("weight " + w.to_string() + " is not admissible at level " +
                                std::to_string(k));
  std::set<Weight> all{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& x : frontier)
      for (int i : rs.miniscule_coweight_indices()) {
        Weight y = delta_closed_form(rs, k, x, i);
        if (all.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return all;
}

ActionTable::ActionTable(const RootSystem& rs, std::int64_t k) : type_(rs.type()), level_(k) {
  if (k < 1) throw std::invalid_argument("operator action requires level k >= 1");
  domain_ = enumerate_admissible(rs, k);
  coweights_ = rs.miniscule_coweight_indices();
  for (int i : coweights_) {
    std::vector<Weight> img;
    img.reserve(domain_.size());
    std::set<Weight> seen;
    for (const Weight& w : domain_) {
      Weight y = delta_closed_form(rs, k, w, i);
      if (!is_admissible(rs, k, y))
        throw std::logic_error("operator " + std::to_string(i) + " left the admissible set at " +
                               w.to_string());
      if (!seen.insert(y).second)
        throw std::logic_error("operator " + std::to_string(i) + " is not injective at " +
                               w.to_string());
      img.push_back(std::move(y));
    }
    images_[i] = std::move(img);
  }
}

const std::vector<Weight>& ActionTable::images(int node) const {
  const auto it = images_.find(node);
  if (it == images_.end())
    throw std::invalid_argument("node " + std::to_string(node) + " is not a miniscule coweight of " +
                                type_.name());
  return it->second;
}

}  // namespace liedelta
