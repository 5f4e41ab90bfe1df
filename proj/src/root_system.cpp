#include "liedelta/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace liedelta {

namespace {

std::string bracketed(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

void check_same_rank(int a, int b) {
  if (a != b) throw std::invalid_argument("rank mismatch between operands");
}

}  // namespace

Weight::Weight(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("empty weight");
}

Weight Weight::zero(int rank) {
  if (rank < 1) throw std::invalid_argument("weight rank must be positive");
  return Weight(std::vector<std::int64_t>(rank, 0));
}

Weight Weight::fundamental(int rank, int node) {
  Weight w = zero(rank);
  w.add_multiple_of_fundamental(node, 1);
  return w;
}

std::int64_t Weight::coeff(int node) const {
  if (node < 1 || node > rank()) throw std::invalid_argument("weight node out of range");
  return coeffs_[node - 1];
}

bool Weight::is_dominant() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

void Weight::add_multiple_of_fundamental(int node, std::int64_t c) {
  const int n = rank() + 1;
  int idx = node % n;
  if (idx < 0) idx += n;
  if (idx == 0) return;
  coeffs_[idx - 1] = checked_add(coeffs_[idx - 1], c);
}

Weight Weight::operator+(const Weight& o) const {
  check_same_rank(rank(), o.rank());
  std::vector<std::int64_t> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(coeffs_[i], o.coeffs_[i]);
  return Weight(std::move(r));
}

Weight Weight::operator-(const Weight& o) const {
  check_same_rank(rank(), o.rank());
  std::vector<std::int64_t> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(coeffs_[i], o.coeffs_[i]);
  return Weight(std::move(r));
}

Weight Weight::operator-() const { return scaled(-1); }

Weight Weight::scaled(std::int64_t c) const {
  std::vector<std::int64_t> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(coeffs_[i], c);
  return Weight(std::move(r));
}

std::string Weight::to_string() const { return bracketed(coeffs_); }

RootVector::RootVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("empty root vector");
}

RootVector RootVector::simple(int rank, int node) {
  if (rank < 1) throw std::invalid_argument("root rank must be positive");
  if (node < 1 || node > rank) throw std::invalid_argument("simple root index out of range");
  std::vector<std::int64_t> c(rank, 0);
  c[node - 1] = 1;
  return RootVector(std::move(c));
}

std::int64_t RootVector::coeff(int node) const {
  if (node < 1 || node > rank()) throw std::invalid_argument("root node out of range");
  return coeffs_[node - 1];
}

std::int64_t RootVector::height() const {
  std::int64_t h = 0;
  for (std::int64_t c : coeffs_) h = checked_add(h, c);
  return h;
}

std::string RootVector::to_string() const { return bracketed(coeffs_); }

IntMatrix cartan_matrix(const LieType& type) {
  const int l = type.rank();
  IntMatrix c(l, std::vector<std::int64_t>(l, 0));
  for (int i = 0; i < l; ++i) c[i][i] = 2;
  auto bond = [&](int a, int b) { c[a][b] = c[b][a] = -1; };  // 0-based
  switch (type.family()) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      c[l - 2][l - 1] = -2;  // alpha_l short
      break;
    case Family::C:
      for (int i = 0; i + 1 < l; ++i) bond(i, i + 1);
      c[l - 1][l - 2] = -2;  // alpha_l long
      break;
    case Family::D:
      for (int i = 0; i + 2 < l; ++i) bond(i, i + 1);
      bond(l - 3, l - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < l; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -2;  // alpha_3, alpha_4 short
      c[2][1] = -1;
      break;
    case Family::G:
      c[0][1] = -1;  // alpha_1 short
      c[1][0] = -3;
      break;
  }
  return c;
}

RootSystem::RootSystem(LieType type)
    : type_(type), theta_(RootVector::simple(type.rank(), 1)), theta_weight_(Weight::zero(type.rank())) {
  const int l = type_.rank();
  cartan_ = cartan_matrix(type_);

  // Symmetrizer by propagation along bonds: d_i * c[i][j] = d_j * c[j][i],
  // then rescale so the largest entry (the long roots) is 1.
  symmetrizer_.assign(l, Rational(0));
  symmetrizer_[0] = Rational(1);
  std::vector<int> todo{0};
  while (!todo.empty()) {
    const int i = todo.back();
    todo.pop_back();
    for (int j = 0; j < l; ++j) {
      if (j == i || cartan_[i][j] == 0 || !(symmetrizer_[j] == Rational(0))) continue;
      symmetrizer_[j] = symmetrizer_[i] * Rational(cartan_[j][i], cartan_[i][j]);
      todo.push_back(j);
    }
  }
  Rational max_d = symmetrizer_[0];
  for (const Rational& d : symmetrizer_)
    if (max_d < d) max_d = d;
  for (Rational& d : symmetrizer_) d = d / max_d;

  // Positive roots: closure by root strings, graded by height. For a root
  // beta of height h and simple alpha_i, beta + alpha_i is a root iff
  // p - <beta, alpha_i^vee> > 0 where p is the depth of the string below.
  std::set<RootVector> all;
  std::vector<RootVector> current;
  for (int i = 1; i <= l; ++i) {
    current.push_back(RootVector::simple(l, i));
    all.insert(current.back());
  }
  while (!current.empty()) {
    std::vector<RootVector> next;
    for (const RootVector& beta : current) {
      for (int i = 1; i <= l; ++i) {
        std::int64_t pairing = 0;
        for (int j = 1; j <= l; ++j)
          pairing = checked_add(pairing, checked_mul(beta.coeff(j), cartan_[j - 1][i - 1]));
        std::int64_t p = 0;
        std::vector<std::int64_t> walk = beta.coeffs();
        for (;;) {
          walk[i - 1] = checked_sub(walk[i - 1], 1);
          if (std::all_of(walk.begin(), walk.end(), [](std::int64_t c) { return c == 0; })) break;
          if (!all.count(RootVector(walk))) break;
          p = checked_add(p, 1);
        }
        if (checked_sub(p, pairing) > 0) {
          std::vector<std::int64_t> up = beta.coeffs();
          up[i - 1] = checked_add(up[i - 1], 1);
          RootVector candidate(std::move(up));
          if (all.insert(candidate).second) next.push_back(candidate);
        }
      }
    }
    current = std::move(next);
  }
  positive_roots_.assign(all.begin(), all.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(), [](const RootVector& a, const RootVector& b) {
    const auto ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coeffs() < b.coeffs();
  });

  // theta: the unique root of maximal height among the roots of maximal
  // squared length.
  Rational max_len(0);
  for (const RootVector& r : positive_roots_) {
    const Rational len = squared_length(r);
    if (max_len < len) max_len = len;
  }
  const RootVector* best = nullptr;
  bool unique = true;
  for (const RootVector& r : positive_roots_) {
    if (!(squared_length(r) == max_len)) continue;
    if (!best || best->height() < r.height()) {
      best = &r;
      unique = true;
    } else if (best->height() == r.height()) {
      unique = false;
    }
  }
  if (!best || !unique) throw std::logic_error("highest long root is not unique");
  theta_ = *best;
  theta_weight_ = root_to_weight(theta_);

  comarks_.assign(l, 0);
  for (int i = 0; i < l; ++i) {
    const Rational c = Rational(theta_.coeffs()[i]) * symmetrizer_[i];
    if (!c.is_integer()) throw std::logic_error("non-integral comark");
    comarks_[i] = c.num();
  }

  for (int i = 1; i <= l; ++i)
    if (theta_.coeff(i) == 1) miniscule_.push_back(i);

  fundamental_group_order_ = integer_determinant(cartan_);
}

std::int64_t RootSystem::cartan_entry(int i, int j) const {
  if (i < 1 || i > rank() || j < 1 || j > rank())
    throw std::invalid_argument("Cartan index out of range");
  return cartan_[i - 1][j - 1];
}

bool RootSystem::is_miniscule(int node) const {
  if (node < 1 || node > rank()) throw std::invalid_argument("node out of range");
  return theta_.coeff(node) == 1;
}

std::int64_t RootSystem::pairing_with_theta(const Weight& w) const {
  check_same_rank(w.rank(), rank());
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i)
    s = checked_add(s, checked_mul(comarks_[i], w.coeffs()[i]));
  return s;
}

Rational RootSystem::squared_length(const RootVector& r) const {
  check_same_rank(r.rank(), rank());
  Rational s(0);
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      s = s + Rational(checked_mul(r.coeffs()[i], r.coeffs()[j])) * Rational(cartan_[i][j]) *
                  symmetrizer_[j];
  return s;
}

Weight RootSystem::root_to_weight(const RootVector& r) const {
  check_same_rank(r.rank(), rank());
  std::vector<std::int64_t> w(rank(), 0);
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < rank(); ++i)
      w[j] = checked_add(w[j], checked_mul(r.coeffs()[i], cartan_[i][j]));
  return Weight(std::move(w));
}

bool RootSystem::coweight_in_coroot_lattice(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != rank())
    throw std::invalid_argument("coweight has wrong length");
  return solvable_over_integers(cartan_, v);
}

}  // namespace liedelta
