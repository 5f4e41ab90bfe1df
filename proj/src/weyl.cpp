#include "liedelta/weyl.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace liedelta {

namespace {

[[noreturn]] void not_miniscule(const LieType& type, int i) {
  throw std::invalid_argument("node " + std::to_string(i) + " is not a miniscule coweight of " +
                              type.name());
}

std::vector<int> ascending(int from, int to) {
  std::vector<int> v;
  for (int x = from; x <= to; ++x) v.push_back(x);
  return v;
}

std::vector<int> descending(int from, int to) {
  std::vector<int> v;
  for (int x = from; x >= to; --x) v.push_back(x);
  return v;
}

void append(std::vector<int>& dst, const std::vector<int>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

Weight affine_simple_root_weight(const RootSystem& rs, int j) {
  if (j == 0) return -rs.highest_long_root_weight();
  std::vector<std::int64_t> row = rs.cartan()[j - 1];
  return Weight(std::move(row));
}

}  // namespace

Weight reflect(const RootSystem& rs, int i, const Weight& w) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("reflection index out of range");
  if (w.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  const std::int64_t m = w.coeffs()[i - 1];
  std::vector<std::int64_t> r = w.coeffs();
  for (int j = 0; j < rs.rank(); ++j)
    r[j] = checked_sub(r[j], checked_mul(m, rs.cartan()[i - 1][j]));
  return Weight(std::move(r));
}

Weight apply_word(const RootSystem& rs, const WeylWord& word, const Weight& w) {
  Weight out = w;
  const auto& letters = word.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) out = reflect(rs, *it, out);
  return out;
}

WeylWord canonical_word(const LieType& type, int i) {
  const int l = type.rank();
  std::vector<int> letters;
  switch (type.family()) {
    case Family::A: {
      if (i < 1 || i > l) not_miniscule(type, i);
      for (int rep = 0; rep < i; ++rep) append(letters, ascending(1, l));
      break;
    }
    case Family::B: {
      if (i != 1) not_miniscule(type, i);
      append(letters, ascending(1, l));
      append(letters, descending(l - 1, 1));
      break;
    }
    case Family::C: {
      if (i != l) not_miniscule(type, i);
      for (int t = 1; t <= l; ++t) append(letters, descending(l, t));
      break;
    }
    case Family::D: {
      if (i == 1) {
        append(letters, ascending(1, l));
        append(letters, descending(l - 2, 1));
      } else if (i == l - 1 || i == l) {
        const int other = (i == l) ? l - 1 : l;
        for (int t = 1; t <= l - 1; ++t) {
          letters.push_back(t % 2 == 1 ? i : other);
          append(letters, descending(l - 2, t));
        }
      } else {
        not_miniscule(type, i);
      }
      break;
    }
    case Family::E: {
      if (l == 6 && i == 1) {
        letters = {1, 3, 4, 2, 5, 4, 3, 1, 6, 5, 4, 2, 3, 4, 5, 6};
      } else if (l == 6 && i == 6) {
        letters = {6, 5, 4, 2, 3, 4, 5, 6, 1, 3, 4, 2, 5, 4, 3, 1};
      } else if (l == 7 && i == 7) {
        letters = {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6, 7};
      } else {
        not_miniscule(type, i);
      }
      break;
    }
    case Family::F:
    case Family::G:
      not_miniscule(type, i);
  }
  return WeylWord(std::move(letters));
}

int affine_root_image(const RootSystem& rs, const WeylWord& word, int j) {
  const int l = rs.rank();
  if (j < 0 || j > l) throw std::invalid_argument("affine root index out of range");
  const Weight image = apply_word(rs, word, affine_simple_root_weight(rs, j));
  for (int m = 0; m <= l; ++m)
    if (image == affine_simple_root_weight(rs, m)) return m;
  throw std::domain_error("image of affine simple root " + std::to_string(j) +
                          " is not an affine simple root: " + image.to_string());
}

std::vector<int> affine_permutation(const RootSystem& rs, const WeylWord& word) {
  const int l = rs.rank();
  std::vector<int> perm(l + 1);
  std::vector<bool> seen(l + 1, false);
  for (int j = 0; j <= l; ++j) {
    perm[j] = affine_root_image(rs, word, j);
    if (seen[perm[j]])
      throw std::domain_error("word does not permute the affine simple roots: image " +
                              std::to_string(perm[j]) + " hit twice");
    seen[perm[j]] = true;
  }
  return perm;
}

std::vector<int> expected_permutation(const LieType& type, int i) {
  const int l = type.rank();
  std::vector<int> perm(l + 1);
  std::iota(perm.begin(), perm.end(), 0);
  switch (type.family()) {
    case Family::A: {
      if (i < 1 || i > l) not_miniscule(type, i);
      for (int j = 0; j <= l; ++j) perm[j] = (j + i) % (l + 1);
      break;
    }
    case Family::B: {
      if (i != 1) not_miniscule(type, i);
      std::swap(perm[0], perm[1]);
      break;
    }
    case Family::C: {
      if (i != l) not_miniscule(type, i);
      for (int j = 0; j <= l; ++j) perm[j] = l - j;
      break;
    }
    case Family::D: {
      if (i == 1) {
        std::swap(perm[0], perm[1]);
        std::swap(perm[l - 1], perm[l]);
      } else if (i == l - 1 || i == l) {
        const bool even = l % 2 == 0;
        for (int j = 0; j <= l; ++j) perm[j] = l - j;
        if (even && i == l - 1) {
          perm[0] = l - 1;
          perm[1] = l;
          perm[l - 1] = 0;
          perm[l] = 1;
        } else if (!even && i == l - 1) {
          perm[0] = l - 1;
          perm[1] = l;
          perm[l - 1] = 1;
          perm[l] = 0;
        } else if (!even && i == l) {
          perm[l - 1] = 0;
          perm[l] = 1;
        }
      } else {
        not_miniscule(type, i);
      }
      break;
    }
    case Family::E: {
      if (l == 6 && i == 1) {
        perm = {1, 6, 3, 5, 4, 2, 0};
      } else if (l == 6 && i == 6) {
        perm = {6, 0, 5, 2, 4, 3, 1};
      } else if (l == 7 && i == 7) {
        perm = {7, 6, 2, 5, 4, 3, 1, 0};
      } else {
        not_miniscule(type, i);
      }
      break;
    }
    case Family::F:
    case Family::G:
      not_miniscule(type, i);
  }
  return perm;
}

}  // namespace liedelta
