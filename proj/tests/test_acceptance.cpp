// Acceptance gate: eight exact, property-based checks over the whole
// supported type range. Each prints a single PASS/FAIL line; the process
// exits nonzero if any fails.

#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "liedelta/cli.hpp"
#include "liedelta/delta_action.hpp"
#include "liedelta/root_system.hpp"
#include "liedelta/weyl.hpp"

using namespace liedelta;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << number << ": " << what;
  if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

template <typename Fn>
void run_criterion(int number, const std::string& what, Fn fn) {
  try {
    std::string detail;
    const bool ok = fn(detail);
    criterion(number, what, ok, detail);
  } catch (const std::exception& e) {
    criterion(number, what, false, e.what());
  }
}

std::vector<LieType> miniscule_types() {
  std::vector<LieType> types;
  for (int l = 1; l <= 8; ++l) types.emplace_back(Family::A, l);
  for (int l = 2; l <= 8; ++l) types.emplace_back(Family::B, l);
  for (int l = 2; l <= 8; ++l) types.emplace_back(Family::C, l);
  for (int l = 4; l <= 8; ++l) types.emplace_back(Family::D, l);
  types.emplace_back(Family::E, 6);
  types.emplace_back(Family::E, 7);
  return types;
}

std::vector<LieType> all_types() {
  std::vector<LieType> types = miniscule_types();
  types.emplace_back(Family::E, 8);
  types.emplace_back(Family::F, 4);
  types.emplace_back(Family::G, 2);
  return types;
}

// The permutation a coweight operator induces on the admissible set, as
// index positions into the table's domain.
std::vector<std::size_t> table_permutation(const ActionTable& table, int i) {
  std::map<Weight, std::size_t> position;
  for (std::size_t n = 0; n < table.domain().size(); ++n) position[table.domain()[n]] = n;
  std::vector<std::size_t> perm;
  perm.reserve(table.domain().size());
  for (const Weight& w : table.images(i)) perm.push_back(position.at(w));
  return perm;
}

bool is_identity(const std::vector<std::size_t>& perm) {
  for (std::size_t n = 0; n < perm.size(); ++n)
    if (perm[n] != n) return false;
  return true;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& f,
                                 const std::vector<std::size_t>& g) {
  std::vector<std::size_t> h(f.size());
  for (std::size_t n = 0; n < f.size(); ++n) h[n] = f[g[n]];
  return h;
}

}  // namespace

int main() {
  run_criterion(1, "every canonical word permutes the affine simple roots as its closed form predicts",
                [](std::string& detail) {
    bool ok = true;
    for (const LieType& type : miniscule_types()) {
      const RootSystem rs(type);
      for (int i : rs.miniscule_coweight_indices())
        if (affine_permutation(rs, canonical_word(type, i)) != expected_permutation(type, i)) {
          ok = false;
          detail = type.name() + " i=" + std::to_string(i);
        }
    }
    return ok;
  });

  run_criterion(2, "closed-form action equals the Weyl-word computation on all admissible weights, k <= 3",
                [](std::string& detail) {
    bool ok = true;
    for (const LieType& type : miniscule_types()) {
      const RootSystem rs(type);
      for (std::int64_t k = 1; k <= 3; ++k) {
        const auto weights = enumerate_admissible(rs, k);
        for (int i : rs.miniscule_coweight_indices())
          for (const Weight& w : weights)
            if (!(delta_closed_form(rs, k, w, i) == delta_brute_force(rs, k, w, i))) {
              ok = false;
              detail = type.name() + " i=" + std::to_string(i) + " k=" + std::to_string(k) +
                       " at " + w.to_string();
            }
      }
    }
    return ok;
  });

  run_criterion(3, "rank-one action sends n to k-n for all k <= 10", [](std::string& detail) {
    const RootSystem a1{LieType(Family::A, 1)};
    bool ok = true;
    for (std::int64_t k = 1; k <= 10; ++k)
      for (std::int64_t n = 0; n <= k; ++n)
        if (!(delta_closed_form(a1, k, Weight({n}), 1) == Weight({k - n}))) {
          ok = false;
          detail = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        }
    return ok;
  });

  run_criterion(4, "operators realize the fundamental group: type-A powers, order, vacuum image",
                [](std::string& detail) {
    bool ok = true;
    for (std::int64_t k = 1; k <= 3 && ok; ++k) {
      // j-fold power of the first type-A operator equals the j-th operator
      for (int l = 1; l <= 8 && ok; ++l) {
        const RootSystem rs{LieType(Family::A, l)};
        const ActionTable table(rs, k);
        const auto step = table_permutation(table, 1);
        std::vector<std::size_t> power = step;
        for (int j = 2; j <= l; ++j) {
          power = compose(step, power);
          if (power != table_permutation(table, j)) {
            ok = false;
            detail = "A" + std::to_string(l) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
          }
        }
      }
      // each operator's permutation, raised to the group order, is the identity
      for (const LieType& type : miniscule_types()) {
        const RootSystem rs(type);
        const ActionTable table(rs, k);
        for (int i : rs.miniscule_coweight_indices()) {
          const auto step = table_permutation(table, i);
          std::vector<std::size_t> power(step.size());
          for (std::size_t n = 0; n < power.size(); ++n) power[n] = n;
          for (std::int64_t rep = 0; rep < rs.fundamental_group_order(); ++rep)
            power = compose(step, power);
          if (!is_identity(power)) {
            ok = false;
            detail = type.name() + " i=" + std::to_string(i) + " k=" + std::to_string(k);
          }
        }
        // the zero weight maps to k times the fundamental weight at the node
        for (int i : rs.miniscule_coweight_indices())
          if (!(delta_closed_form(rs, k, Weight::zero(rs.rank()), i) ==
                Weight::fundamental(rs.rank(), i).scaled(k))) {
            ok = false;
            detail = type.name() + " vacuum i=" + std::to_string(i);
          }
      }
    }
    return ok;
  });

  run_criterion(5, "each operator is an admissibility-preserving bijection; enumeration counts",
                [](std::string& detail) {
    bool ok = true;
    for (const LieType& type : miniscule_types()) {
      const RootSystem rs(type);
      for (std::int64_t k = 1; k <= 3; ++k) {
        // ActionTable construction verifies image admissibility and injectivity
        const ActionTable table(rs, k);
        if (table.domain().empty()) {
          ok = false;
          detail = type.name() + " empty domain";
        }
      }
    }
    if (enumerate_admissible(RootSystem{LieType(Family::A, 2)}, 1).size() != 3) {
      ok = false;
      detail = "A2 level-1 count";
    }
    if (enumerate_admissible(RootSystem{LieType(Family::E, 7)}, 1).size() != 2) {
      ok = false;
      detail = "E7 level-1 count";
    }
    return ok;
  });

  run_criterion(6, "determinants and coweight cosets: 0 with the miniscule nodes hits every class",
                [](std::string& detail) {
    bool ok = true;
    const std::map<char, std::int64_t> fixed{{'B', 2}, {'C', 2}, {'D', 4}, {'F', 1}, {'G', 1}};
    for (const LieType& type : all_types()) {
      const RootSystem rs(type);
      std::int64_t expected;
      if (type.family() == Family::A)
        expected = type.rank() + 1;
      else if (type.family() == Family::E)
        expected = 9 - type.rank();
      else
        expected = fixed.at(static_cast<char>(type.family()));
      if (rs.fundamental_group_order() != expected) {
        ok = false;
        detail = type.name() + " determinant";
      }

      const auto& nodes = rs.miniscule_coweight_indices();
      auto basis_vector = [&](int node) {
        std::vector<std::int64_t> e(rs.rank(), 0);
        e[node - 1] = 1;
        return e;
      };
      for (std::size_t a = 0; a < nodes.size(); ++a) {
        if (rs.coweight_in_coroot_lattice(basis_vector(nodes[a]))) {
          ok = false;
          detail = type.name() + " node " + std::to_string(nodes[a]) + " in lattice";
        }
        for (std::size_t b = a + 1; b < nodes.size(); ++b) {
          auto diff = basis_vector(nodes[a]);
          diff[nodes[b] - 1] -= 1;
          if (rs.coweight_in_coroot_lattice(diff)) {
            ok = false;
            detail = type.name() + " nodes coincide mod lattice";
          }
        }
      }
      if (static_cast<std::int64_t>(nodes.size()) + 1 != rs.fundamental_group_order()) {
        ok = false;
        detail = type.name() + " coset count";
      }
    }
    return ok;
  });

  run_criterion(7, "miniscule simple roots are long: squared length 2 under the symmetrized form",
                [](std::string& detail) {
    bool ok = true;
    for (const LieType& type : all_types()) {
      const RootSystem rs(type);
      for (int i : rs.miniscule_coweight_indices())
        if (!(rs.squared_length(RootVector::simple(rs.rank(), i)) == Rational(2))) {
          ok = false;
          detail = type.name() + " i=" + std::to_string(i);
        }
    }
    return ok;
  });

  run_criterion(8, "E8, F4, G2 have no miniscule coweights and verify reports a vacuous pass",
                [](std::string& detail) {
    bool ok = true;
    for (const char* name : {"E8", "F4", "G2"}) {
      const RootSystem rs{LieType::parse(name)};
      if (!rs.miniscule_coweight_indices().empty()) {
        ok = false;
        detail = std::string(name) + " has miniscule nodes";
      }
      std::ostringstream out, err;
      const int code = cli::run({"verify", "--type", name}, out, err);
      if (code != 0 || out.str().find("vacuous") == std::string::npos) {
        ok = false;
        detail = std::string(name) + " verify exit " + std::to_string(code);
      }
    }
    return ok;
  });

  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << failures << " acceptance criteria failed\n";
  return 1;
}
