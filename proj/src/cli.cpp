#include "liedelta/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "liedelta/delta_action.hpp"
#include "liedelta/root_system.hpp"
#include "liedelta/weyl.hpp"

namespace liedelta::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json algebra_json(const LieType& type) {
  return {{"family", std::string(1, static_cast<char>(type.family()))}, {"rank", type.rank()}};
}

ordered_json coeff_json(const std::vector<std::int64_t>& v) { return ordered_json(v); }

void emit(std::ostream& out, const ordered_json& j) { out << j.dump() << "\n"; }

Weight parse_weight(const RootSystem& rs, const std::vector<std::int64_t>& coeffs) {
  if (static_cast<int>(coeffs.size()) != rs.rank())
    throw std::invalid_argument("--weight needs " + std::to_string(rs.rank()) +
                                " comma-separated integers for " + rs.type().name());
  return Weight(coeffs);
}

struct CommonOptions {
  std::string type_name;
  std::string format = "text";
};

void add_common(CLI::App* sub, CommonOptions& opts, bool with_format = true) {
  sub->add_option("--type", opts.type_name, "Lie type, family letter plus rank (e.g. A5, e7)")
      ->required();
  if (with_format)
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

int run_info(const CommonOptions& opts, std::ostream& out) {
  const RootSystem rs{LieType::parse(opts.type_name)};
  if (opts.format == "json") {
    ordered_json j{{"algebra", algebra_json(rs.type())}};
    ordered_json rows = ordered_json::array();
    for (const auto& row : rs.cartan()) rows.push_back(coeff_json(row));
    j["cartan"] = rows;
    j["positive_root_count"] = rs.positive_roots().size();
    j["highest_long_root"] = coeff_json(rs.highest_long_root().coeffs());
    j["highest_long_root_weight"] = coeff_json(rs.highest_long_root_weight().coeffs());
    j["marks"] = coeff_json(rs.marks());
    j["comarks"] = coeff_json(rs.comarks());
    j["miniscule_coweights"] = rs.miniscule_coweight_indices();
    j["fundamental_group_order"] = rs.fundamental_group_order();
    emit(out, j);
    return 0;
  }
  out << "type: " << rs.type().name() << "\n";
  out << "cartan matrix (rows = simple roots in fundamental-weight coordinates):\n";
  for (const auto& row : rs.cartan()) out << "  " << Weight(row).to_string() << "\n";
  out << "positive roots: " << rs.positive_roots().size() << "\n";
  out << "highest long root: " << rs.highest_long_root().to_string() << ", weight "
      << rs.highest_long_root_weight().to_string() << "\n";
  out << "marks: " << RootVector(rs.marks()).to_string() << "\n";
  out << "comarks: " << RootVector(rs.comarks()).to_string() << "\n";
  out << "miniscule coweights:";
  if (rs.miniscule_coweight_indices().empty()) out << " none";
  for (int i : rs.miniscule_coweight_indices()) out << " " << i;
  out << "\n";
  out << "fundamental group order: " << rs.fundamental_group_order() << "\n";
  return 0;
}

int run_reflect(const CommonOptions& opts, const std::vector<int>& word,
                const std::vector<std::int64_t>& weight, std::ostream& out) {
  const RootSystem rs{LieType::parse(opts.type_name)};
  const Weight from = parse_weight(rs, weight);
  const Weight to = apply_word(rs, WeylWord(word), from);
  if (opts.format == "json") {
    emit(out, ordered_json{{"algebra", algebra_json(rs.type())},
                           {"word", word},
                           {"from", coeff_json(from.coeffs())},
                           {"to", coeff_json(to.coeffs())}});
  } else {
    out << to.to_string() << "\n";
  }
  return 0;
}

int run_delta(const CommonOptions& opts, std::int64_t level, const std::vector<std::int64_t>& weight,
              int coweight, bool oracle, std::ostream& out) {
  const RootSystem rs{LieType::parse(opts.type_name)};
  const Weight from = parse_weight(rs, weight);
  const Weight to = delta_closed_form(rs, level, from, coweight);
  bool equal = true;
  Weight check = to;
  if (oracle) {
    check = delta_brute_force(rs, level, from, coweight);
    equal = (check == to);
  }
  if (opts.format == "json") {
    ordered_json j{{"algebra", algebra_json(rs.type())},
                   {"level", level},
                   {"coweight", coweight},
                   {"from", coeff_json(from.coeffs())},
                   {"to", coeff_json(to.coeffs())}};
    if (oracle) {
      j["oracle"] = coeff_json(check.coeffs());
      j["equal"] = equal;
    }
    emit(out, j);
  } else if (oracle) {
    out << "closed form: " << to.to_string() << "\n";
    out << "brute force: " << check.to_string() << "\n";
    out << (equal ? "EQUAL" : "UNEQUAL") << "\n";
  } else {
    out << to.to_string() << "\n";
  }
  return equal ? 0 : 1;
}

int run_orbits(const CommonOptions& opts, std::int64_t level, std::ostream& out) {
  const RootSystem rs{LieType::parse(opts.type_name)};
  std::set<Weight> remaining;
  for (const Weight& w : enumerate_admissible(rs, level)) remaining.insert(w);
  std::vector<std::vector<Weight>> orbits;
  while (!remaining.empty()) {
    const Weight seed = *remaining.begin();
    std::set<Weight> o = level >= 1 ? orbit(rs, level, seed) : std::set<Weight>{seed};
    orbits.emplace_back(o.begin(), o.end());
    for (const Weight& w : o) remaining.erase(w);
  }
  if (opts.format == "json") {
    ordered_json j{{"algebra", algebra_json(rs.type())}, {"level", level}};
    ordered_json arr = ordered_json::array();
    for (const auto& o : orbits) {
      ordered_json one = ordered_json::array();
      for (const Weight& w : o) one.push_back(coeff_json(w.coeffs()));
      arr.push_back(one);
    }
    j["orbits"] = arr;
    emit(out, j);
    return 0;
  }
  out << "admissible weights at level " << level << ": "
      << std::accumulate(orbits.begin(), orbits.end(), std::size_t{0},
                         [](std::size_t n, const auto& o) { return n + o.size(); })
      << ", orbits: " << orbits.size() << "\n";
  for (std::size_t n = 0; n < orbits.size(); ++n) {
    out << "orbit " << (n + 1) << " (size " << orbits[n].size() << "):";
    for (const Weight& w : orbits[n]) out << " " << w.to_string();
    out << "\n";
  }
  return 0;
}

int run_table(const CommonOptions& opts, std::int64_t level, std::ostream& out) {
  const RootSystem rs{LieType::parse(opts.type_name)};
  const ActionTable table(rs, level);
  if (opts.format == "json") {
    ordered_json arr = ordered_json::array();
    for (int i : table.coweights()) {
      ordered_json entry{{"algebra", algebra_json(rs.type())}, {"level", level}, {"coweight", i}};
      ordered_json map = ordered_json::array();
      const auto& images = table.images(i);
      for (std::size_t n = 0; n < table.domain().size(); ++n)
        map.push_back(ordered_json{{"from", coeff_json(table.domain()[n].coeffs())},
                                   {"to", coeff_json(images[n].coeffs())}});
      entry["map"] = map;
      arr.push_back(entry);
    }
    emit(out, arr);
    return 0;
  }
  out << "type " << rs.type().name() << ", level " << level << ", " << table.domain().size()
      << " admissible weights\n";
  if (table.coweights().empty()) out << "no miniscule coweights; action is trivial\n";
  for (int i : table.coweights()) {
    out << "coweight " << i << ":\n";
    const auto& images = table.images(i);
    for (std::size_t n = 0; n < table.domain().size(); ++n)
      out << "  " << table.domain()[n].to_string() << " -> " << images[n].to_string() << "\n";
  }
  return 0;
}

int run_verify(const CommonOptions& opts, const std::vector<std::int64_t>& levels,
               std::ostream& out) {
  const RootSystem rs{LieType::parse(opts.type_name)};
  const std::string name = rs.type().name();
  int passed = 0, failed = 0;
  ordered_json checks = ordered_json::array();
  const auto report = [&](const std::string& desc, bool ok) {
    out << (ok ? "PASS " : "FAIL ") << desc << "\n";
    checks.push_back(ordered_json{{"check", desc}, {"pass", ok}});
    (ok ? passed : failed) += 1;
  };

  if (rs.miniscule_coweight_indices().empty()) {
    if (opts.format == "json") {
      emit(out, ordered_json{{"algebra", algebra_json(rs.type())},
                             {"checks", checks},
                             {"passed", 0},
                             {"failed", 0},
                             {"vacuous", true}});
    } else {
      out << "verify " << name << ": no miniscule coweights, operator action is trivial; "
          << "0 checks run\n";
      out << "verify " << name << ": PASS (vacuous)\n";
    }
    return 0;
  }

  for (int i : rs.miniscule_coweight_indices()) {
    bool ok = false;
    std::string note;
    try {
      ok = affine_permutation(rs, canonical_word(rs.type(), i)) ==
           expected_permutation(rs.type(), i);
    } catch (const std::domain_error& e) {
      note = std::string(" (") + e.what() + ")";
    }
    report(name + " i=" + std::to_string(i) + ": canonical word induces the expected affine root permutation" + note,
           ok);
  }

  for (std::int64_t k : levels) {
    for (int i : rs.miniscule_coweight_indices()) {
      const auto weights = enumerate_admissible(rs, k);
      bool equal = true;
      bool admissible = true;
      std::set<Weight> images;
      for (const Weight& w : weights) {
        const Weight closed = delta_closed_form(rs, k, w, i);
        if (!(closed == delta_brute_force(rs, k, w, i))) equal = false;
        if (!is_admissible(rs, k, closed)) admissible = false;
        images.insert(closed);
      }
      const std::string prefix = name + " i=" + std::to_string(i) + " k=" + std::to_string(k);
      report(prefix + ": closed form matches the Weyl-word computation on " +
                 std::to_string(weights.size()) + " admissible weights",
             equal);
      report(prefix + ": action permutes the admissible weights",
             admissible && images.size() == weights.size());
    }
  }

  if (opts.format == "json") {
    emit(out, ordered_json{{"algebra", algebra_json(rs.type())},
                           {"checks", checks},
                           {"passed", passed},
                           {"failed", failed}});
  } else {
    out << "verify " << name << ": " << (passed + failed) << " checks, " << passed << " passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact action of miniscule-coweight operators on level-k highest weights"};
  app.name("liedelta");
  app.require_subcommand(1);

  CommonOptions info_opts;
  auto* info = app.add_subcommand("info", "print the static data of a root system");
  add_common(info, info_opts);

  CommonOptions reflect_opts;
  std::vector<int> reflect_word;
  std::vector<std::int64_t> reflect_weight;
  auto* reflect = app.add_subcommand("reflect", "apply a Weyl word to a weight");
  add_common(reflect, reflect_opts);
  reflect->add_option("--word", reflect_word, "letters, rightmost acts first")
      ->required()
      ->delimiter(',');
  reflect->add_option("--weight", reflect_weight, "fundamental-weight coordinates")
      ->required()
      ->delimiter(',');

  CommonOptions delta_opts;
  std::int64_t delta_level = 0;
  std::vector<std::int64_t> delta_weight;
  int delta_coweight = 0;
  bool delta_oracle = false;
  auto* delta = app.add_subcommand("delta", "apply a miniscule-coweight operator to a weight");
  add_common(delta, delta_opts);
  delta->add_option("--level", delta_level, "level k >= 1")->required();
  delta->add_option("--weight", delta_weight, "fundamental-weight coordinates")
      ->required()
      ->delimiter(',');
  delta->add_option("--coweight", delta_coweight, "miniscule node index")->required();
  delta->add_flag("--oracle", delta_oracle, "also run the Weyl-word computation and compare");

  CommonOptions verify_opts;
  std::vector<std::int64_t> verify_levels;
  auto* verify = app.add_subcommand(
      "verify", "check canonical words and closed forms against independent computations");
  add_common(verify, verify_opts);
  verify->add_option("--level", verify_levels, "levels to sweep (default 1,2,3)")->delimiter(',');

  CommonOptions orbits_opts;
  std::int64_t orbits_level = 0;
  auto* orbits = app.add_subcommand("orbits", "orbits of the admissible weights at a level");
  add_common(orbits, orbits_opts);
  orbits->add_option("--level", orbits_level, "level k >= 0")->required();

  CommonOptions table_opts;
  std::int64_t table_level = 0;
  auto* table = app.add_subcommand("table", "full action table at a level");
  add_common(table, table_opts);
  table->add_option("--level", table_level, "level k >= 1")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(info)) return run_info(info_opts, out);
    if (app.got_subcommand(reflect))
      return run_reflect(reflect_opts, reflect_word, reflect_weight, out);
    if (app.got_subcommand(delta))
      return run_delta(delta_opts, delta_level, delta_weight, delta_coweight, delta_oracle, out);
    if (app.got_subcommand(verify)) {
      if (verify_levels.empty()) verify_levels = {1, 2, 3};
      return run_verify(verify_opts, verify_levels, out);
    }
    if (app.got_subcommand(orbits)) return run_orbits(orbits_opts, orbits_level, out);
    if (app.got_subcommand(table)) return run_table(table_opts, table_level, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace liedelta::cli
