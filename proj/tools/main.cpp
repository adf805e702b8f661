/*
 *   Copyright 2026 The ehresmann-lab developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehresmann/biaction.hpp"
#include "ehresmann/boolean_monoid.hpp"
#include "ehresmann/category.hpp"
#include "ehresmann/embedding.hpp"
#include "ehresmann/enumerate.hpp"
#include "ehresmann/io.hpp"
#include "ehresmann/powerset.hpp"
#include "ehresmann/suites.hpp"

namespace {

using nlohmann::json;
using namespace ehresmann;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  bool json = false;
  int witness_limit = 5;
  std::uint64_t cap = kDefaultCellCap;
};

json violation_json(const Violation& v) {
  json out;
  out["law"] = v.law;
  out["witness"] = v.witness;
  out["detail"] = v.detail;
  if (v.line > 0) {
    out["line"] = v.line;
    out["column"] = v.column;
  }
  return out;
}

int input_error(const Options& opt, const std::string& command, const std::string& message) {
  if (opt.json) {
    json out;
    out["command"] = command;
    out["ok"] = false;
    out["error"] = message;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return kExitInputError;
}

int check_failed(const Options& opt, const std::string& command, const Violation& why) {
  if (opt.json) {
    json out;
    out["command"] = command;
    out["ok"] = false;
    out["violation"] = violation_json(why);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "FAIL " << to_string(why) << "\n";
  }
  return kExitCheckFailed;
}

Checked<InstanceFile> load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    Violation v;
    v.law = "io/read";
    v.detail = "cannot read '" + path + "'";
    return v;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

bool write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return false;
  out << text;
  return true;
}

int run_check(const Options& opt, const std::string& path) {
  auto file = load_instance(path);
  if (!file.ok()) {
    if (opt.json) {
      json out;
      out["command"] = "check";
      out["file"] = path;
      out["ok"] = false;
      out["violation"] = violation_json(file.violation());
      std::cout << out.dump(2) << "\n";
    } else {
      std::cerr << path << ": " << to_string(file.violation()) << "\n";
    }
    return kExitInputError;
  }
  const auto verdict = check_instance(file.value());
  if (opt.json) {
    json out;
    out["command"] = "check";
    out["file"] = path;
    out["kind"] = to_string(file.value().kind);
    out["ok"] = verdict.ok;
    if (verdict.ok) {
      out["summary"] = verdict.summary;
    } else {
      out["violation"] = violation_json(verdict.why);
    }
    std::cout << out.dump(2) << "\n";
  } else if (verdict.ok) {
    std::cout << "OK " << verdict.summary << "\n";
  } else {
    std::cout << "FAIL " << to_string(verdict.why) << "\n";
  }
  return verdict.ok ? kExitOk : kExitCheckFailed;
}

// Loads and validates the category in `path`, reporting through `status`.
std::optional<FiniteCategory> load_category(const Options& opt, const std::string& command,
                                            const std::string& path, int& status) {
  auto file = load_instance(path);
  if (!file.ok()) {
    status = input_error(opt, command, path + ": " + to_string(file.violation()));
    return std::nullopt;
  }
  if (file.value().kind != InstanceKind::Category) {
    status = input_error(opt, command, path + ": expected a CATEGORY instance");
    return std::nullopt;
  }
  auto checked = validate_category(std::get<FiniteCategory>(std::move(file.value().body)));
  if (!checked.ok()) {
    status = check_failed(opt, command, checked.violation());
    return std::nullopt;
  }
  return std::move(checked).value();
}

int run_powerset(const Options& opt, const std::string& path, const std::string& out_path) {
  int status = kExitOk;
  auto category = load_category(opt, "powerset", path, status);
  if (!category) return status;
  auto monoid = build_powerset_monoid(*category, opt.cap);
  if (!monoid.ok()) {
    return input_error(opt, "powerset", to_string(monoid.violation()));
  }
  const std::string text = serialize_boolean(monoid.value());
  if (opt.json) {
    json out;
    out["command"] = "powerset";
    out["ok"] = true;
    out["elements"] = monoid.value().size();
    out["instance"] = text;
    std::cout << out.dump(2) << "\n";
    if (!out_path.empty() && !write_output(out_path, text)) {
      return input_error(opt, "powerset", "cannot write '" + out_path + "'");
    }
    return kExitOk;
  }
  if (!write_output(out_path, text)) {
    return input_error(opt, "powerset", "cannot write '" + out_path + "'");
  }
  return kExitOk;
}

int run_classify(const Options& opt, const std::string& path) {
  int status = kExitOk;
  auto category = load_category(opt, "classify", path, status);
  if (!category) return status;
  const int n = category->size();
  if (n > kMaxSubsetWidth || (n < 63 && (std::uint64_t{1} << n) > opt.cap)) {
    return input_error(opt, "classify",
                       "2^" + std::to_string(n) + " subsets exceed the cap " +
                           std::to_string(opt.cap));
  }
  std::vector<std::string> names(n);
  for (Index x = 0; x < n; ++x) names[x] = category->name(x);

  json rows = json::array();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto cls = classify_subset(*category, mask);
    const bool bidet = cls.deterministic && cls.codeterministic;
    if (opt.json) {
      json row;
      row["subset"] = mask;
      row["members"] = mask_to_string(mask, names);
      row["deterministic"] = cls.deterministic;
      row["codeterministic"] = cls.codeterministic;
      row["bideterministic"] = bidet;
      row["partial_isometry"] = cls.partial_isometry;
      rows.push_back(std::move(row));
    } else {
      std::cout << mask << " " << mask_to_string(mask, names) << " det=" << cls.deterministic
                << " codet=" << cls.codeterministic << " bidet=" << bidet
                << " pi=" << cls.partial_isometry << "\n";
    }
  }
  if (opt.json) {
    json out;
    out["command"] = "classify";
    out["ok"] = true;
    out["subsets"] = std::move(rows);
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_reconstruct(const Options& opt, const std::string& path, const std::string& out_path) {
  auto file = load_instance(path);
  if (!file.ok()) {
    return input_error(opt, "reconstruct", path + ": " + to_string(file.violation()));
  }
  if (file.value().kind != InstanceKind::Boolean) {
    return input_error(opt, "reconstruct", path + ": expected a BOOLEAN instance");
  }
  auto& raw = std::get<BooleanInstance>(file.value().body);
  auto sg = check_ehresmann(std::move(raw.sg));
  if (!sg.ok()) return check_failed(opt, "reconstruct", sg.violation());
  auto monoid = check_boolean(std::move(sg).value(), down_rows(raw.leq));
  if (!monoid.ok()) return check_failed(opt, "reconstruct", monoid.violation());
  auto phi = phi_isomorphism(monoid.value());
  if (!phi.ok()) return check_failed(opt, "reconstruct", phi.violation());

  const std::string text = serialize_category(phi.value().category);
  bool verified = true;
  for (const auto& a : phi.value().asserted) {
    if (!a.result.ok) verified = false;
  }
  if (opt.json) {
    json out;
    out["command"] = "reconstruct";
    out["ok"] = verified;
    out["atoms"] = phi.value().category.size();
    json assertions = json::array();
    for (const auto& a : phi.value().asserted) {
      json row;
      row["id"] = a.id;
      row["pass"] = a.result.ok;
      if (!a.result.ok) row["violation"] = violation_json(a.result.why);
      assertions.push_back(std::move(row));
    }
    out["assertions"] = std::move(assertions);
    out["category"] = text;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& a : phi.value().asserted) {
      std::cout << (a.result.ok ? "PASS " : "FAIL ") << a.id;
      if (!a.result.ok) std::cout << "  " << to_string(a.result.why);
      std::cout << "\n";
    }
  }
  if (!out_path.empty() || !opt.json) {
    if (!write_output(out_path, text)) {
      return input_error(opt, "reconstruct", "cannot write '" + out_path + "'");
    }
  }
  return verified ? kExitOk : kExitCheckFailed;
}

int run_pseudoproduct(const Options& opt, const std::string& path, const std::string& out_path) {
  auto file = load_instance(path);
  if (!file.ok()) {
    return input_error(opt, "pseudoproduct", path + ": " + to_string(file.violation()));
  }
  if (file.value().kind != InstanceKind::Biaction) {
    return input_error(opt, "pseudoproduct", path + ": expected a BIACTION instance");
  }
  auto checked = check_biaction(std::get<EhresmannBiaction>(std::move(file.value().body)));
  if (!checked.ok()) return check_failed(opt, "pseudoproduct", checked.violation());

  const auto semigroup = semigroup_from_biaction(checked.value());
  const std::string text = serialize_semigroup(semigroup);
  if (opt.json) {
    json out;
    out["command"] = "pseudoproduct";
    out["ok"] = true;
    out["elements"] = semigroup.size();
    out["instance"] = text;
    std::cout << out.dump(2) << "\n";
    if (!out_path.empty() && !write_output(out_path, text)) {
      return input_error(opt, "pseudoproduct", "cannot write '" + out_path + "'");
    }
    return kExitOk;
  }
  if (!write_output(out_path, text)) {
    return input_error(opt, "pseudoproduct", "cannot write '" + out_path + "'");
  }
  return kExitOk;
}

int run_embed_restriction(const Options& opt, const std::string& path) {
  auto file = load_instance(path);
  if (!file.ok()) {
    return input_error(opt, "embed-restriction", path + ": " + to_string(file.violation()));
  }
  if (file.value().kind != InstanceKind::Semigroup) {
    return input_error(opt, "embed-restriction", path + ": expected a SEMIGROUP instance");
  }
  auto sg = check_ehresmann(std::get<EhresmannSemigroup>(std::move(file.value().body)));
  if (!sg.ok()) return check_failed(opt, "embed-restriction", sg.violation());
  auto embedding = embed_alpha(sg.value());
  if (!embedding.ok()) return check_failed(opt, "embed-restriction", embedding.violation());

  const auto& result = embedding.value();
  std::vector<std::string> names(result.category.size());
  for (Index x = 0; x < result.category.size(); ++x) names[x] = result.category.name(x);
  const bool ok = result.verdict.ok();
  if (opt.json) {
    json out;
    out["command"] = "embed-restriction";
    out["ok"] = ok;
    out["images_partial_isometries"] = result.verdict.images_partial_isometries;
    out["injective"] = result.verdict.injective;
    out["multiplicative"] = result.verdict.multiplicative;
    out["preserves_star"] = result.verdict.preserves_star;
    out["preserves_plus"] = result.verdict.preserves_plus;
    out["projections_to_identity_subsets"] = result.verdict.projections_to_identity_subsets;
    if (!ok) out["violation"] = violation_json(result.verdict.why);
    json alpha = json::array();
    for (Index a = 0; a < sg.value().size(); ++a) {
      alpha.push_back(mask_to_string(result.alpha[a], names));
    }
    out["alpha"] = std::move(alpha);
    std::cout << out.dump(2) << "\n";
  } else {
    for (Index a = 0; a < sg.value().size(); ++a) {
      std::cout << "alpha(" << sg.value().name(a) << ") = "
                << mask_to_string(result.alpha[a], names) << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL")
              << " injective Ehresmann morphism into the partial isometries";
    if (!ok) std::cout << "  " << to_string(result.verdict.why);
    std::cout << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_nice_embed(const Options& opt, const std::string& semigroup_path,
                   const std::string& groupoid_path, const std::string& map_path) {
  auto sg_file = load_instance(semigroup_path);
  if (!sg_file.ok()) {
    return input_error(opt, "nice-embed",
                       semigroup_path + ": " + to_string(sg_file.violation()));
  }
  if (sg_file.value().kind != InstanceKind::Semigroup) {
    return input_error(opt, "nice-embed", semigroup_path + ": expected a SEMIGROUP instance");
  }
  auto map_file = load_instance(map_path);
  if (!map_file.ok()) {
    return input_error(opt, "nice-embed", map_path + ": " + to_string(map_file.violation()));
  }
  if (map_file.value().kind != InstanceKind::Map) {
    return input_error(opt, "nice-embed", map_path + ": expected a MAP instance");
  }

  int status = kExitOk;
  auto groupoid = load_category(opt, "nice-embed", groupoid_path, status);
  if (!groupoid) return status;

  auto sg = check_ehresmann(std::get<EhresmannSemigroup>(std::move(sg_file.value().body)));
  if (!sg.ok()) return check_failed(opt, "nice-embed", sg.violation());

  const auto& pairs = std::get<MapInstance>(map_file.value().body).pairs;
  std::vector<Index> iota(sg.value().size(), kUndefined);
  if (pairs.size() != static_cast<std::size_t>(sg.value().size())) {
    return input_error(opt, "nice-embed", "map must list one pair per semigroup element");
  }
  for (const auto& [from, to] : pairs) {
    if (from < 0 || from >= sg.value().size() || iota[from] != kUndefined) {
      return input_error(opt, "nice-embed", "map pairs must cover each element exactly once");
    }
    if (to < 0 || to >= groupoid->size()) {
      return input_error(opt, "nice-embed", "map image out of range");
    }
    iota[from] = to;
  }

  auto embedded = nice_embedding_from_groupoid(sg.value(), *groupoid, iota);
  if (!embedded.ok()) return check_failed(opt, "nice-embed", embedded.violation());

  const auto& result = embedded.value();
  if (opt.json) {
    json out;
    out["command"] = "nice-embed";
    out["ok"] = result.ok();
    out["bisections"] = result.bisections.size();
    out["bisections_inverse"] = result.bisections_inverse.ok;
    out["pi_map_morphism"] = result.pi_map_morphism.ok;
    out["pi_map_order"] = result.pi_map_order.ok;
    out["nice_embedding"] = result.nice.ok();
    if (!result.nice.ok()) out["violation"] = violation_json(result.nice.why);
    std::cout << out.dump(2) << "\n";
  } else {
    auto line = [&](const char* id, bool ok, const Violation& why) {
      std::cout << (ok ? "PASS " : "FAIL ") << id;
      if (!ok) std::cout << "  " << to_string(why);
      std::cout << "\n";
    };
    line("bisections-inverse-laws", result.bisections_inverse.ok, result.bisections_inverse.why);
    line("image-map-morphism", result.pi_map_morphism.ok, result.pi_map_morphism.why);
    line("image-map-order-embedding", result.pi_map_order.ok, result.pi_map_order.why);
    line("nice-embedding", result.nice.ok(), result.nice.why);
  }
  return result.ok() ? kExitOk : kExitCheckFailed;
}

int run_enumerate(const Options& opt, int max) {
  const auto categories = enumerate_categories(max);
  if (opt.json) {
    json out;
    out["command"] = "enumerate";
    out["max"] = max;
    out["total"] = categories.size();
    json items = json::array();
    for (const auto& c : categories) items.push_back(serialize_category(c));
    out["categories"] = std::move(items);
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < categories.size(); ++i) {
      std::cout << "# category " << i << "\n" << serialize_category(categories[i]) << "\n";
    }
    std::cout << "# total " << categories.size() << "\n";
  }
  return kExitOk;
}

int run_suite_command(const Options& opt, const std::string& name,
                      const std::vector<std::string>& files, int max) {
  SuiteOptions suite;
  suite.name = name;
  suite.max = max;
  suite.extra_files = files;
  suite.witness_limit = opt.witness_limit;
  auto report = run_suite(suite);
  if (!report.ok()) {
    return input_error(opt, "suite", to_string(report.violation()));
  }
  if (opt.json) {
    json out;
    out["command"] = "suite";
    out["suite"] = report.value().suite;
    out["scale"] = report.value().scale;
    out["ok"] = report.value().all_pass();
    out["instances"] = report.value().instances;
    out["volume"] = report.value().volume;
    out["wall_ms"] = report.value().wall_ms;
    json checks = json::array();
    for (const auto& c : report.value().checks) {
      json row;
      row["id"] = c.id;
      row["pass"] = c.pass;
      row["note"] = c.note;
      checks.push_back(std::move(row));
    }
    out["checks"] = std::move(checks);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_suite_text(report.value(), /*include_timing=*/true);
  }
  return report.value().all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"checker and constructor for finite Ehresmann semigroups and categories"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("EHRESMANN_LAB_CAP")) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) opt.cap = value;
  }
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--witness-limit", opt.witness_limit, "witnesses per failing suite check")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", opt.cap, "materialization cap in table cells");

  std::string check_path;
  auto* check = app.add_subcommand("check", "validate an instance file");
  check->add_option("file", check_path, "instance file")->required();

  std::string powerset_path, powerset_out;
  auto* powerset = app.add_subcommand("powerset", "materialize the subset monoid of a category");
  powerset->add_option("category", powerset_path, "CATEGORY file")->required();
  powerset->add_option("-o,--output", powerset_out, "output file (default stdout)");

  std::string classify_path;
  auto* classify = app.add_subcommand("classify", "classify every subset of a category");
  classify->add_option("category", classify_path, "CATEGORY file")->required();

  std::string reconstruct_path, reconstruct_out;
  auto* reconstruct =
      app.add_subcommand("reconstruct", "rebuild a category from the atoms of a BOOLEAN instance");
  reconstruct->add_option("boolean", reconstruct_path, "BOOLEAN file")->required();
  reconstruct->add_option("-o,--output", reconstruct_out, "output file for the category");

  std::string pseudo_path, pseudo_out;
  auto* pseudo =
      app.add_subcommand("pseudoproduct", "turn a BIACTION instance into an Ehresmann semigroup");
  pseudo->add_option("biaction", pseudo_path, "BIACTION file")->required();
  pseudo->add_option("-o,--output", pseudo_out, "output file (default stdout)");

  std::string embed_path;
  auto* embed = app.add_subcommand("embed-restriction",
                                   "embed a restriction semigroup into its partial isometries");
  embed->add_option("semigroup", embed_path, "SEMIGROUP file")->required();

  std::string ne_sg, ne_groupoid, ne_map;
  auto* nice = app.add_subcommand("nice-embed",
                                  "embed a restriction semigroup into the local bisections of a "
                                  "groupoid along a functor");
  nice->add_option("semigroup", ne_sg, "SEMIGROUP file")->required();
  nice->add_option("groupoid", ne_groupoid, "CATEGORY file, a groupoid")->required();
  nice->add_option("map", ne_map, "MAP file: element -> groupoid morphism")->required();

  int enumerate_max = 0;
  auto* enumerate = app.add_subcommand("enumerate", "emit all categories up to isomorphism");
  enumerate->add_option("--max", enumerate_max, "largest morphism count")
      ->required()
      ->check(CLI::Range(1, kMaxEnumerableMorphisms));

  std::string suite_name;
  std::vector<std::string> suite_files;
  int suite_max = 0;
  auto* suite = app.add_subcommand("suite", "run a named verification suite");
  suite->add_option("name", suite_name,
                    "axioms | lemmas | theorem-two | theorem-three | theorem-four | roundtrip | "
                    "census")
      ->required();
  suite->add_option("files", suite_files, "extra instance files to check alongside the suite");
  suite->add_option("--max", suite_max, "scale override (category size; census atoms)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(opt, check_path);
    if (powerset->parsed()) return run_powerset(opt, powerset_path, powerset_out);
    if (classify->parsed()) return run_classify(opt, classify_path);
    if (reconstruct->parsed()) return run_reconstruct(opt, reconstruct_path, reconstruct_out);
    if (pseudo->parsed()) return run_pseudoproduct(opt, pseudo_path, pseudo_out);
    if (embed->parsed()) return run_embed_restriction(opt, embed_path);
    if (nice->parsed()) return run_nice_embed(opt, ne_sg, ne_groupoid, ne_map);
    if (enumerate->parsed()) return run_enumerate(opt, enumerate_max);
    if (suite->parsed()) return run_suite_command(opt, suite_name, suite_files, suite_max);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
