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

// End-to-end acceptance run: one line per criterion, non-zero exit on any
// failure. Every tolerance and time budget is pinned here.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ehresmann/biaction.hpp"
#include "ehresmann/boolean_monoid.hpp"
#include "ehresmann/category.hpp"
#include "ehresmann/embedding.hpp"
#include "ehresmann/enumerate.hpp"
#include "ehresmann/io.hpp"
#include "ehresmann/powerset.hpp"
#include "ehresmann/suites.hpp"

using namespace ehresmann;

namespace {

struct Criterion {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& message) {
    if (!condition) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << message;
    }
  }
};

std::string fixture(const std::string& name) {
  static const std::string dir = [] {
    if (const char* env = std::getenv("EHRESMANN_FIXTURES")) return std::string(env);
    return std::string(EHRESMANN_FIXTURE_DIR);
  }();
  return dir + "/" + name;
}

Checked<InstanceFile> load(const std::string& name) {
  std::ifstream in(fixture(name), std::ios::binary);
  if (!in) {
    Violation v;
    v.law = "io/read";
    v.detail = "cannot read fixture " + name;
    return v;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

// Raw definitional quantifiers over a materialized subset monoid; these pin
// the meaning the fast classifier must reproduce.
bool def_deterministic(const BooleanEhresmannMonoid& m, Index a) {
  for (Index e : m.sg.projections) {
    const Index ea = m.sg.mul(e, a);
    if (ea != m.sg.mul(a, m.sg.star[ea])) return false;
  }
  return true;
}

bool def_codeterministic(const BooleanEhresmannMonoid& m, Index a) {
  for (Index e : m.sg.projections) {
    const Index ae = m.sg.mul(a, e);
    if (ae != m.sg.mul(m.sg.plus[ae], a)) return false;
  }
  return true;
}

bool def_partial_isometry(const BooleanEhresmannMonoid& m, Index a) {
  bool ok = true;
  m.down[a].for_each([&](int b) {
    if (m.sg.mul(m.sg.plus[b], a) != b || m.sg.mul(a, m.sg.star[b]) != b) ok = false;
  });
  return ok;
}

void criterion_1(Criterion& c) {
  auto file = load("two-arrows.cat");
  c.require(file.ok(), "two-arrows.cat must parse");
  if (!c.pass) return;
  auto category = validate_category(std::get<FiniteCategory>(file.value().body));
  c.require(category.ok(), "two-arrows.cat must validate");
  if (!c.pass) return;

  auto monoid = build_powerset_monoid(category.value());
  c.require(monoid.ok(), "the subset monoid must materialize");
  c.require(monoid.ok() && monoid.value().size() == 16,
            "the subset monoid must have exactly 16 elements");

  // masks over e=0, f=1, a=2, b=3
  const auto a_only = classify_subset(category.value(), 0b0100);
  const auto a_and_b = classify_subset(category.value(), 0b1100);
  const auto a_and_e = classify_subset(category.value(), 0b0101);
  c.require(a_only.partial_isometry, "{a} must classify as a partial isometry");
  c.require(a_and_b.deterministic && a_and_b.codeterministic && !a_and_b.partial_isometry,
            "{a,b} must be bideterministic but no partial isometry");
  c.require(!(a_and_e.deterministic && a_and_e.codeterministic),
            "{a,e} must not be bideterministic");
}

void criterion_2(Criterion& c) {
  SuiteOptions options;
  options.name = "axioms";
  options.max = 4;
  auto report = run_suite(options);
  c.require(report.ok(), "the axioms suite must run");
  if (report.ok()) {
    c.require(report.value().all_pass(), "every axiom check must pass at 4 morphisms");
    for (const auto& check : report.value().checks) {
      if (!check.pass) c.detail << " [" << check.id << ": " << check.note << "]";
    }
  }
}

void criterion_3(Criterion& c) {
  long long disagreements = 0;
  for (const auto& category : enumerate_categories(5)) {
    auto monoid = build_powerset_monoid(category);
    if (!monoid.ok()) {
      c.require(false, "materialization failed during the oracle sweep");
      return;
    }
    for (Index mask = 0; mask < monoid.value().size(); ++mask) {
      const auto fast = classify_subset(category, static_cast<std::uint64_t>(mask));
      if (fast.deterministic != def_deterministic(monoid.value(), mask)) ++disagreements;
      if (fast.codeterministic != def_codeterministic(monoid.value(), mask)) ++disagreements;
      if (fast.partial_isometry != def_partial_isometry(monoid.value(), mask)) ++disagreements;
    }
  }
  c.require(disagreements == 0,
            "classifier disagreements: " + std::to_string(disagreements));
}

void criterion_4(Criterion& c) {
  SuiteOptions options;
  options.name = "roundtrip";
  options.max = 4;
  auto report = run_suite(options);
  c.require(report.ok() && report.value().all_pass(),
            "the biaction round trip must restore every table");
  if (report.ok()) {
    for (const auto& check : report.value().checks) {
      if (!check.pass) c.detail << " [" << check.id << ": " << check.note << "]";
    }
  }
}

void criterion_5(Criterion& c) {
  SuiteOptions options;
  options.name = "theorem-two";
  options.max = 4;
  auto report = run_suite(options);
  c.require(report.ok() && report.value().all_pass(),
            "reconstruction and the atom decomposition must verify at 4 morphisms");
  if (report.ok()) {
    for (const auto& check : report.value().checks) {
      if (!check.pass) c.detail << " [" << check.id << ": " << check.note << "]";
    }
  }
}

void criterion_6(Criterion& c) {
  SuiteOptions options;
  options.name = "theorem-three";
  options.max = 4;
  auto report = run_suite(options);
  c.require(report.ok() && report.value().all_pass(),
            "the down-set embedding must verify across the restriction corpus");
  if (report.ok()) {
    for (const auto& check : report.value().checks) {
      if (!check.pass) c.detail << " [" << check.id << ": " << check.note << "]";
    }
  }
}

void criterion_7(Criterion& c) {
  SuiteOptions options;
  options.name = "theorem-four";
  auto report = run_suite(options);
  c.require(report.ok() && report.value().all_pass(),
            "bisections of the pair groupoids must form inverse monoids of size 7 and 34");

  // the shipped fixture pipeline: a semilattice into the pair groupoid, and
  // the bisections of the pair groupoid into their own carrier groupoid
  auto run_fixture = [&](const std::string& sg_name, const std::string& cat_name,
                         const std::string& map_name) {
    auto sg_file = load(sg_name);
    auto cat_file = load(cat_name);
    auto map_file = load(map_name);
    c.require(sg_file.ok() && cat_file.ok() && map_file.ok(),
              "fixtures " + sg_name + ", " + cat_name + ", " + map_name + " must parse");
    if (!c.pass) return;
    auto sg = check_ehresmann(std::get<EhresmannSemigroup>(sg_file.value().body));
    auto category = validate_category(std::get<FiniteCategory>(cat_file.value().body));
    c.require(sg.ok() && category.ok(), "fixture structures must validate");
    if (!c.pass) return;
    const auto& pairs = std::get<MapInstance>(map_file.value().body).pairs;
    std::vector<Index> iota(sg.value().size(), kUndefined);
    for (const auto& [from, to] : pairs) iota[from] = to;
    auto embedded = nice_embedding_from_groupoid(sg.value(), category.value(), iota);
    c.require(embedded.ok() && embedded.value().ok(),
              "nice embedding through " + map_name + " must verify");
  };
  run_fixture("chain2.sg", "pair2.cat", "chain2-into-pair2.map");
  run_fixture("pi-pair2.sg", "pi-pair2-groupoid.cat", "pi-pair2-identity.map");
}

void criterion_8(Criterion& c) {
  auto expect_rejection = [&](const std::string& name, const std::string& law,
                              const std::vector<Index>& witness) {
    auto file = load(name);
    c.require(file.ok(), name + " must parse");
    if (!file.ok()) return;
    auto verdict = check_instance(file.value());
    c.require(!verdict.ok, name + " must be rejected");
    if (verdict.ok) return;
    c.require(verdict.why.law == law, name + " must violate " + law + ", reported " +
                                          verdict.why.law);
    c.require(verdict.why.witness == witness, name + " witness must match");
  };
  expect_rejection("bad-es.sg", "ES4", {4, 1});
  expect_rejection("bad-e3.biaction", "E3", {1, 3, 1});
  expect_rejection("bad-oe.bool", "OE1", {1, 1, 2});
  expect_rejection("bad-category.cat", "category/non-composable-pair", {2, 2});

  // the inverse laws: the identity map declared as an inverse for the
  // bisections of a non-groupoid
  auto sg_file = load("pi-two-arrows.sg");
  auto map_file = load("bad-inverse.map");
  c.require(sg_file.ok() && map_file.ok(), "inverse fixtures must parse");
  if (sg_file.ok() && map_file.ok()) {
    auto sg = check_ehresmann(std::get<EhresmannSemigroup>(sg_file.value().body));
    c.require(sg.ok(), "pi-two-arrows.sg must validate");
    if (sg.ok()) {
      const auto& pairs = std::get<MapInstance>(map_file.value().body).pairs;
      std::vector<Index> inv(sg.value().size(), kUndefined);
      for (const auto& [from, to] : pairs) inv[from] = to;
      auto view = check_inverse(sg.value(), inv);
      c.require(!view.ok(), "the identity inverse table must be rejected");
      if (!view.ok()) {
        c.require(view.violation().law == "inverse/regularity",
                  "expected inverse/regularity, got " + view.violation().law);
        c.require(view.violation().witness == std::vector<Index>{4},
                  "the witness must be the singleton arrow subset");
      }
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    const char* id;
    const char* label;
    std::function<void(Criterion&)> body;
    double budget_ms;  // 0 = no budget
  };
  const std::vector<Entry> entries = {
      {"criterion-1", "worked example: 16 elements and the three classifications", criterion_1,
       1000.0},
      {"criterion-2", "axiom suite over all categories with at most 4 morphisms", criterion_2,
       60000.0},
      {"criterion-3", "classifier equals the definitional quantifiers up to 5 morphisms",
       criterion_3, 0.0},
      {"criterion-4", "biaction round trip restores every table", criterion_4, 0.0},
      {"criterion-5", "category reconstruction and atom decomposition verify", criterion_5,
       120000.0},
      {"criterion-6", "down-set embedding verdict over the restriction corpus", criterion_6,
       0.0},
      {"criterion-7", "groupoid bisections: counts, inverse laws, shipped embeddings",
       criterion_7, 0.0},
      {"criterion-8", "negative controls: each axiom family rejects its fixture", criterion_8,
       0.0},
  };

  bool all_pass = true;
  for (const auto& entry : entries) {
    Criterion criterion;
    const auto start = std::chrono::steady_clock::now();
    entry.body(criterion);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (entry.budget_ms > 0 && elapsed > entry.budget_ms) {
      criterion.pass = false;
      criterion.detail << "exceeded the " << entry.budget_ms << " ms budget";
    }
    all_pass = all_pass && criterion.pass;
    std::cout << (criterion.pass ? "[PASS] " : "[FAIL] ") << entry.id << " " << entry.label
              << " (" << elapsed << " ms)";
    const std::string detail = criterion.detail.str();
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
  }
  std::cout << (all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES above")
            << "\n";
  return all_pass ? 0 : 1;
}
