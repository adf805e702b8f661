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

#include <doctest.h>

#include "ehresmann/embedding.hpp"
#include "ehresmann/io.hpp"
#include "ehresmann/powerset.hpp"
#include "ehresmann/suites.hpp"
#include "helpers.hpp"

using namespace ehresmann;
using namespace ehresmann::testing;

TEST_CASE("the shipped parallel-arrow file parses to a 4-morphism category") {
  auto file = parse_instance(read_file(fixture_path("two-arrows.cat")));
  REQUIRE(file.ok());
  REQUIRE(file.value().kind == InstanceKind::Category);
  const auto& raw = std::get<FiniteCategory>(file.value().body);
  CHECK(raw.size() == 4);
  CHECK(raw.names[0] == "id_e");
  CHECK(raw.names[2] == "a");
  CHECK(validate_category(raw).ok());
}

TEST_CASE("every shipped fixture is canonical") {
  const char* names[] = {
      "two-arrows.cat",   "trivial.cat",         "pair2.cat",
      "pair3.cat",        "chain2.sg",           "two-arrows.bool",
      "two-arrows.biaction", "pi-two-arrows.sg", "pi-pair2.sg",
      "pi-pair2-groupoid.cat", "pi-pair2-identity.map", "chain2-into-pair2.map",
      "bad-es.sg",        "bad-e3.biaction",     "bad-oe.bool",
      "bad-inverse.map",  "bad-category.cat",    "pi-not-closed.bool",
  };
  for (const char* name : names) {
    CAPTURE(name);
    const auto text = read_file(fixture_path(name));
    auto file = parse_instance(text);
    REQUIRE(file.ok());
    CHECK(serialize_instance(file.value()) == text);
  }
}

TEST_CASE("comments and loose whitespace normalize to the canonical form") {
  const std::string messy =
      "# a category with two parallel arrows\n"
      "CATEGORY v1\n"
      "objects   2   e f   # objects first\n"
      "arrows 2\n"
      "  a f e\n"
      "  b f e # the second parallel arrow\n"
      "compose\n";
  auto file = parse_instance(messy);
  REQUIRE(file.ok());
  CHECK(serialize_instance(file.value()) == read_file(fixture_path("two-arrows.cat")));
}

TEST_CASE("object references may be names or indices") {
  const std::string by_index = "CATEGORY v1 objects 2 e f arrows 2 a 1 0 b 1 0 compose";
  auto file = parse_instance(by_index);
  REQUIRE(file.ok());
  CHECK(serialize_instance(file.value()) == read_file(fixture_path("two-arrows.cat")));
}

TEST_CASE("parse errors name the offending position") {
  auto empty = parse_instance("CATEGORY v1\n");
  REQUIRE_FALSE(empty.ok());
  CHECK(empty.violation().law == "parse/section");
  CHECK(empty.violation().detail == "objects section required");

  auto unknown = parse_instance("GADGET v1\n");
  REQUIRE_FALSE(unknown.ok());
  CHECK(unknown.violation().law == "parse/unknown-kind");
  CHECK(unknown.violation().line == 1);

  auto version = parse_instance("CATEGORY v2\nobjects 1 x\narrows 0\n");
  REQUIRE_FALSE(version.ok());
  CHECK(version.violation().law == "parse/section");

  auto dangling = parse_instance(
      "SEMIGROUP v1 elements 2 x y table 0 1 1 2 projections 1 0 star 0 0 plus 0 0");
  REQUIRE_FALSE(dangling.ok());
  CHECK(dangling.violation().law == "parse/dangling-index");

  auto truncated = parse_instance("SEMIGROUP v1 elements 2 x y table 0 1 1");
  REQUIRE_FALSE(truncated.ok());
  CHECK(truncated.violation().law == "parse/unexpected-end");

  auto duplicate = parse_instance(
      "SEMIGROUP v1 elements 1 x table 0 projections 1 0 star 0 plus 0 one 0 one 0");
  REQUIRE_FALSE(duplicate.ok());
  CHECK(duplicate.violation().law == "parse/trailing");

  auto dup_name = parse_instance("CATEGORY v1 objects 2 e e arrows 0 compose");
  REQUIRE_FALSE(dup_name.ok());
  CHECK(dup_name.violation().law == "parse/duplicate-name");

  auto identity_comp =
      parse_instance("CATEGORY v1 objects 1 x arrows 1 a x x compose a id_x a");
  REQUIRE_FALSE(identity_comp.ok());
  CHECK(identity_comp.violation().law == "parse/identity-composite");

  auto dup_comp =
      parse_instance("CATEGORY v1 objects 1 x arrows 1 a x x compose a a a a a id_x");
  REQUIRE_FALSE(dup_comp.ok());
  CHECK(dup_comp.violation().law == "parse/duplicate-composite");

  auto bad_row = parse_instance(
      "BOOLEAN v1 elements 2 x y table 0 0 0 1 projections 2 0 1 star 0 1 plus 0 1 one 1 "
      "order 11 0");
  REQUIRE_FALSE(bad_row.ok());
  CHECK(bad_row.violation().law == "parse/order-row");
}

TEST_CASE("maps round trip") {
  auto file = parse_instance(read_file(fixture_path("chain2-into-pair2.map")));
  REQUIRE(file.ok());
  const auto& map = std::get<MapInstance>(file.value().body);
  CHECK(map.source == "chain2.sg");
  CHECK(map.target == "pair2.cat");
  CHECK(map.pairs.size() == 2);
}

TEST_CASE("a constructed monoid serializes to a loadable BOOLEAN instance") {
  auto m = build_powerset_monoid(two_arrows());
  const auto text = serialize_boolean(m.value());
  auto file = parse_instance(text);
  REQUIRE(file.ok());
  REQUIRE(file.value().kind == InstanceKind::Boolean);
  auto verdict = check_instance(file.value());
  CHECK(verdict.ok);
  const auto& raw = std::get<BooleanInstance>(file.value().body);
  CHECK(raw.sg.mult == m.value().sg.mult);
  CHECK(down_rows(raw.leq) == m.value().down);
}

TEST_CASE("a biaction over scattered projections serializes to a valid instance") {
  // Permute the bisection monoid of the parallel-arrow category so that its
  // projections no longer occupy the leading indices, then push the derived
  // biaction through the serializer.
  auto pim = local_bisections(two_arrows());
  const int n = pim.sg.size();
  std::vector<Index> sigma(n);
  for (Index i = 0; i < n; ++i) sigma[i] = i;
  std::swap(sigma[0], sigma[4]);

  EhresmannSemigroup scattered;
  scattered.names.resize(n);
  scattered.star.resize(n);
  scattered.plus.resize(n);
  scattered.mult.resize(static_cast<std::size_t>(n) * n);
  for (Index a = 0; a < n; ++a) {
    scattered.names[sigma[a]] = pim.sg.names[a];
    scattered.star[sigma[a]] = sigma[pim.sg.star[a]];
    scattered.plus[sigma[a]] = sigma[pim.sg.plus[a]];
    for (Index b = 0; b < n; ++b) {
      scattered.mult[static_cast<std::size_t>(sigma[a]) * n + sigma[b]] =
          sigma[pim.sg.mul(a, b)];
    }
  }
  for (Index e : pim.sg.projections) scattered.projections.push_back(sigma[e]);
  std::sort(scattered.projections.begin(), scattered.projections.end());
  scattered.one = sigma[*pim.sg.one];
  auto checked = check_ehresmann(std::move(scattered));
  REQUIRE(checked.ok());
  CHECK(checked.value().projections != std::vector<Index>{0, 1, 2, 3});

  auto biaction = biaction_from_ehresmann(checked.value());
  const auto text = serialize_biaction(biaction);
  auto file = parse_instance(text);
  REQUIRE(file.ok());
  CHECK(serialize_instance(file.value()) == text);
  CHECK(check_instance(file.value()).ok);
  const auto& reparsed = std::get<EhresmannBiaction>(file.value().body);
  CHECK(find_isomorphism(validate_category(reparsed.category).value(), biaction.category)
            .has_value());
}

TEST_CASE("a category with scattered identities serializes with identities first") {
  // the restricted product of the chain puts the projections at 0 and 1
  // already, so scramble a copy of the pair groupoid instead
  auto g = pair_groupoid(2);
  FiniteCategory scrambled;
  // order: p0_1, id_x0, p1_0, id_x1  ->  identities at 1 and 3
  std::vector<Index> to_old = {2, 0, 3, 1};
  std::vector<Index> to_new(4);
  for (Index i = 0; i < 4; ++i) to_new[to_old[i]] = i;
  scrambled.names = {"p0_1", "id_x0", "p1_0", "id_x1"};
  scrambled.identities = {1, 3};
  scrambled.dom.resize(4);
  scrambled.cod.resize(4);
  scrambled.comp.assign(16, kUndefined);
  for (Index x = 0; x < 4; ++x) {
    scrambled.dom[to_new[x]] = to_new[g.dom[x]];
    scrambled.cod[to_new[x]] = to_new[g.cod[x]];
    for (Index y = 0; y < 4; ++y) {
      if (g.at(x, y) != kUndefined) {
        scrambled.comp[to_new[x] * 4 + to_new[y]] = to_new[g.at(x, y)];
      }
    }
  }
  REQUIRE(validate_category(scrambled).ok());
  const auto text = serialize_category(scrambled);
  auto file = parse_instance(text);
  REQUIRE(file.ok());
  const auto& raw = std::get<FiniteCategory>(file.value().body);
  CHECK(raw.identities == std::vector<Index>{0, 1});
  REQUIRE(validate_category(raw).ok());
  CHECK(find_isomorphism(validate_category(raw).value(), g).has_value());
}
