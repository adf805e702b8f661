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

#include "ehresmann/biaction.hpp"
#include "ehresmann/enumerate.hpp"
#include "ehresmann/powerset.hpp"
#include "helpers.hpp"

using namespace ehresmann;
using namespace ehresmann::testing;

namespace {

std::vector<EhresmannSemigroup> roundtrip_corpus() {
  std::vector<EhresmannSemigroup> out;
  for (const auto& c : enumerate_categories(3)) {
    out.push_back(build_powerset_monoid(c).value().sg);
  }
  for (const auto& sl : enumerate_semilattices(4)) out.push_back(sl);
  out.push_back(z2_group());
  return out;
}

}  // namespace

TEST_CASE("the one-point biaction validates") {
  EhresmannBiaction b;
  b.category = trivial_category();
  b.meet = {0};
  b.lact = {0};
  b.ract = {0};
  CHECK(check_biaction(std::move(b)).ok());
}

TEST_CASE("every Ehresmann semigroup induces a validated biaction") {
  for (const auto& s : roundtrip_corpus()) {
    CHECK_NOTHROW(biaction_from_ehresmann(s));
  }
}

TEST_CASE("every left-action perturbation of a validated biaction is rejected") {
  auto m = build_powerset_monoid(two_arrows());
  auto good = biaction_from_ehresmann(m.value().sg);
  const int n = good.size();
  const int k = good.objects();
  for (int p = 0; p < k; ++p) {
    for (Index a = 0; a < n; ++a) {
      for (Index v = 0; v < n; ++v) {
        if (good.lact[p * n + a] == v) continue;
        auto mutant = good;
        mutant.lact[p * n + a] = v;
        CHECK_FALSE(check_biaction(std::move(mutant)).ok());
      }
    }
  }
}

TEST_CASE("a perturbation that leaves the action laws intact trips the compatibility law") {
  auto m = build_powerset_monoid(two_arrows());
  auto good = biaction_from_ehresmann(m.value().sg);
  auto mutant = good;
  mutant.lact[1 * 16 + 3] = 4;  // {e} . {e,f} rewritten to {a}
  auto checked = check_biaction(std::move(mutant));
  REQUIRE_FALSE(checked.ok());
  CHECK(checked.violation().law == "E3");
  CHECK(checked.violation().witness == std::vector<Index>{1, 3, 1});
}

TEST_CASE("pseudoproducts restrict to the semilattice and fix supports") {
  auto m = build_powerset_monoid(two_arrows());
  auto b = biaction_from_ehresmann(m.value().sg);
  const auto& c = b.category;
  for (Index e : c.identities) {
    for (Index f : c.identities) {
      CHECK(pseudoproduct(b, e, f) == b.meet_of(e, f));
    }
  }
  for (Index a = 0; a < b.size(); ++a) {
    CHECK(pseudoproduct(b, a, c.dom[a]) == a);
    CHECK(pseudoproduct(b, c.cod[a], a) == a);
  }
}

TEST_CASE("the two expansion formulas agree on every triple") {
  auto m = build_powerset_monoid(two_arrows());
  auto b = biaction_from_ehresmann(m.value().sg);
  CHECK(pseudoproduct_expansion_check(b).ok);
}

TEST_CASE("supports of acted morphisms follow the semilattice") {
  for (const auto& s : roundtrip_corpus()) {
    auto b = biaction_from_ehresmann(s);
    const auto& c = b.category;
    for (Index e : c.identities) {
      for (Index a = 0; a < b.size(); ++a) {
        CHECK(c.cod[b.left(e, a)] == s.mul(e, s.plus[a]));
      }
    }
  }
}

TEST_CASE("the pseudoproduct semigroup of the one-point biaction is trivial") {
  EhresmannBiaction b;
  b.category = trivial_category();
  b.meet = {0};
  b.lact = {0};
  b.ract = {0};
  auto checked = check_biaction(std::move(b));
  REQUIRE(checked.ok());
  auto s = semigroup_from_biaction(checked.value());
  CHECK(s.size() == 1);
}

TEST_CASE("the biaction round trip restores every table") {
  for (const auto& s : roundtrip_corpus()) {
    auto b = biaction_from_ehresmann(s);
    auto back = semigroup_from_biaction(b);
    CHECK(back.mult == s.mult);
    CHECK(back.star == s.star);
    CHECK(back.plus == s.plus);
    CHECK(back.projections == s.projections);
  }
}

TEST_CASE("the round trip reproduces the binary relation monoid table") {
  auto m = build_powerset_monoid(pair_groupoid(2));
  auto b = biaction_from_ehresmann(m.value().sg);
  auto back = semigroup_from_biaction(b);
  CHECK(back.mult == m.value().sg.mult);
}
