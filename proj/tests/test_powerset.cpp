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

#include "ehresmann/enumerate.hpp"
#include "ehresmann/powerset.hpp"
#include "helpers.hpp"

using namespace ehresmann;
using namespace ehresmann::testing;

TEST_CASE("subset products compose like arrows") {
  auto g2 = pair_groupoid(2);
  // indices: 0=(0,0), 1=(1,1), 2=(0,1), 3=(1,0)
  auto s01 = make_subset(g2, 1ull << 2);
  auto s10 = make_subset(g2, 1ull << 3);
  CHECK(subset_product(s01, s10).bits == 1ull);  // (0,1)(1,0) = (0,0)

  auto empty = make_subset(g2, 0);
  auto any = make_subset(g2, 0b1011);
  CHECK(subset_product(any, empty).bits == 0);
  CHECK(subset_product(empty, any).bits == 0);
}

TEST_CASE("identity subsets multiply by intersection") {
  const std::vector<FiniteCategory> cats = {two_arrows(), pair_groupoid(2)};
  for (const auto& c : cats) {
    std::uint64_t id_mask = 0;
    for (Index e : c.identities) id_mask |= 1ull << e;
    for (std::uint64_t e = id_mask;; e = (e - 1) & id_mask) {
      for (std::uint64_t f = id_mask;; f = (f - 1) & id_mask) {
        CHECK(subset_product(make_subset(c, e), make_subset(c, f)).bits == (e & f));
        if (f == 0) break;
      }
      if (e == 0) break;
    }
  }
}

TEST_CASE("supports are the images of dom and cod") {
  auto g2 = pair_groupoid(2);
  CHECK(subset_star(make_subset(g2, 0)).bits == 0);
  CHECK(subset_star(make_subset(g2, 1ull << 2)).bits == (1ull << 1));  // d(0,1) = (1,1)
  CHECK(subset_plus(make_subset(g2, 1ull << 2)).bits == (1ull << 0));

  // star distributes over unions
  auto c = two_arrows();
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      CHECK(subset_star(make_subset(c, a | b)).bits ==
            (subset_star(make_subset(c, a)).bits | subset_star(make_subset(c, b)).bits));
    }
  }
}

TEST_CASE("subset products over different categories are refused") {
  auto c = two_arrows();
  auto g = pair_groupoid(2);
  CHECK_THROWS_AS(subset_product(make_subset(c, 1), make_subset(g, 1)), std::invalid_argument);
}

TEST_CASE("the subset monoid of the parallel-arrow category has 16 elements") {
  auto m = build_powerset_monoid(two_arrows());
  REQUIRE(m.ok());
  CHECK(m.value().size() == 16);
  CHECK(m.value().sg.names[0] == "{}");
  CHECK(m.value().sg.projections.size() == 4);
  CHECK(*m.value().sg.one == 3);  // mask of both identities
}

TEST_CASE("the trivial category gives the two-element monoid") {
  auto m = build_powerset_monoid(trivial_category());
  REQUIRE(m.ok());
  CHECK(m.value().size() == 2);
}

TEST_CASE("the cap refuses oversized materializations with the required size") {
  auto result = build_powerset_monoid(two_arrows(), 16);
  REQUIRE_FALSE(result.ok());
  CHECK(result.violation().law == "powerset/size-cap");
  CHECK(result.violation().detail.find("2^8") != std::string::npos);
}

TEST_CASE("the subset monoid of the pair groupoid is the binary relation monoid") {
  auto g2 = pair_groupoid(2);
  auto m = build_powerset_monoid(g2);
  REQUIRE(m.ok());
  const auto& sg = m.value().sg;

  // Oracle: compose relations on a two-point set directly. A pair (i,j) is
  // the arrow j -> i, so subsets compose exactly like relations.
  auto pair_index = [](int i, int j) { return i == j ? i : (i == 0 ? 2 : 3); };
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      int expected = 0;
      for (int x = 0; x < 2; ++x) {
        for (int z = 0; z < 2; ++z) {
          for (int y = 0; y < 2; ++y) {
            if ((a >> pair_index(x, y) & 1) && (b >> pair_index(y, z) & 1)) {
              expected |= 1 << pair_index(x, z);
            }
          }
        }
      }
      CHECK(sg.mul(a, b) == expected);
    }
  }
}

TEST_CASE("worked classifications in the parallel-arrow category") {
  auto c = two_arrows();
  auto a_only = classify_subset(c, 0b0100);
  CHECK(a_only.deterministic);
  CHECK(a_only.codeterministic);
  CHECK(a_only.partial_isometry);

  auto a_and_b = classify_subset(c, 0b1100);
  CHECK(a_and_b.deterministic);
  CHECK(a_and_b.codeterministic);
  CHECK_FALSE(a_and_b.partial_isometry);

  auto a_and_e = classify_subset(c, 0b0101);
  CHECK(a_and_e.deterministic);
  CHECK_FALSE(a_and_e.codeterministic);
  CHECK_FALSE(a_and_e.partial_isometry);

  auto empty = classify_subset(c, 0);
  CHECK(empty.deterministic);
  CHECK(empty.codeterministic);
  CHECK(empty.partial_isometry);
}

TEST_CASE("subset classification agrees with the monoid quantifiers everywhere") {
  for (const auto& c : enumerate_categories(4)) {
    auto m = build_powerset_monoid(c);
    REQUIRE(m.ok());
    for (Index mask = 0; mask < m.value().size(); ++mask) {
      const auto fast = classify_subset(c, static_cast<std::uint64_t>(mask));
      CHECK(fast.deterministic == oracle_deterministic(m.value(), mask));
      CHECK(fast.codeterministic == oracle_codeterministic(m.value(), mask));
      CHECK(fast.partial_isometry == oracle_partial_isometry(m.value(), mask));
    }
  }
}

TEST_CASE("partial isometries are closed under products and form an order-ideal") {
  for (const auto& c : enumerate_categories(3)) {
    const std::uint64_t count = 1ull << c.size();
    std::vector<char> pi(count, 0);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      pi[mask] = classify_subset(c, mask).partial_isometry;
    }
    for (std::uint64_t a = 0; a < count; ++a) {
      if (!pi[a]) continue;
      // closure under products
      for (std::uint64_t b = 0; b < count; ++b) {
        if (!pi[b]) continue;
        CHECK(pi[subset_product(make_subset(c, a), make_subset(c, b)).bits]);
      }
      // order-ideal: subsets of a partial isometry are partial isometries
      for (std::uint64_t b = a;; b = (b - 1) & a) {
        CHECK(pi[b]);
        if (b == 0) break;
      }
      // bideterministic
      const auto cls = classify_subset(c, a);
      CHECK(cls.deterministic);
      CHECK(cls.codeterministic);
    }
  }
}
