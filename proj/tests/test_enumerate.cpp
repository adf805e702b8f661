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

#include <algorithm>

#include "ehresmann/enumerate.hpp"
#include "helpers.hpp"

using namespace ehresmann;
using namespace ehresmann::testing;

namespace {

// A deliberately naive generator for tiny sizes: run over every assignment of
// identity count, arrow endpoints and composition values, validate, and
// deduplicate pairwise with the isomorphism search. Only the counts are
// compared with the production enumerator.
std::vector<FiniteCategory> brute_force_categories(int n) {
  std::vector<FiniteCategory> found;
  for (int k = 1; k <= n; ++k) {
    const int m = n - k;
    std::vector<int> endpoints(m, 0);
    const int combos = k * k;
    while (true) {
      FiniteCategory c;
      c.dom.assign(n, 0);
      c.cod.assign(n, 0);
      for (int e = 0; e < k; ++e) {
        c.identities.push_back(e);
        c.dom[e] = e;
        c.cod[e] = e;
      }
      for (int a = 0; a < m; ++a) {
        c.dom[k + a] = endpoints[a] % k;
        c.cod[k + a] = endpoints[a] / k;
      }

      std::vector<std::pair<Index, Index>> cells;
      for (Index x = k; x < n; ++x) {
        for (Index y = k; y < n; ++y) {
          if (c.dom[x] == c.cod[y]) cells.emplace_back(x, y);
        }
      }
      std::vector<int> values(cells.size(), 0);
      while (true) {
        FiniteCategory candidate = c;
        candidate.comp.assign(static_cast<std::size_t>(n) * n, kUndefined);
        for (Index x = 0; x < n; ++x) {
          candidate.comp[x * n + candidate.dom[x]] = x;
          candidate.comp[candidate.cod[x] * n + x] = x;
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
          candidate.comp[cells[i].first * n + cells[i].second] = values[i];
        }
        auto checked = validate_category(candidate);
        if (checked.ok()) {
          bool fresh = true;
          for (const auto& seen : found) {
            if (find_isomorphism(seen, checked.value()).has_value()) {
              fresh = false;
              break;
            }
          }
          if (fresh) found.push_back(std::move(checked).value());
        }
        std::size_t pos = 0;
        for (; pos < values.size(); ++pos) {
          if (values[pos] + 1 < n) {
            ++values[pos];
            std::fill(values.begin(), values.begin() + pos, 0);
            break;
          }
        }
        if (pos == values.size()) break;
      }
      int carry = m - 1;
      while (carry >= 0 && endpoints[carry] == combos - 1) {
        endpoints[carry] = 0;
        --carry;
      }
      if (carry < 0) break;
      ++endpoints[carry];
    }
  }
  return found;
}

}  // namespace

TEST_CASE("only the trivial category has a single morphism") {
  auto cats = enumerate_categories(1);
  REQUIRE(cats.size() == 1);
  CHECK(cats[0].size() == 1);
}

TEST_CASE("two morphisms give the discrete pair, the order-two group and the chain monoid") {
  auto cats = enumerate_categories(2);
  REQUIRE(cats.size() == 4);
  int discrete = 0, groups = 0, idempotent_monoids = 0;
  for (const auto& c : cats) {
    if (c.size() != 2) continue;
    if (c.object_count() == 2) {
      ++discrete;
    } else if (is_groupoid(c).groupoid) {
      ++groups;
    } else {
      // one object, one non-identity arrow squaring to itself
      CHECK(c.at(1, 1) == 1);
      ++idempotent_monoids;
    }
  }
  CHECK(discrete == 1);
  CHECK(groups == 1);
  CHECK(idempotent_monoids == 1);
}

TEST_CASE("enumeration counts are stable") {
  // cumulative counts by morphism bound, and the one-object slice, which is
  // the number of monoids of each order up to isomorphism
  const long long expected_total[] = {1, 4, 15, 70, 399};
  const long long expected_monoids[] = {1, 2, 7, 35, 228};
  for (int n = 1; n <= 5; ++n) {
    auto cats = enumerate_categories(n);
    CHECK(static_cast<long long>(cats.size()) == expected_total[n - 1]);
    long long monoids = 0;
    for (const auto& c : cats) {
      if (c.size() == n && c.object_count() == 1) ++monoids;
    }
    CHECK(monoids == expected_monoids[n - 1]);
  }
}

TEST_CASE("the naive generator confirms the small enumeration") {
  for (int n = 1; n <= 3; ++n) {
    auto brute = brute_force_categories(n);
    auto fast = enumerate_categories(n);
    long long exactly_n = 0;
    for (const auto& c : fast) {
      if (c.size() == n) ++exactly_n;
    }
    CHECK(static_cast<long long>(brute.size()) == exactly_n);
  }
}

TEST_CASE("emitted categories are valid and pairwise non-isomorphic") {
  auto cats = enumerate_categories(3);
  for (const auto& c : cats) {
    CHECK(validate_category(c).ok());
  }
  for (std::size_t i = 0; i < cats.size(); ++i) {
    for (std::size_t j = i + 1; j < cats.size(); ++j) {
      CHECK_FALSE(find_isomorphism(cats[i], cats[j]).has_value());
    }
  }
}

TEST_CASE("enumeration is deterministic") {
  auto first = enumerate_categories(4);
  auto second = enumerate_categories(4);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].dom == second[i].dom);
    CHECK(first[i].cod == second[i].cod);
    CHECK(first[i].comp == second[i].comp);
  }
}

TEST_CASE("the morphism cap is enforced") {
  CHECK_THROWS_AS(enumerate_categories(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_categories(7), std::invalid_argument);
}

TEST_CASE("semilattice enumeration") {
  const long long expected[] = {1, 2, 4, 9};  // cumulative: 1, 1, 2, 5 per size
  for (int n = 1; n <= 4; ++n) {
    auto lattices = enumerate_semilattices(n);
    CHECK(static_cast<long long>(lattices.size()) == expected[n - 1]);
    for (const auto& sl : lattices) {
      CHECK(check_ehresmann(sl).ok());
      CHECK(is_restriction(sl).ok);
      CHECK(static_cast<std::size_t>(sl.size()) == sl.projections.size());
    }
  }
}

TEST_CASE("subalgebras are closed and valid") {
  auto subs = ehresmann_subalgebras(z2_group());
  // {one} and the whole group
  CHECK(subs.size() == 2);
  for (const auto& sub : subs) {
    CHECK(check_ehresmann(sub).ok());
  }
}
