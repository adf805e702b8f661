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

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "ehresmann/boolean_monoid.hpp"
#include "ehresmann/category.hpp"
#include "ehresmann/semigroup.hpp"

namespace ehresmann::testing {

// Two objects e and f with a pair of parallel arrows a, b : f -> e.
// Morphism indices: e=0, f=1, a=2, b=3.
inline FiniteCategory two_arrows() {
  FiniteCategory c;
  c.names = {"e", "f", "a", "b"};
  c.identities = {0, 1};
  c.dom = {0, 1, 1, 1};
  c.cod = {0, 1, 0, 0};
  c.comp.assign(16, kUndefined);
  auto put = [&](Index x, Index y, Index z) { c.comp[x * 4 + y] = z; };
  put(0, 0, 0);
  put(1, 1, 1);
  put(0, 2, 2);
  put(0, 3, 3);
  put(2, 1, 2);
  put(3, 1, 3);
  auto checked = validate_category(std::move(c));
  REQUIRE(checked.ok());
  return std::move(checked).value();
}

inline FiniteCategory trivial_category() {
  FiniteCategory c;
  c.names = {"id_pt"};
  c.identities = {0};
  c.dom = {0};
  c.cod = {0};
  c.comp = {0};
  auto checked = validate_category(std::move(c));
  REQUIRE(checked.ok());
  return std::move(checked).value();
}

// The two-element chain as a meet semilattice, top declared as identity.
inline EhresmannSemigroup chain2() {
  EhresmannSemigroup s;
  s.names = {"bot", "top"};
  s.mult = {0, 0, 0, 1};
  s.projections = {0, 1};
  s.star = {0, 1};
  s.plus = {0, 1};
  s.one = 1;
  auto checked = check_ehresmann(std::move(s));
  REQUIRE(checked.ok());
  return std::move(checked).value();
}

// The two-element group viewed as an Ehresmann semigroup with U = {1}.
inline EhresmannSemigroup z2_group() {
  EhresmannSemigroup s;
  s.names = {"one", "g"};
  s.mult = {0, 1, 1, 0};
  s.projections = {0};
  s.star = {0, 0};
  s.plus = {0, 0};
  s.one = 0;
  auto checked = check_ehresmann(std::move(s));
  REQUIRE(checked.ok());
  return std::move(checked).value();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string fixture_path(const std::string& name) {
  return std::string(EHRESMANN_FIXTURE_DIR) + "/" + name;
}

// ---------------------------------------------------------------------------
// Definitional oracles, written out as the raw quantifiers over the
// materialized monoid. They deliberately repeat the definitions instead of
// calling the library paths they confirm.

inline bool oracle_deterministic(const BooleanEhresmannMonoid& m, Index a) {
  for (Index e : m.sg.projections) {
    const Index ea = m.sg.mul(e, a);
    if (ea != m.sg.mul(a, m.sg.star[ea])) return false;
  }
  return true;
}

inline bool oracle_codeterministic(const BooleanEhresmannMonoid& m, Index a) {
  for (Index e : m.sg.projections) {
    const Index ae = m.sg.mul(a, e);
    if (ae != m.sg.mul(m.sg.plus[ae], a)) return false;
  }
  return true;
}

inline bool oracle_partial_isometry(const BooleanEhresmannMonoid& m, Index a) {
  bool ok = true;
  m.down[a].for_each([&](int b) {
    if (m.sg.mul(m.sg.plus[b], a) != b) ok = false;
    if (m.sg.mul(a, m.sg.star[b]) != b) ok = false;
  });
  return ok;
}

// Partial injections on a k-element set, counted without any of the
// bisection machinery.
inline long long oracle_partial_injection_count(int k) {
  long long count = 0;
  std::vector<int> target(k, -1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      ++count;
      return;
    }
    self(self, i + 1);
    for (int t = 0; t < k; ++t) {
      bool used = false;
      for (int j = 0; j < i; ++j) {
        if (target[j] == t) used = true;
      }
      if (!used) {
        target[i] = t;
        self(self, i + 1);
        target[i] = -1;
      }
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace ehresmann::testing
