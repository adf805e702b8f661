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

#include "ehresmann/category.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ehresmann {

std::string FiniteCategory::name(Index x) const {
  if (static_cast<std::size_t>(x) < names.size() && !names[x].empty()) return names[x];
  return "m" + std::to_string(x);
}

namespace {

Violation make_violation(std::string law, std::vector<Index> witness, std::string detail) {
  Violation v;
  v.law = std::move(law);
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

}  // namespace

Checked<FiniteCategory> validate_category(FiniteCategory raw) {
  const int n = raw.size();
  if (n == 0) {
    return make_violation("category/shape", {}, "a category needs at least one morphism");
  }
  if (raw.cod.size() != raw.dom.size() ||
      raw.comp.size() != static_cast<std::size_t>(n) * n ||
      (!raw.names.empty() && raw.names.size() != raw.dom.size())) {
    return make_violation("category/shape", {}, "table sizes do not match the morphism count");
  }

  std::sort(raw.identities.begin(), raw.identities.end());
  if (std::adjacent_find(raw.identities.begin(), raw.identities.end()) != raw.identities.end()) {
    return make_violation("category/shape", {}, "duplicate identity index");
  }
  if (raw.identities.empty()) {
    return make_violation("category/shape", {}, "a category needs at least one identity");
  }

  std::vector<char> is_id(n, 0);
  for (Index e : raw.identities) {
    if (e < 0 || e >= n) {
      return make_violation("category/dangling-index", {e}, "identity index out of range");
    }
    is_id[e] = 1;
  }

  for (Index x = 0; x < n; ++x) {
    if (raw.dom[x] < 0 || raw.dom[x] >= n || !is_id[raw.dom[x]]) {
      return make_violation("category/dangling-index", {x, raw.dom[x]},
                            "dom(" + raw.name(x) + ") is not an identity");
    }
    if (raw.cod[x] < 0 || raw.cod[x] >= n || !is_id[raw.cod[x]]) {
      return make_violation("category/dangling-index", {x, raw.cod[x]},
                            "cod(" + raw.name(x) + ") is not an identity");
    }
  }

  for (Index e : raw.identities) {
    if (raw.dom[e] != e || raw.cod[e] != e) {
      return make_violation("category/identity", {e},
                            "identity " + raw.name(e) + " must have dom = cod = itself");
    }
  }

  // comp is defined exactly on the composable pairs, lands in range and has
  // the right dom/cod.
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const Index z = raw.at(x, y);
      if (!raw.composable(x, y)) {
        if (z != kUndefined) {
          return make_violation("category/non-composable-pair", {x, y},
                                "comp(" + raw.name(x) + "," + raw.name(y) +
                                    ") declared although dom/cod do not match");
        }
        continue;
      }
      if (z == kUndefined) {
        return make_violation("category/missing-composite", {x, y},
                              "comp(" + raw.name(x) + "," + raw.name(y) +
                                  ") is composable but undefined");
      }
      if (z < 0 || z >= n) {
        return make_violation("category/dangling-index", {x, y, z}, "composite out of range");
      }
      if (raw.dom[z] != raw.dom[y] || raw.cod[z] != raw.cod[x]) {
        return make_violation("category/composite-type", {x, y, z},
                              "comp(" + raw.name(x) + "," + raw.name(y) +
                                  ") has the wrong dom or cod");
      }
    }
  }

  for (Index x = 0; x < n; ++x) {
    if (raw.at(x, raw.dom[x]) != x) {
      return make_violation("category/identity", {x, raw.dom[x]},
                            "comp(" + raw.name(x) + ", dom) must be " + raw.name(x));
    }
    if (raw.at(raw.cod[x], x) != x) {
      return make_violation("category/identity", {raw.cod[x], x},
                            "comp(cod, " + raw.name(x) + ") must be " + raw.name(x));
    }
  }

  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!raw.composable(x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (!raw.composable(y, z)) continue;
        // Both sides are defined: dom(xy) = dom(y) = cod(z), dom(x) = cod(yz).
        if (raw.at(raw.at(x, y), z) != raw.at(x, raw.at(y, z))) {
          return make_violation("category/associativity", {x, y, z},
                                "(" + raw.name(x) + " " + raw.name(y) + ") " + raw.name(z) +
                                    " != " + raw.name(x) + " (" + raw.name(y) + " " +
                                    raw.name(z) + ")");
        }
      }
    }
  }

  return raw;
}

GroupoidResult is_groupoid(const FiniteCategory& c) {
  GroupoidResult result;
  const int n = c.size();
  result.inverse.assign(n, kUndefined);
  for (Index x = 0; x < n; ++x) {
    Index found = kUndefined;
    for (Index y = 0; y < n; ++y) {
      if (!c.composable(x, y) || !c.composable(y, x)) continue;
      if (c.at(x, y) == c.cod[x] && c.at(y, x) == c.dom[x]) {
        found = y;
        break;
      }
    }
    if (found == kUndefined) {
      result.groupoid = false;
      result.inverse.clear();
      result.why = Violation{"category/no-inverse", {x}, c.name(x) + " has no inverse", 0, 0};
      return result;
    }
    result.inverse[x] = found;
  }
  result.groupoid = true;
  return result;
}

FiniteCategory pair_groupoid(int k) {
  if (k < 1) throw std::invalid_argument("pair_groupoid: k must be positive");

  FiniteCategory c;
  const int n = k * k;
  c.names.resize(n);
  c.dom.resize(n);
  c.cod.resize(n);
  c.comp.assign(static_cast<std::size_t>(n) * n, kUndefined);

  // Identities (i,i) take indices 0..k-1, then the off-diagonal pairs in
  // row-major order. `pos` maps a pair to its morphism index.
  std::vector<Index> pos(static_cast<std::size_t>(k) * k, kUndefined);
  for (int i = 0; i < k; ++i) {
    pos[static_cast<std::size_t>(i) * k + i] = i;
    c.identities.push_back(i);
  }
  Index next = k;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) pos[static_cast<std::size_t>(i) * k + j] = next++;
    }
  }

  // A pair (i,j) is a morphism from (j,j) to (i,i).
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Index m = pos[static_cast<std::size_t>(i) * k + j];
      c.dom[m] = j;
      c.cod[m] = i;
      if (i == j) {
        c.names[m] = "id_x" + std::to_string(i);
      } else {
        c.names[m] = "p" + std::to_string(i) + "_" + std::to_string(j);
      }
    }
  }

  // (i,j)(j,l) = (i,l)
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int l = 0; l < k; ++l) {
        const Index x = pos[static_cast<std::size_t>(i) * k + j];
        const Index y = pos[static_cast<std::size_t>(j) * k + l];
        c.comp[static_cast<std::size_t>(x) * n + y] = pos[static_cast<std::size_t>(i) * k + l];
      }
    }
  }

  auto checked = validate_category(std::move(c));
  if (!checked.ok()) {
    throw InternalError("pair_groupoid failed validation: " + to_string(checked.violation()));
  }
  return std::move(checked).value();
}

Witnessed is_cancellative(const FiniteCategory& c) {
  const int n = c.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!c.composable(x, y)) continue;
      for (Index z = y + 1; z < n; ++z) {
        if (!c.composable(x, z)) continue;
        if (c.at(x, y) == c.at(x, z)) {
          return Witnessed::fail(Violation{"category/left-cancellation",
                                           {x, y, z},
                                           c.name(x) + " does not cancel on the left",
                                           0,
                                           0});
        }
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!c.composable(y, x)) continue;
      for (Index z = y + 1; z < n; ++z) {
        if (!c.composable(z, x)) continue;
        if (c.at(y, x) == c.at(z, x)) {
          return Witnessed::fail(Violation{"category/right-cancellation",
                                           {x, y, z},
                                           c.name(x) + " does not cancel on the right",
                                           0,
                                           0});
        }
      }
    }
  }
  return Witnessed::pass();
}

FunctorCheck check_functor(const FiniteCategory& c, const FiniteCategory& d,
                           const std::vector<Index>& map) {
  FunctorCheck result;
  const int n = c.size();
  if (map.size() != static_cast<std::size_t>(n)) {
    result.why = Violation{"functor/arity", {}, "map size does not match the source", 0, 0};
    return result;
  }
  for (Index x = 0; x < n; ++x) {
    if (map[x] < 0 || map[x] >= d.size()) {
      result.why = Violation{"functor/dangling-index", {x, map[x]}, "image out of range", 0, 0};
      return result;
    }
  }
  for (Index x = 0; x < n; ++x) {
    if (d.dom[map[x]] != map[c.dom[x]] || d.cod[map[x]] != map[c.cod[x]]) {
      result.why =
          Violation{"functor/type", {x}, "image of " + c.name(x) + " has the wrong dom or cod",
                    0, 0};
      return result;
    }
  }
  for (Index e : c.identities) {
    if (!d.is_identity(map[e])) {
      result.why = Violation{"functor/identity", {e}, "identity not mapped to an identity", 0, 0};
      return result;
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!c.composable(x, y)) continue;
      if (d.at(map[x], map[y]) != map[c.at(x, y)]) {
        result.why = Violation{"functor/composition",
                               {x, y},
                               "composite of " + c.name(x) + " and " + c.name(y) +
                                   " is not preserved",
                               0,
                               0};
        return result;
      }
    }
  }
  result.functor = true;
  result.injective = true;
  std::vector<char> seen(d.size(), 0);
  for (Index x = 0; x < n; ++x) {
    if (seen[map[x]]) {
      result.injective = false;
      Index other = 0;
      while (map[other] != map[x]) ++other;
      result.why = Violation{"functor/injectivity", {other, x}, "two morphisms share an image",
                             0, 0};
      break;
    }
    seen[map[x]] = 1;
  }
  return result;
}

namespace {

// Backtracking state for the isomorphism search: objects are matched first,
// then the non-identity morphisms constrained by dom/cod under the object
// match and by composites among already-placed morphisms.
struct IsoSearch {
  const FiniteCategory& a;
  const FiniteCategory& b;
  std::vector<Index> map;        // a-morphism -> b-morphism or kUndefined
  std::vector<char> used;        // b-morphism already taken
  std::vector<Index> non_ident;  // non-identity morphisms of a, ascending

  bool consistent(Index x) const {
    // Prune on composites between x and previously mapped morphisms whose
    // result is already mapped; the leaf runs a complete check.
    for (Index y = 0; y < a.size(); ++y) {
      if (map[y] == kUndefined) continue;
      if (a.composable(x, y)) {
        const Index z = a.at(x, y);
        if (map[z] != kUndefined && b.at(map[x], map[y]) != map[z]) return false;
      }
      if (a.composable(y, x)) {
        const Index z = a.at(y, x);
        if (map[z] != kUndefined && b.at(map[y], map[x]) != map[z]) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t i) {
    if (i == non_ident.size()) return full_check();
    const Index x = non_ident[i];
    for (Index y : candidates(x)) {
      map[x] = y;
      used[y] = 1;
      if (consistent(x) && extend(i + 1)) return true;
      used[y] = 0;
      map[x] = kUndefined;
    }
    return false;
  }

  std::vector<Index> candidates(Index x) const {
    std::vector<Index> out;
    for (Index y = 0; y < b.size(); ++y) {
      if (used[y] || b.is_identity(y)) continue;
      if (b.dom[y] == map[a.dom[x]] && b.cod[y] == map[a.cod[x]]) out.push_back(y);
    }
    return out;
  }

  bool full_check() const {
    for (Index x = 0; x < a.size(); ++x) {
      for (Index y = 0; y < a.size(); ++y) {
        const bool defined_a = a.composable(x, y);
        const bool defined_b = b.composable(map[x], map[y]);
        if (defined_a != defined_b) return false;
        if (defined_a && b.at(map[x], map[y]) != map[a.at(x, y)]) return false;
      }
    }
    return true;
  }
};

bool try_object_bijection(IsoSearch& search, std::size_t i, std::vector<char>& obj_used) {
  const auto& a = search.a;
  const auto& b = search.b;
  if (i == a.identities.size()) {
    std::fill(search.used.begin(), search.used.end(), 0);
    for (Index e : a.identities) search.used[search.map[e]] = 1;
    for (Index x : search.non_ident) search.map[x] = kUndefined;
    return search.extend(0);
  }
  const Index e = a.identities[i];
  for (std::size_t j = 0; j < b.identities.size(); ++j) {
    if (obj_used[j]) continue;
    search.map[e] = b.identities[j];
    obj_used[j] = 1;
    if (try_object_bijection(search, i + 1, obj_used)) return true;
    obj_used[j] = 0;
    search.map[e] = kUndefined;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const FiniteCategory& a,
                                                   const FiniteCategory& b) {
  if (a.size() != b.size() || a.identities.size() != b.identities.size()) return std::nullopt;

  IsoSearch search{a, b, std::vector<Index>(a.size(), kUndefined),
                   std::vector<char>(b.size(), 0), {}};
  for (Index x = 0; x < a.size(); ++x) {
    if (!a.is_identity(x)) search.non_ident.push_back(x);
  }
  std::vector<char> obj_used(b.identities.size(), 0);
  if (try_object_bijection(search, 0, obj_used)) return search.map;
  return std::nullopt;
}

}  // namespace ehresmann
