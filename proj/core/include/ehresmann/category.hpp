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

#include <optional>
#include <string>
#include <vector>

#include "ehresmann/common.hpp"

namespace ehresmann {

/// A finite category given by tables. Morphisms are the indices 0..n-1;
/// identities are a subset of them (the objects). The composite of x and y,
/// written comp(x, y), means "x after y" and is defined exactly when
/// dom(x) == cod(y). Values are immutable once validated; every operation in
/// this library may share them across threads.
struct FiniteCategory {
  std::vector<std::string> names;  ///< optional; empty or one name per morphism
  std::vector<Index> identities;   ///< sorted ascending
  std::vector<Index> dom;          ///< morphism -> identity morphism
  std::vector<Index> cod;          ///< morphism -> identity morphism
  std::vector<Index> comp;         ///< n*n row-major; kUndefined off the composable pairs

  int size() const { return static_cast<int>(dom.size()); }
  int object_count() const { return static_cast<int>(identities.size()); }

  Index at(Index x, Index y) const { return comp[static_cast<std::size_t>(x) * dom.size() + y]; }
  bool composable(Index x, Index y) const { return dom[x] == cod[y]; }
  bool is_identity(Index x) const { return dom[x] == x && cod[x] == x; }

  std::string name(Index x) const;
};

/// Checks the category laws on a raw description and returns the validated
/// value, or the first violated law with a concrete witness. Witnesses are
/// the smallest offending tuples in lexicographic index order.
Checked<FiniteCategory> validate_category(FiniteCategory raw);

struct GroupoidResult {
  bool groupoid = false;
  std::vector<Index> inverse;  ///< a -> a^-1, filled only when groupoid
  Violation why;               ///< a morphism with no inverse otherwise

  explicit operator bool() const { return groupoid; }
};

/// Decides whether every morphism has a two-sided inverse; returns the
/// inverse table when it does.
GroupoidResult is_groupoid(const FiniteCategory& c);

/// The groupoid of all ordered pairs over a k-element set: identities are the
/// diagonal pairs and (x,y)(y,z) = (x,z). Throws std::invalid_argument when
/// k < 1. Identities occupy indices 0..k-1.
FiniteCategory pair_groupoid(int k);

/// True iff composition cancels on both sides over all defined composites.
/// A necessary condition for embedding the category into a groupoid.
Witnessed is_cancellative(const FiniteCategory& c);

struct FunctorCheck {
  bool functor = false;
  bool injective = false;
  Violation why;

  bool embedding() const { return functor && injective; }
};

/// Verifies that `map` (morphisms of c -> morphisms of d) preserves dom, cod,
/// identities and composition, and reports injectivity.
FunctorCheck check_functor(const FiniteCategory& c, const FiniteCategory& d,
                           const std::vector<Index>& map);

/// Searches for an isomorphism of categories by backtracking over object
/// bijections extended morphism by morphism. Returns the first bijection
/// found (a -> image), or nullopt. Intended for small instances.
std::optional<std::vector<Index>> find_isomorphism(const FiniteCategory& a,
                                                   const FiniteCategory& b);

}  // namespace ehresmann
