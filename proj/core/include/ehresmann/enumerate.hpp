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

#include <vector>

#include "ehresmann/category.hpp"
#include "ehresmann/common.hpp"
#include "ehresmann/semigroup.hpp"

namespace ehresmann {

inline constexpr int kMaxEnumerableMorphisms = 6;

/// All categories with at most max_morphisms morphisms, one representative
/// per isomorphism class, in a deterministic order (ascending size, then
/// lexicographic canonical table). Identities occupy the leading indices of
/// every emitted category. Throws std::invalid_argument beyond the hard cap.
std::vector<FiniteCategory> enumerate_categories(int max_morphisms);

/// All meet semilattices with at most max_elements elements up to
/// isomorphism, wrapped as Ehresmann semigroups with every element a
/// projection and star = plus = identity map.
std::vector<EhresmannSemigroup> enumerate_semilattices(int max_elements);

/// Every non-empty subset closed under multiplication, star and plus,
/// re-indexed as its own Ehresmann semigroup (the full semigroup included).
/// Restricted to at most 16 elements.
std::vector<EhresmannSemigroup> ehresmann_subalgebras(const EhresmannSemigroup& s);

}  // namespace ehresmann
