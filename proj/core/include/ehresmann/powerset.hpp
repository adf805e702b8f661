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

#include <cstdint>

#include "ehresmann/boolean_monoid.hpp"
#include "ehresmann/category.hpp"
#include "ehresmann/common.hpp"

namespace ehresmann {

/// A subset of the morphisms of a category, stored as a 64-bit mask.
/// Subset arithmetic therefore supports categories with at most 64
/// morphisms; the monoid materialization cap below is far stricter anyway.
struct Subset {
  const FiniteCategory* base = nullptr;
  std::uint64_t bits = 0;
};

inline constexpr int kMaxSubsetWidth = 64;

/// Default materialization cap: table cells of the power-set monoid, i.e.
/// (2^|C|)^2 <= cap. The default allows categories up to 10 morphisms.
inline constexpr std::uint64_t kDefaultCellCap = std::uint64_t{1} << 20;

Subset make_subset(const FiniteCategory& base, std::uint64_t bits);

/// {comp(a, b) : a in A, b in B, dom(a) = cod(b)}. Throws
/// std::invalid_argument when the operands live over different categories.
Subset subset_product(const Subset& a, const Subset& b);

/// Images of dom and cod respectively, as subsets of the identities.
Subset subset_star(const Subset& a);
Subset subset_plus(const Subset& a);

struct SubsetClass {
  bool deterministic = false;    ///< equal doms force equal cods
  bool codeterministic = false;  ///< equal cods force equal doms
  bool partial_isometry = false; ///< dom and cod both injective on the subset
};

/// Classifies a subset by dom/cod bookkeeping alone, without touching the
/// power-set monoid. The empty subset counts as deterministic,
/// codeterministic and a partial isometry: the defining conditions hold
/// vacuously and the definitional oracle agrees.
SubsetClass classify_subset(const FiniteCategory& c, std::uint64_t members);

/// Materializes the power-set Ehresmann monoid of c with the inclusion
/// order: elements are all 2^|C| subsets in binary-counter order (element 0
/// is the empty set), subset product as multiplication, U the subsets of the
/// identities, star/plus the dom/cod images, identity the set of all
/// identities. Fails with a size report when (2^|C|)^2 exceeds cell_cap.
Checked<BooleanEhresmannMonoid> build_powerset_monoid(const FiniteCategory& c,
                                                      std::uint64_t cell_cap = kDefaultCellCap);

}  // namespace ehresmann
