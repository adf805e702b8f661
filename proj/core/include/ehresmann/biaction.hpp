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

/// A category whose identities carry a meet-semilattice product and which is
/// acted on by that semilattice from both sides, laws E1-E6 below. The action
/// tables are indexed by the position of the identity inside
/// category.identities.
///
///   E1  the identities form a commutative idempotent semigroup.
///   E2  both actions are unital supported actions:
///       cod(a) . a = a, cod(e . a) = e cod(a), e . (f . a) = (ef) . a,
///       and dually on the right.
///   E3  (e . a) . f = e . (a . f).
///   E4  on identities both actions are the semilattice product.
///   E5  dom(e . a) <= dom(a) and cod(a . e) <= cod(a) in the semilattice.
///   E6  e . (xy) = (e . x)(dom(e . x) . y) on composable pairs, dually on
///       the right.
struct EhresmannBiaction {
  FiniteCategory category;
  std::vector<Index> meet;    ///< k*k; entries are identity morphism indices
  std::vector<Index> lact;    ///< k*n; row = identity position, column = morphism
  std::vector<Index> ract;    ///< n*k; row = morphism, column = identity position
  std::vector<Index> id_pos;  ///< morphism -> identity position, kUndefined otherwise

  int size() const { return category.size(); }
  int objects() const { return category.object_count(); }

  /// Semilattice product of two identities, by morphism index.
  Index meet_of(Index e, Index f) const {
    return meet[static_cast<std::size_t>(id_pos[e]) * objects() + id_pos[f]];
  }
  Index left(Index e, Index a) const {
    return lact[static_cast<std::size_t>(id_pos[e]) * size() + a];
  }
  Index right(Index a, Index e) const {
    return ract[static_cast<std::size_t>(a) * objects() + id_pos[e]];
  }
  /// Semilattice order: e <= f iff ef = e.
  bool sl_le(Index e, Index f) const { return meet_of(e, f) == e; }
};

/// Validates the category and E1-E6, plus the pre-flight fact that makes the
/// pseudoproduct total: dom(x . e) = e = cod(e . y) for e = dom(x) cod(y).
Checked<EhresmannBiaction> check_biaction(EhresmannBiaction raw);

/// The biaction of a checked Ehresmann semigroup: the restricted-product
/// category with both actions given by multiplication. Re-validated; a
/// failure throws InternalError.
EhresmannBiaction biaction_from_ehresmann(const EhresmannSemigroup& s);

/// x . e composed with e . y for e = dom(x) cod(y). Throws InternalError if
/// the inner composite is undefined, which a checked biaction rules out.
Index pseudoproduct(const EhresmannBiaction& b, Index x, Index y);

/// The Ehresmann semigroup on the morphisms of b under the pseudoproduct,
/// with projections the identities, star = dom and plus = cod. The result is
/// re-checked (associativity included); failures throw InternalError.
EhresmannSemigroup semigroup_from_biaction(const EhresmannBiaction& b);

/// Evaluates both bracketings of every triple against the common three-factor
/// expansion and confirms the three agree.
Witnessed pseudoproduct_expansion_check(const EhresmannBiaction& b);

}  // namespace ehresmann
