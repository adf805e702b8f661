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
#include <string>
#include <vector>

#include "ehresmann/category.hpp"
#include "ehresmann/common.hpp"
#include "ehresmann/semigroup.hpp"

namespace ehresmann {

/// An Ehresmann monoid together with a partial order under which it is a
/// Boolean algebra, laws OE1-OE5 below. The order is input data (a full
/// relation); the lattice structure is derived from it by search and cached.
///
///   OE1  c(a v b) = ca v cb and (a v b)c = ac v bc.
///   OE2  anything below a projection is a projection.
///   OE3  on projections the algebraic order and the Boolean order agree.
///   OE4  ea and ae lie below a for every projection e.
///   OE5  star and plus distribute over binary joins.
struct BooleanEhresmannMonoid {
  EhresmannSemigroup sg;     ///< with a declared identity in U
  std::vector<Bitset> down;  ///< down[a] = all b with b below a

  // Derived lattice data, filled by check_boolean or by a trusted builder.
  std::vector<Bitset> up;
  std::vector<Index> meet;  ///< n*n
  std::vector<Index> join;  ///< n*n
  std::vector<Index> complement;
  Index bottom = kUndefined;
  Index top = kUndefined;

  int size() const { return sg.size(); }
  bool incl(Index a, Index b) const { return down[b].test(a); }  ///< a below b
  Index meet_of(Index a, Index b) const { return meet[static_cast<std::size_t>(a) * sg.size() + b]; }
  Index join_of(Index a, Index b) const { return join[static_cast<std::size_t>(a) * sg.size() + b]; }
};

/// Validates the Boolean-algebra structure of the order and OE1-OE5.
/// `sg` must already have passed check_ehresmann.
Checked<BooleanEhresmannMonoid> check_boolean(EhresmannSemigroup sg, std::vector<Bitset> down);

/// Minimal non-bottom elements, ascending.
std::vector<Index> atoms(const BooleanEhresmannMonoid& m);

/// a is a partial isometry when everything below it in the Boolean order is
/// below it in the algebraic order; the witness is the first b violating
/// that.
Witnessed is_partial_isometry_abstract(const BooleanEhresmannMonoid& m, Index a);

/// All partial isometries, ascending.
std::vector<Index> partial_isometries(const BooleanEhresmannMonoid& m);

/// Closure of the partial isometries under multiplication; the witness is
/// the first product that escapes.
Witnessed pi_product_closed(const BooleanEhresmannMonoid& m);

/// Rebuilds a category from the atoms: morphisms are the atoms, identities
/// the atoms in U, dom = star, cod = plus, composite = product when
/// star(a) = plus(b). Requires pi_product_closed; a hypothesis failure is
/// reported as a Violation, while a failure of the atom arithmetic itself
/// (star of an atom not an atom, a composable atom product not an atom)
/// throws InternalError since it falsifies this library, not the input.
Checked<FiniteCategory> reconstruct_category(const BooleanEhresmannMonoid& m);

struct PhiAssertion {
  std::string id;
  Witnessed result;
};

/// The atom-decomposition map together with its verification.
struct PhiResult {
  FiniteCategory category;             ///< reconstruct_category(m)
  std::vector<Index> atom_elements;    ///< category morphism -> element of m
  std::vector<std::uint64_t> phi;      ///< element -> mask of atoms below it
  std::vector<PhiAssertion> asserted;  ///< bijective, multiplicative, star, plus, order, U

  bool verified() const;
};

/// phi(a) = atoms below a, as a subset of the reconstructed category. The
/// verification asserts bijectivity, multiplicativity, preservation of star
/// and plus, order isomorphism, and that U maps onto the subsets of the
/// identity atoms. Assertion failures are reported, not thrown: they
/// falsify the implementation, not the input.
Checked<PhiResult> phi_isomorphism(const BooleanEhresmannMonoid& m);

struct BooleanLemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_pass() const;
};

/// Consequences of OE1-OE5 on a validated instance: multiplication and
/// star/plus are monotone for the Boolean order, U is a Boolean algebra in
/// its own right, the partial isometries form an order-ideal, and every
/// partial isometry is bideterministic.
BooleanLemmaReport boolean_lemma_report(const BooleanEhresmannMonoid& m);

}  // namespace ehresmann
