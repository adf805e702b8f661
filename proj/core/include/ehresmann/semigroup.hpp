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

#include "ehresmann/category.hpp"
#include "ehresmann/common.hpp"

namespace ehresmann {

/// A finite Ehresmann semigroup: a total multiplication table, a set U of
/// projections, and the unary maps star (a -> a*) and plus (a -> a+), laws
/// ES1-ES4 below. An identity element is declared by the input, never
/// inferred.
///
///   ES1  U is a commutative subsemigroup of idempotents.
///   ES2  star and plus fix U pointwise.
///   ES3  a star(a) = a and plus(a) a = a.
///   ES4  (star(a) b)* = (a b)* and (a plus(b))+ = (a b)+.
struct EhresmannSemigroup {
  std::vector<std::string> names;  ///< optional; empty or one name per element
  std::vector<Index> mult;         ///< n*n row-major, total
  std::vector<Index> projections;  ///< sorted ascending (the set U)
  std::vector<Index> star;         ///< element -> projection
  std::vector<Index> plus;         ///< element -> projection
  std::optional<Index> one;        ///< declared identity element, if any

  int size() const { return static_cast<int>(star.size()); }
  Index mul(Index a, Index b) const { return mult[static_cast<std::size_t>(a) * star.size() + b]; }
  bool is_projection(Index a) const;

  std::string name(Index a) const;
};

/// Validates ES1-ES4 (plus associativity and the declared identity, when
/// present) and returns the value or the first violated law with a witness.
Checked<EhresmannSemigroup> check_ehresmann(EhresmannSemigroup raw);

/// x <=_r y iff x = plus(x) y; x <=_l y iff x = y star(x); <= is both.
bool order_le_r(const EhresmannSemigroup& s, Index x, Index y);
bool order_le_l(const EhresmannSemigroup& s, Index x, Index y);
bool order_le(const EhresmannSemigroup& s, Index x, Index y);

struct ElementClass {
  bool deterministic = false;    ///< e a = a (e a)* for every projection e
  bool codeterministic = false;  ///< a e = (a e)+ a for every projection e
  bool bideterministic = false;
};

ElementClass classify_element(const EhresmannSemigroup& s, Index a);

/// True iff every element is bideterministic; the witness is the first
/// element that is not, together with the projection that breaks it.
Witnessed is_restriction(const EhresmannSemigroup& s);

/// The category on the elements of s whose composites are the products a b
/// with star(a) = plus(b); identities are the projections, dom = star and
/// cod = plus. Validity is guaranteed for a checked input, so a validation
/// failure here throws InternalError.
FiniteCategory restricted_product_category(const EhresmannSemigroup& s);

struct MorphismCheck {
  bool multiplicative = false;
  bool preserves_star = false;
  bool preserves_plus = false;
  bool injective = false;
  bool maps_projections = false;  ///< theta(U) inside V; redundant cross-check
  Violation why;                  ///< first failure over the flags above

  bool morphism() const { return multiplicative && preserves_star && preserves_plus; }
};

/// Checks that theta : s -> t is a semigroup morphism commuting with star and
/// plus, and reports injectivity.
MorphismCheck check_morphism(const EhresmannSemigroup& s, const EhresmannSemigroup& t,
                             const std::vector<Index>& theta);

/// Zero of U when it exists: z in U absorbing in U and in the whole
/// semigroup.
std::optional<Index> find_projection_zero(const EhresmannSemigroup& s);

enum class LemmaStatus { Pass, Fail, NotApplicable };

struct LemmaCheck {
  std::string id;
  LemmaStatus status = LemmaStatus::Pass;
  Violation why;
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool all_pass() const;
};

/// Per-instance consequences of ES1-ES4: (ab)* <= b*, (ab)+ <= a+, the zero
/// characterizations (skipped when U has no zero), the three algebraic
/// relations being partial orders, and their agreement on U.
LemmaReport basic_lemma_report(const EhresmannSemigroup& s);

/// Order facts specific to restriction semigroups: the left and right orders
/// coincide, compatibility with multiplication, factorization of elements
/// below a product, U an order-ideal, uniqueness below a common bound, and
/// monotonicity of star and plus.
LemmaReport restriction_lemma_report(const EhresmannSemigroup& s);

}  // namespace ehresmann
