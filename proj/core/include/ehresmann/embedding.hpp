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
#include <unordered_map>
#include <vector>

#include "ehresmann/category.hpp"
#include "ehresmann/common.hpp"
#include "ehresmann/powerset.hpp"
#include "ehresmann/semigroup.hpp"

namespace ehresmann {

/// The monoid of all partial-isometry subsets of a category (the local
/// bisections, when the category is a groupoid), with the operations
/// inherited from the power set. Elements are indexed by ascending subset
/// mask.
struct PIMonoid {
  FiniteCategory base;
  EhresmannSemigroup sg;
  std::vector<std::uint64_t> masks;                  ///< element -> subset of base
  std::unordered_map<std::uint64_t, Index> index_of; ///< subset -> element

  int size() const { return sg.size(); }
};

/// Enumerates the partial-isometry subsets directly (one morphism per source
/// object, target objects pairwise distinct) and assembles their monoid.
/// Throws std::invalid_argument for categories wider than subset arithmetic
/// allows, and InternalError if a product of partial isometries escapes the
/// enumeration.
PIMonoid local_bisections(const FiniteCategory& c);

struct AlphaVerdict {
  bool images_partial_isometries = false;
  bool injective = false;
  bool multiplicative = false;
  bool preserves_star = false;
  bool preserves_plus = false;
  bool projections_to_identity_subsets = false;
  Violation why;  ///< first failure

  bool ok() const {
    return images_partial_isometries && injective && multiplicative && preserves_star &&
           preserves_plus && projections_to_identity_subsets;
  }
};

/// Down-set embedding of a restriction semigroup into the partial isometries
/// of its own restricted-product category. Verified without materializing
/// the full partial-isometry monoid, so it scales to every corpus instance.
struct AlphaEmbedding {
  FiniteCategory category;          ///< restricted product of the input
  std::vector<std::uint64_t> alpha; ///< element -> subset of category
  AlphaVerdict verdict;
};

/// alpha(a) = all elements at or below a. Rejects non-restriction inputs
/// with the bideterminism witness.
Checked<AlphaEmbedding> embed_alpha(const EhresmannSemigroup& s);

/// An Ehresmann semigroup whose star and plus arise from a genuine inverse
/// map: a a' a = a, a' a a' = a', idempotents commute and coincide with the
/// projections, star(a) = a' a and plus(a) = a a'.
struct InverseSemigroupView {
  EhresmannSemigroup sg;
  std::vector<Index> inv;
};

Checked<InverseSemigroupView> check_inverse(EhresmannSemigroup sg, std::vector<Index> inv);

struct NiceEmbeddingVerdict {
  bool injective = false;
  bool multiplicative = false;
  bool star_via_inverse = false;  ///< theta(star a) = theta(a)' theta(a)
  bool plus_via_inverse = false;  ///< theta(plus a) = theta(a) theta(a)'
  Violation why;

  bool ok() const { return injective && multiplicative && star_via_inverse && plus_via_inverse; }
};

/// Checks that theta embeds the restriction semigroup s into the inverse
/// semigroup t with star and plus computed by the inverse.
NiceEmbeddingVerdict verify_nice_embedding(const EhresmannSemigroup& s,
                                           const InverseSemigroupView& t,
                                           const std::vector<Index>& theta);

/// Full pipeline from a restriction semigroup and a groupoid embedding of
/// its restricted-product category to an embedding into the local
/// bisections of the groupoid.
struct GroupoidEmbedding {
  FiniteCategory category;        ///< restricted product of s
  PIMonoid bisections;            ///< local bisections of the groupoid
  InverseSemigroupView inverse;   ///< bisections with the member-wise inverse
  std::vector<Index> theta;       ///< s -> bisections
  Witnessed bisections_inverse;   ///< check_inverse outcome on the bisections
  Witnessed pi_map_morphism;      ///< image map multiplicative and star/plus stable
  Witnessed pi_map_order;         ///< inclusion preserved and reflected
  NiceEmbeddingVerdict nice;

  bool ok() const {
    return bisections_inverse.ok && pi_map_morphism.ok && pi_map_order.ok && nice.ok();
  }
};

/// iota must be an injective functor from the restricted-product category of
/// s into the groupoid g. The image map checks run on the alpha images (the
/// subsets the construction uses), which keeps the pipeline polynomial.
Checked<GroupoidEmbedding> nice_embedding_from_groupoid(const EhresmannSemigroup& s,
                                                        const FiniteCategory& g,
                                                        const std::vector<Index>& iota);

struct GroupoidFromInverse {
  FiniteCategory groupoid;
  std::vector<Index> inverse;  ///< coincides with the view's inverse
};

/// The restricted-product category of an inverse semigroup, asserted to be a
/// groupoid whose inversion is the semigroup inverse. Failures throw
/// InternalError.
GroupoidFromInverse groupoid_from_inverse(const InverseSemigroupView& t);

}  // namespace ehresmann
