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

#include "ehresmann/embedding.hpp"

#include <algorithm>
#include <string>

namespace ehresmann {

namespace {

Violation make_violation(std::string law, std::vector<Index> witness, std::string detail) {
  Violation v;
  v.law = std::move(law);
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

// All partial-isometry subsets: walk the source objects in order and either
// skip one or pick a single morphism out of it whose target object is still
// free.
void enumerate_pi_masks(const FiniteCategory& c, std::vector<std::uint64_t>& out) {
  const int k = c.object_count();
  std::vector<std::vector<Index>> by_dom(k);
  std::vector<Index> obj_pos(c.size(), kUndefined);
  for (int p = 0; p < k; ++p) obj_pos[c.identities[p]] = p;
  for (Index x = 0; x < c.size(); ++x) by_dom[obj_pos[c.dom[x]]].push_back(x);

  std::vector<char> cod_used(k, 0);
  std::uint64_t current = 0;

  auto rec = [&](auto&& self, int p) -> void {
    if (p == k) {
      out.push_back(current);
      return;
    }
    self(self, p + 1);
    for (Index x : by_dom[p]) {
      const int cp = obj_pos[c.cod[x]];
      if (cod_used[cp]) continue;
      cod_used[cp] = 1;
      current |= std::uint64_t{1} << x;
      self(self, p + 1);
      current &= ~(std::uint64_t{1} << x);
      cod_used[cp] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
}

}  // namespace

PIMonoid local_bisections(const FiniteCategory& c) {
  if (c.size() > kMaxSubsetWidth) {
    throw std::invalid_argument("local_bisections: category too wide for subset masks");
  }
  PIMonoid m;
  m.base = c;
  enumerate_pi_masks(c, m.masks);
  const int n = static_cast<int>(m.masks.size());
  m.index_of.reserve(m.masks.size());
  for (Index i = 0; i < n; ++i) m.index_of.emplace(m.masks[i], i);

  std::uint64_t id_mask = 0;
  for (Index e : c.identities) id_mask |= std::uint64_t{1} << e;

  std::vector<std::string> morphism_names(c.size());
  for (Index x = 0; x < c.size(); ++x) morphism_names[x] = c.name(x);

  m.sg.names.resize(n);
  m.sg.star.resize(n);
  m.sg.plus.resize(n);
  m.sg.mult.resize(static_cast<std::size_t>(n) * n);
  for (Index i = 0; i < n; ++i) {
    const Subset a{&m.base, m.masks[i]};
    m.sg.names[i] = mask_to_string(m.masks[i], morphism_names);
    const auto star_it = m.index_of.find(subset_star(a).bits);
    const auto plus_it = m.index_of.find(subset_plus(a).bits);
    if (star_it == m.index_of.end() || plus_it == m.index_of.end()) {
      throw InternalError("local_bisections: support of a partial isometry escaped");
    }
    m.sg.star[i] = star_it->second;
    m.sg.plus[i] = plus_it->second;
    if ((m.masks[i] & ~id_mask) == 0) m.sg.projections.push_back(i);
  }
  for (Index i = 0; i < n; ++i) {
    const Subset a{&m.base, m.masks[i]};
    for (Index j = 0; j < n; ++j) {
      const Subset b{&m.base, m.masks[j]};
      const auto it = m.index_of.find(subset_product(a, b).bits);
      if (it == m.index_of.end()) {
        throw InternalError("local_bisections: a product of partial isometries is not one");
      }
      m.sg.mult[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  }
  m.sg.one = m.index_of.at(id_mask);
  return m;
}

Checked<AlphaEmbedding> embed_alpha(const EhresmannSemigroup& s) {
  const auto restriction = is_restriction(s);
  if (!restriction.ok) {
    Violation v = restriction.why;
    v.law = "alpha/restriction-required";
    return v;
  }
  if (s.size() > kMaxSubsetWidth) {
    Violation v = make_violation("alpha/size", {s.size()}, "too many elements for subset masks");
    return v;
  }

  AlphaEmbedding out;
  out.category = restricted_product_category(s);
  const int n = s.size();
  out.alpha.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (order_le(s, b, a)) out.alpha[a] |= std::uint64_t{1} << b;
    }
  }

  AlphaVerdict& v = out.verdict;
  v.images_partial_isometries = true;
  v.injective = true;
  v.multiplicative = true;
  v.preserves_star = true;
  v.preserves_plus = true;
  v.projections_to_identity_subsets = true;
  bool have_why = false;
  auto note = [&](Violation why) {
    if (!have_why) {
      v.why = std::move(why);
      have_why = true;
    }
  };

  const FiniteCategory& c = out.category;
  for (Index a = 0; a < n; ++a) {
    if (!classify_subset(c, out.alpha[a]).partial_isometry) {
      v.images_partial_isometries = false;
      note(make_violation("alpha/partial-isometry", {a},
                          "alpha(" + s.name(a) + ") is not a partial isometry"));
      break;
    }
  }
  for (Index a = 0; a < n && v.injective; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (out.alpha[a] == out.alpha[b]) {
        v.injective = false;
        note(make_violation("alpha/injectivity", {a, b}, "two elements share a down-set"));
        break;
      }
    }
  }
  for (Index a = 0; a < n && v.multiplicative; ++a) {
    const Subset sa{&c, out.alpha[a]};
    for (Index b = 0; b < n; ++b) {
      const Subset sb{&c, out.alpha[b]};
      if (subset_product(sa, sb).bits != out.alpha[s.mul(a, b)]) {
        v.multiplicative = false;
        note(make_violation("alpha/multiplicative", {a, b},
                            "alpha(ab) != alpha(a) alpha(b)"));
        break;
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (subset_star(Subset{&c, out.alpha[a]}).bits != out.alpha[s.star[a]]) {
      v.preserves_star = false;
      note(make_violation("alpha/star", {a}, "alpha does not commute with star"));
      break;
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (subset_plus(Subset{&c, out.alpha[a]}).bits != out.alpha[s.plus[a]]) {
      v.preserves_plus = false;
      note(make_violation("alpha/plus", {a}, "alpha does not commute with plus"));
      break;
    }
  }
  std::uint64_t id_mask = 0;
  for (Index e : c.identities) id_mask |= std::uint64_t{1} << e;
  for (Index e : s.projections) {
    if ((out.alpha[e] & ~id_mask) != 0) {
      v.projections_to_identity_subsets = false;
      note(make_violation("alpha/projections", {e},
                          "alpha of a projection leaves the identity subsets"));
      break;
    }
  }
  return out;
}

Checked<InverseSemigroupView> check_inverse(EhresmannSemigroup sg, std::vector<Index> inv) {
  const int n = sg.size();
  if (inv.size() != static_cast<std::size_t>(n)) {
    return make_violation("inverse/shape", {}, "inverse table size does not match");
  }
  for (Index a = 0; a < n; ++a) {
    if (inv[a] < 0 || inv[a] >= n) {
      return make_violation("inverse/dangling-index", {a, inv[a]}, "inverse out of range");
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (sg.mul(a, sg.mul(inv[a], a)) != a) {
      return make_violation("inverse/regularity", {a},
                            sg.name(a) + " a' a != a for the declared inverse");
    }
    if (sg.mul(inv[a], sg.mul(a, inv[a])) != inv[a]) {
      return make_violation("inverse/regularity", {a},
                            "a' a a' != a' at " + sg.name(a));
    }
  }
  for (Index e = 0; e < n; ++e) {
    if (sg.mul(e, e) != e) continue;
    for (Index f = 0; f < n; ++f) {
      if (sg.mul(f, f) != f) continue;
      if (sg.mul(e, f) != sg.mul(f, e)) {
        return make_violation("inverse/idempotents-commute", {e, f},
                              sg.name(e) + " and " + sg.name(f) + " do not commute");
      }
    }
  }
  for (Index e = 0; e < n; ++e) {
    if (sg.mul(e, e) == e && !sg.is_projection(e)) {
      return make_violation("inverse/projections-idempotents", {e},
                            "idempotent " + sg.name(e) + " is not a projection");
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (sg.star[a] != sg.mul(inv[a], a)) {
      return make_violation("inverse/star", {a}, "star(a) != a' a at " + sg.name(a));
    }
    if (sg.plus[a] != sg.mul(a, inv[a])) {
      return make_violation("inverse/plus", {a}, "plus(a) != a a' at " + sg.name(a));
    }
  }
  InverseSemigroupView view;
  view.sg = std::move(sg);
  view.inv = std::move(inv);
  return view;
}

NiceEmbeddingVerdict verify_nice_embedding(const EhresmannSemigroup& s,
                                           const InverseSemigroupView& t,
                                           const std::vector<Index>& theta) {
  NiceEmbeddingVerdict v;
  const int n = s.size();
  if (theta.size() != static_cast<std::size_t>(n)) {
    v.why = make_violation("nice/arity", {}, "map size does not match the source");
    return v;
  }
  for (Index a = 0; a < n; ++a) {
    if (theta[a] < 0 || theta[a] >= t.sg.size()) {
      v.why = make_violation("nice/dangling-index", {a, theta[a]}, "image out of range");
      return v;
    }
  }
  v.injective = true;
  v.multiplicative = true;
  v.star_via_inverse = true;
  v.plus_via_inverse = true;
  bool have_why = false;
  auto note = [&](Violation why) {
    if (!have_why) {
      v.why = std::move(why);
      have_why = true;
    }
  };
  for (Index a = 0; a < n && v.injective; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (theta[a] == theta[b]) {
        v.injective = false;
        note(make_violation("nice/injectivity", {a, b},
                            s.name(a) + " and " + s.name(b) + " share an image"));
        break;
      }
    }
  }
  for (Index a = 0; a < n && v.multiplicative; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (theta[s.mul(a, b)] != t.sg.mul(theta[a], theta[b])) {
        v.multiplicative = false;
        note(make_violation("nice/multiplicative", {a, b}, "theta(ab) != theta(a) theta(b)"));
        break;
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (theta[s.star[a]] != t.sg.mul(t.inv[theta[a]], theta[a])) {
      v.star_via_inverse = false;
      note(make_violation("nice/star", {a}, "theta(star a) != theta(a)' theta(a)"));
      break;
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (theta[s.plus[a]] != t.sg.mul(theta[a], t.inv[theta[a]])) {
      v.plus_via_inverse = false;
      note(make_violation("nice/plus", {a}, "theta(plus a) != theta(a) theta(a)'"));
      break;
    }
  }
  return v;
}

Checked<GroupoidEmbedding> nice_embedding_from_groupoid(const EhresmannSemigroup& s,
                                                        const FiniteCategory& g,
                                                        const std::vector<Index>& iota) {
  const auto groupoid = is_groupoid(g);
  if (!groupoid) {
    Violation v = groupoid.why;
    v.law = "nice-embed/groupoid-required";
    return v;
  }
  auto alpha = embed_alpha(s);
  if (!alpha.ok()) return alpha.violation();

  const auto functor = check_functor(alpha.value().category, g, iota);
  if (!functor.embedding()) {
    Violation v = functor.why;
    v.law = "nice-embed/" + v.law;
    return v;
  }
  if (!alpha.value().verdict.ok()) {
    throw InternalError("alpha embedding of a restriction semigroup failed: " +
                        to_string(alpha.value().verdict.why));
  }

  GroupoidEmbedding out;
  out.category = alpha.value().category;
  out.bisections = local_bisections(g);

  const int n = s.size();
  auto image_mask = [&](std::uint64_t mask) {
    std::uint64_t img = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      img |= std::uint64_t{1} << iota[__builtin_ctzll(rest)];
    }
    return img;
  };

  out.theta.resize(n);
  for (Index a = 0; a < n; ++a) {
    const auto it = out.bisections.index_of.find(image_mask(alpha.value().alpha[a]));
    if (it == out.bisections.index_of.end()) {
      throw InternalError("image of a partial isometry under an injective functor escaped");
    }
    out.theta[a] = it->second;
  }

  // Member-wise inverse on the bisections.
  std::vector<Index> pig_inv(out.bisections.size());
  for (Index i = 0; i < out.bisections.size(); ++i) {
    std::uint64_t inv_mask = 0;
    for (std::uint64_t rest = out.bisections.masks[i]; rest != 0; rest &= rest - 1) {
      inv_mask |= std::uint64_t{1} << groupoid.inverse[__builtin_ctzll(rest)];
    }
    const auto it = out.bisections.index_of.find(inv_mask);
    if (it == out.bisections.index_of.end()) {
      throw InternalError("member-wise inverse of a local bisection escaped");
    }
    pig_inv[i] = it->second;
  }
  auto inverse_view = check_inverse(out.bisections.sg, pig_inv);
  if (inverse_view.ok()) {
    out.bisections_inverse = Witnessed::pass();
    out.inverse = std::move(inverse_view).value();
  } else {
    out.bisections_inverse = Witnessed::fail(inverse_view.violation());
    out.inverse.sg = out.bisections.sg;
    out.inverse.inv = pig_inv;
  }

  // The subset-image map on the alpha images: multiplicative, star/plus
  // stable, and an order embedding.
  out.pi_map_morphism = Witnessed::pass();
  out.pi_map_order = Witnessed::pass();
  const FiniteCategory& c = out.category;
  for (Index a = 0; a < n && out.pi_map_morphism.ok; ++a) {
    const Subset sa{&c, alpha.value().alpha[a]};
    const Subset ga{&out.bisections.base, image_mask(alpha.value().alpha[a])};
    if (subset_star(ga).bits != image_mask(subset_star(sa).bits) ||
        subset_plus(ga).bits != image_mask(subset_plus(sa).bits)) {
      out.pi_map_morphism = Witnessed::fail(make_violation(
          "pi-map/support", {a}, "image map does not preserve the supports"));
      break;
    }
    for (Index b = 0; b < n; ++b) {
      const Subset sb{&c, alpha.value().alpha[b]};
      const Subset gb{&out.bisections.base, image_mask(alpha.value().alpha[b])};
      if (subset_product(ga, gb).bits != image_mask(subset_product(sa, sb).bits)) {
        out.pi_map_morphism = Witnessed::fail(make_violation(
            "pi-map/multiplicative", {a, b}, "image map is not multiplicative"));
        break;
      }
    }
  }
  for (Index a = 0; a < n && out.pi_map_order.ok; ++a) {
    for (Index b = 0; b < n; ++b) {
      const bool before = (alpha.value().alpha[a] & ~alpha.value().alpha[b]) == 0;
      const bool after =
          (image_mask(alpha.value().alpha[a]) & ~image_mask(alpha.value().alpha[b])) == 0;
      if (before != after) {
        out.pi_map_order = Witnessed::fail(make_violation(
            "pi-map/order", {a, b}, "inclusion is not preserved and reflected"));
        break;
      }
    }
  }

  out.nice = verify_nice_embedding(s, out.inverse, out.theta);
  return out;
}

GroupoidFromInverse groupoid_from_inverse(const InverseSemigroupView& t) {
  GroupoidFromInverse out;
  out.groupoid = restricted_product_category(t.sg);
  const auto g = is_groupoid(out.groupoid);
  if (!g) {
    throw InternalError("restricted product of an inverse semigroup is not a groupoid: " +
                        to_string(g.why));
  }
  if (g.inverse != t.inv) {
    throw InternalError("groupoid inversion disagrees with the semigroup inverse");
  }
  out.inverse = g.inverse;
  return out;
}

}  // namespace ehresmann
