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

#include "ehresmann/biaction.hpp"

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

}  // namespace

Checked<EhresmannBiaction> check_biaction(EhresmannBiaction raw) {
  auto cat = validate_category(std::move(raw.category));
  if (!cat.ok()) return cat.violation();
  raw.category = std::move(cat).value();

  const int n = raw.size();
  const int k = raw.objects();
  if (raw.meet.size() != static_cast<std::size_t>(k) * k ||
      raw.lact.size() != static_cast<std::size_t>(k) * n ||
      raw.ract.size() != static_cast<std::size_t>(n) * k) {
    return make_violation("biaction/shape", {}, "action table sizes do not match");
  }

  raw.id_pos.assign(n, kUndefined);
  for (int p = 0; p < k; ++p) raw.id_pos[raw.category.identities[p]] = p;

  for (const Index v : raw.meet) {
    if (v < 0 || v >= n || raw.id_pos[v] == kUndefined) {
      return make_violation("biaction/dangling-index", {v},
                            "meet entry is not an identity morphism");
    }
  }
  for (const Index v : raw.lact) {
    if (v < 0 || v >= n) {
      return make_violation("biaction/dangling-index", {v}, "left action entry out of range");
    }
  }
  for (const Index v : raw.ract) {
    if (v < 0 || v >= n) {
      return make_violation("biaction/dangling-index", {v}, "right action entry out of range");
    }
  }

  const FiniteCategory& c = raw.category;
  const auto& ids = c.identities;

  // E1: commutative idempotent semigroup on the identities.
  for (Index e : ids) {
    if (raw.meet_of(e, e) != e) {
      return make_violation("E1", {e}, "the semilattice product is not idempotent");
    }
  }
  for (Index e : ids) {
    for (Index f : ids) {
      if (raw.meet_of(e, f) != raw.meet_of(f, e)) {
        return make_violation("E1", {e, f}, "the semilattice product is not commutative");
      }
      for (Index g : ids) {
        if (raw.meet_of(raw.meet_of(e, f), g) != raw.meet_of(e, raw.meet_of(f, g))) {
          return make_violation("E1", {e, f, g}, "the semilattice product is not associative");
        }
      }
    }
  }

  // E2: both actions are unital, typed and genuine actions.
  for (Index a = 0; a < n; ++a) {
    if (raw.left(c.cod[a], a) != a) {
      return make_violation("E2", {a}, "cod(a) . a != a at " + c.name(a));
    }
    if (raw.right(a, c.dom[a]) != a) {
      return make_violation("E2", {a}, "a . dom(a) != a at " + c.name(a));
    }
  }
  for (Index e : ids) {
    for (Index a = 0; a < n; ++a) {
      if (c.cod[raw.left(e, a)] != raw.meet_of(e, c.cod[a])) {
        return make_violation("E2", {e, a}, "cod(e . a) != e cod(a)");
      }
      if (c.dom[raw.right(a, e)] != raw.meet_of(c.dom[a], e)) {
        return make_violation("E2", {a, e}, "dom(a . e) != dom(a) e");
      }
    }
  }
  for (Index e : ids) {
    for (Index f : ids) {
      for (Index a = 0; a < n; ++a) {
        if (raw.left(e, raw.left(f, a)) != raw.left(raw.meet_of(e, f), a)) {
          return make_violation("E2", {e, f, a}, "left action law e . (f . a) = (ef) . a fails");
        }
        if (raw.right(raw.right(a, e), f) != raw.right(a, raw.meet_of(e, f))) {
          return make_violation("E2", {a, e, f}, "right action law (a . e) . f = a . (ef) fails");
        }
      }
    }
  }

  // E3: the two actions commute.
  for (Index e : ids) {
    for (Index a = 0; a < n; ++a) {
      for (Index f : ids) {
        if (raw.right(raw.left(e, a), f) != raw.left(e, raw.right(a, f))) {
          return make_violation("E3", {e, a, f}, "(e . a) . f != e . (a . f)");
        }
      }
    }
  }

  // E4: on identities both actions are the semilattice product.
  for (Index e : ids) {
    for (Index a : ids) {
      if (raw.left(e, a) != raw.meet_of(e, a)) {
        return make_violation("E4", {e, a}, "e . a != ea on identities");
      }
      if (raw.right(a, e) != raw.meet_of(a, e)) {
        return make_violation("E4", {a, e}, "a . e != ae on identities");
      }
    }
  }

  // E5: acting shrinks the other support.
  for (Index e : ids) {
    for (Index a = 0; a < n; ++a) {
      if (!raw.sl_le(c.dom[raw.left(e, a)], c.dom[a])) {
        return make_violation("E5", {e, a}, "dom(e . a) not below dom(a)");
      }
      if (!raw.sl_le(c.cod[raw.right(a, e)], c.cod[a])) {
        return make_violation("E5", {a, e}, "cod(a . e) not below cod(a)");
      }
    }
  }

  // E6 on composable pairs. E2 and E5 have been verified above, so the inner
  // composites here are defined; an undefined one is our own bug.
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!c.composable(x, y)) continue;
      const Index xy = c.at(x, y);
      for (Index e : ids) {
        const Index u = raw.left(e, x);
        const Index v = raw.left(c.dom[u], y);
        if (!c.composable(u, v)) {
          throw InternalError("E6 check: left expansion not composable");
        }
        if (raw.left(e, xy) != c.at(u, v)) {
          return make_violation("E6", {e, x, y}, "e . (xy) != (e . x)(dom(e . x) . y)");
        }
        const Index w = raw.right(y, e);
        const Index z = raw.right(x, c.cod[w]);
        if (!c.composable(z, w)) {
          throw InternalError("E6 check: right expansion not composable");
        }
        if (raw.right(xy, e) != c.at(z, w)) {
          return make_violation("E6", {x, y, e}, "(xy) . e != (x . cod(y . e))(y . e)");
        }
      }
    }
  }

  // Pre-flight for the pseudoproduct: with e = dom(x) cod(y), the two halves
  // meet at e, so their composite is always defined.
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const Index e = raw.meet_of(c.dom[x], c.cod[y]);
      if (c.dom[raw.right(x, e)] != e || c.cod[raw.left(e, y)] != e) {
        return make_violation("pseudoproduct/pre-flight", {x, y},
                              "the pseudoproduct composite would be undefined");
      }
    }
  }

  return raw;
}

EhresmannBiaction biaction_from_ehresmann(const EhresmannSemigroup& s) {
  EhresmannBiaction b;
  b.category = restricted_product_category(s);
  const int n = b.size();
  const int k = b.objects();
  b.meet.resize(static_cast<std::size_t>(k) * k);
  b.lact.resize(static_cast<std::size_t>(k) * n);
  b.ract.resize(static_cast<std::size_t>(n) * k);
  for (int p = 0; p < k; ++p) {
    const Index e = b.category.identities[p];
    for (int q = 0; q < k; ++q) {
      b.meet[static_cast<std::size_t>(p) * k + q] = s.mul(e, b.category.identities[q]);
    }
    for (Index a = 0; a < n; ++a) {
      b.lact[static_cast<std::size_t>(p) * n + a] = s.mul(e, a);
      b.ract[static_cast<std::size_t>(a) * k + p] = s.mul(a, e);
    }
  }
  auto checked = check_biaction(std::move(b));
  if (!checked.ok()) {
    throw InternalError("the biaction of an Ehresmann semigroup failed its own laws: " +
                        to_string(checked.violation()));
  }
  return std::move(checked).value();
}

Index pseudoproduct(const EhresmannBiaction& b, Index x, Index y) {
  const FiniteCategory& c = b.category;
  const Index e = b.meet_of(c.dom[x], c.cod[y]);
  const Index u = b.right(x, e);
  const Index v = b.left(e, y);
  if (!c.composable(u, v)) {
    throw InternalError("pseudoproduct: inner composite undefined");
  }
  return c.at(u, v);
}

EhresmannSemigroup semigroup_from_biaction(const EhresmannBiaction& b) {
  const int n = b.size();
  EhresmannSemigroup s;
  s.names.resize(n);
  for (Index a = 0; a < n; ++a) s.names[a] = b.category.name(a);
  s.mult.resize(static_cast<std::size_t>(n) * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      s.mult[static_cast<std::size_t>(x) * n + y] = pseudoproduct(b, x, y);
    }
  }
  s.projections = b.category.identities;
  s.star = b.category.dom;
  s.plus = b.category.cod;
  auto checked = check_ehresmann(std::move(s));
  if (!checked.ok()) {
    throw InternalError("the pseudoproduct failed the Ehresmann laws: " +
                        to_string(checked.violation()));
  }
  return std::move(checked).value();
}

Witnessed pseudoproduct_expansion_check(const EhresmannBiaction& b) {
  const FiniteCategory& c = b.category;
  const int n = b.size();
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) {
        const Index lhs = pseudoproduct(b, pseudoproduct(b, x, y), z);
        const Index rhs = pseudoproduct(b, x, pseudoproduct(b, y, z));
        // (x . cod(y . cod z)) (dom(x) . y . cod z) (dom(dom(x) . y) . z)
        const Index m2 = b.right(b.left(c.dom[x], y), c.cod[z]);
        const Index m1 = b.right(x, c.cod[b.right(y, c.cod[z])]);
        const Index m3 = b.left(c.dom[b.left(c.dom[x], y)], z);
        if (!c.composable(m1, m2)) {
          return Witnessed::fail(make_violation("pseudoproduct/expansion", {x, y, z},
                                                "first expansion composite undefined"));
        }
        const Index m12 = c.at(m1, m2);
        if (!c.composable(m12, m3)) {
          return Witnessed::fail(make_violation("pseudoproduct/expansion", {x, y, z},
                                                "second expansion composite undefined"));
        }
        const Index expansion = c.at(m12, m3);
        if (lhs != expansion || rhs != expansion) {
          return Witnessed::fail(make_violation("pseudoproduct/expansion", {x, y, z},
                                                "bracketings disagree with the expansion"));
        }
      }
    }
  }
  return Witnessed::pass();
}

}  // namespace ehresmann
