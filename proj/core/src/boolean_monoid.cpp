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

#include "ehresmann/boolean_monoid.hpp"

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

}  // namespace

Checked<BooleanEhresmannMonoid> check_boolean(EhresmannSemigroup sg, std::vector<Bitset> down) {
  const int n = sg.size();
  if (down.size() != static_cast<std::size_t>(n)) {
    return make_violation("boolean/shape", {}, "order relation size does not match");
  }
  for (const auto& row : down) {
    if (row.size() != n) {
      return make_violation("boolean/shape", {}, "order row width does not match");
    }
  }
  if (!sg.one) {
    return make_violation("boolean/monoid-required", {}, "a declared identity is required");
  }
  if (!sg.is_projection(*sg.one)) {
    return make_violation("boolean/one-projection", {*sg.one},
                          "the identity must be a projection");
  }

  BooleanEhresmannMonoid m;
  m.sg = std::move(sg);
  m.down = std::move(down);

  // Partial order laws.
  for (Index a = 0; a < n; ++a) {
    if (!m.incl(a, a)) {
      return make_violation("boolean/order-reflexivity", {a},
                            m.sg.name(a) + " not below itself");
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (a != b && m.incl(a, b) && m.incl(b, a)) {
        return make_violation("boolean/order-antisymmetry", {a, b},
                              m.sg.name(a) + " and " + m.sg.name(b) + " below each other");
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!m.incl(a, b)) continue;
      for (Index c = 0; c < n; ++c) {
        if (m.incl(b, c) && !m.incl(a, c)) {
          return make_violation("boolean/order-transitivity", {a, b, c},
                                "order is not transitive");
        }
      }
    }
  }

  m.up.assign(n, Bitset(n));
  for (Index a = 0; a < n; ++a) {
    m.down[a].for_each([&](int b) { m.up[b].set(a); });
  }

  // Bottom, top, meets, joins.
  m.bottom = kUndefined;
  for (Index a = 0; a < n; ++a) {
    if (m.up[a].count() == n) {
      m.bottom = a;
      break;
    }
  }
  if (m.bottom == kUndefined) {
    return make_violation("boolean/no-bottom", {}, "the order has no least element");
  }
  m.top = kUndefined;
  for (Index a = 0; a < n; ++a) {
    if (m.down[a].count() == n) {
      m.top = a;
      break;
    }
  }
  if (m.top == kUndefined) {
    return make_violation("boolean/no-top", {}, "the order has no greatest element");
  }

  m.meet.assign(static_cast<std::size_t>(n) * n, kUndefined);
  m.join.assign(static_cast<std::size_t>(n) * n, kUndefined);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Bitset lower = m.down[a] & m.down[b];
      Index glb = kUndefined;
      lower.for_each([&](int x) {
        if (glb == kUndefined && lower.is_subset_of(m.down[x])) glb = x;
      });
      if (glb == kUndefined) {
        return make_violation("boolean/meet-missing", {a, b},
                              m.sg.name(a) + " and " + m.sg.name(b) +
                                  " have no greatest lower bound");
      }
      m.meet[static_cast<std::size_t>(a) * n + b] = glb;

      const Bitset upper = m.up[a] & m.up[b];
      Index lub = kUndefined;
      upper.for_each([&](int x) {
        if (lub == kUndefined && upper.is_subset_of(m.up[x])) lub = x;
      });
      if (lub == kUndefined) {
        return make_violation("boolean/join-missing", {a, b},
                              m.sg.name(a) + " and " + m.sg.name(b) +
                                  " have no least upper bound");
      }
      m.join[static_cast<std::size_t>(a) * n + b] = lub;
    }
  }

  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (m.meet_of(a, m.join_of(b, c)) != m.join_of(m.meet_of(a, b), m.meet_of(a, c))) {
          return make_violation("boolean/distributivity", {a, b, c},
                                "meet does not distribute over join");
        }
      }
    }
  }

  m.complement.assign(n, kUndefined);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (m.meet_of(a, b) == m.bottom && m.join_of(a, b) == m.top) {
        m.complement[a] = b;
        break;
      }
    }
    if (m.complement[a] == kUndefined) {
      return make_violation("boolean/complement-missing", {a},
                            m.sg.name(a) + " has no complement");
    }
  }

  // OE1: multiplication distributes over joins on both sides.
  for (Index c = 0; c < n; ++c) {
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (m.sg.mul(c, m.join_of(a, b)) != m.join_of(m.sg.mul(c, a), m.sg.mul(c, b))) {
          return make_violation("OE1", {c, a, b}, "left multiplication is not join-linear");
        }
        if (m.sg.mul(m.join_of(a, b), c) != m.join_of(m.sg.mul(a, c), m.sg.mul(b, c))) {
          return make_violation("OE1", {a, b, c}, "right multiplication is not join-linear");
        }
      }
    }
  }
  // OE2: the order-ideal below a projection stays in U.
  for (Index e : m.sg.projections) {
    bool failed = false;
    Index bad = kUndefined;
    m.down[e].for_each([&](int a) {
      if (!failed && !m.sg.is_projection(a)) {
        failed = true;
        bad = a;
      }
    });
    if (failed) {
      return make_violation("OE2", {e, bad},
                            m.sg.name(bad) + " lies below the projection " + m.sg.name(e) +
                                " but is not one");
    }
  }
  // OE3: algebraic and Boolean order agree on U.
  for (Index e : m.sg.projections) {
    for (Index f : m.sg.projections) {
      if ((m.sg.mul(e, f) == e) != m.incl(e, f)) {
        return make_violation("OE3", {e, f}, "orders disagree on the projections");
      }
    }
  }
  // OE4: ea and ae lie below a.
  for (Index e : m.sg.projections) {
    for (Index a = 0; a < n; ++a) {
      if (!m.incl(m.sg.mul(e, a), a)) {
        return make_violation("OE4", {e, a}, "e a does not lie below a");
      }
      if (!m.incl(m.sg.mul(a, e), a)) {
        return make_violation("OE4", {a, e}, "a e does not lie below a");
      }
    }
  }
  // OE5: star and plus distribute over joins.
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const Index j = m.join_of(a, b);
      if (m.sg.star[j] != m.join_of(m.sg.star[a], m.sg.star[b])) {
        return make_violation("OE5", {a, b}, "star does not distribute over the join");
      }
      if (m.sg.plus[j] != m.join_of(m.sg.plus[a], m.sg.plus[b])) {
        return make_violation("OE5", {a, b}, "plus does not distribute over the join");
      }
    }
  }

  return m;
}

std::vector<Index> atoms(const BooleanEhresmannMonoid& m) {
  std::vector<Index> out;
  for (Index a = 0; a < m.size(); ++a) {
    if (a == m.bottom) continue;
    if (m.down[a].count() == 2 && m.down[a].test(m.bottom)) out.push_back(a);
  }
  return out;
}

Witnessed is_partial_isometry_abstract(const BooleanEhresmannMonoid& m, Index a) {
  Witnessed out = Witnessed::pass();
  m.down[a].for_each([&](int b) {
    if (!out.ok) return;
    if (m.sg.mul(m.sg.plus[b], a) != b || m.sg.mul(a, m.sg.star[b]) != b) {
      out = Witnessed::fail(make_violation(
          "partial-isometry", {a, b},
          m.sg.name(b) + " lies under " + m.sg.name(a) + " but not algebraically"));
    }
  });
  return out;
}

std::vector<Index> partial_isometries(const BooleanEhresmannMonoid& m) {
  std::vector<Index> out;
  for (Index a = 0; a < m.size(); ++a) {
    if (is_partial_isometry_abstract(m, a).ok) out.push_back(a);
  }
  return out;
}

Witnessed pi_product_closed(const BooleanEhresmannMonoid& m) {
  const auto pis = partial_isometries(m);
  std::vector<char> is_pi(m.size(), 0);
  for (Index a : pis) is_pi[a] = 1;
  for (Index a : pis) {
    for (Index b : pis) {
      const Index ab = m.sg.mul(a, b);
      if (!is_pi[ab]) {
        return Witnessed::fail(make_violation(
            "pi-closure", {a, b, ab},
            m.sg.name(a) + " " + m.sg.name(b) + " = " + m.sg.name(ab) +
                " is not a partial isometry"));
      }
    }
  }
  return Witnessed::pass();
}

Checked<FiniteCategory> reconstruct_category(const BooleanEhresmannMonoid& m) {
  const auto closed = pi_product_closed(m);
  if (!closed.ok) {
    Violation v = closed.why;
    v.law = "reconstruct/hypothesis";
    v.detail = "partial isometries are not closed under products: " + v.detail;
    return v;
  }

  const auto atom_list = atoms(m);
  if (atom_list.empty()) {
    return make_violation("reconstruct/degenerate", {},
                          "the monoid has no atoms; no category carries it");
  }
  std::vector<Index> atom_pos(m.size(), kUndefined);
  for (std::size_t i = 0; i < atom_list.size(); ++i) atom_pos[atom_list[i]] = static_cast<Index>(i);

  for (Index a : atom_list) {
    if (atom_pos[m.sg.star[a]] == kUndefined || atom_pos[m.sg.plus[a]] == kUndefined) {
      throw InternalError("reconstruct: star or plus of the atom " + m.sg.name(a) +
                          " is not an atom");
    }
  }

  const int k = static_cast<int>(atom_list.size());
  FiniteCategory c;
  c.names.resize(k);
  c.dom.resize(k);
  c.cod.resize(k);
  c.comp.assign(static_cast<std::size_t>(k) * k, kUndefined);
  for (int i = 0; i < k; ++i) {
    const Index a = atom_list[i];
    c.names[i] = m.sg.name(a);
    c.dom[i] = atom_pos[m.sg.star[a]];
    c.cod[i] = atom_pos[m.sg.plus[a]];
    if (m.sg.is_projection(a)) c.identities.push_back(i);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Index a = atom_list[i];
      const Index b = atom_list[j];
      const Index ab = m.sg.mul(a, b);
      if (m.sg.star[a] == m.sg.plus[b]) {
        if (atom_pos[ab] == kUndefined) {
          throw InternalError("reconstruct: composable atom product " + m.sg.name(a) + " " +
                              m.sg.name(b) + " is not an atom");
        }
        c.comp[static_cast<std::size_t>(i) * k + j] = atom_pos[ab];
      } else if (ab != m.bottom) {
        throw InternalError("reconstruct: non-composable atom product " + m.sg.name(a) + " " +
                            m.sg.name(b) + " is not zero");
      }
    }
  }

  auto checked = validate_category(std::move(c));
  if (!checked.ok()) {
    throw InternalError("reconstruct: the atoms do not form a category: " +
                        to_string(checked.violation()));
  }
  return std::move(checked).value();
}

bool PhiResult::verified() const {
  for (const auto& a : asserted) {
    if (!a.result.ok) return false;
  }
  return true;
}

Checked<PhiResult> phi_isomorphism(const BooleanEhresmannMonoid& m) {
  auto cat = reconstruct_category(m);
  if (!cat.ok()) return cat.violation();

  PhiResult result;
  result.category = std::move(cat).value();
  result.atom_elements = atoms(m);
  const int k = static_cast<int>(result.atom_elements.size());
  const int n = m.size();

  if (k > 62) {
    return make_violation("phi/size", {static_cast<Index>(k)}, "too many atoms for masks");
  }

  std::vector<Index> atom_pos(n, kUndefined);
  for (int i = 0; i < k; ++i) atom_pos[result.atom_elements[i]] = i;

  result.phi.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    std::uint64_t mask = 0;
    m.down[a].for_each([&](int b) {
      if (atom_pos[b] != kUndefined) mask |= std::uint64_t{1} << atom_pos[b];
    });
    result.phi[a] = mask;
  }

  auto assert_check = [&](std::string id, Witnessed w) {
    result.asserted.push_back(PhiAssertion{std::move(id), std::move(w)});
  };

  // Bijective onto the subsets of the atoms.
  {
    Witnessed w = Witnessed::pass();
    if ((std::uint64_t{1} << k) != static_cast<std::uint64_t>(n)) {
      w = Witnessed::fail(make_violation("phi/bijective", {static_cast<Index>(k)},
                                         "element count is not 2^atoms"));
    } else {
      std::vector<char> seen(n, 0);
      for (Index a = 0; a < n && w.ok; ++a) {
        if (seen[result.phi[a]]) {
          w = Witnessed::fail(
              make_violation("phi/bijective", {a}, "two elements share an atom set"));
        }
        seen[result.phi[a]] = 1;
      }
    }
    assert_check("phi/bijective", std::move(w));
  }

  const FiniteCategory& c = result.category;
  auto mask_product = [&](std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    for (std::uint64_t xa = x; xa != 0; xa &= xa - 1) {
      const Index i = __builtin_ctzll(xa);
      for (std::uint64_t yb = y; yb != 0; yb &= yb - 1) {
        const Index j = __builtin_ctzll(yb);
        if (c.composable(i, j)) out |= std::uint64_t{1} << c.at(i, j);
      }
    }
    return out;
  };

  {
    Witnessed w = Witnessed::pass();
    for (Index a = 0; a < n && w.ok; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (result.phi[m.sg.mul(a, b)] != mask_product(result.phi[a], result.phi[b])) {
          w = Witnessed::fail(make_violation("phi/multiplicative", {a, b},
                                             "phi(ab) differs from phi(a) phi(b)"));
          break;
        }
      }
    }
    assert_check("phi/multiplicative", std::move(w));
  }

  auto image_mask = [&](std::uint64_t x, const std::vector<Index>& map) {
    std::uint64_t out = 0;
    for (std::uint64_t xa = x; xa != 0; xa &= xa - 1) {
      out |= std::uint64_t{1} << map[__builtin_ctzll(xa)];
    }
    return out;
  };

  {
    Witnessed w = Witnessed::pass();
    for (Index a = 0; a < n; ++a) {
      if (result.phi[m.sg.star[a]] != image_mask(result.phi[a], c.dom)) {
        w = Witnessed::fail(
            make_violation("phi/star", {a}, "phi does not commute with star"));
        break;
      }
    }
    assert_check("phi/star", std::move(w));
  }
  {
    Witnessed w = Witnessed::pass();
    for (Index a = 0; a < n; ++a) {
      if (result.phi[m.sg.plus[a]] != image_mask(result.phi[a], c.cod)) {
        w = Witnessed::fail(
            make_violation("phi/plus", {a}, "phi does not commute with plus"));
        break;
      }
    }
    assert_check("phi/plus", std::move(w));
  }

  {
    Witnessed w = Witnessed::pass();
    for (Index a = 0; a < n && w.ok; ++a) {
      for (Index b = 0; b < n; ++b) {
        const bool below = m.incl(a, b);
        const bool subset = (result.phi[a] & ~result.phi[b]) == 0;
        if (below != subset) {
          w = Witnessed::fail(
              make_violation("phi/order-isomorphism", {a, b},
                             "order and atom-set inclusion disagree"));
          break;
        }
      }
    }
    assert_check("phi/order-isomorphism", std::move(w));
  }

  {
    Witnessed w = Witnessed::pass();
    std::uint64_t id_atoms = 0;
    for (Index i : c.identities) id_atoms |= std::uint64_t{1} << i;
    for (Index e : m.sg.projections) {
      if ((result.phi[e] & ~id_atoms) != 0) {
        w = Witnessed::fail(make_violation("phi/projections", {e},
                                           "a projection contains a non-identity atom"));
        break;
      }
    }
    if (w.ok && m.sg.projections.size() != (std::size_t{1} << c.identities.size())) {
      w = Witnessed::fail(make_violation("phi/projections", {},
                                         "U does not map onto the identity subsets"));
    }
    assert_check("phi/projections", std::move(w));
  }

  return result;
}

bool BooleanLemmaReport::all_pass() const {
  for (const auto& c : checks) {
    if (c.status == LemmaStatus::Fail) return false;
  }
  return true;
}

BooleanLemmaReport boolean_lemma_report(const BooleanEhresmannMonoid& m) {
  BooleanLemmaReport report;
  const int n = m.size();
  auto add = [&](std::string id, LemmaStatus status, Violation why = {}) {
    report.checks.push_back(LemmaCheck{std::move(id), status, std::move(why)});
  };

  {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) {
      for (Index b = 0; b < n && ok; ++b) {
        if (!m.incl(a, b)) continue;
        for (Index c = 0; c < n && ok; ++c) {
          for (Index d = 0; d < n; ++d) {
            if (!m.incl(c, d)) continue;
            if (!m.incl(m.sg.mul(a, c), m.sg.mul(b, d))) {
              add("boolean-lemma/mult-monotone", LemmaStatus::Fail,
                  make_violation("boolean-lemma/mult-monotone", {a, b, c, d},
                                 "products are not monotone"));
              ok = false;
              break;
            }
          }
        }
      }
    }
    if (ok) add("boolean-lemma/mult-monotone", LemmaStatus::Pass);
  }
  {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (!m.incl(a, b)) continue;
        if (!m.incl(m.sg.star[a], m.sg.star[b]) || !m.incl(m.sg.plus[a], m.sg.plus[b])) {
          add("boolean-lemma/star-plus-monotone", LemmaStatus::Fail,
              make_violation("boolean-lemma/star-plus-monotone", {a, b},
                             "star or plus not monotone for the Boolean order"));
          ok = false;
          break;
        }
      }
    }
    if (ok) add("boolean-lemma/star-plus-monotone", LemmaStatus::Pass);
  }
  {
    // U is a Boolean algebra: meets, joins and 1-relative complements stay in U.
    bool ok = true;
    for (Index e : m.sg.projections) {
      if (!ok) break;
      for (Index f : m.sg.projections) {
        if (!m.sg.is_projection(m.meet_of(e, f)) || !m.sg.is_projection(m.join_of(e, f))) {
          add("boolean-lemma/projections-boolean", LemmaStatus::Fail,
              make_violation("boolean-lemma/projections-boolean", {e, f},
                             "meet or join of projections escapes U"));
          ok = false;
          break;
        }
      }
      if (ok) {
        const Index neg = m.meet_of(*m.sg.one, m.complement[e]);
        if (!m.sg.is_projection(neg) || m.meet_of(e, neg) != m.bottom ||
            m.join_of(e, neg) != *m.sg.one) {
          add("boolean-lemma/projections-boolean", LemmaStatus::Fail,
              make_violation("boolean-lemma/projections-boolean", {e},
                             "no complement of the projection inside U"));
          ok = false;
        }
      }
    }
    if (ok) add("boolean-lemma/projections-boolean", LemmaStatus::Pass);
  }
  {
    // Partial isometries form an order-ideal.
    bool ok = true;
    const auto pis = partial_isometries(m);
    std::vector<char> is_pi(n, 0);
    for (Index a : pis) is_pi[a] = 1;
    for (Index a : pis) {
      bool bad = false;
      Index witness = kUndefined;
      m.down[a].for_each([&](int b) {
        if (!bad && !is_pi[b]) {
          bad = true;
          witness = b;
        }
      });
      if (bad) {
        add("boolean-lemma/pi-order-ideal", LemmaStatus::Fail,
            make_violation("boolean-lemma/pi-order-ideal", {a, witness},
                           "element below a partial isometry is not one"));
        ok = false;
        break;
      }
    }
    if (ok) add("boolean-lemma/pi-order-ideal", LemmaStatus::Pass);

    // Every partial isometry is bideterministic.
    bool ok2 = true;
    for (Index a : pis) {
      if (!classify_element(m.sg, a).bideterministic) {
        add("boolean-lemma/pi-bideterministic", LemmaStatus::Fail,
            make_violation("boolean-lemma/pi-bideterministic", {a},
                           "partial isometry is not bideterministic"));
        ok2 = false;
        break;
      }
    }
    if (ok2) add("boolean-lemma/pi-bideterministic", LemmaStatus::Pass);
  }
  {
    // t* = 1 = t+.
    const bool ok = m.sg.star[m.top] == *m.sg.one && m.sg.plus[m.top] == *m.sg.one;
    add("boolean-lemma/top-support", ok ? LemmaStatus::Pass : LemmaStatus::Fail,
        ok ? Violation{}
           : make_violation("boolean-lemma/top-support", {m.top},
                            "star or plus of the top is not the identity"));
  }
  {
    // Atoms are partial isometries with atom star and plus.
    bool ok = true;
    for (Index a : atoms(m)) {
      if (!is_partial_isometry_abstract(m, a).ok) {
        add("boolean-lemma/atoms-partial-isometries", LemmaStatus::Fail,
            make_violation("boolean-lemma/atoms-partial-isometries", {a},
                           "atom is not a partial isometry"));
        ok = false;
        break;
      }
    }
    if (ok) add("boolean-lemma/atoms-partial-isometries", LemmaStatus::Pass);
  }
  return report;
}

}  // namespace ehresmann
