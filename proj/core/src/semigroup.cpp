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

#include "ehresmann/semigroup.hpp"

#include <algorithm>

namespace ehresmann {

bool EhresmannSemigroup::is_projection(Index a) const {
  return std::binary_search(projections.begin(), projections.end(), a);
}

std::string EhresmannSemigroup::name(Index a) const {
  if (static_cast<std::size_t>(a) < names.size() && !names[a].empty()) return names[a];
  return "s" + std::to_string(a);
}

namespace {

Violation make_violation(std::string law, std::vector<Index> witness, std::string detail) {
  Violation v;
  v.law = std::move(law);
  v.witness = std::move(witness);
  v.detail = std::move(detail);
  return v;
}

}  // namespace

Checked<EhresmannSemigroup> check_ehresmann(EhresmannSemigroup raw) {
  const int n = raw.size();
  if (n == 0) {
    return make_violation("semigroup/shape", {}, "a semigroup needs at least one element");
  }
  if (raw.mult.size() != static_cast<std::size_t>(n) * n || raw.plus.size() != raw.star.size() ||
      (!raw.names.empty() && raw.names.size() != raw.star.size())) {
    return make_violation("semigroup/shape", {}, "table sizes do not match the element count");
  }

  std::sort(raw.projections.begin(), raw.projections.end());
  if (std::adjacent_find(raw.projections.begin(), raw.projections.end()) !=
      raw.projections.end()) {
    return make_violation("semigroup/shape", {}, "duplicate projection index");
  }
  if (raw.projections.empty()) {
    return make_violation("semigroup/shape", {}, "the projection set U must be non-empty");
  }
  for (Index e : raw.projections) {
    if (e < 0 || e >= n) {
      return make_violation("semigroup/dangling-index", {e}, "projection index out of range");
    }
  }
  for (std::size_t i = 0; i < raw.mult.size(); ++i) {
    if (raw.mult[i] < 0 || raw.mult[i] >= n) {
      return make_violation("semigroup/dangling-index",
                            {static_cast<Index>(i / n), static_cast<Index>(i % n)},
                            "product out of range");
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (raw.star[a] < 0 || raw.star[a] >= n || !raw.is_projection(raw.star[a])) {
      return make_violation("semigroup/star-range", {a},
                            "star(" + raw.name(a) + ") is not a projection");
    }
    if (raw.plus[a] < 0 || raw.plus[a] >= n || !raw.is_projection(raw.plus[a])) {
      return make_violation("semigroup/plus-range", {a},
                            "plus(" + raw.name(a) + ") is not a projection");
    }
  }
  if (raw.one) {
    if (*raw.one < 0 || *raw.one >= n) {
      return make_violation("semigroup/dangling-index", {*raw.one},
                            "identity index out of range");
    }
  }

  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (raw.mul(raw.mul(a, b), c) != raw.mul(a, raw.mul(b, c))) {
          return make_violation("semigroup/associativity", {a, b, c},
                                "(" + raw.name(a) + " " + raw.name(b) + ") " + raw.name(c) +
                                    " != " + raw.name(a) + " (" + raw.name(b) + " " +
                                    raw.name(c) + ")");
        }
      }
    }
  }

  // ES1: U is a commutative subsemigroup of idempotents.
  for (Index e : raw.projections) {
    if (raw.mul(e, e) != e) {
      return make_violation("ES1", {e}, raw.name(e) + " is not idempotent");
    }
  }
  for (Index e : raw.projections) {
    for (Index f : raw.projections) {
      if (!raw.is_projection(raw.mul(e, f))) {
        return make_violation("ES1", {e, f}, "U is not closed under multiplication");
      }
      if (raw.mul(e, f) != raw.mul(f, e)) {
        return make_violation("ES1", {e, f}, "projections do not commute");
      }
    }
  }

  // ES2: star and plus fix U pointwise.
  for (Index e : raw.projections) {
    if (raw.star[e] != e) {
      return make_violation("ES2", {e}, "star does not fix the projection " + raw.name(e));
    }
    if (raw.plus[e] != e) {
      return make_violation("ES2", {e}, "plus does not fix the projection " + raw.name(e));
    }
  }

  // ES3: a star(a) = a and plus(a) a = a.
  for (Index a = 0; a < n; ++a) {
    if (raw.mul(a, raw.star[a]) != a) {
      return make_violation("ES3", {a}, raw.name(a) + " star(" + raw.name(a) + ") != " +
                                            raw.name(a));
    }
    if (raw.mul(raw.plus[a], a) != a) {
      return make_violation("ES3", {a}, "plus(" + raw.name(a) + ") " + raw.name(a) + " != " +
                                            raw.name(a));
    }
  }

  // ES4: (star(a) b)* = (a b)* and (a plus(b))+ = (a b)+.
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (raw.star[raw.mul(raw.star[a], b)] != raw.star[raw.mul(a, b)]) {
        return make_violation("ES4", {a, b},
                              "(star(" + raw.name(a) + ") " + raw.name(b) + ")* != (" +
                                  raw.name(a) + " " + raw.name(b) + ")*");
      }
      if (raw.plus[raw.mul(a, raw.plus[b])] != raw.plus[raw.mul(a, b)]) {
        return make_violation("ES4", {a, b},
                              "(" + raw.name(a) + " plus(" + raw.name(b) + "))+ != (" +
                                  raw.name(a) + " " + raw.name(b) + ")+");
      }
    }
  }

  if (raw.one) {
    const Index u = *raw.one;
    for (Index a = 0; a < n; ++a) {
      if (raw.mul(u, a) != a || raw.mul(a, u) != a) {
        return make_violation("semigroup/identity", {a},
                              "declared identity does not fix " + raw.name(a));
      }
    }
  }

  return raw;
}

bool order_le_r(const EhresmannSemigroup& s, Index x, Index y) {
  return s.mul(s.plus[x], y) == x;
}

bool order_le_l(const EhresmannSemigroup& s, Index x, Index y) {
  return s.mul(y, s.star[x]) == x;
}

bool order_le(const EhresmannSemigroup& s, Index x, Index y) {
  return order_le_r(s, x, y) && order_le_l(s, x, y);
}

ElementClass classify_element(const EhresmannSemigroup& s, Index a) {
  ElementClass out;
  out.deterministic = true;
  out.codeterministic = true;
  for (Index e : s.projections) {
    const Index ea = s.mul(e, a);
    if (ea != s.mul(a, s.star[ea])) {
      out.deterministic = false;
      break;
    }
  }
  for (Index e : s.projections) {
    const Index ae = s.mul(a, e);
    if (ae != s.mul(s.plus[ae], a)) {
      out.codeterministic = false;
      break;
    }
  }
  out.bideterministic = out.deterministic && out.codeterministic;
  return out;
}

Witnessed is_restriction(const EhresmannSemigroup& s) {
  for (Index a = 0; a < s.size(); ++a) {
    for (Index e : s.projections) {
      const Index ea = s.mul(e, a);
      if (ea != s.mul(a, s.star[ea])) {
        return Witnessed::fail(make_violation("restriction/deterministic", {a, e},
                                              s.name(a) + " is not deterministic at " +
                                                  s.name(e)));
      }
      const Index ae = s.mul(a, e);
      if (ae != s.mul(s.plus[ae], a)) {
        return Witnessed::fail(make_violation("restriction/codeterministic", {a, e},
                                              s.name(a) + " is not codeterministic at " +
                                                  s.name(e)));
      }
    }
  }
  return Witnessed::pass();
}

FiniteCategory restricted_product_category(const EhresmannSemigroup& s) {
  const int n = s.size();
  FiniteCategory c;
  c.names.resize(n);
  for (Index a = 0; a < n; ++a) c.names[a] = s.name(a);
  c.identities = s.projections;
  c.dom = s.star;
  c.cod = s.plus;
  c.comp.assign(static_cast<std::size_t>(n) * n, kUndefined);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (s.star[a] == s.plus[b]) {
        c.comp[static_cast<std::size_t>(a) * n + b] = s.mul(a, b);
      }
    }
  }
  auto checked = validate_category(std::move(c));
  if (!checked.ok()) {
    throw InternalError("restricted product is not a category: " +
                        to_string(checked.violation()));
  }
  return std::move(checked).value();
}

MorphismCheck check_morphism(const EhresmannSemigroup& s, const EhresmannSemigroup& t,
                             const std::vector<Index>& theta) {
  MorphismCheck out;
  const int n = s.size();
  if (theta.size() != static_cast<std::size_t>(n)) {
    out.why = make_violation("morphism/arity", {}, "map size does not match the source");
    return out;
  }
  for (Index a = 0; a < n; ++a) {
    if (theta[a] < 0 || theta[a] >= t.size()) {
      out.why = make_violation("morphism/dangling-index", {a, theta[a]}, "image out of range");
      return out;
    }
  }

  out.multiplicative = true;
  out.preserves_star = true;
  out.preserves_plus = true;
  out.injective = true;
  out.maps_projections = true;
  bool have_why = false;
  auto note = [&](Violation v) {
    if (!have_why) {
      out.why = std::move(v);
      have_why = true;
    }
  };

  for (Index a = 0; a < n && out.multiplicative; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (theta[s.mul(a, b)] != t.mul(theta[a], theta[b])) {
        out.multiplicative = false;
        note(make_violation("morphism/multiplicative", {a, b},
                            "theta(" + s.name(a) + " " + s.name(b) + ") != theta(" + s.name(a) +
                                ") theta(" + s.name(b) + ")"));
        break;
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (theta[s.star[a]] != t.star[theta[a]]) {
      out.preserves_star = false;
      note(make_violation("morphism/star", {a}, "star is not preserved at " + s.name(a)));
      break;
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (theta[s.plus[a]] != t.plus[theta[a]]) {
      out.preserves_plus = false;
      note(make_violation("morphism/plus", {a}, "plus is not preserved at " + s.name(a)));
      break;
    }
  }
  for (Index a = 0; a < n && out.injective; ++a) {
    for (Index b = a + 1; b < n; ++b) {
      if (theta[a] == theta[b]) {
        out.injective = false;
        note(make_violation("morphism/injectivity", {a, b},
                            s.name(a) + " and " + s.name(b) + " share an image"));
        break;
      }
    }
  }
  for (Index e : s.projections) {
    if (!t.is_projection(theta[e])) {
      out.maps_projections = false;
      note(make_violation("morphism/projections", {e},
                          "theta(" + s.name(e) + ") is not a projection"));
      break;
    }
  }
  return out;
}

std::optional<Index> find_projection_zero(const EhresmannSemigroup& s) {
  for (Index z : s.projections) {
    bool zero = true;
    for (Index e : s.projections) {
      if (s.mul(z, e) != z) {
        zero = false;
        break;
      }
    }
    if (!zero) continue;
    for (Index a = 0; a < s.size() && zero; ++a) {
      if (s.mul(z, a) != z || s.mul(a, z) != z) zero = false;
    }
    if (zero) return z;
  }
  return std::nullopt;
}

bool LemmaReport::all_pass() const {
  for (const auto& c : checks) {
    if (c.status == LemmaStatus::Fail) return false;
  }
  return true;
}

namespace {

void add_check(LemmaReport& report, std::string id, LemmaStatus status, Violation why = {}) {
  report.checks.push_back(LemmaCheck{std::move(id), status, std::move(why)});
}

// Projection order: e <= f iff ef = e.
bool proj_le(const EhresmannSemigroup& s, Index e, Index f) { return s.mul(e, f) == e; }

void check_partial_order(LemmaReport& report, const EhresmannSemigroup& s, const char* id,
                         bool (*le)(const EhresmannSemigroup&, Index, Index)) {
  const int n = s.size();
  for (Index x = 0; x < n; ++x) {
    if (!le(s, x, x)) {
      add_check(report, id, LemmaStatus::Fail,
                Violation{"order/reflexivity", {x}, s.name(x) + " not below itself", 0, 0});
      return;
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (x != y && le(s, x, y) && le(s, y, x)) {
        add_check(report, id, LemmaStatus::Fail,
                  Violation{"order/antisymmetry", {x, y}, "two distinct comparable cycles", 0, 0});
        return;
      }
    }
  }
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (!le(s, x, y)) continue;
      for (Index z = 0; z < n; ++z) {
        if (le(s, y, z) && !le(s, x, z)) {
          add_check(report, id, LemmaStatus::Fail,
                    Violation{"order/transitivity", {x, y, z}, "order is not transitive", 0, 0});
          return;
        }
      }
    }
  }
  add_check(report, id, LemmaStatus::Pass);
}

}  // namespace

LemmaReport basic_lemma_report(const EhresmannSemigroup& s) {
  LemmaReport report;
  const int n = s.size();

  {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) {
      for (Index b = 0; b < n; ++b) {
        const Index e = s.star[s.mul(a, b)];
        if (!proj_le(s, e, s.star[b])) {
          add_check(report, "lemma-basic/star-of-product", LemmaStatus::Fail,
                    Violation{"lemma-basic/star-of-product", {a, b}, "(ab)* not below b*", 0, 0});
          ok = false;
          break;
        }
      }
    }
    if (ok) add_check(report, "lemma-basic/star-of-product", LemmaStatus::Pass);
  }
  {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) {
      for (Index b = 0; b < n; ++b) {
        const Index e = s.plus[s.mul(a, b)];
        if (!proj_le(s, e, s.plus[a])) {
          add_check(report, "lemma-basic/plus-of-product", LemmaStatus::Fail,
                    Violation{"lemma-basic/plus-of-product", {a, b}, "(ab)+ not below a+", 0, 0});
          ok = false;
          break;
        }
      }
    }
    if (ok) add_check(report, "lemma-basic/plus-of-product", LemmaStatus::Pass);
  }

  const auto zero = find_projection_zero(s);
  if (!zero) {
    add_check(report, "lemma-basic/zero-star", LemmaStatus::NotApplicable);
    add_check(report, "lemma-basic/zero-plus", LemmaStatus::NotApplicable);
  } else {
    bool ok = true;
    for (Index a = 0; a < n; ++a) {
      if ((s.star[a] == *zero) != (a == *zero)) {
        add_check(report, "lemma-basic/zero-star", LemmaStatus::Fail,
                  Violation{"lemma-basic/zero-star", {a}, "a* = 0 does not characterize a = 0",
                            0, 0});
        ok = false;
        break;
      }
    }
    if (ok) add_check(report, "lemma-basic/zero-star", LemmaStatus::Pass);
    ok = true;
    for (Index a = 0; a < n; ++a) {
      if ((s.plus[a] == *zero) != (a == *zero)) {
        add_check(report, "lemma-basic/zero-plus", LemmaStatus::Fail,
                  Violation{"lemma-basic/zero-plus", {a}, "a+ = 0 does not characterize a = 0",
                            0, 0});
        ok = false;
        break;
      }
    }
    if (ok) add_check(report, "lemma-basic/zero-plus", LemmaStatus::Pass);
  }

  check_partial_order(report, s, "orders/le-r-partial-order", order_le_r);
  check_partial_order(report, s, "orders/le-l-partial-order", order_le_l);
  check_partial_order(report, s, "orders/le-partial-order", order_le);

  {
    bool ok = true;
    for (Index e : s.projections) {
      for (Index f : s.projections) {
        const bool r = order_le_r(s, e, f);
        if (r != order_le_l(s, e, f) || r != order_le(s, e, f) || r != proj_le(s, e, f)) {
          add_check(report, "orders/agree-on-projections", LemmaStatus::Fail,
                    Violation{"orders/agree-on-projections", {e, f},
                              "the three orders disagree on U", 0, 0});
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) add_check(report, "orders/agree-on-projections", LemmaStatus::Pass);
  }

  return report;
}

LemmaReport restriction_lemma_report(const EhresmannSemigroup& s) {
  LemmaReport report;
  const int n = s.size();

  {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (order_le_r(s, x, y) != order_le_l(s, x, y)) {
          add_check(report, "restriction/orders-coincide", LemmaStatus::Fail,
                    Violation{"restriction/orders-coincide", {x, y},
                              "left and right orders differ", 0, 0});
          ok = false;
          break;
        }
      }
    }
    if (ok) add_check(report, "restriction/orders-coincide", LemmaStatus::Pass);
  }

  {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) {
      for (Index b = 0; b < n && ok; ++b) {
        if (!order_le(s, a, b)) continue;
        for (Index c = 0; c < n; ++c) {
          if (!order_le(s, s.mul(a, c), s.mul(b, c)) || !order_le(s, s.mul(c, a), s.mul(c, b))) {
            add_check(report, "restriction/order-compatible", LemmaStatus::Fail,
                      Violation{"restriction/order-compatible", {a, b, c},
                                "order not compatible with multiplication", 0, 0});
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) add_check(report, "restriction/order-compatible", LemmaStatus::Pass);
  }

  {
    // a <= bc factors as a = b'c' with b' <= b, c' <= c and star(b') = plus(c').
    bool ok = true;
    for (Index b = 0; b < n && ok; ++b) {
      for (Index c = 0; c < n && ok; ++c) {
        const Index bc = s.mul(b, c);
        for (Index a = 0; a < n; ++a) {
          if (!order_le(s, a, bc)) continue;
          bool found = false;
          for (Index bp = 0; bp < n && !found; ++bp) {
            if (!order_le(s, bp, b)) continue;
            for (Index cp = 0; cp < n; ++cp) {
              if (!order_le(s, cp, c)) continue;
              if (s.star[bp] == s.plus[cp] && s.mul(bp, cp) == a) {
                found = true;
                break;
              }
            }
          }
          if (!found) {
            add_check(report, "restriction/factorization", LemmaStatus::Fail,
                      Violation{"restriction/factorization", {a, b, c},
                                "no restricted factorization below the product", 0, 0});
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) add_check(report, "restriction/factorization", LemmaStatus::Pass);
  }

  {
    bool ok = true;
    for (Index e : s.projections) {
      for (Index a = 0; a < n; ++a) {
        if (order_le(s, a, e) && !s.is_projection(a)) {
          add_check(report, "restriction/projections-order-ideal", LemmaStatus::Fail,
                    Violation{"restriction/projections-order-ideal", {a, e},
                              "element below a projection is not a projection", 0, 0});
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) add_check(report, "restriction/projections-order-ideal", LemmaStatus::Pass);
  }

  {
    bool ok = true;
    for (Index c = 0; c < n && ok; ++c) {
      for (Index a = 0; a < n && ok; ++a) {
        if (!order_le(s, a, c)) continue;
        for (Index b = 0; b < n; ++b) {
          if (b == a || !order_le(s, b, c)) continue;
          if (s.star[a] == s.star[b] || s.plus[a] == s.plus[b]) {
            add_check(report, "restriction/unique-below", LemmaStatus::Fail,
                      Violation{"restriction/unique-below", {a, b, c},
                                "two elements below a common bound share star or plus", 0, 0});
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) add_check(report, "restriction/unique-below", LemmaStatus::Pass);
  }

  {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (!order_le(s, a, b)) continue;
        if (!proj_le(s, s.star[a], s.star[b]) || !proj_le(s, s.plus[a], s.plus[b])) {
          add_check(report, "restriction/star-plus-monotone", LemmaStatus::Fail,
                    Violation{"restriction/star-plus-monotone", {a, b},
                              "star or plus is not monotone", 0, 0});
          ok = false;
          break;
        }
      }
    }
    if (ok) add_check(report, "restriction/star-plus-monotone", LemmaStatus::Pass);
  }

  return report;
}

}  // namespace ehresmann
