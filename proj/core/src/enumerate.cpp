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

#include "ehresmann/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace ehresmann {

namespace {

// Flattened invariant of a labeled category: n, k, dom, cod, comp.
using Encoding = std::vector<signed char>;

Encoding encode_tables(int n, int k, const std::vector<Index>& dom, const std::vector<Index>& cod,
                       const std::vector<Index>& comp) {
  Encoding out;
  out.reserve(2 + 2 * n + n * n);
  out.push_back(static_cast<signed char>(n));
  out.push_back(static_cast<signed char>(k));
  for (Index v : dom) out.push_back(static_cast<signed char>(v));
  for (Index v : cod) out.push_back(static_cast<signed char>(v));
  for (Index v : comp) out.push_back(static_cast<signed char>(v));
  return out;
}

// Least encoding over all relabelings that keep identities in the leading
// block: permutations of the k identities times permutations of the arrows.
Encoding canonical_encoding(int n, int k, const std::vector<Index>& dom,
                            const std::vector<Index>& cod, const std::vector<Index>& comp) {
  std::vector<Index> obj_perm(k);
  std::iota(obj_perm.begin(), obj_perm.end(), 0);
  Encoding best;
  std::vector<Index> relabel(n);
  std::vector<Index> new_dom(n), new_cod(n), new_comp(static_cast<std::size_t>(n) * n);
  do {
    std::vector<Index> arr_perm(n - k);
    std::iota(arr_perm.begin(), arr_perm.end(), 0);
    do {
      for (int e = 0; e < k; ++e) relabel[e] = obj_perm[e];
      for (int a = k; a < n; ++a) relabel[a] = k + arr_perm[a - k];
      for (int x = 0; x < n; ++x) {
        new_dom[relabel[x]] = relabel[dom[x]];
        new_cod[relabel[x]] = relabel[cod[x]];
      }
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          const Index z = comp[static_cast<std::size_t>(x) * n + y];
          new_comp[static_cast<std::size_t>(relabel[x]) * n + relabel[y]] =
              z == kUndefined ? kUndefined : relabel[z];
        }
      }
      Encoding candidate = encode_tables(n, k, new_dom, new_cod, new_comp);
      if (best.empty() || candidate < best) best = std::move(candidate);
    } while (std::next_permutation(arr_perm.begin(), arr_perm.end()));
  } while (std::next_permutation(obj_perm.begin(), obj_perm.end()));
  return best;
}

// Backtracking over the undetermined composition cells with incremental
// associativity checks. A triple is evaluated as soon as its four table
// lookups are determined; the trigger cases below cover each lookup, so
// every leaf is associative.
struct CompositionSearch {
  int n;
  int k;
  const std::vector<Index>& dom;
  const std::vector<Index>& cod;
  std::vector<Index> comp;
  std::vector<std::pair<Index, Index>> cells;
  std::vector<std::vector<Index>> candidates;
  std::set<Encoding>* seen;
  std::vector<Encoding>* found;

  Index at(Index x, Index y) const { return comp[static_cast<std::size_t>(x) * n + y]; }
  void put(Index x, Index y, Index z) { comp[static_cast<std::size_t>(x) * n + y] = z; }

  bool triple_ok(Index a, Index b, Index c) const {
    if (dom[a] != cod[b] || dom[b] != cod[c]) return true;
    const Index ab = at(a, b);
    const Index bc = at(b, c);
    if (ab == kUndefined || bc == kUndefined) return true;
    const Index left = at(ab, c);
    const Index right = at(a, bc);
    if (left == kUndefined || right == kUndefined) return true;
    return left == right;
  }

  bool cell_consistent(Index x, Index y) const {
    for (Index c = 0; c < n; ++c) {
      if (!triple_ok(x, y, c)) return false;
      if (!triple_ok(c, x, y)) return false;
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (dom[a] == cod[b] && at(a, b) == x && !triple_ok(a, b, y)) return false;
        if (dom[a] == cod[b] && at(a, b) == y && !triple_ok(x, a, b)) return false;
      }
    }
    return true;
  }

  void run(std::size_t i) {
    if (i == cells.size()) {
      Encoding canon = canonical_encoding(n, k, dom, cod, comp);
      if (seen->insert(canon).second) found->push_back(std::move(canon));
      return;
    }
    const auto [x, y] = cells[i];
    for (Index z : candidates[i]) {
      put(x, y, z);
      if (cell_consistent(x, y)) run(i + 1);
    }
    put(x, y, kUndefined);
  }
};

FiniteCategory category_from_encoding(const Encoding& enc) {
  const int n = enc[0];
  const int k = enc[1];
  FiniteCategory c;
  c.dom.assign(n, 0);
  c.cod.assign(n, 0);
  c.comp.assign(static_cast<std::size_t>(n) * n, kUndefined);
  std::size_t pos = 2;
  for (int x = 0; x < n; ++x) c.dom[x] = enc[pos++];
  for (int x = 0; x < n; ++x) c.cod[x] = enc[pos++];
  for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) c.comp[i] = enc[pos++];
  for (int e = 0; e < k; ++e) c.identities.push_back(e);
  c.names.resize(n);
  for (int e = 0; e < k; ++e) c.names[e] = "id_o" + std::to_string(e);
  for (int a = k; a < n; ++a) c.names[a] = "a" + std::to_string(a - k);
  return c;
}

}  // namespace

std::vector<FiniteCategory> enumerate_categories(int max_morphisms) {
  if (max_morphisms < 1 || max_morphisms > kMaxEnumerableMorphisms) {
    throw std::invalid_argument("enumerate_categories supports 1.." +
                                std::to_string(kMaxEnumerableMorphisms) + " morphisms");
  }

  std::vector<FiniteCategory> out;
  for (int n = 1; n <= max_morphisms; ++n) {
    std::set<Encoding> seen;
    std::vector<Encoding> found;
    for (int k = 1; k <= n; ++k) {
      const int m = n - k;
      std::vector<Index> dom(n), cod(n);
      for (int e = 0; e < k; ++e) {
        dom[e] = e;
        cod[e] = e;
      }
      // Every assignment of sources and targets to the arrows; duplicates up
      // to relabeling are removed by the canonical encoding.
      std::vector<int> assign(m, 0);
      const int combos = k * k;
      while (true) {
        for (int a = 0; a < m; ++a) {
          dom[k + a] = assign[a] % k;
          cod[k + a] = assign[a] / k;
        }

        CompositionSearch search{n, k, dom, cod, {}, {}, {}, &seen, &found};
        search.comp.assign(static_cast<std::size_t>(n) * n, kUndefined);
        for (Index x = 0; x < n; ++x) {
          search.put(x, dom[x], x);
          search.put(cod[x], x, x);
        }
        bool feasible = true;
        for (Index x = k; x < n && feasible; ++x) {
          for (Index y = k; y < n; ++y) {
            if (dom[x] != cod[y]) continue;
            std::vector<Index> zs;
            for (Index z = 0; z < n; ++z) {
              if (dom[z] == dom[y] && cod[z] == cod[x]) zs.push_back(z);
            }
            if (zs.empty()) {
              feasible = false;
              break;
            }
            search.cells.emplace_back(x, y);
            search.candidates.push_back(std::move(zs));
          }
        }
        if (feasible) search.run(0);

        int pos = m - 1;
        while (pos >= 0 && assign[pos] == combos - 1) {
          assign[pos] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++assign[pos];
      }
    }
    std::sort(found.begin(), found.end());
    for (const auto& enc : found) {
      auto checked = validate_category(category_from_encoding(enc));
      if (!checked.ok()) {
        throw InternalError("enumerated category failed validation: " +
                            to_string(checked.violation()));
      }
      out.push_back(std::move(checked).value());
    }
  }
  return out;
}

namespace {

using Table = std::vector<Index>;

Encoding canonical_semilattice(int n, const Table& mult) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Encoding best;
  Table relabeled(static_cast<std::size_t>(n) * n);
  do {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        relabeled[static_cast<std::size_t>(perm[a]) * n + perm[b]] =
            perm[mult[static_cast<std::size_t>(a) * n + b]];
      }
    }
    Encoding candidate;
    candidate.reserve(1 + relabeled.size());
    candidate.push_back(static_cast<signed char>(n));
    for (Index v : relabeled) candidate.push_back(static_cast<signed char>(v));
    if (best.empty() || candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct SemilatticeSearch {
  int n;
  Table mult;
  std::vector<std::pair<Index, Index>> cells;  // upper triangle, lexicographic
  std::set<Encoding>* seen;
  std::vector<Encoding>* found;

  Index at(Index a, Index b) const { return mult[static_cast<std::size_t>(a) * n + b]; }
  void put(Index a, Index b, Index v) {
    mult[static_cast<std::size_t>(a) * n + b] = v;
    mult[static_cast<std::size_t>(b) * n + a] = v;
  }

  bool assoc_ok() const {
    for (Index a = 0; a < n; ++a) {
      for (Index b = a; b < n; ++b) {
        for (Index c = b; c < n; ++c) {
          const Index ab = at(a, b);
          const Index bc = at(b, c);
          const Index ac = at(a, c);
          if (ab == kUndefined || bc == kUndefined || ac == kUndefined) continue;
          // With commutativity, one ordering of each unordered triple covers
          // the rest.
          const Index left = at(ab, c);
          const Index right = at(a, bc);
          const Index mid = at(ac, b);
          if (left != kUndefined && right != kUndefined && left != right) return false;
          if (left != kUndefined && mid != kUndefined && left != mid) return false;
          if (right != kUndefined && mid != kUndefined && right != mid) return false;
        }
      }
    }
    return true;
  }

  void run(std::size_t i) {
    if (i == cells.size()) {
      Encoding canon = canonical_semilattice(n, mult);
      if (seen->insert(canon).second) found->push_back(std::move(canon));
      return;
    }
    const auto [a, b] = cells[i];
    for (Index v = 0; v < n; ++v) {
      put(a, b, v);
      if (assoc_ok()) run(i + 1);
    }
    put(a, b, kUndefined);
  }
};

}  // namespace

std::vector<EhresmannSemigroup> enumerate_semilattices(int max_elements) {
  if (max_elements < 1 || max_elements > 6) {
    throw std::invalid_argument("enumerate_semilattices supports 1..6 elements");
  }
  std::vector<EhresmannSemigroup> out;
  for (int n = 1; n <= max_elements; ++n) {
    std::set<Encoding> seen;
    std::vector<Encoding> found;
    SemilatticeSearch search{n, Table(static_cast<std::size_t>(n) * n, kUndefined),
                             {}, &seen, &found};
    for (Index a = 0; a < n; ++a) search.put(a, a, a);
    for (Index a = 0; a < n; ++a) {
      for (Index b = a + 1; b < n; ++b) search.cells.emplace_back(a, b);
    }
    search.run(0);
    std::sort(found.begin(), found.end());
    for (const auto& enc : found) {
      EhresmannSemigroup s;
      s.mult.assign(enc.begin() + 1, enc.end());
      s.star.resize(n);
      s.plus.resize(n);
      std::iota(s.star.begin(), s.star.end(), 0);
      std::iota(s.plus.begin(), s.plus.end(), 0);
      s.projections.resize(n);
      std::iota(s.projections.begin(), s.projections.end(), 0);
      s.names.resize(n);
      for (int a = 0; a < n; ++a) s.names[a] = "e" + std::to_string(a);
      auto checked = check_ehresmann(std::move(s));
      if (!checked.ok()) {
        throw InternalError("enumerated semilattice failed validation: " +
                            to_string(checked.violation()));
      }
      out.push_back(std::move(checked).value());
    }
  }
  return out;
}

std::vector<EhresmannSemigroup> ehresmann_subalgebras(const EhresmannSemigroup& s) {
  const int n = s.size();
  if (n > 16) {
    throw std::invalid_argument("ehresmann_subalgebras is limited to 16 elements");
  }
  std::vector<EhresmannSemigroup> out;
  const std::uint32_t total = std::uint32_t{1} << n;
  std::vector<Index> members;
  for (std::uint32_t mask = 1; mask < total; ++mask) {
    members.clear();
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!((mask >> a) & 1u)) continue;
      members.push_back(a);
      if (!((mask >> s.star[a]) & 1u) || !((mask >> s.plus[a]) & 1u)) closed = false;
    }
    for (std::size_t i = 0; i < members.size() && closed; ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (!((mask >> s.mul(members[i], members[j])) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;

    EhresmannSemigroup sub;
    const int sz = static_cast<int>(members.size());
    std::vector<Index> pos(n, kUndefined);
    for (int i = 0; i < sz; ++i) pos[members[i]] = i;
    sub.names.resize(sz);
    sub.star.resize(sz);
    sub.plus.resize(sz);
    sub.mult.resize(static_cast<std::size_t>(sz) * sz);
    for (int i = 0; i < sz; ++i) {
      sub.names[i] = s.name(members[i]);
      sub.star[i] = pos[s.star[members[i]]];
      sub.plus[i] = pos[s.plus[members[i]]];
      if (s.is_projection(members[i])) sub.projections.push_back(i);
      for (int j = 0; j < sz; ++j) {
        sub.mult[static_cast<std::size_t>(i) * sz + j] = pos[s.mul(members[i], members[j])];
      }
    }
    if (s.one && pos[*s.one] != kUndefined) sub.one = pos[*s.one];
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace ehresmann
