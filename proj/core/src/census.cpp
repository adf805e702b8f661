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

#include "ehresmann/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace ehresmann {

namespace {

// Candidate structure on K atoms: which atoms are identities, the supports
// star/plus of every atom, and the product of every composable atom pair as
// a mask of atoms. Everything else follows by join-linearity.
struct AtomTables {
  int k = 0;
  std::uint32_t identity_atoms = 0;
  std::vector<Index> star;          // atom -> identity atom
  std::vector<Index> plus;          // atom -> identity atom
  std::vector<std::uint32_t> prod;  // k*k; masks of atoms; ~0u marks undetermined

  std::uint32_t at(int x, int y) const { return prod[static_cast<std::size_t>(x) * k + y]; }
};

constexpr std::uint32_t kUnknown = ~std::uint32_t{0};

// Product of two atom masks, or kUnknown when a needed cell is open.
std::uint32_t mask_product(const AtomTables& t, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0;
  for (std::uint32_t xa = a; xa != 0; xa &= xa - 1) {
    const int x = __builtin_ctz(xa);
    for (std::uint32_t yb = b; yb != 0; yb &= yb - 1) {
      const int y = __builtin_ctz(yb);
      const std::uint32_t cell = t.at(x, y);
      if (cell == kUnknown) return kUnknown;
      out |= cell;
    }
  }
  return out;
}

bool triples_consistent(const AtomTables& t) {
  for (int x = 0; x < t.k; ++x) {
    for (int y = 0; y < t.k; ++y) {
      const std::uint32_t xy = t.at(x, y);
      if (xy == kUnknown) continue;
      for (int z = 0; z < t.k; ++z) {
        const std::uint32_t yz = t.at(y, z);
        if (yz == kUnknown) continue;
        const std::uint32_t left = mask_product(t, xy, std::uint32_t{1} << z);
        const std::uint32_t right = mask_product(t, std::uint32_t{1} << x, yz);
        if (left != kUnknown && right != kUnknown && left != right) return false;
      }
    }
  }
  return true;
}

// Smallest relabeling of the atoms; instances are kept one per class.
std::vector<int> encode(const AtomTables& t) {
  std::vector<int> out;
  out.push_back(t.k);
  out.push_back(static_cast<int>(t.identity_atoms));
  for (Index v : t.star) out.push_back(v);
  for (Index v : t.plus) out.push_back(v);
  for (std::uint32_t v : t.prod) out.push_back(static_cast<int>(v));
  return out;
}

std::vector<int> canonical(const AtomTables& t) {
  std::vector<int> perm(t.k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  AtomTables r = t;
  do {
    r.identity_atoms = 0;
    for (int x = 0; x < t.k; ++x) {
      if ((t.identity_atoms >> x) & 1u) r.identity_atoms |= std::uint32_t{1} << perm[x];
    }
    for (int x = 0; x < t.k; ++x) {
      r.star[perm[x]] = perm[t.star[x]];
      r.plus[perm[x]] = perm[t.plus[x]];
    }
    for (int x = 0; x < t.k; ++x) {
      for (int y = 0; y < t.k; ++y) {
        std::uint32_t mask = 0;
        const std::uint32_t cell = t.at(x, y);
        for (std::uint32_t rest = cell; rest != 0; rest &= rest - 1) {
          mask |= std::uint32_t{1} << perm[__builtin_ctz(rest)];
        }
        r.prod[static_cast<std::size_t>(perm[x]) * t.k + perm[y]] = mask;
      }
    }
    auto candidate = encode(r);
    if (best.empty() || candidate < best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Expands the atom tables to the full monoid on all 2^k joins of atoms.
BooleanEhresmannMonoid expand(const AtomTables& t) {
  const int k = t.k;
  const std::uint32_t count = std::uint32_t{1} << k;
  BooleanEhresmannMonoid m;

  std::vector<std::string> atom_names(k);
  for (int i = 0; i < k; ++i) atom_names[i] = "x" + std::to_string(i);

  m.sg.names.resize(count);
  m.sg.star.resize(count);
  m.sg.plus.resize(count);
  m.sg.mult.assign(static_cast<std::size_t>(count) * count, 0);
  for (std::uint32_t a = 0; a < count; ++a) {
    m.sg.names[a] = mask_to_string(a, atom_names);
    std::uint32_t star_mask = 0;
    std::uint32_t plus_mask = 0;
    for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
      star_mask |= std::uint32_t{1} << t.star[__builtin_ctz(rest)];
      plus_mask |= std::uint32_t{1} << t.plus[__builtin_ctz(rest)];
    }
    m.sg.star[a] = static_cast<Index>(star_mask);
    m.sg.plus[a] = static_cast<Index>(plus_mask);
    for (std::uint32_t b = 0; b < count; ++b) {
      m.sg.mult[static_cast<std::size_t>(a) * count + b] =
          static_cast<Index>(mask_product(t, a, b));
    }
  }
  for (std::uint32_t e = t.identity_atoms;; e = (e - 1) & t.identity_atoms) {
    m.sg.projections.push_back(static_cast<Index>(e));
    if (e == 0) break;
  }
  std::sort(m.sg.projections.begin(), m.sg.projections.end());
  m.sg.one = static_cast<Index>(t.identity_atoms);

  m.down.assign(count, Bitset(static_cast<int>(count)));
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a;; b = (b - 1) & a) {
      m.down[a].set(static_cast<int>(b));
      if (b == 0) break;
    }
  }
  return m;
}

struct CensusSearch {
  AtomTables t;
  std::vector<std::pair<int, int>> open_cells;
  std::vector<std::uint32_t> hom;  // candidate atoms per open cell
  std::set<std::vector<int>>* seen;
  std::vector<BooleanEhresmannMonoid>* out;

  void run(std::size_t i) {
    if (i == open_cells.size()) {
      finish();
      return;
    }
    const auto [x, y] = open_cells[i];
    // Non-empty submasks of the hom candidates, ascending.
    const std::uint32_t full = hom[i];
    for (std::uint32_t value = full;; value = (value - 1) & full) {
      if (value != 0) {
        t.prod[static_cast<std::size_t>(x) * t.k + y] = value;
        if (triples_consistent(t)) run(i + 1);
      }
      if (value == 0) break;
    }
    t.prod[static_cast<std::size_t>(x) * t.k + y] = kUnknown;
  }

  void finish() {
    auto canon = canonical(t);
    if (!seen->insert(std::move(canon)).second) return;
    BooleanEhresmannMonoid m = expand(t);
    // The pruning conditions are necessary, not sufficient; the checkers are
    // the gate.
    auto sg = check_ehresmann(m.sg);
    if (!sg.ok()) return;
    auto full = check_boolean(std::move(sg).value(), m.down);
    if (!full.ok()) return;
    out->push_back(std::move(full).value());
  }
};

}  // namespace

std::vector<BooleanEhresmannMonoid> enumerate_boolean_monoids(int atom_count) {
  if (atom_count < 1 || atom_count > 4) {
    throw std::invalid_argument("enumerate_boolean_monoids supports 1..4 atoms");
  }
  const int k = atom_count;
  std::vector<BooleanEhresmannMonoid> out;
  std::set<std::vector<int>> seen;

  for (std::uint32_t identity_atoms = 1; identity_atoms < (std::uint32_t{1} << k);
       ++identity_atoms) {
    std::vector<int> free_atoms;
    std::vector<int> id_atoms;
    for (int x = 0; x < k; ++x) {
      if ((identity_atoms >> x) & 1u) {
        id_atoms.push_back(x);
      } else {
        free_atoms.push_back(x);
      }
    }

    // All assignments of star and plus supports for the non-identity atoms.
    const std::size_t assignments = free_atoms.size() * 2;
    std::vector<std::size_t> choice(assignments, 0);
    while (true) {
      AtomTables t;
      t.k = k;
      t.identity_atoms = identity_atoms;
      t.star.assign(k, 0);
      t.plus.assign(k, 0);
      for (int e : id_atoms) {
        t.star[e] = e;
        t.plus[e] = e;
      }
      for (std::size_t i = 0; i < free_atoms.size(); ++i) {
        t.star[free_atoms[i]] = id_atoms[choice[2 * i]];
        t.plus[free_atoms[i]] = id_atoms[choice[2 * i + 1]];
      }

      // Products: zero unless star(x) = plus(y); forced by the unit laws
      // when one factor is the relevant support; otherwise an open cell over
      // the atoms with matching supports.
      t.prod.assign(static_cast<std::size_t>(k) * k, 0);
      CensusSearch search{t, {}, {}, &seen, &out};
      for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
          auto& cell = search.t.prod[static_cast<std::size_t>(x) * k + y];
          if (search.t.star[x] != search.t.plus[y]) {
            cell = 0;
            continue;
          }
          if (y == search.t.star[x]) {
            cell = std::uint32_t{1} << x;
            continue;
          }
          if (x == search.t.plus[y]) {
            cell = std::uint32_t{1} << y;
            continue;
          }
          std::uint32_t candidates = 0;
          for (int z = 0; z < k; ++z) {
            if (search.t.star[z] == search.t.star[y] && search.t.plus[z] == search.t.plus[x]) {
              candidates |= std::uint32_t{1} << z;
            }
          }
          cell = kUnknown;
          search.open_cells.emplace_back(x, y);
          search.hom.push_back(candidates);
        }
      }
      bool feasible = true;
      for (std::uint32_t h : search.hom) {
        if (h == 0) feasible = false;
      }
      if (feasible && triples_consistent(search.t)) search.run(0);

      std::size_t pos = 0;
      for (; pos < assignments; ++pos) {
        if (choice[pos] + 1 < id_atoms.size()) {
          ++choice[pos];
          std::fill(choice.begin(), choice.begin() + pos, 0);
          break;
        }
      }
      if (pos == assignments) break;
    }
  }
  return out;
}

}  // namespace ehresmann
