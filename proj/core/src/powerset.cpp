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

#include "ehresmann/powerset.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ehresmann {

namespace {

void require_width(const FiniteCategory& c) {
  if (c.size() > kMaxSubsetWidth) {
    throw std::invalid_argument("subset arithmetic supports at most " +
                                std::to_string(kMaxSubsetWidth) + " morphisms");
  }
}

}  // namespace

Subset make_subset(const FiniteCategory& base, std::uint64_t bits) {
  require_width(base);
  if (base.size() < 64 && (bits >> base.size()) != 0) {
    throw std::invalid_argument("subset contains morphisms outside the category");
  }
  return Subset{&base, bits};
}

Subset subset_product(const Subset& a, const Subset& b) {
  if (a.base != b.base) {
    throw std::invalid_argument("subset_product: operands over different categories");
  }
  const FiniteCategory& c = *a.base;
  std::uint64_t out = 0;
  for (std::uint64_t xa = a.bits; xa != 0; xa &= xa - 1) {
    const Index x = __builtin_ctzll(xa);
    for (std::uint64_t yb = b.bits; yb != 0; yb &= yb - 1) {
      const Index y = __builtin_ctzll(yb);
      if (c.composable(x, y)) out |= std::uint64_t{1} << c.at(x, y);
    }
  }
  return Subset{a.base, out};
}

Subset subset_star(const Subset& a) {
  const FiniteCategory& c = *a.base;
  std::uint64_t out = 0;
  for (std::uint64_t xa = a.bits; xa != 0; xa &= xa - 1) {
    out |= std::uint64_t{1} << c.dom[__builtin_ctzll(xa)];
  }
  return Subset{a.base, out};
}

Subset subset_plus(const Subset& a) {
  const FiniteCategory& c = *a.base;
  std::uint64_t out = 0;
  for (std::uint64_t xa = a.bits; xa != 0; xa &= xa - 1) {
    out |= std::uint64_t{1} << c.cod[__builtin_ctzll(xa)];
  }
  return Subset{a.base, out};
}

SubsetClass classify_subset(const FiniteCategory& c, std::uint64_t members) {
  require_width(c);
  SubsetClass out;
  out.deterministic = true;
  out.codeterministic = true;
  bool dom_injective = true;
  bool cod_injective = true;

  // cod_by_dom[e]: the unique cod seen so far among members with dom e,
  // kUndefined if none yet; symmetrically for dom_by_cod.
  std::vector<Index> cod_by_dom(c.size(), kUndefined);
  std::vector<Index> dom_by_cod(c.size(), kUndefined);
  std::vector<char> dom_seen(c.size(), 0);
  std::vector<char> cod_seen(c.size(), 0);

  for (std::uint64_t m = members; m != 0; m &= m - 1) {
    const Index x = __builtin_ctzll(m);
    const Index d = c.dom[x];
    const Index r = c.cod[x];
    if (dom_seen[d]) {
      dom_injective = false;
      if (cod_by_dom[d] != r) out.deterministic = false;
    } else {
      dom_seen[d] = 1;
      cod_by_dom[d] = r;
    }
    if (cod_seen[r]) {
      cod_injective = false;
      if (dom_by_cod[r] != d) out.codeterministic = false;
    } else {
      cod_seen[r] = 1;
      dom_by_cod[r] = d;
    }
  }
  out.partial_isometry = dom_injective && cod_injective;
  return out;
}

Checked<BooleanEhresmannMonoid> build_powerset_monoid(const FiniteCategory& c,
                                                      std::uint64_t cell_cap) {
  const int n = c.size();
  if (n > kMaxSubsetWidth) {
    Violation v;
    v.law = "powerset/size-cap";
    v.witness = {static_cast<Index>(n)};
    v.detail = "category too large for subset arithmetic";
    return v;
  }
  // Cells of the multiplication table: (2^n)^2 = 2^(2n).
  if (n > 31 || (std::uint64_t{1} << (2 * n)) > cell_cap) {
    Violation v;
    v.law = "powerset/size-cap";
    v.witness = {static_cast<Index>(n)};
    v.detail = "materialization needs 2^" + std::to_string(2 * n) + " cells, cap is " +
               std::to_string(cell_cap);
    return v;
  }

  const std::uint64_t count = std::uint64_t{1} << n;
  const Index total = static_cast<Index>(count);

  // Single-morphism products, then row extension over the second argument:
  // {a} B = {a} (B minus low bit) union {a}{low bit}.
  std::vector<std::uint64_t> pair_mask(static_cast<std::size_t>(n) * n, 0);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (c.composable(x, y)) {
        pair_mask[static_cast<std::size_t>(x) * n + y] = std::uint64_t{1} << c.at(x, y);
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> left_row(n);
  for (Index x = 0; x < n; ++x) {
    auto& row = left_row[x];
    row.assign(count, 0);
    for (std::uint64_t b = 1; b < count; ++b) {
      const std::uint64_t low = b & (~b + 1);
      row[b] = row[b & (b - 1)] | pair_mask[static_cast<std::size_t>(x) * n + __builtin_ctzll(low)];
    }
  }

  BooleanEhresmannMonoid m;
  m.sg.mult.assign(count * count, 0);
  for (std::uint64_t a = 0; a < count; ++a) {
    Index* out = &m.sg.mult[a * count];
    for (std::uint64_t rest = a; rest != 0; rest &= rest - 1) {
      const auto& row = left_row[__builtin_ctzll(rest)];
      for (std::uint64_t b = 0; b < count; ++b) {
        out[b] = static_cast<Index>(static_cast<std::uint64_t>(out[b]) | row[b]);
      }
    }
  }

  std::uint64_t id_mask = 0;
  for (Index e : c.identities) id_mask |= std::uint64_t{1} << e;

  m.sg.star.resize(count);
  m.sg.plus.resize(count);
  m.sg.star[0] = 0;
  m.sg.plus[0] = 0;
  for (std::uint64_t a = 1; a < count; ++a) {
    const Index low = __builtin_ctzll(a);
    m.sg.star[a] = static_cast<Index>(m.sg.star[a & (a - 1)] | (std::uint64_t{1} << c.dom[low]));
    m.sg.plus[a] = static_cast<Index>(m.sg.plus[a & (a - 1)] | (std::uint64_t{1} << c.cod[low]));
  }

  for (std::uint64_t e = id_mask;; e = (e - 1) & id_mask) {
    m.sg.projections.push_back(static_cast<Index>(e));
    if (e == 0) break;
  }
  std::sort(m.sg.projections.begin(), m.sg.projections.end());
  m.sg.one = static_cast<Index>(id_mask);

  m.sg.names.resize(count);
  std::vector<std::string> morphism_names(n);
  for (Index x = 0; x < n; ++x) morphism_names[x] = c.name(x);
  for (std::uint64_t a = 0; a < count; ++a) m.sg.names[a] = mask_to_string(a, morphism_names);

  // Inclusion order and the derived lattice structure are immediate here.
  m.down.assign(count, Bitset(total));
  m.up.assign(count, Bitset(total));
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = a;; b = (b - 1) & a) {
      m.down[a].set(static_cast<int>(b));
      m.up[b].set(static_cast<int>(a));
      if (b == 0) break;
    }
  }
  m.meet.resize(count * count);
  m.join.resize(count * count);
  for (std::uint64_t a = 0; a < count; ++a) {
    for (std::uint64_t b = 0; b < count; ++b) {
      m.meet[a * count + b] = static_cast<Index>(a & b);
      m.join[a * count + b] = static_cast<Index>(a | b);
    }
  }
  m.complement.resize(count);
  for (std::uint64_t a = 0; a < count; ++a) {
    m.complement[a] = static_cast<Index>(~a & (count - 1));
  }
  m.bottom = 0;
  m.top = total - 1;
  return m;
}

}  // namespace ehresmann
