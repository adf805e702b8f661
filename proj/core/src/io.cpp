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

#include "ehresmann/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ehresmann {

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::Category: return "CATEGORY";
    case InstanceKind::Semigroup: return "SEMIGROUP";
    case InstanceKind::Boolean: return "BOOLEAN";
    case InstanceKind::Biaction: return "BIACTION";
    case InstanceKind::Map: return "MAP";
  }
  return "?";
}

std::vector<Bitset> down_rows(const std::vector<Bitset>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<Bitset> down(n, Bitset(n));
  for (int a = 0; a < n; ++a) {
    leq[a].for_each([&](int b) { down[b].set(a); });
  }
  return down;
}

namespace {

constexpr std::size_t kMaxCount = std::size_t{1} << 20;

struct Token {
  std::string text;
  int line = 0;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ch == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++column;
      ++i;
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      t.text.push_back(text[i]);
      ++i;
      ++column;
    }
    out.push_back(std::move(t));
  }
  return out;
}

struct Parser {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  Violation error;
  bool failed = false;

  bool fail(const std::string& law, const std::string& detail) {
    if (failed) return false;
    failed = true;
    error.law = law;
    error.detail = detail;
    if (pos < tokens.size()) {
      error.line = tokens[pos].line;
      error.column = tokens[pos].column;
    } else if (!tokens.empty()) {
      error.line = tokens.back().line;
      error.column = tokens.back().column + static_cast<int>(tokens.back().text.size());
    } else {
      error.line = 1;
      error.column = 1;
    }
    return false;
  }

  bool at_end() const { return pos >= tokens.size(); }

  const std::string* peek() const { return at_end() ? nullptr : &tokens[pos].text; }

  bool next(std::string& out) {
    if (at_end()) return fail("parse/unexpected-end", "unexpected end of input");
    out = tokens[pos++].text;
    return true;
  }

  bool expect(const std::string& keyword) {
    std::string tok;
    if (!next(tok)) return false;
    if (tok != keyword) {
      --pos;
      return fail("parse/section", "expected '" + keyword + "', got '" + tok + "'");
    }
    return true;
  }

  bool integer(long long& out) {
    std::string tok;
    if (!next(tok)) return false;
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
      --pos;
      return fail("parse/number", "expected a non-negative integer, got '" + tok + "'");
    }
    if (tok.size() > 12) {
      --pos;
      return fail("parse/number", "integer out of range");
    }
    out = std::stoll(tok);
    return true;
  }

  bool count(const char* what, long long& out, long long min_value = 0) {
    if (!integer(out)) return false;
    if (out < min_value || out > static_cast<long long>(kMaxCount)) {
      --pos;
      return fail("parse/count", std::string(what) + " count out of range");
    }
    return true;
  }

  bool index(long long bound, const char* what, Index& out) {
    long long v = 0;
    if (!integer(v)) return false;
    if (v >= bound) {
      --pos;
      return fail("parse/dangling-index", std::string(what) + " index " + std::to_string(v) +
                                               " out of range (bound " + std::to_string(bound) +
                                               ")");
    }
    out = static_cast<Index>(v);
    return true;
  }
};

bool parse_names(Parser& p, long long n, const char* what, std::vector<std::string>& names) {
  std::unordered_set<std::string> seen;
  names.clear();
  for (long long i = 0; i < n; ++i) {
    std::string tok;
    if (!p.next(tok)) return false;
    if (!seen.insert(tok).second) {
      --p.pos;
      return p.fail("parse/duplicate-name", std::string("duplicate ") + what + " name '" + tok +
                                                "'");
    }
    names.push_back(std::move(tok));
  }
  return true;
}

// A reference is a declared name or a bare index below the bound.
bool resolve_reference(Parser& p, const std::unordered_map<std::string, Index>& by_name,
                       long long bound, const char* what, Index& out) {
  std::string tok;
  if (!p.next(tok)) return false;
  const auto it = by_name.find(tok);
  if (it != by_name.end()) {
    out = it->second;
    return true;
  }
  if (!tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos &&
      tok.size() <= 12 && std::stoll(tok) < bound) {
    out = static_cast<Index>(std::stoll(tok));
    return true;
  }
  --p.pos;
  return p.fail("parse/unknown-reference", std::string("unknown ") + what + " '" + tok + "'");
}

bool parse_category_body(Parser& p, FiniteCategory& c, bool inside_biaction = false) {
  if (const std::string* tok = p.peek(); tok == nullptr || *tok != "objects") {
    return p.fail("parse/section", "objects section required");
  }
  p.expect("objects");
  long long k = 0;
  if (!p.count("objects", k, 1)) return false;
  std::vector<std::string> objects;
  if (!parse_names(p, k, "object", objects)) return false;
  if (inside_biaction) {
    for (const auto& name : objects) {
      if (name == "meet" || name == "lact" || name == "ract") {
        return p.fail("parse/reserved-name", "'" + name + "' is reserved inside BIACTION");
      }
    }
  }

  if (!p.expect("arrows")) return false;
  long long m = 0;
  if (!p.count("arrows", m)) return false;

  const long long n = k + m;
  c.names.clear();
  c.identities.clear();
  c.dom.assign(n, 0);
  c.cod.assign(n, 0);
  c.comp.assign(static_cast<std::size_t>(n) * n, kUndefined);

  std::unordered_map<std::string, Index> object_by_name;
  std::unordered_map<std::string, Index> morphism_by_name;
  for (long long i = 0; i < k; ++i) {
    const Index e = static_cast<Index>(i);
    c.names.push_back("id_" + objects[i]);
    c.identities.push_back(e);
    c.dom[e] = e;
    c.cod[e] = e;
    object_by_name.emplace(objects[i], e);
    morphism_by_name.emplace(c.names.back(), e);
  }
  for (long long j = 0; j < m; ++j) {
    std::string name;
    if (!p.next(name)) return false;
    if (morphism_by_name.contains(name)) {
      --p.pos;
      return p.fail("parse/duplicate-name", "duplicate arrow name '" + name + "'");
    }
    if (inside_biaction && (name == "meet" || name == "lact" || name == "ract")) {
      --p.pos;
      return p.fail("parse/reserved-name", "'" + name + "' is reserved inside BIACTION");
    }
    const Index x = static_cast<Index>(k + j);
    Index d = 0, r = 0;
    if (!resolve_reference(p, object_by_name, k, "object", d)) return false;
    if (!resolve_reference(p, object_by_name, k, "object", r)) return false;
    c.names.push_back(name);
    morphism_by_name.emplace(name, x);
    c.dom[x] = d;
    c.cod[x] = r;
  }

  // Identity composites are implicit.
  for (Index x = 0; x < n; ++x) {
    c.comp[static_cast<std::size_t>(x) * n + c.dom[x]] = x;
    c.comp[static_cast<std::size_t>(c.cod[x]) * n + x] = x;
  }

  if (const std::string* tok = p.peek(); tok != nullptr && *tok == "compose") {
    p.expect("compose");
    while (true) {
      const std::string* look = p.peek();
      if (look == nullptr) break;
      if (*look == "meet") break;  // a BIACTION continues with its tables
      Index l = 0, r = 0, res = 0;
      if (!resolve_reference(p, morphism_by_name, n, "morphism", l)) return false;
      if (!resolve_reference(p, morphism_by_name, n, "morphism", r)) return false;
      if (!resolve_reference(p, morphism_by_name, n, "morphism", res)) return false;
      if (l < k || r < k) {
        p.pos -= 3;
        return p.fail("parse/identity-composite",
                      "identity composites are implicit; do not list them");
      }
      auto& cell = c.comp[static_cast<std::size_t>(l) * n + r];
      if (cell != kUndefined) {
        p.pos -= 3;
        return p.fail("parse/duplicate-composite", "composite already declared");
      }
      cell = res;
    }
  }
  return true;
}

bool parse_semigroup_body(Parser& p, EhresmannSemigroup& s) {
  if (!p.expect("elements")) return false;
  long long n = 0;
  if (!p.count("elements", n, 1)) return false;
  if (!parse_names(p, n, "element", s.names)) return false;

  if (!p.expect("table")) return false;
  s.mult.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto& cell : s.mult) {
    if (!p.index(n, "table", cell)) return false;
  }

  if (!p.expect("projections")) return false;
  long long u = 0;
  if (!p.count("projections", u, 1)) return false;
  s.projections.assign(u, 0);
  for (auto& e : s.projections) {
    if (!p.index(n, "projection", e)) return false;
  }
  std::sort(s.projections.begin(), s.projections.end());
  if (std::adjacent_find(s.projections.begin(), s.projections.end()) != s.projections.end()) {
    return p.fail("parse/duplicate-projection", "duplicate projection index");
  }

  if (!p.expect("star")) return false;
  s.star.assign(n, 0);
  for (auto& e : s.star) {
    if (!p.index(n, "star", e)) return false;
  }
  if (!p.expect("plus")) return false;
  s.plus.assign(n, 0);
  for (auto& e : s.plus) {
    if (!p.index(n, "plus", e)) return false;
  }

  if (const std::string* tok = p.peek(); tok != nullptr && *tok == "one") {
    p.expect("one");
    Index one = 0;
    if (!p.index(n, "one", one)) return false;
    s.one = one;
  }
  return true;
}

bool parse_order_rows(Parser& p, long long n, std::vector<Bitset>& leq) {
  if (!p.expect("order")) return false;
  leq.assign(n, Bitset(static_cast<int>(n)));
  for (long long a = 0; a < n; ++a) {
    std::string row;
    if (!p.next(row)) return false;
    if (row.size() != static_cast<std::size_t>(n) ||
        row.find_first_not_of("01") != std::string::npos) {
      --p.pos;
      return p.fail("parse/order-row", "order rows are strings of exactly n characters 0 or 1");
    }
    for (long long b = 0; b < n; ++b) {
      if (row[b] == '1') leq[a].set(static_cast<int>(b));
    }
  }
  return true;
}

bool parse_biaction_body(Parser& p, EhresmannBiaction& b) {
  if (!parse_category_body(p, b.category, /*inside_biaction=*/true)) return false;
  const long long k = b.category.identities.size();
  const long long n = b.category.size();

  if (!p.expect("meet")) return false;
  b.meet.assign(static_cast<std::size_t>(k) * k, 0);
  for (auto& cell : b.meet) {
    if (!p.index(k, "meet", cell)) return false;
  }
  if (!p.expect("lact")) return false;
  b.lact.assign(static_cast<std::size_t>(k) * n, 0);
  for (auto& cell : b.lact) {
    if (!p.index(n, "lact", cell)) return false;
  }
  if (!p.expect("ract")) return false;
  b.ract.assign(static_cast<std::size_t>(n) * k, 0);
  for (auto& cell : b.ract) {
    if (!p.index(n, "ract", cell)) return false;
  }
  return true;
}

bool parse_map_body(Parser& p, MapInstance& m) {
  if (!p.expect("source")) return false;
  if (!p.next(m.source)) return false;
  if (!p.expect("target")) return false;
  if (!p.next(m.target)) return false;
  if (!p.expect("pairs")) return false;
  long long count = 0;
  if (!p.count("pairs", count)) return false;
  m.pairs.assign(count, {0, 0});
  for (auto& pr : m.pairs) {
    long long a = 0, b = 0;
    if (!p.integer(a) || !p.integer(b)) return false;
    pr = {static_cast<Index>(a), static_cast<Index>(b)};
  }
  return true;
}

}  // namespace

Checked<InstanceFile> parse_instance(std::string_view text) {
  Parser p;
  p.tokens = tokenize(text);

  std::string kind_token;
  if (!p.next(kind_token)) {
    p.error.detail = "empty input";
    return p.error;
  }

  InstanceFile file;
  if (kind_token == "CATEGORY") {
    file.kind = InstanceKind::Category;
  } else if (kind_token == "SEMIGROUP") {
    file.kind = InstanceKind::Semigroup;
  } else if (kind_token == "BOOLEAN") {
    file.kind = InstanceKind::Boolean;
  } else if (kind_token == "BIACTION") {
    file.kind = InstanceKind::Biaction;
  } else if (kind_token == "MAP") {
    file.kind = InstanceKind::Map;
  } else {
    --p.pos;
    p.fail("parse/unknown-kind", "unknown instance kind '" + kind_token + "'");
    return p.error;
  }
  if (!p.expect("v1")) return p.error;

  switch (file.kind) {
    case InstanceKind::Category: {
      FiniteCategory c;
      if (!parse_category_body(p, c)) return p.error;
      file.body = std::move(c);
      break;
    }
    case InstanceKind::Semigroup: {
      EhresmannSemigroup s;
      if (!parse_semigroup_body(p, s)) return p.error;
      file.body = std::move(s);
      break;
    }
    case InstanceKind::Boolean: {
      BooleanInstance b;
      if (!parse_semigroup_body(p, b.sg)) return p.error;
      if (!b.sg.one) {
        p.fail("parse/section", "BOOLEAN requires the one section");
        return p.error;
      }
      if (!parse_order_rows(p, b.sg.size(), b.leq)) return p.error;
      file.body = std::move(b);
      break;
    }
    case InstanceKind::Biaction: {
      EhresmannBiaction b;
      if (!parse_biaction_body(p, b)) return p.error;
      file.body = std::move(b);
      break;
    }
    case InstanceKind::Map: {
      MapInstance m;
      if (!parse_map_body(p, m)) return p.error;
      file.body = std::move(m);
      break;
    }
  }

  if (!p.at_end()) {
    p.fail("parse/trailing", "trailing tokens after the instance body");
    return p.error;
  }
  return file;
}

namespace {

bool token_safe(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '#') return false;
  }
  return true;
}

// Category serialization reorders so that identities occupy the leading
// indices, as the format requires.
struct CategoryLayout {
  std::vector<Index> new_to_old;
  std::vector<Index> old_to_new;
  std::vector<std::string> object_names;    // per object
  std::vector<std::string> morphism_names;  // per new index
  int k = 0;
};

CategoryLayout layout_category(const FiniteCategory& c) {
  CategoryLayout l;
  l.k = c.object_count();
  for (Index e : c.identities) l.new_to_old.push_back(e);
  for (Index x = 0; x < c.size(); ++x) {
    if (!c.is_identity(x)) l.new_to_old.push_back(x);
  }
  l.old_to_new.assign(c.size(), 0);
  for (Index i = 0; i < c.size(); ++i) l.old_to_new[l.new_to_old[i]] = i;

  std::unordered_set<std::string> used;
  l.object_names.resize(l.k);
  for (int i = 0; i < l.k; ++i) {
    std::string base = c.name(c.identities[i]);
    if (base.rfind("id_", 0) == 0) base = base.substr(3);
    if (!token_safe(base) || !used.insert(base).second) {
      base = "o" + std::to_string(i);
      while (!used.insert(base).second) base += "_";
    }
    l.object_names[i] = base;
  }
  used.clear();
  for (int i = 0; i < l.k; ++i) used.insert("id_" + l.object_names[i]);
  l.morphism_names.resize(c.size());
  for (int i = 0; i < l.k; ++i) l.morphism_names[i] = "id_" + l.object_names[i];
  for (Index i = l.k; i < c.size(); ++i) {
    std::string base = c.name(l.new_to_old[i]);
    if (!token_safe(base) || !used.insert(base).second) {
      base = "a" + std::to_string(i - l.k);
      while (!used.insert(base).second) base += "_";
    }
    l.morphism_names[i] = base;
  }
  return l;
}

void write_category_body(std::ostringstream& out, const FiniteCategory& c,
                         const CategoryLayout& l) {
  out << "objects " << l.k << "\n";
  for (int i = 0; i < l.k; ++i) out << (i ? " " : "") << l.object_names[i];
  out << "\n";
  out << "arrows " << (c.size() - l.k) << "\n";
  for (Index i = l.k; i < c.size(); ++i) {
    const Index old = l.new_to_old[i];
    out << l.morphism_names[i] << " " << l.object_names[l.old_to_new[c.dom[old]]] << " "
        << l.object_names[l.old_to_new[c.cod[old]]] << "\n";
  }
  out << "compose\n";
  for (Index i = l.k; i < c.size(); ++i) {
    for (Index j = l.k; j < c.size(); ++j) {
      const Index x = l.new_to_old[i];
      const Index y = l.new_to_old[j];
      const Index z = c.at(x, y);
      if (z != kUndefined) {
        out << l.morphism_names[i] << " " << l.morphism_names[j] << " "
            << l.morphism_names[l.old_to_new[z]] << "\n";
      }
    }
  }
}

std::vector<std::string> element_tokens(const EhresmannSemigroup& s) {
  std::vector<std::string> names(s.size());
  std::unordered_set<std::string> used;
  for (Index a = 0; a < s.size(); ++a) {
    std::string base = s.name(a);
    if (!token_safe(base) || !used.insert(base).second) {
      base = "s" + std::to_string(a);
      while (!used.insert(base).second) base += "_";
    }
    names[a] = base;
  }
  return names;
}

void write_semigroup_body(std::ostringstream& out, const EhresmannSemigroup& s) {
  const auto names = element_tokens(s);
  const int n = s.size();
  out << "elements " << n << "\n";
  for (int a = 0; a < n; ++a) out << (a ? " " : "") << names[a];
  out << "\n";
  out << "table\n";
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) out << (b ? " " : "") << s.mul(a, b);
    out << "\n";
  }
  out << "projections " << s.projections.size() << "\n";
  for (std::size_t i = 0; i < s.projections.size(); ++i) {
    out << (i ? " " : "") << s.projections[i];
  }
  out << "\n";
  out << "star\n";
  for (Index a = 0; a < n; ++a) out << (a ? " " : "") << s.star[a];
  out << "\n";
  out << "plus\n";
  for (Index a = 0; a < n; ++a) out << (a ? " " : "") << s.plus[a];
  out << "\n";
  if (s.one) out << "one " << *s.one << "\n";
}

}  // namespace

std::string serialize_category(const FiniteCategory& c) {
  std::ostringstream out;
  out << "CATEGORY v1\n";
  write_category_body(out, c, layout_category(c));
  return out.str();
}

std::string serialize_semigroup(const EhresmannSemigroup& s) {
  std::ostringstream out;
  out << "SEMIGROUP v1\n";
  write_semigroup_body(out, s);
  return out.str();
}

std::string serialize_boolean(const BooleanInstance& b) {
  std::ostringstream out;
  out << "BOOLEAN v1\n";
  write_semigroup_body(out, b.sg);
  out << "order\n";
  for (int a = 0; a < b.sg.size(); ++a) {
    for (int x = 0; x < b.sg.size(); ++x) out << (b.leq[a].test(x) ? '1' : '0');
    out << "\n";
  }
  return out.str();
}

std::string serialize_boolean(const BooleanEhresmannMonoid& m) {
  BooleanInstance b;
  b.sg = m.sg;
  const int n = m.size();
  b.leq.assign(n, Bitset(n));
  for (Index a = 0; a < n; ++a) {
    m.down[a].for_each([&](int x) { b.leq[x].set(a); });
  }
  return serialize_boolean(b);
}

std::string serialize_biaction(const EhresmannBiaction& b) {
  std::ostringstream out;
  out << "BIACTION v1\n";
  const CategoryLayout l = layout_category(b.category);
  write_category_body(out, b.category, l);

  const int k = b.objects();
  const int n = b.size();
  std::vector<Index> pos_of(n, kUndefined);
  for (int p = 0; p < k; ++p) pos_of[b.category.identities[p]] = p;

  // New identity position i corresponds to old identity new_to_old[i]; the
  // printed tables follow the new order throughout.
  out << "meet\n";
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const Index value =
          b.meet[static_cast<std::size_t>(pos_of[l.new_to_old[i]]) * k + pos_of[l.new_to_old[j]]];
      out << (j ? " " : "") << l.old_to_new[value];
    }
    out << "\n";
  }
  out << "lact\n";
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < n; ++a) {
      const Index value =
          b.lact[static_cast<std::size_t>(pos_of[l.new_to_old[i]]) * n + l.new_to_old[a]];
      out << (a ? " " : "") << l.old_to_new[value];
    }
    out << "\n";
  }
  out << "ract\n";
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < k; ++i) {
      const Index value =
          b.ract[static_cast<std::size_t>(l.new_to_old[a]) * k + pos_of[l.new_to_old[i]]];
      out << (i ? " " : "") << l.old_to_new[value];
    }
    out << "\n";
  }
  return out.str();
}

std::string serialize_map(const MapInstance& m) {
  std::ostringstream out;
  out << "MAP v1\n";
  out << "source " << m.source << "\n";
  out << "target " << m.target << "\n";
  out << "pairs " << m.pairs.size() << "\n";
  for (const auto& [a, b] : m.pairs) out << a << " " << b << "\n";
  return out.str();
}

std::string serialize_instance(const InstanceFile& f) {
  switch (f.kind) {
    case InstanceKind::Category: return serialize_category(std::get<FiniteCategory>(f.body));
    case InstanceKind::Semigroup:
      return serialize_semigroup(std::get<EhresmannSemigroup>(f.body));
    case InstanceKind::Boolean: return serialize_boolean(std::get<BooleanInstance>(f.body));
    case InstanceKind::Biaction: return serialize_biaction(std::get<EhresmannBiaction>(f.body));
    case InstanceKind::Map: return serialize_map(std::get<MapInstance>(f.body));
  }
  return {};
}

}  // namespace ehresmann
