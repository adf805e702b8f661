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

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ehresmann/biaction.hpp"
#include "ehresmann/boolean_monoid.hpp"
#include "ehresmann/category.hpp"
#include "ehresmann/common.hpp"
#include "ehresmann/semigroup.hpp"

namespace ehresmann {

/// Instance files are UTF-8, line oriented, tokens whitespace separated and
/// '#' commenting to end of line. Parsing is structural: tables of the right
/// arity with in-range indices. The algebraic laws are the checkers' job.
enum class InstanceKind { Category, Semigroup, Boolean, Biaction, Map };

std::string to_string(InstanceKind kind);

/// A SEMIGROUP body plus the order relation in file orientation:
/// leq[a].test(b) iff a lies below b.
struct BooleanInstance {
  EhresmannSemigroup sg;
  std::vector<Bitset> leq;
};

/// Down-set rows (as the Boolean checker wants them) from the file rows.
std::vector<Bitset> down_rows(const std::vector<Bitset>& leq);

/// Index pairs between two structures named by reference only; the paths are
/// recorded, not dereferenced.
struct MapInstance {
  std::string source;
  std::string target;
  std::vector<std::pair<Index, Index>> pairs;
};

struct InstanceFile {
  InstanceKind kind = InstanceKind::Category;
  std::variant<FiniteCategory, EhresmannSemigroup, BooleanInstance, EhresmannBiaction,
               MapInstance>
      body;
};

/// Parses one instance. Errors carry the line and column of the offending
/// token. The returned structures are raw: run the matching checker next.
Checked<InstanceFile> parse_instance(std::string_view text);

/// Canonical text form. Serialization re-parses cleanly and is a fixpoint:
/// serialize(parse(serialize(x))) == serialize(x) byte for byte.
std::string serialize_instance(const InstanceFile& f);

std::string serialize_category(const FiniteCategory& c);
std::string serialize_semigroup(const EhresmannSemigroup& s);
std::string serialize_boolean(const BooleanInstance& b);
std::string serialize_boolean(const BooleanEhresmannMonoid& m);
std::string serialize_biaction(const EhresmannBiaction& b);
std::string serialize_map(const MapInstance& m);

}  // namespace ehresmann
