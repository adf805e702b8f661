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

#include "ehresmann/common.hpp"

#include <sstream>

namespace ehresmann {

std::string to_string(const Violation& v) {
  std::ostringstream out;
  out << v.law;
  if (!v.witness.empty()) {
    out << " witness (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i > 0) out << ",";
      out << v.witness[i];
    }
    out << ")";
  }
  if (v.line > 0) out << " at line " << v.line << ", column " << v.column;
  if (!v.detail.empty()) out << ": " << v.detail;
  return out.str();
}

int Bitset::count() const {
  int total = 0;
  for (auto w : words_) total += __builtin_popcountll(w);
  return total;
}

bool Bitset::any() const {
  for (auto w : words_)
    if (w != 0) return true;
  return false;
}

bool Bitset::is_subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

Bitset& Bitset::operator&=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::string mask_to_string(std::uint64_t mask, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if ((mask >> i) & 1u) {
      if (!first) out << ",";
      first = false;
      if (static_cast<std::size_t>(i) < names.size() && !names[i].empty()) {
        out << names[i];
      } else {
        out << i;
      }
    }
  }
  out << "}";
  return out.str();
}

}  // namespace ehresmann
