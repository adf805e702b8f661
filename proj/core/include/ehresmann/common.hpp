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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ehresmann {

/// Index of a morphism or semigroup element inside its structure.
using Index = std::int32_t;

/// Sentinel for an undefined composite in a partial composition table.
inline constexpr Index kUndefined = -1;

/// Thrown when a construction that is valid by a proved property fails its
/// own re-validation. This always signals a bug in this library, never bad
/// input; input problems are reported as Violation values instead.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The first failed law of a checked structure, with the smallest witness
/// tuple in lexicographic index order.
struct Violation {
  std::string law;             ///< law identifier, e.g. "ES3" or "category/associativity"
  std::vector<Index> witness;  ///< offending indices; layout depends on the law
  std::string detail;          ///< rendered message
  int line = 0;                ///< set by the parser only
  int column = 0;
};

std::string to_string(const Violation& v);

/// Boolean check outcome that keeps the first counterexample.
struct Witnessed {
  bool ok = true;
  Violation why;

  explicit operator bool() const { return ok; }
  static Witnessed pass() { return {}; }
  static Witnessed fail(Violation v) { return {false, std::move(v)}; }
};

/// Value-or-violation result of a validating constructor.
template <typename T>
class Checked {
 public:
  Checked(T value) : data_(std::move(value)) {}
  Checked(Violation v) : data_(std::move(v)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(data_); }
  T& value() & { return std::get<T>(data_); }
  T&& value() && { return std::get<T>(std::move(data_)); }
  const Violation& violation() const { return std::get<Violation>(data_); }

 private:
  std::variant<T, Violation> data_;
};

/// Dynamic bitset with width fixed at construction. Used for order relations
/// and for subset masks wider than one machine word.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const;
  bool any() const;
  bool is_subset_of(const Bitset& other) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  bool operator==(const Bitset&) const = default;

  /// Calls f(i) for every set bit, ascending.
  template <typename F>
  void for_each(F f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int bit = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64) + bit);
        bits &= bits - 1;
      }
    }
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Number of set bits of a 64-bit subset mask.
inline int popcount64(std::uint64_t mask) { return __builtin_popcountll(mask); }

/// Renders "{n0,n1,...}" picking names from the table, ascending index order.
std::string mask_to_string(std::uint64_t mask, const std::vector<std::string>& names);

}  // namespace ehresmann
