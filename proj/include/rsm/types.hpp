// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSM_TYPES_HPP
#define RSM_TYPES_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rsm {

/// Membership bitmask over a universe; bit i is element i in universe order.
using Mask = std::uint32_t;

/// Default bound on |U| for operations that enumerate all 2^|U| subsets.
inline constexpr int kDefaultCap = 20;

/// Hard structural limit on universe size (bounds mask width and memory).
inline constexpr int kMaxUniverse = 24;

enum class errc {
  bad_argument,
  parse,
  unknown_element,
  universe_mismatch,
  cap_exceeded,
  io,
  axiom_failure,
  theorem_violation,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline bool submask(Mask a, Mask b) { return (a & ~b) == 0; }

class Universe;
using UniversePtr = std::shared_ptr<const Universe>;

/// Ordered finite ground set. Labels are nonempty, pairwise distinct and
/// keep their first-appearance order; element i owns mask bit i.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  static UniversePtr make(std::vector<std::string> labels);
  /// Universe with labels "1".."n".
  static UniversePtr numbered(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  Mask full_mask() const {
    return size() == 32 ? ~Mask{0} : bit(size()) - 1;
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const;
  std::optional<int> find(std::string_view label) const;
  /// Index of a label; rejects unknown labels.
  int index_of(std::string_view label) const;
  bool same_as(const Universe& other) const {
    return labels_ == other.labels_;
  }

  /// Renders a mask as "{a,b}" in universe order; the empty set is "{}".
  std::string render(Mask m) const;

 private:
  std::vector<std::string> labels_;
};

void require_same_universe(const UniversePtr& a, const UniversePtr& b);

/// Immutable subset of a universe, represented as a bitmask.
class Subset {
 public:
  Subset(UniversePtr universe, Mask mask);

  static Subset empty(UniversePtr universe) { return {std::move(universe), 0}; }
  static Subset full(UniversePtr universe);
  static Subset of_labels(UniversePtr universe,
                          const std::vector<std::string>& labels);

  const UniversePtr& universe() const { return universe_; }
  Mask mask() const { return mask_; }
  int size() const { return popcount(mask_); }
  bool is_empty() const { return mask_ == 0; }
  bool contains_index(int i) const { return (mask_ & bit(i)) != 0; }
  bool contains(std::string_view label) const;

  Subset unite(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset difference(const Subset& other) const;
  Subset complement() const;
  bool subset_of(const Subset& other) const;

  bool operator==(const Subset& other) const;
  bool operator!=(const Subset& other) const { return !(*this == other); }

  std::vector<std::string> labels() const;
  std::string to_string() const { return universe_->render(mask_); }

 private:
  UniversePtr universe_;
  Mask mask_;
};

}  // namespace rsm

#endif  // RSM_TYPES_HPP
