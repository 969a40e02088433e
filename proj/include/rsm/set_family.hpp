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

#ifndef RSM_SET_FAMILY_HPP
#define RSM_SET_FAMILY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rsm/types.hpp"

namespace rsm {

/// Finite family of subsets of one universe, stored deduplicated in
/// ascending mask order. Immutable after construction.
class SetFamily {
 public:
  SetFamily(UniversePtr universe, std::vector<Mask> members);

  static SetFamily empty(UniversePtr universe) {
    return {std::move(universe), {}};
  }

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Mask>& masks() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_empty() const { return members_.empty(); }
  bool contains(Mask m) const;
  Subset member(std::size_t i) const;

  bool operator==(const SetFamily& other) const;
  bool operator!=(const SetFamily& other) const { return !(*this == other); }

  /// Debug rendering "{{a},{a,b}}".
  std::string to_string() const;

 private:
  UniversePtr universe_;
  std::vector<Mask> members_;
};

/// All X ⊆ U that contain some member (upward closure within the powerset).
SetFamily upp(const SetFamily& family, int cap = kDefaultCap);

/// All X ⊆ U contained in some member (downward closure within the powerset).
SetFamily low(const SetFamily& family, int cap = kDefaultCap);

/// Members not strictly contained in another member.
SetFamily max_elems(const SetFamily& family);

/// Members not strictly containing another member.
SetFamily min_elems(const SetFamily& family);

/// Complement of the family within the powerset of its universe.
SetFamily opp(const SetFamily& family, int cap = kDefaultCap);

SetFamily intersect_families(const SetFamily& a, const SetFamily& b);
SetFamily family_difference(const SetFamily& a, const SetFamily& b);

/// Parses the family file format: one set per line, elements whitespace
/// separated, a sole `-` token for the empty set, `#` lines ignored. The
/// universe is the union of listed elements in first-appearance order.
SetFamily parse_family(std::string_view text);

/// Same format, resolved against a fixed universe; unknown labels reject.
SetFamily parse_family(std::string_view text, UniversePtr universe);

/// Serializes a family back to the file format (one set per line, `-` for
/// the empty set), members in ascending mask order.
std::string format_family(const SetFamily& family);

}  // namespace rsm

#endif  // RSM_SET_FAMILY_HPP
