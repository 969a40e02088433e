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

#ifndef RSM_PARTITION_HPP
#define RSM_PARTITION_HPP

#include <string>
#include <string_view>
#include <vector>

#include "rsm/types.hpp"

namespace rsm {

/// Equivalence relation on a universe, stored as its disjoint covering
/// blocks. Blocks are kept in canonical order: ascending by smallest member
/// index. Immutable after construction.
class Partition {
 public:
  Partition(UniversePtr universe, std::vector<Mask> blocks);

  static Partition discrete(UniversePtr universe);
  static Partition indiscrete(UniversePtr universe);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Mask>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Block index of element i (0-based universe index).
  int block_index_of(int element) const;
  Mask block_mask_of(int element) const {
    return blocks_[static_cast<std::size_t>(block_index_of(element))];
  }

  /// The equivalence class of a labelled element.
  Subset block_of(std::string_view label) const;

  bool operator==(const Partition& other) const;
  bool operator!=(const Partition& other) const { return !(*this == other); }

 private:
  UniversePtr universe_;
  std::vector<Mask> blocks_;
  std::vector<int> element_block_;
};

/// Union of the blocks entirely contained in x.
Mask lower_mask(const Partition& p, Mask x);

/// Union of the blocks meeting x.
Mask upper_mask(const Partition& p, Mask x);

Subset lower_approx(const Partition& p, const Subset& x);
Subset upper_approx(const Partition& p, const Subset& x);

/// True iff the lower and upper approximations of x coincide.
bool is_precise(const Partition& p, const Subset& x);

/// Common refinement: the partition of the intersection of the two
/// equivalence relations (all nonempty pairwise block intersections).
Partition refine(const Partition& a, const Partition& b);

/// Parses the partition file format: one block per line, elements
/// whitespace separated, `#` lines ignored. The universe is the union of
/// all listed elements in first-appearance order. Repeated elements reject.
Partition parse_partition(std::string_view text);

/// Serializes in canonical block order, one block per line.
std::string format_partition(const Partition& p);

/// Parses a single set (family file format with exactly one set line)
/// against a fixed universe.
Subset parse_subset(std::string_view text, UniversePtr universe);

}  // namespace rsm

#endif  // RSM_PARTITION_HPP
