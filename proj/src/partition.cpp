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

#include "rsm/partition.hpp"

#include <algorithm>

#include "parse_util.hpp"
#include "rsm/set_family.hpp"

namespace rsm {

Partition::Partition(UniversePtr universe, std::vector<Mask> blocks)
    : universe_(std::move(universe)), blocks_(std::move(blocks)) {
  if (universe_ == nullptr) {
    fail(errc::bad_argument, "partition requires a universe");
  }
  const Mask full = universe_->full_mask();
  Mask covered = 0;
  for (Mask b : blocks_) {
    if (b == 0) {
      fail(errc::bad_argument, "partition blocks must be nonempty");
    }
    if (!submask(b, full)) {
      fail(errc::bad_argument, "block has bits outside the universe");
    }
    if ((covered & b) != 0) {
      fail(errc::bad_argument, "partition blocks must be pairwise disjoint");
    }
    covered |= b;
  }
  if (covered != full) {
    fail(errc::bad_argument, "partition blocks must cover the universe");
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });
  element_block_.assign(static_cast<std::size_t>(universe_->size()), -1);
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    for (int i = 0; i < universe_->size(); ++i) {
      if ((blocks_[j] & bit(i)) != 0) {
        element_block_[static_cast<std::size_t>(i)] = static_cast<int>(j);
      }
    }
  }
}

Partition Partition::discrete(UniversePtr universe) {
  if (universe == nullptr) {
    fail(errc::bad_argument, "partition requires a universe");
  }
  std::vector<Mask> blocks;
  for (int i = 0; i < universe->size(); ++i) {
    blocks.push_back(bit(i));
  }
  return {std::move(universe), std::move(blocks)};
}

Partition Partition::indiscrete(UniversePtr universe) {
  if (universe == nullptr) {
    fail(errc::bad_argument, "partition requires a universe");
  }
  Mask full = universe->full_mask();
  return {std::move(universe), {full}};
}

int Partition::block_index_of(int element) const {
  if (element < 0 || element >= universe_->size()) {
    fail(errc::bad_argument, "element index out of range");
  }
  return element_block_[static_cast<std::size_t>(element)];
}

Subset Partition::block_of(std::string_view label) const {
  return {universe_, block_mask_of(universe_->index_of(label))};
}

bool Partition::operator==(const Partition& other) const {
  require_same_universe(universe_, other.universe_);
  return blocks_ == other.blocks_;
}

Mask lower_mask(const Partition& p, Mask x) {
  Mask out = 0;
  for (Mask b : p.blocks()) {
    if (submask(b, x)) {
      out |= b;
    }
  }
  return out;
}

Mask upper_mask(const Partition& p, Mask x) {
  Mask out = 0;
  for (Mask b : p.blocks()) {
    if ((b & x) != 0) {
      out |= b;
    }
  }
  return out;
}

Subset lower_approx(const Partition& p, const Subset& x) {
  require_same_universe(p.universe(), x.universe());
  return {p.universe(), lower_mask(p, x.mask())};
}

Subset upper_approx(const Partition& p, const Subset& x) {
  require_same_universe(p.universe(), x.universe());
  return {p.universe(), upper_mask(p, x.mask())};
}

bool is_precise(const Partition& p, const Subset& x) {
  require_same_universe(p.universe(), x.universe());
  return lower_mask(p, x.mask()) == upper_mask(p, x.mask());
}

Partition refine(const Partition& a, const Partition& b) {
  require_same_universe(a.universe(), b.universe());
  std::vector<Mask> blocks;
  for (Mask ba : a.blocks()) {
    for (Mask bb : b.blocks()) {
      Mask both = ba & bb;
      if (both != 0) {
        blocks.push_back(both);
      }
    }
  }
  return {a.universe(), std::move(blocks)};
}

Partition parse_partition(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> blocks;
  auto index_of = [&](const std::string& token, int line) -> int {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == token) {
        detail::parse_fail(line, "element '" + token +
                                     "' appears more than once; blocks must "
                                     "be disjoint");
      }
    }
    if (static_cast<int>(labels.size()) >= kMaxUniverse) {
      fail(errc::cap_exceeded, "line " + std::to_string(line) +
                                   ": partition mentions more than " +
                                   std::to_string(kMaxUniverse) +
                                   " elements");
    }
    labels.push_back(token);
    return static_cast<int>(labels.size()) - 1;
  };

  for (const auto& line : detail::tokenize_lines(text)) {
    std::vector<int> block;
    for (const auto& token : line.tokens) {
      if (token == "-") {
        detail::parse_fail(line.number,
                           "partition blocks must be nonempty; '-' is not "
                           "allowed");
      }
      block.push_back(index_of(token, line.number));
    }
    blocks.push_back(std::move(block));
  }
  if (blocks.empty()) {
    fail(errc::parse, "partition lists no blocks");
  }

  UniversePtr universe = Universe::make(std::move(labels));
  std::vector<Mask> masks;
  for (const auto& block : blocks) {
    Mask m = 0;
    for (int i : block) {
      m |= bit(i);
    }
    masks.push_back(m);
  }
  return {std::move(universe), std::move(masks)};
}

std::string format_partition(const Partition& p) {
  const Universe& u = *p.universe();
  std::string out;
  for (Mask block : p.blocks()) {
    bool first = true;
    for (int i = 0; i < u.size(); ++i) {
      if ((block & bit(i)) == 0) {
        continue;
      }
      if (!first) {
        out += ' ';
      }
      out += u.label(i);
      first = false;
    }
    out += '\n';
  }
  return out;
}

Subset parse_subset(std::string_view text, UniversePtr universe) {
  SetFamily family = parse_family(text, universe);
  if (family.size() != 1) {
    fail(errc::parse, "expected exactly one set, found " +
                          std::to_string(family.size()));
  }
  return family.member(0);
}

}  // namespace rsm
