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

#include "rsm/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace rsm {

Universe::Universe(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    fail(errc::bad_argument, "universe must be nonempty");
  }
  if (size() > kMaxUniverse) {
    fail(errc::cap_exceeded,
         "universe has " + std::to_string(size()) + " elements; limit is " +
             std::to_string(kMaxUniverse));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) {
      fail(errc::bad_argument, "universe labels must be nonempty");
    }
    if (!seen.insert(label).second) {
      fail(errc::bad_argument, "duplicate universe label '" + label + "'");
    }
  }
}

UniversePtr Universe::make(std::vector<std::string> labels) {
  return std::make_shared<const Universe>(std::move(labels));
}

UniversePtr Universe::numbered(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) {
    labels.push_back(std::to_string(i));
  }
  return make(std::move(labels));
}

const std::string& Universe::label(int i) const {
  if (i < 0 || i >= size()) {
    fail(errc::bad_argument, "element index out of range");
  }
  return labels_[static_cast<std::size_t>(i)];
}

std::optional<int> Universe::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[static_cast<std::size_t>(i)] == label) {
      return i;
    }
  }
  return std::nullopt;
}

int Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) {
    return *i;
  }
  fail(errc::unknown_element,
       "element '" + std::string(label) + "' is not in the universe");
}

std::string Universe::render(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if ((m & bit(i)) == 0) {
      continue;
    }
    if (!first) {
      out += ',';
    }
    out += labels_[static_cast<std::size_t>(i)];
    first = false;
  }
  out += '}';
  return out;
}

void require_same_universe(const UniversePtr& a, const UniversePtr& b) {
  if (a == b) {
    return;
  }
  if (a == nullptr || b == nullptr || !a->same_as(*b)) {
    fail(errc::universe_mismatch, "operands live over different universes");
  }
}

Subset::Subset(UniversePtr universe, Mask mask)
    : universe_(std::move(universe)), mask_(mask) {
  if (universe_ == nullptr) {
    fail(errc::bad_argument, "subset requires a universe");
  }
  if (!submask(mask_, universe_->full_mask())) {
    fail(errc::bad_argument, "mask has bits outside the universe");
  }
}

Subset Subset::full(UniversePtr universe) {
  Mask m = universe == nullptr ? 0 : universe->full_mask();
  return {std::move(universe), m};
}

Subset Subset::of_labels(UniversePtr universe,
                         const std::vector<std::string>& labels) {
  if (universe == nullptr) {
    fail(errc::bad_argument, "subset requires a universe");
  }
  Mask m = 0;
  for (const auto& label : labels) {
    m |= bit(universe->index_of(label));
  }
  return {std::move(universe), m};
}

bool Subset::contains(std::string_view label) const {
  return contains_index(universe_->index_of(label));
}

Subset Subset::unite(const Subset& other) const {
  require_same_universe(universe_, other.universe_);
  return {universe_, mask_ | other.mask_};
}

Subset Subset::intersect(const Subset& other) const {
  require_same_universe(universe_, other.universe_);
  return {universe_, mask_ & other.mask_};
}

Subset Subset::difference(const Subset& other) const {
  require_same_universe(universe_, other.universe_);
  return {universe_, mask_ & ~other.mask_};
}

Subset Subset::complement() const {
  return {universe_, universe_->full_mask() & ~mask_};
}

bool Subset::subset_of(const Subset& other) const {
  require_same_universe(universe_, other.universe_);
  return submask(mask_, other.mask_);
}

bool Subset::operator==(const Subset& other) const {
  require_same_universe(universe_, other.universe_);
  return mask_ == other.mask_;
}

std::vector<std::string> Subset::labels() const {
  std::vector<std::string> out;
  for (int i = 0; i < universe_->size(); ++i) {
    if (contains_index(i)) {
      out.push_back(universe_->label(i));
    }
  }
  return out;
}

}  // namespace rsm
