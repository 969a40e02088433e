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

#include "rsm/set_family.hpp"

#include <algorithm>
#include <cstdint>

#include "parse_util.hpp"

namespace rsm {

SetFamily::SetFamily(UniversePtr universe, std::vector<Mask> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  if (universe_ == nullptr) {
    fail(errc::bad_argument, "set family requires a universe");
  }
  const Mask full = universe_->full_mask();
  for (Mask m : members_) {
    if (!submask(m, full)) {
      fail(errc::bad_argument, "family member has bits outside the universe");
    }
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Subset SetFamily::member(std::size_t i) const {
  if (i >= members_.size()) {
    fail(errc::bad_argument, "family member index out of range");
  }
  return {universe_, members_[i]};
}

bool SetFamily::operator==(const SetFamily& other) const {
  require_same_universe(universe_, other.universe_);
  return members_ == other.members_;
}

std::string SetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += universe_->render(members_[i]);
  }
  out += '}';
  return out;
}

SetFamily upp(const SetFamily& family, int cap) {
  const Universe& u = *family.universe();
  detail::require_cap(u, cap, "upp");
  const Mask full = u.full_mask();
  std::vector<Mask> out;
  for (std::uint64_t x = 0; x <= full; ++x) {
    // members are sorted, and a submask of x is numerically <= x
    for (Mask m : family.masks()) {
      if (m > static_cast<Mask>(x)) {
        break;
      }
      if (submask(m, static_cast<Mask>(x))) {
        out.push_back(static_cast<Mask>(x));
        break;
      }
    }
  }
  return {family.universe(), std::move(out)};
}

SetFamily low(const SetFamily& family, int cap) {
  const Universe& u = *family.universe();
  detail::require_cap(u, cap, "low");
  const Mask full = u.full_mask();
  std::vector<Mask> out;
  for (std::uint64_t x = 0; x <= full; ++x) {
    for (Mask m : family.masks()) {
      if (submask(static_cast<Mask>(x), m)) {
        out.push_back(static_cast<Mask>(x));
        break;
      }
    }
  }
  return {family.universe(), std::move(out)};
}

SetFamily max_elems(const SetFamily& family) {
  const auto& masks = family.masks();
  std::vector<Mask> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool maximal = true;
    // a strict superset is numerically greater, so only scan upward
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (submask(masks[i], masks[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(masks[i]);
    }
  }
  return {family.universe(), std::move(out)};
}

SetFamily min_elems(const SetFamily& family) {
  const auto& masks = family.masks();
  std::vector<Mask> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (submask(masks[j], masks[i])) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.push_back(masks[i]);
    }
  }
  return {family.universe(), std::move(out)};
}

SetFamily opp(const SetFamily& family, int cap) {
  const Universe& u = *family.universe();
  detail::require_cap(u, cap, "opp");
  const Mask full = u.full_mask();
  const auto& masks = family.masks();
  std::vector<Mask> out;
  std::size_t j = 0;
  for (std::uint64_t x = 0; x <= full; ++x) {
    if (j < masks.size() && masks[j] == static_cast<Mask>(x)) {
      ++j;
    } else {
      out.push_back(static_cast<Mask>(x));
    }
  }
  return {family.universe(), std::move(out)};
}

SetFamily intersect_families(const SetFamily& a, const SetFamily& b) {
  require_same_universe(a.universe(), b.universe());
  std::vector<Mask> out;
  std::set_intersection(a.masks().begin(), a.masks().end(), b.masks().begin(),
                        b.masks().end(), std::back_inserter(out));
  return {a.universe(), std::move(out)};
}

SetFamily family_difference(const SetFamily& a, const SetFamily& b) {
  require_same_universe(a.universe(), b.universe());
  std::vector<Mask> out;
  std::set_difference(a.masks().begin(), a.masks().end(), b.masks().begin(),
                      b.masks().end(), std::back_inserter(out));
  return {a.universe(), std::move(out)};
}

namespace {

// Family lines as index lists; '-' lines become empty sets. When `universe`
// is null, labels are collected in first-appearance order.
struct FamilyScan {
  std::vector<std::string> labels;
  std::vector<Mask> members;
};

FamilyScan scan_family(std::string_view text, const Universe* universe) {
  FamilyScan scan;
  std::vector<std::string> local_labels;
  auto index_of = [&](const std::string& token, int line) -> int {
    if (universe != nullptr) {
      if (auto i = universe->find(token)) {
        return *i;
      }
      fail(errc::unknown_element, "line " + std::to_string(line) +
                                      ": element '" + token +
                                      "' is not in the universe");
    }
    for (std::size_t i = 0; i < local_labels.size(); ++i) {
      if (local_labels[i] == token) {
        return static_cast<int>(i);
      }
    }
    if (static_cast<int>(local_labels.size()) >= kMaxUniverse) {
      fail(errc::cap_exceeded, "line " + std::to_string(line) +
                                   ": family mentions more than " +
                                   std::to_string(kMaxUniverse) + " elements");
    }
    local_labels.push_back(token);
    return static_cast<int>(local_labels.size()) - 1;
  };

  for (const auto& line : detail::tokenize_lines(text)) {
    if (line.tokens.size() == 1 && line.tokens[0] == "-") {
      scan.members.push_back(0);
      continue;
    }
    Mask m = 0;
    for (const auto& token : line.tokens) {
      if (token == "-") {
        detail::parse_fail(line.number,
                           "'-' denotes the empty set and must stand alone");
      }
      m |= bit(index_of(token, line.number));
    }
    scan.members.push_back(m);
  }
  scan.labels = std::move(local_labels);
  return scan;
}

}  // namespace

SetFamily parse_family(std::string_view text) {
  FamilyScan scan = scan_family(text, nullptr);
  if (scan.labels.empty()) {
    fail(errc::parse,
         "family lists no elements, so its universe would be empty");
  }
  return {Universe::make(std::move(scan.labels)), std::move(scan.members)};
}

SetFamily parse_family(std::string_view text, UniversePtr universe) {
  if (universe == nullptr) {
    fail(errc::bad_argument, "parse_family requires a universe");
  }
  FamilyScan scan = scan_family(text, universe.get());
  return {std::move(universe), std::move(scan.members)};
}

std::string format_family(const SetFamily& family) {
  const Universe& u = *family.universe();
  std::string out;
  for (Mask m : family.masks()) {
    if (m == 0) {
      out += "-\n";
      continue;
    }
    bool first = true;
    for (int i = 0; i < u.size(); ++i) {
      if ((m & bit(i)) == 0) {
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

}  // namespace rsm
