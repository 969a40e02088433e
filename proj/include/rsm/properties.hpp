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

#ifndef RSM_PROPERTIES_HPP
#define RSM_PROPERTIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsm/partition.hpp"
#include "rsm/types.hpp"

namespace rsm {

struct PropertyCheck {
  std::string name;
  bool passed = false;
  // first counterexample, when failed
  std::optional<Mask> x;
  std::optional<Mask> y;
};

/// Result of sweeping the approximation-operator laws over subsets of U.
struct PropertyReport {
  bool exhaustive = true;
  int sample_count = 0;
  std::uint64_t seed = 0;
  std::vector<PropertyCheck> checks;

  bool all_passed() const;
  /// Line-oriented rendering: `PROPERTY <name> PASS|FAIL [X=.. Y=..]`,
  /// preceded by a `SAMPLING count=.. seed=..` line in sampled mode.
  std::string to_string(const Universe& u) const;
};

struct PropertyOptions {
  bool exhaustive = true;
  int sample_count = 256;   // used when exhaustive is false
  std::uint64_t seed = 0;   // recorded in the report in sampled mode
  int cap = kDefaultCap;    // bound for the exhaustive sweep
};

/// Checks the operator laws 1H, 1L, 2L, 2H, 3L, 3H, 4L, 4H, 5L, 5H, 6H
/// over all subset pairs (exhaustive) or a seeded uniform sample.
PropertyReport check_approx_properties(const Partition& p,
                                       const PropertyOptions& options = {});

}  // namespace rsm

#endif  // RSM_PROPERTIES_HPP
