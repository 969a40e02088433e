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

#ifndef RSM_ORACLE_HPP
#define RSM_ORACLE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rsm/partition.hpp"
#include "rsm/set_family.hpp"
#include "rsm/types.hpp"

// Brute-force recomputation of every induced structure from first
// definitions, sharing only the universe/mask primitives with the fast
// paths, plus the differential harness comparing the two.

namespace rsm::oracle {

/// All 2^|U| subsets, exactly once, in ascending mask order.
std::vector<Mask> enumerate_subsets(const Universe& u, int cap = kDefaultCap);

/// Upper approximation evaluated element by element: x belongs iff its
/// class (found by scanning blocks) meets the argument.
Mask literal_upper(const Partition& p, Mask x);

/// Lower approximation evaluated element by element.
Mask literal_lower(const Partition& p, Mask x);

/// Sets whose literal upper approximation is the whole universe.
SetFamily brute_force_supports(const Partition& p, int cap = kDefaultCap);

/// One structure's discrepancy between the fast paths and the oracle; both
/// families are empty exactly when the check passed. For per-subset checks
/// (rank, the closed-set equivalences) the disagreeing subsets are listed
/// in only_in_fast.
struct Diff {
  std::string structure;
  SetFamily only_in_fast;
  SetFamily only_in_oracle;

  bool passed() const {
    return only_in_fast.is_empty() && only_in_oracle.is_empty();
  }
};

/// Recomputes S, B, I, rank, H, L and the closed-set equivalences for one
/// partition and diffs every fast path and closed-form formula against the
/// oracle. Returns seven diffs; failures are reported, never thrown.
std::vector<Diff> cross_validate(const Partition& p, int cap = kDefaultCap);

std::string format_diffs(const std::vector<Diff>& diffs, const Universe& u);

/// All partitions of the universe {"1",..,"n"}, generated canonically from
/// restricted growth strings, Bell(n) of them.
std::vector<Partition> all_partitions(int n);

struct SweepSummary {
  int n = 0;
  std::size_t partitions = 0;
  std::size_t failures = 0;

  std::string to_string() const;
};

/// Runs cross_validate over every partition of an n-element universe.
/// Accepts 1 <= n <= 7.
SweepSummary sweep_all_partitions(int n);

}  // namespace rsm::oracle

#endif  // RSM_ORACLE_HPP
