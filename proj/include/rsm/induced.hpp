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

#ifndef RSM_INDUCED_HPP
#define RSM_INDUCED_HPP

#include <cstddef>
#include <optional>
#include <string>

#include "rsm/matroid.hpp"
#include "rsm/partition.hpp"
#include "rsm/set_family.hpp"
#include "rsm/types.hpp"

namespace rsm {

/// All sets meeting every block of the partition; equivalently, the sets
/// whose upper approximation is the whole universe.
SetFamily support_family(const Partition& p, int cap = kDefaultCap);

/// Exact transversals: sets meeting every block in exactly one element.
SetFamily induced_bases(const Partition& p, int cap = kDefaultCap);

/// Partial transversals: sets meeting every block in at most one element.
SetFamily induced_independents(const Partition& p, int cap = kDefaultCap);

/// Number of blocks meeting x.
int induced_rank(const Partition& p, Mask x);
int induced_rank(const Partition& p, const Subset& x);

/// Sets X (proper subsets of U) with R*(X) = U - RN(x) for every x outside
/// X; equals the family of block complements.
SetFamily induced_hyperplanes(const Partition& p, int cap = kDefaultCap);

/// All unions of blocks, including the empty union and the universe.
SetFamily induced_closed_family(const Partition& p, int cap = kDefaultCap);

/// The matroid induced by a partition, built through its support family,
/// with every derived family cached eagerly. Construction cross-checks each
/// cached family against its generic recomputation from the matroid and
/// raises a theorem-violation error on any disagreement.
class InducedMatroid {
 public:
  explicit InducedMatroid(Partition partition, int cap = kDefaultCap);

  const Partition& partition() const { return partition_; }
  const Matroid& matroid() const { return matroid_; }
  const SetFamily& supports() const { return supports_; }
  const SetFamily& bases() const { return bases_; }
  const SetFamily& independents() const { return matroid_.independents(); }
  const SetFamily& hyperplanes() const { return hyperplanes_; }
  const SetFamily& closed_family() const { return closed_family_; }
  int rank() const { return matroid_.rank(); }

 private:
  Partition partition_;
  SetFamily supports_;
  Matroid matroid_;
  SetFamily bases_;
  SetFamily hyperplanes_;
  SetFamily closed_family_;
};

InducedMatroid induced_matroid(const Partition& p, int cap = kDefaultCap);

/// The six equivalent descriptions of a closed set of the induced matroid,
/// evaluated independently.
struct EquivalenceReport {
  Mask subject = 0;
  bool in_closed_family = false;   // member of the matroid's closed sets
  bool union_of_blocks = false;    // every block inside or disjoint
  bool upper_fixpoint = false;     // R*(X) = X
  bool lower_fixpoint = false;     // R_*(X) = X
  bool equal_approximations = false;
  bool precise = false;
  bool agreed = false;
};

/// Non-faulting evaluation against a prebuilt induced matroid.
EquivalenceReport evaluate_closed_predicates(const InducedMatroid& induced,
                                             Mask x);

/// Evaluates the six predicates and raises a theorem-violation error if
/// they do not agree.
EquivalenceReport closed_iff_checks(const InducedMatroid& induced,
                                    const Subset& x);
EquivalenceReport closed_iff_checks(const Partition& p, const Subset& x,
                                    int cap = kDefaultCap);

/// Support-family inclusion under relation intersection.
struct InclusionReport {
  bool holds = false;   // S(refine(P1,P2)) within S(P1) n S(P2)
  bool strict = false;
  std::optional<Mask> witness;  // member of the intersection outside the
                                // refined support family, when strict
  std::size_t refined_size = 0;
  std::size_t intersection_size = 0;

  std::string to_string(const Universe& u) const;
};

/// Checks S(refine(P1,P2)) against S(P1) n S(P2); an inclusion failure
/// raises a theorem-violation error with a witness.
InclusionReport intersection_inclusion_check(const Partition& p1,
                                             const Partition& p2,
                                             int cap = kDefaultCap);

}  // namespace rsm

#endif  // RSM_INDUCED_HPP
