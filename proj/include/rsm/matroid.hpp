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

#ifndef RSM_MATROID_HPP
#define RSM_MATROID_HPP

#include <optional>
#include <string>
#include <vector>

#include "rsm/set_family.hpp"
#include "rsm/types.hpp"

namespace rsm {

/// Outcome of one axiom evaluation. A witness (sets, optionally an element
/// and a short note) is attached exactly when the axiom failed.
struct AxiomReport {
  std::string id;
  bool passed = false;
  std::vector<Mask> witness_sets;  // up to two
  std::optional<int> witness_element;
  std::string note;

  /// `AXIOM <id> PASS|FAIL [X=.. Y=.. e=..] [note]`
  std::string to_string(const Universe& u) const;
};

bool all_passed(const std::vector<AxiomReport>& reports);
std::string format_axiom_reports(const std::vector<AxiomReport>& reports,
                                 const Universe& u);

/// Evaluates I1 (empty set present), I2 (hereditary) and I3 (augmentation)
/// by full enumeration over members and member pairs.
std::vector<AxiomReport> check_independence_axioms(const SetFamily& family);

/// Evaluates S1 (nonempty), S2 (upward closed, enumerated within the
/// powerset) and S3 (exchange) by full enumeration.
std::vector<AxiomReport> check_support_axioms(const SetFamily& family,
                                              int cap = kDefaultCap);

/// Evaluates F1 (universe present), F2 (closed under intersection) and F3
/// (differences of minimal proper supersets partition the complement).
std::vector<AxiomReport> check_closedset_axioms(const SetFamily& family,
                                                int cap = kDefaultCap);

/// Rejection carrying the first failing axiom.
class AxiomError : public Error {
 public:
  AxiomError(AxiomReport report, const Universe& u);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

/// Matroid over an explicit independent-set family. Construction validates
/// the independence axioms and rejects invalid input; a constructed matroid
/// is immutable and all queries are pure.
class Matroid {
 public:
  /// Validates I1-I3 and derives the bases. Throws AxiomError on failure.
  static Matroid from_independents(SetFamily independents);

  /// Builds the matroid whose independents are Low(Min(supports)). The
  /// support family must satisfy S1-S3 (throws AxiomError otherwise); the
  /// result is checked to reproduce the input support family exactly.
  static Matroid from_supports(const SetFamily& supports,
                               int cap = kDefaultCap);

  const UniversePtr& universe() const { return independents_.universe(); }
  const SetFamily& independents() const { return independents_; }

  /// Maximal independent sets; all share cardinality rank().
  const SetFamily& bases() const { return bases_; }

  /// Size of a largest independent subset of x.
  int rank(Mask x) const;
  int rank(const Subset& x) const;
  int rank() const { return full_rank_; }

  /// Elements whose addition leaves the rank of x unchanged.
  Mask closure_mask(Mask x) const;
  Subset closure(const Subset& x) const;

  bool is_closed(Mask x) const { return closure_mask(x) == x; }

  /// All fixed points of the closure operator.
  SetFamily closed_sets(int cap = kDefaultCap) const;

  /// All sets containing some base.
  SetFamily support_sets(int cap = kDefaultCap) const;

  /// Closed sets of rank r(U)-1, computed from the definition and
  /// cross-checked against Max(Opp(support sets)); a disagreement between
  /// the two routes raises a theorem-violation error.
  SetFamily hyperplanes(int cap = kDefaultCap) const;

 private:
  Matroid(SetFamily independents, SetFamily bases, int full_rank)
      : independents_(std::move(independents)),
        bases_(std::move(bases)),
        full_rank_(full_rank) {}

  SetFamily independents_;
  SetFamily bases_;
  int full_rank_;
};

namespace internal {

// Accept/reject validators equivalent to the literal axiom checks above:
// single-element removals decide heredity, single-element additions decide
// upward closure, and exchange restricted to adjacent cardinalities decides
// the general exchange once heredity (resp. upward closure) holds. They
// return the first failing axiom.
std::optional<AxiomReport> validate_independents(const SetFamily& family);
std::optional<AxiomReport> validate_supports(const SetFamily& family);

// Min of an upward-closed family / Max of a downward-closed family via
// single-element probes. Callers must have established closure.
SetFamily min_of_upward_closed(const SetFamily& family);
SetFamily max_of_downward_closed(const SetFamily& family);

}  // namespace internal

}  // namespace rsm

#endif  // RSM_MATROID_HPP
