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

#include "rsm/matroid.hpp"

#include <algorithm>

#include "parse_util.hpp"

namespace rsm {

namespace {

AxiomReport pass(const char* id) {
  AxiomReport report;
  report.id = id;
  report.passed = true;
  return report;
}

AxiomReport failed(const char* id, std::vector<Mask> sets,
                   const std::string& note) {
  AxiomReport report;
  report.id = id;
  report.passed = false;
  report.witness_sets = std::move(sets);
  report.note = note;
  return report;
}

std::vector<std::vector<Mask>> group_by_size(const SetFamily& family) {
  std::vector<std::vector<Mask>> by_size(
      static_cast<std::size_t>(family.universe()->size()) + 1);
  for (Mask m : family.masks()) {
    by_size[static_cast<std::size_t>(popcount(m))].push_back(m);
  }
  return by_size;
}

}  // namespace

std::string AxiomReport::to_string(const Universe& u) const {
  std::string out = "AXIOM " + id + (passed ? " PASS" : " FAIL");
  if (!witness_sets.empty()) {
    out += " X=" + u.render(witness_sets[0]);
  }
  if (witness_sets.size() > 1) {
    out += " Y=" + u.render(witness_sets[1]);
  }
  if (witness_element) {
    out += " e=" + u.label(*witness_element);
  }
  if (!passed && !note.empty()) {
    out += " " + note;
  }
  return out;
}

bool all_passed(const std::vector<AxiomReport>& reports) {
  for (const auto& report : reports) {
    if (!report.passed) {
      return false;
    }
  }
  return true;
}

std::string format_axiom_reports(const std::vector<AxiomReport>& reports,
                                 const Universe& u) {
  std::string out;
  for (const auto& report : reports) {
    out += report.to_string(u);
    out += '\n';
  }
  return out;
}

std::vector<AxiomReport> check_independence_axioms(const SetFamily& family) {
  std::vector<AxiomReport> reports;

  if (family.contains(0)) {
    reports.push_back(pass("I1"));
  } else {
    reports.push_back(failed("I1", {0}, "empty set is not a member"));
  }

  AxiomReport i2 = pass("I2");
  for (Mask m : family.masks()) {
    for (Mask s = (m - 1) & m; s != m; s = (s - 1) & m) {
      if (!family.contains(s)) {
        i2 = failed("I2", {m, s}, "subset missing from family");
        break;
      }
      if (s == 0) {
        break;
      }
    }
    if (!i2.passed) {
      break;
    }
  }
  reports.push_back(std::move(i2));

  AxiomReport i3 = pass("I3");
  const auto& masks = family.masks();
  for (std::size_t i = 0; i < masks.size() && i3.passed; ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (popcount(masks[i]) >= popcount(masks[j])) {
        continue;
      }
      bool augmented = false;
      Mask candidates = masks[j] & ~masks[i];
      while (candidates != 0) {
        int e = lowest_bit(candidates);
        candidates &= candidates - 1;
        if (family.contains(masks[i] | bit(e))) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        i3 = failed("I3", {masks[i], masks[j]}, "no augmenting element");
        break;
      }
    }
  }
  reports.push_back(std::move(i3));
  return reports;
}

std::vector<AxiomReport> check_support_axioms(const SetFamily& family,
                                              int cap) {
  detail::require_cap(*family.universe(), cap, "support axiom check");
  const Mask full = family.universe()->full_mask();
  std::vector<AxiomReport> reports;

  if (family.is_empty()) {
    reports.push_back(failed("S1", {}, "family is empty"));
  } else {
    reports.push_back(pass("S1"));
  }

  AxiomReport s2 = pass("S2");
  for (Mask m : family.masks()) {
    const Mask room = full & ~m;
    // supersets of m are m|t for submasks t of the complement
    for (Mask t = room; t != 0; t = (t - 1) & room) {
      if (!family.contains(m | t)) {
        s2 = failed("S2", {m, m | t}, "superset missing from family");
        break;
      }
    }
    if (!s2.passed) {
      break;
    }
  }
  reports.push_back(std::move(s2));

  AxiomReport s3 = pass("S3");
  const auto& masks = family.masks();
  for (std::size_t i = 0; i < masks.size() && s3.passed; ++i) {
    for (std::size_t j = 0; j < masks.size(); ++j) {
      if (popcount(masks[i]) <= popcount(masks[j])) {
        continue;
      }
      bool shrunk = false;
      Mask candidates = masks[i] & ~masks[j];
      while (candidates != 0) {
        int e = lowest_bit(candidates);
        candidates &= candidates - 1;
        if (family.contains(masks[i] & ~bit(e))) {
          shrunk = true;
          break;
        }
      }
      if (!shrunk) {
        s3 = failed("S3", {masks[i], masks[j]}, "no removable element");
        break;
      }
    }
  }
  reports.push_back(std::move(s3));
  return reports;
}

std::vector<AxiomReport> check_closedset_axioms(const SetFamily& family,
                                                int cap) {
  const Universe& u = *family.universe();
  detail::require_cap(u, cap, "closed-set axiom check");
  const Mask full = u.full_mask();
  std::vector<AxiomReport> reports;

  if (family.contains(full)) {
    reports.push_back(pass("F1"));
  } else {
    reports.push_back(failed("F1", {full}, "universe is not a member"));
  }

  AxiomReport f2 = pass("F2");
  const auto& masks = family.masks();
  for (std::size_t i = 0; i < masks.size() && f2.passed; ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (!family.contains(masks[i] & masks[j])) {
        f2 = failed("F2", {masks[i], masks[j]},
                    "intersection missing from family");
        break;
      }
    }
  }
  reports.push_back(std::move(f2));

  AxiomReport f3 = pass("F3");
  for (Mask f : masks) {
    std::vector<Mask> proper_supersets;
    for (Mask m : masks) {
      if (m != f && submask(f, m)) {
        proper_supersets.push_back(m);
      }
    }
    std::vector<Mask> minimal;
    for (Mask m : proper_supersets) {
      bool is_minimal = true;
      for (Mask other : proper_supersets) {
        if (other != m && submask(other, m)) {
          is_minimal = false;
          break;
        }
      }
      if (is_minimal) {
        minimal.push_back(m);
      }
    }
    Mask covered = 0;
    Mask overlap = 0;
    for (Mask m : minimal) {
      Mask diff = m & ~f;
      overlap |= covered & diff;
      covered |= diff;
    }
    const Mask complement = full & ~f;
    if (overlap != 0) {
      f3 = failed("F3", {f, overlap},
                  "differences of minimal proper supersets overlap");
      break;
    }
    if (covered != complement) {
      f3 = failed("F3", {f, complement & ~covered},
                  "differences of minimal proper supersets do not cover the "
                  "complement");
      break;
    }
  }
  reports.push_back(std::move(f3));
  return reports;
}

AxiomError::AxiomError(AxiomReport report, const Universe& u)
    : Error(errc::axiom_failure, report.to_string(u)),
      report_(std::move(report)) {}

namespace internal {

std::optional<AxiomReport> validate_independents(const SetFamily& family) {
  if (!family.contains(0)) {
    return failed("I1", {0}, "empty set is not a member");
  }
  for (Mask m : family.masks()) {
    Mask rest = m;
    while (rest != 0) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      if (!family.contains(m & ~bit(e))) {
        return failed("I2", {m, m & ~bit(e)}, "subset missing from family");
      }
    }
  }
  const Mask full = family.universe()->full_mask();
  auto by_size = group_by_size(family);
  for (std::size_t k = 0; k + 1 < by_size.size(); ++k) {
    if (by_size[k].empty() || by_size[k + 1].empty()) {
      continue;
    }
    for (Mask small : by_size[k]) {
      Mask extensions = 0;
      Mask blocked = 0;
      Mask rest = full & ~small;
      while (rest != 0) {
        int e = lowest_bit(rest);
        rest &= rest - 1;
        if (family.contains(small | bit(e))) {
          extensions |= bit(e);
        } else {
          blocked |= bit(e);
        }
      }
      if (blocked == 0) {
        continue;  // any element of a larger member augments
      }
      for (Mask big : by_size[k + 1]) {
        if ((big & ~small & extensions) == 0) {
          return failed("I3", {small, big}, "no augmenting element");
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<AxiomReport> validate_supports(const SetFamily& family) {
  if (family.is_empty()) {
    return failed("S1", {}, "family is empty");
  }
  const Mask full = family.universe()->full_mask();
  for (Mask m : family.masks()) {
    Mask rest = full & ~m;
    while (rest != 0) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      if (!family.contains(m | bit(e))) {
        return failed("S2", {m, m | bit(e)}, "superset missing from family");
      }
    }
  }
  auto by_size = group_by_size(family);
  for (std::size_t k = 1; k < by_size.size(); ++k) {
    if (by_size[k].empty() || by_size[k - 1].empty()) {
      continue;
    }
    for (Mask big : by_size[k]) {
      Mask removable = 0;
      Mask stuck = 0;
      Mask rest = big;
      while (rest != 0) {
        int e = lowest_bit(rest);
        rest &= rest - 1;
        if (family.contains(big & ~bit(e))) {
          removable |= bit(e);
        } else {
          stuck |= bit(e);
        }
      }
      if (stuck == 0) {
        continue;  // any element outside the smaller member works
      }
      for (Mask small : by_size[k - 1]) {
        if ((big & ~small & removable) == 0) {
          return failed("S3", {big, small}, "no removable element");
        }
      }
    }
  }
  return std::nullopt;
}

SetFamily min_of_upward_closed(const SetFamily& family) {
  std::vector<Mask> out;
  for (Mask m : family.masks()) {
    bool minimal = true;
    Mask rest = m;
    while (rest != 0) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      if (family.contains(m & ~bit(e))) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.push_back(m);
    }
  }
  return {family.universe(), std::move(out)};
}

SetFamily max_of_downward_closed(const SetFamily& family) {
  const Mask full = family.universe()->full_mask();
  std::vector<Mask> out;
  for (Mask m : family.masks()) {
    bool maximal = true;
    Mask rest = full & ~m;
    while (rest != 0) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      if (family.contains(m | bit(e))) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(m);
    }
  }
  return {family.universe(), std::move(out)};
}

}  // namespace internal

Matroid Matroid::from_independents(SetFamily independents) {
  if (auto bad = internal::validate_independents(independents)) {
    throw AxiomError(std::move(*bad), *independents.universe());
  }
  SetFamily bases = internal::max_of_downward_closed(independents);
  int full_rank = bases.size() == 0 ? 0 : popcount(bases.masks().front());
  for (Mask b : bases.masks()) {
    if (popcount(b) != full_rank) {
      fail(errc::theorem_violation,
           "bases of a valid matroid must share one cardinality; got " +
               independents.universe()->render(bases.masks().front()) +
               " and " + independents.universe()->render(b));
    }
  }
  return {std::move(independents), std::move(bases), full_rank};
}

Matroid Matroid::from_supports(const SetFamily& supports, int cap) {
  if (auto bad = internal::validate_supports(supports)) {
    throw AxiomError(std::move(*bad), *supports.universe());
  }
  SetFamily minimal = internal::min_of_upward_closed(supports);
  Matroid matroid = from_independents(low(minimal, cap));
  SetFamily round_trip = matroid.support_sets(cap);
  if (round_trip != supports) {
    SetFamily extra = family_difference(round_trip, supports);
    SetFamily missing = family_difference(supports, round_trip);
    const SetFamily& delta = extra.is_empty() ? missing : extra;
    fail(errc::theorem_violation,
         "support sets of the reconstructed matroid do not reproduce the "
         "input family; first difference " +
             supports.universe()->render(delta.masks().front()));
  }
  return matroid;
}

int Matroid::rank(Mask x) const {
  if (!submask(x, universe()->full_mask())) {
    fail(errc::bad_argument, "mask has bits outside the universe");
  }
  // greedy extension is exact on a validated matroid
  Mask current = 0;
  int r = 0;
  Mask rest = x;
  while (rest != 0) {
    int e = lowest_bit(rest);
    rest &= rest - 1;
    if (independents_.contains(current | bit(e))) {
      current |= bit(e);
      ++r;
    }
  }
  return r;
}

int Matroid::rank(const Subset& x) const {
  require_same_universe(universe(), x.universe());
  return rank(x.mask());
}

Mask Matroid::closure_mask(Mask x) const {
  const int base_rank = rank(x);
  Mask out = x;
  Mask rest = universe()->full_mask() & ~x;
  while (rest != 0) {
    int e = lowest_bit(rest);
    rest &= rest - 1;
    if (rank(x | bit(e)) == base_rank) {
      out |= bit(e);
    }
  }
  return out;
}

Subset Matroid::closure(const Subset& x) const {
  require_same_universe(universe(), x.universe());
  return {universe(), closure_mask(x.mask())};
}

SetFamily Matroid::closed_sets(int cap) const {
  detail::require_cap(*universe(), cap, "closed-set enumeration");
  const Mask full = universe()->full_mask();
  std::vector<Mask> out;
  for (std::uint64_t x = 0; x <= full; ++x) {
    if (closure_mask(static_cast<Mask>(x)) == static_cast<Mask>(x)) {
      out.push_back(static_cast<Mask>(x));
    }
  }
  return {universe(), std::move(out)};
}

SetFamily Matroid::support_sets(int cap) const {
  return upp(bases_, cap);
}

SetFamily Matroid::hyperplanes(int cap) const {
  detail::require_cap(*universe(), cap, "hyperplane enumeration");
  const Mask full = universe()->full_mask();
  std::vector<Mask> direct;
  if (full_rank_ > 0) {
    for (std::uint64_t x = 0; x <= full; ++x) {
      Mask m = static_cast<Mask>(x);
      if (rank(m) == full_rank_ - 1 && is_closed(m)) {
        direct.push_back(m);
      }
    }
  }
  SetFamily from_definition(universe(), std::move(direct));
  // support sets are upward closed, so their complement is downward closed
  SetFamily via_supports =
      internal::max_of_downward_closed(opp(support_sets(cap), cap));
  if (from_definition != via_supports) {
    SetFamily extra = family_difference(from_definition, via_supports);
    SetFamily missing = family_difference(via_supports, from_definition);
    const SetFamily& delta = extra.is_empty() ? missing : extra;
    fail(errc::theorem_violation,
         "hyperplane computations disagree; first difference " +
             universe()->render(delta.masks().front()));
  }
  return from_definition;
}

}  // namespace rsm
