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

#include "rsm/oracle.hpp"

#include <algorithm>

#include "parse_util.hpp"
#include "rsm/induced.hpp"
#include "rsm/matroid.hpp"

namespace rsm::oracle {

namespace {

// Class of one element, found by scanning the block list.
Mask class_of(const Partition& p, int element) {
  for (Mask b : p.blocks()) {
    if ((b & bit(element)) != 0) {
      return b;
    }
  }
  return 0;  // unreachable: blocks cover the universe
}

// Literal Max/Min/Low over explicit member lists, by pairwise scans only.
std::vector<Mask> literal_max(const std::vector<Mask>& members) {
  std::vector<Mask> out;
  for (Mask m : members) {
    bool maximal = true;
    for (Mask other : members) {
      if (other != m && submask(m, other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      out.push_back(m);
    }
  }
  return out;
}

std::vector<Mask> literal_min(const std::vector<Mask>& members) {
  std::vector<Mask> out;
  for (Mask m : members) {
    bool minimal = true;
    for (Mask other : members) {
      if (other != m && submask(other, m)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      out.push_back(m);
    }
  }
  return out;
}

std::vector<Mask> literal_low(const std::vector<Mask>& members,
                              const std::vector<Mask>& all) {
  std::vector<Mask> out;
  for (Mask x : all) {
    for (Mask m : members) {
      if (submask(x, m)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

int literal_rank(const std::vector<Mask>& independents, Mask x) {
  int best = 0;
  for (Mask m : independents) {
    if (submask(m, x)) {
      best = std::max(best, popcount(m));
    }
  }
  return best;
}

Diff make_diff(std::string structure, const SetFamily& reference,
               std::initializer_list<const SetFamily*> variants) {
  std::vector<Mask> extra;
  std::vector<Mask> missing;
  for (const SetFamily* variant : variants) {
    for (Mask m : family_difference(*variant, reference).masks()) {
      extra.push_back(m);
    }
    for (Mask m : family_difference(reference, *variant).masks()) {
      missing.push_back(m);
    }
  }
  return {std::move(structure),
          SetFamily(reference.universe(), std::move(extra)),
          SetFamily(reference.universe(), std::move(missing))};
}

Diff subject_diff(std::string structure, const UniversePtr& u,
                  std::vector<Mask> disagreements) {
  return {std::move(structure), SetFamily(u, std::move(disagreements)),
          SetFamily::empty(u)};
}

}  // namespace

std::vector<Mask> enumerate_subsets(const Universe& u, int cap) {
  detail::require_cap(u, cap, "subset enumeration");
  const Mask full = u.full_mask();
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(full) + 1);
  for (std::uint64_t x = 0; x <= full; ++x) {
    out.push_back(static_cast<Mask>(x));
  }
  return out;
}

Mask literal_upper(const Partition& p, Mask x) {
  const int n = p.universe()->size();
  Mask out = 0;
  for (int e = 0; e < n; ++e) {
    if ((class_of(p, e) & x) != 0) {
      out |= bit(e);
    }
  }
  return out;
}

Mask literal_lower(const Partition& p, Mask x) {
  const int n = p.universe()->size();
  Mask out = 0;
  for (int e = 0; e < n; ++e) {
    if (submask(class_of(p, e), x)) {
      out |= bit(e);
    }
  }
  return out;
}

SetFamily brute_force_supports(const Partition& p, int cap) {
  const Universe& u = *p.universe();
  const Mask full = u.full_mask();
  std::vector<Mask> out;
  for (Mask x : enumerate_subsets(u, cap)) {
    if (literal_upper(p, x) == full) {
      out.push_back(x);
    }
  }
  return {p.universe(), std::move(out)};
}

std::vector<Diff> cross_validate(const Partition& p, int cap) {
  const UniversePtr& u = p.universe();
  const Mask full = u->full_mask();
  const std::vector<Mask> all = enumerate_subsets(*u, cap);
  std::vector<Diff> diffs;

  // ---- oracle recomputation from the definitions ----
  const SetFamily s_oracle = brute_force_supports(p, cap);
  const std::vector<Mask> min_supports = literal_min(s_oracle.masks());
  const std::vector<Mask> i_oracle = literal_low(min_supports, all);
  const SetFamily i_oracle_family(u, i_oracle);
  const SetFamily b_oracle(u, literal_max(i_oracle));

  std::vector<int> rank_oracle(all.size(), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    rank_oracle[i] = literal_rank(i_oracle, all[i]);
  }
  const int full_rank = rank_oracle[all.size() - 1];

  std::vector<Mask> l_masks;
  for (Mask x : all) {
    // all[i] is the mask i, so rank_oracle is indexable by mask
    Mask cl = 0;
    const int r = rank_oracle[x];
    for (int e = 0; e < u->size(); ++e) {
      if (rank_oracle[x | bit(e)] == r) {
        cl |= bit(e);
      }
    }
    if (cl == x) {
      l_masks.push_back(x);
    }
  }
  const SetFamily l_oracle(u, std::move(l_masks));

  std::vector<Mask> h_masks;
  for (Mask x : l_oracle.masks()) {
    if (full_rank > 0 && literal_rank(i_oracle, x) == full_rank - 1) {
      h_masks.push_back(x);
    }
  }
  const SetFamily h_oracle(u, std::move(h_masks));

  // ---- fast paths and closed-form formulas ----
  const SetFamily s_fast = support_family(p, cap);
  std::vector<Mask> s_by_upper;
  std::vector<Mask> s_by_duality;
  for (Mask x : all) {
    if (upper_mask(p, x) == full) {
      s_by_upper.push_back(x);
    }
    if (lower_mask(p, full & ~x) == 0) {
      s_by_duality.push_back(x);
    }
  }
  const SetFamily s_upper(u, std::move(s_by_upper));
  const SetFamily s_duality(u, std::move(s_by_duality));
  diffs.push_back(
      make_diff("supports", s_oracle, {&s_fast, &s_upper, &s_duality}));

  try {
    const Matroid matroid = Matroid::from_supports(s_fast, cap);

    const SetFamily b_formula = induced_bases(p, cap);
    const SetFamily b_min = min_elems(s_fast);
    diffs.push_back(make_diff("bases", b_oracle,
                              {&b_formula, &b_min, &matroid.bases()}));

    const SetFamily i_formula = induced_independents(p, cap);
    const SetFamily i_low_min = low(min_elems(s_fast), cap);
    diffs.push_back(
        make_diff("independents", i_oracle_family,
                  {&i_formula, &i_low_min, &matroid.independents()}));

    std::vector<Mask> rank_disagreements;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (induced_rank(p, all[i]) != rank_oracle[i] ||
          matroid.rank(all[i]) != rank_oracle[i]) {
        rank_disagreements.push_back(all[i]);
      }
    }
    diffs.push_back(subject_diff("rank", u, std::move(rank_disagreements)));

    const SetFamily h_formula = induced_hyperplanes(p, cap);
    std::vector<Mask> complements;
    for (Mask b : p.blocks()) {
      complements.push_back(full & ~b);
    }
    const SetFamily h_blocks(u, std::move(complements));
    const SetFamily h_max_opp = max_elems(opp(s_fast, cap));
    const SetFamily h_generic = matroid.hyperplanes(cap);
    diffs.push_back(make_diff(
        "hyperplanes", h_oracle,
        {&h_formula, &h_blocks, &h_max_opp, &h_generic}));

    const SetFamily l_formula = induced_closed_family(p, cap);
    const SetFamily l_generic = matroid.closed_sets(cap);
    diffs.push_back(
        make_diff("closed-sets", l_oracle, {&l_formula, &l_generic}));

    std::vector<Mask> equivalence_disagreements;
    for (Mask x : all) {
      const Mask up = upper_mask(p, x);
      const Mask down = lower_mask(p, x);
      bool union_of_blocks = true;
      for (Mask b : p.blocks()) {
        Mask hit = b & x;
        if (hit != 0 && hit != b) {
          union_of_blocks = false;
          break;
        }
      }
      const bool closed = l_generic.contains(x);
      const bool precise = is_precise(p, Subset(u, x));
      const bool agreed = union_of_blocks == closed && (up == x) == closed &&
                          (down == x) == closed && (up == down) == closed &&
                          precise == closed;
      if (!agreed) {
        equivalence_disagreements.push_back(x);
      }
    }
    diffs.push_back(
        subject_diff("closed-iff", u, std::move(equivalence_disagreements)));
  } catch (const Error&) {
    // a construction step faulted; the marker diffs below record it
  }
  for (const char* name :
       {"bases", "independents", "rank", "hyperplanes", "closed-sets",
        "closed-iff"}) {
    bool present = false;
    for (const Diff& diff : diffs) {
      if (diff.structure == name) {
        present = true;
        break;
      }
    }
    if (!present) {
      diffs.push_back(subject_diff(name, u, {full}));
    }
  }
  return diffs;
}

std::string format_diffs(const std::vector<Diff>& diffs, const Universe& u) {
  constexpr std::size_t kMaxListed = 8;
  std::string out;
  for (const Diff& diff : diffs) {
    out += "DIFF " + diff.structure + (diff.passed() ? " PASS" : " FAIL");
    out += '\n';
    if (diff.passed()) {
      continue;
    }
    auto list = [&](const char* tag, const SetFamily& family) {
      std::size_t shown = 0;
      for (Mask m : family.masks()) {
        if (shown == kMaxListed) {
          out += std::string(tag) + " ... (" +
                 std::to_string(family.size() - shown) + " more)\n";
          break;
        }
        out += std::string(tag) + " " + u.render(m) + "\n";
        ++shown;
      }
    };
    list("ONLY-FAST", diff.only_in_fast);
    list("ONLY-ORACLE", diff.only_in_oracle);
  }
  return out;
}

namespace {

void emit_partition(const std::vector<int>& assignment, int block_count,
                    const UniversePtr& u, std::vector<Partition>& out) {
  std::vector<Mask> blocks(static_cast<std::size_t>(block_count), 0);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    blocks[static_cast<std::size_t>(assignment[i])] |=
        bit(static_cast<int>(i));
  }
  out.emplace_back(u, std::move(blocks));
}

void grow_strings(int position, int max_used, std::vector<int>& assignment,
                  const UniversePtr& u, std::vector<Partition>& out) {
  const int n = static_cast<int>(assignment.size());
  if (position == n) {
    emit_partition(assignment, max_used + 1, u, out);
    return;
  }
  for (int v = 0; v <= max_used + 1; ++v) {
    assignment[static_cast<std::size_t>(position)] = v;
    grow_strings(position + 1, std::max(max_used, v), assignment, u, out);
  }
}

}  // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 1 || n > 12) {
    fail(errc::bad_argument,
         "partition enumeration supports 1 <= n <= 12, got " +
             std::to_string(n));
  }
  const UniversePtr u = Universe::numbered(n);
  std::vector<Partition> out;
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  grow_strings(1, 0, assignment, u, out);
  return out;
}

std::string SweepSummary::to_string() const {
  return "SWEEP n=" + std::to_string(n) + " partitions=" +
         std::to_string(partitions) + " failures=" + std::to_string(failures) +
         "\n";
}

SweepSummary sweep_all_partitions(int n) {
  if (n < 1 || n > 7) {
    fail(errc::bad_argument,
         "sweep supports 1 <= n <= 7, got " + std::to_string(n));
  }
  SweepSummary summary;
  summary.n = n;
  for (const Partition& p : all_partitions(n)) {
    ++summary.partitions;
    for (const Diff& diff : cross_validate(p, kDefaultCap)) {
      if (!diff.passed()) {
        ++summary.failures;
      }
    }
  }
  return summary;
}

}  // namespace rsm::oracle
