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

#include "rsm/induced.hpp"

#include <utility>

#include "parse_util.hpp"

namespace rsm {

namespace {

[[noreturn]] void theorem_fault(const Universe& u, const std::string& name,
                                const SetFamily& got,
                                const SetFamily& expected) {
  SetFamily extra = family_difference(got, expected);
  SetFamily missing = family_difference(expected, got);
  const SetFamily& delta = extra.is_empty() ? missing : extra;
  std::string witness =
      delta.is_empty() ? "(none)" : u.render(delta.masks().front());
  fail(errc::theorem_violation,
       "THEOREM " + name + " FAIL witness=" + witness);
}

void require_equal(const Universe& u, const std::string& name,
                   const SetFamily& got, const SetFamily& expected) {
  if (got != expected) {
    theorem_fault(u, name, got, expected);
  }
}

}  // namespace

SetFamily support_family(const Partition& p, int cap) {
  const Universe& u = *p.universe();
  detail::require_cap(u, cap, "support family");
  const Mask full = u.full_mask();
  std::vector<Mask> out;
  for (std::uint64_t x = 0; x <= full; ++x) {
    bool hits_all = true;
    for (Mask b : p.blocks()) {
      if ((b & static_cast<Mask>(x)) == 0) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) {
      out.push_back(static_cast<Mask>(x));
    }
  }
  return {p.universe(), std::move(out)};
}

SetFamily induced_bases(const Partition& p, int cap) {
  const Universe& u = *p.universe();
  detail::require_cap(u, cap, "induced bases");
  const Mask full = u.full_mask();
  std::vector<Mask> out;
  for (std::uint64_t x = 0; x <= full; ++x) {
    bool transversal = true;
    for (Mask b : p.blocks()) {
      if (popcount(b & static_cast<Mask>(x)) != 1) {
        transversal = false;
        break;
      }
    }
    if (transversal) {
      out.push_back(static_cast<Mask>(x));
    }
  }
  return {p.universe(), std::move(out)};
}

SetFamily induced_independents(const Partition& p, int cap) {
  const Universe& u = *p.universe();
  detail::require_cap(u, cap, "induced independents");
  const Mask full = u.full_mask();
  std::vector<Mask> out;
  for (std::uint64_t x = 0; x <= full; ++x) {
    bool partial = true;
    for (Mask b : p.blocks()) {
      Mask hit = b & static_cast<Mask>(x);
      if (hit != 0 && (hit & (hit - 1)) != 0) {
        partial = false;
        break;
      }
    }
    if (partial) {
      out.push_back(static_cast<Mask>(x));
    }
  }
  return {p.universe(), std::move(out)};
}

int induced_rank(const Partition& p, Mask x) {
  if (!submask(x, p.universe()->full_mask())) {
    fail(errc::bad_argument, "mask has bits outside the universe");
  }
  int r = 0;
  for (Mask b : p.blocks()) {
    if ((b & x) != 0) {
      ++r;
    }
  }
  return r;
}

int induced_rank(const Partition& p, const Subset& x) {
  require_same_universe(p.universe(), x.universe());
  return induced_rank(p, x.mask());
}

SetFamily induced_hyperplanes(const Partition& p, int cap) {
  const Universe& u = *p.universe();
  detail::require_cap(u, cap, "induced hyperplanes");
  const Mask full = u.full_mask();
  std::vector<Mask> out;
  // X = U is skipped: a hyperplane has rank r(U)-1, so it is a proper
  // subset, and the condition below would hold for U vacuously.
  for (std::uint64_t x = 0; x < full; ++x) {
    const Mask m = static_cast<Mask>(x);
    const Mask up = upper_mask(p, m);
    bool matches = true;
    Mask rest = full & ~m;
    while (rest != 0) {
      int e = lowest_bit(rest);
      rest &= rest - 1;
      if (up != (full & ~p.block_mask_of(e))) {
        matches = false;
        break;
      }
    }
    if (matches) {
      out.push_back(m);
    }
  }
  return {p.universe(), std::move(out)};
}

SetFamily induced_closed_family(const Partition& p, int cap) {
  const Universe& u = *p.universe();
  detail::require_cap(u, cap, "induced closed family");
  const auto& blocks = p.blocks();
  const std::uint64_t combos = std::uint64_t{1} << blocks.size();
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(combos));
  for (std::uint64_t pick = 0; pick < combos; ++pick) {
    Mask m = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if ((pick >> j) & 1) {
        m |= blocks[j];
      }
    }
    out.push_back(m);
  }
  return {p.universe(), std::move(out)};
}

InducedMatroid::InducedMatroid(Partition partition, int cap)
    : partition_(std::move(partition)),
      supports_(support_family(partition_, cap)),
      matroid_([&] {
        try {
          return Matroid::from_supports(supports_, cap);
        } catch (const AxiomError& e) {
          // the support family of a partition satisfies the axioms by
          // theorem, so a rejection here is a theorem violation
          fail(errc::theorem_violation,
               std::string("THEOREM support-axioms FAIL ") + e.what());
        }
      }()),
      bases_(induced_bases(partition_, cap)),
      hyperplanes_(induced_hyperplanes(partition_, cap)),
      closed_family_(induced_closed_family(partition_, cap)) {
  const Universe& u = *partition_.universe();

  require_equal(u, "bases-minimal-supports", bases_,
                internal::min_of_upward_closed(supports_));
  require_equal(u, "bases-generic", bases_, matroid_.bases());

  require_equal(u, "independents-formula",
                induced_independents(partition_, cap),
                matroid_.independents());

  require_equal(u, "hyperplanes-block-complements", hyperplanes_, [&] {
    std::vector<Mask> complements;
    for (Mask b : partition_.blocks()) {
      complements.push_back(u.full_mask() & ~b);
    }
    return SetFamily(partition_.universe(), std::move(complements));
  }());
  require_equal(u, "hyperplanes-max-opp", hyperplanes_,
                internal::max_of_downward_closed(opp(supports_, cap)));
  require_equal(u, "hyperplanes-generic", hyperplanes_,
                matroid_.hyperplanes(cap));

  require_equal(u, "closed-sets-generic", closed_family_,
                matroid_.closed_sets(cap));

  if (matroid_.rank() != partition_.block_count()) {
    fail(errc::theorem_violation,
         "THEOREM rank-block-count FAIL r(U)=" +
             std::to_string(matroid_.rank()) + " blocks=" +
             std::to_string(partition_.block_count()));
  }
}

InducedMatroid induced_matroid(const Partition& p, int cap) {
  return InducedMatroid(p, cap);
}

EquivalenceReport evaluate_closed_predicates(const InducedMatroid& induced,
                                             Mask x) {
  const Partition& p = induced.partition();
  EquivalenceReport report;
  report.subject = x;
  report.in_closed_family = induced.closed_family().contains(x);
  report.union_of_blocks = true;
  for (Mask b : p.blocks()) {
    Mask hit = b & x;
    if (hit != 0 && hit != b) {
      report.union_of_blocks = false;
      break;
    }
  }
  const Mask up = upper_mask(p, x);
  const Mask down = lower_mask(p, x);
  report.upper_fixpoint = up == x;
  report.lower_fixpoint = down == x;
  report.equal_approximations = up == down;
  report.precise = is_precise(p, Subset(p.universe(), x));
  const bool first = report.in_closed_family;
  report.agreed = report.union_of_blocks == first &&
                  report.upper_fixpoint == first &&
                  report.lower_fixpoint == first &&
                  report.equal_approximations == first &&
                  report.precise == first;
  return report;
}

EquivalenceReport closed_iff_checks(const InducedMatroid& induced,
                                    const Subset& x) {
  require_same_universe(induced.partition().universe(), x.universe());
  EquivalenceReport report = evaluate_closed_predicates(induced, x.mask());
  if (!report.agreed) {
    fail(errc::theorem_violation,
         "THEOREM closed-set-equivalence FAIL witness=" +
             induced.partition().universe()->render(x.mask()));
  }
  return report;
}

EquivalenceReport closed_iff_checks(const Partition& p, const Subset& x,
                                    int cap) {
  return closed_iff_checks(InducedMatroid(p, cap), x);
}

std::string InclusionReport::to_string(const Universe& u) const {
  std::string out = "THEOREM intersection-inclusion ";
  out += holds ? "PASS" : "FAIL";
  out += '\n';
  out += "REFINED-SUPPORTS size=" + std::to_string(refined_size) + "\n";
  out += "COMMON-SUPPORTS size=" + std::to_string(intersection_size) + "\n";
  out += std::string("STRICT ") + (strict ? "yes" : "no") + "\n";
  if (witness) {
    out += "WITNESS " + u.render(*witness) + "\n";
  }
  return out;
}

InclusionReport intersection_inclusion_check(const Partition& p1,
                                             const Partition& p2, int cap) {
  require_same_universe(p1.universe(), p2.universe());
  const Partition refined = refine(p1, p2);
  const SetFamily refined_supports = support_family(refined, cap);
  const SetFamily common =
      intersect_families(support_family(p1, cap), support_family(p2, cap));

  const SetFamily violations = family_difference(refined_supports, common);
  if (!violations.is_empty()) {
    fail(errc::theorem_violation,
         "THEOREM intersection-inclusion FAIL witness=" +
             p1.universe()->render(violations.masks().front()));
  }

  InclusionReport report;
  report.holds = true;
  report.refined_size = refined_supports.size();
  report.intersection_size = common.size();
  const SetFamily extra = family_difference(common, refined_supports);
  report.strict = !extra.is_empty();
  if (report.strict) {
    report.witness = extra.masks().front();
  }
  return report;
}

}  // namespace rsm
