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

#include "rsm/properties.hpp"

#include <functional>
#include <random>

#include "parse_util.hpp"

namespace rsm {

bool PropertyReport::all_passed() const {
  for (const auto& check : checks) {
    if (!check.passed) {
      return false;
    }
  }
  return true;
}

std::string PropertyReport::to_string(const Universe& u) const {
  std::string out;
  if (!exhaustive) {
    out += "SAMPLING count=" + std::to_string(sample_count) +
           " seed=" + std::to_string(seed) + "\n";
  }
  for (const auto& check : checks) {
    out += "PROPERTY " + check.name + (check.passed ? " PASS" : " FAIL");
    if (check.x) {
      out += " X=" + u.render(*check.x);
    }
    if (check.y) {
      out += " Y=" + u.render(*check.y);
    }
    out += '\n';
  }
  return out;
}

namespace {

struct Law {
  const char* name;
  int arity;                    // 0: constant, 1: over X, 2: over (X, Y)
  bool wants_subset_pair;       // arity-2 law quantified over X subset of Y
  std::function<bool(Mask, Mask)> holds;
};

}  // namespace

PropertyReport check_approx_properties(const Partition& p,
                                       const PropertyOptions& options) {
  const Universe& u = *p.universe();
  const Mask full = u.full_mask();
  auto lo = [&](Mask m) { return lower_mask(p, m); };
  auto hi = [&](Mask m) { return upper_mask(p, m); };

  const std::vector<Law> laws = {
      {"1H", 0, false, [&](Mask, Mask) { return hi(full) == full; }},
      {"1L", 0, false, [&](Mask, Mask) { return lo(0) == 0; }},
      {"2L", 1, false, [&](Mask x, Mask) { return submask(lo(x), x); }},
      {"2H", 1, false, [&](Mask x, Mask) { return submask(x, hi(x)); }},
      {"3L", 2, false,
       [&](Mask x, Mask y) { return lo(x & y) == (lo(x) & lo(y)); }},
      {"3H", 2, false,
       [&](Mask x, Mask y) { return hi(x | y) == (hi(x) | hi(y)); }},
      {"4L", 1, false,
       [&](Mask x, Mask) { return lo(x) == (full & ~hi(full & ~x)); }},
      {"4H", 1, false,
       [&](Mask x, Mask) { return hi(x) == (full & ~lo(full & ~x)); }},
      {"5L", 1, false,
       [&](Mask x, Mask) {
         Mask c = full & ~lo(x);
         return lo(c) == c;
       }},
      {"5H", 1, false,
       [&](Mask x, Mask) {
         Mask c = full & ~hi(x);
         return hi(c) == c;
       }},
      {"6H", 2, true,
       [&](Mask x, Mask y) {
         return !submask(x, y) || submask(hi(x), hi(y));
       }},
  };

  PropertyReport report;
  report.exhaustive = options.exhaustive;

  std::vector<std::pair<Mask, Mask>> samples;
  if (options.exhaustive) {
    detail::require_cap(u, options.cap, "exhaustive property check");
  } else {
    if (options.sample_count <= 0) {
      fail(errc::bad_argument, "sample count must be positive");
    }
    report.sample_count = options.sample_count;
    report.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    samples.reserve(static_cast<std::size_t>(options.sample_count));
    for (int i = 0; i < options.sample_count; ++i) {
      Mask x = static_cast<Mask>(rng()) & full;
      Mask y = static_cast<Mask>(rng()) & full;
      samples.emplace_back(x, y);
    }
  }

  for (const auto& law : laws) {
    PropertyCheck check;
    check.name = law.name;
    check.passed = true;
    auto record = [&](Mask x, Mask y) {
      check.passed = false;
      if (law.arity >= 1) {
        check.x = x;
      }
      if (law.arity >= 2) {
        check.y = y;
      }
    };

    if (law.arity == 0) {
      if (!law.holds(0, 0)) {
        check.passed = false;
      }
    } else if (options.exhaustive) {
      for (std::uint64_t x = 0; x <= full && check.passed; ++x) {
        if (law.arity == 1) {
          if (!law.holds(static_cast<Mask>(x), 0)) {
            record(static_cast<Mask>(x), 0);
          }
          continue;
        }
        for (std::uint64_t y = 0; y <= full; ++y) {
          if (!law.holds(static_cast<Mask>(x), static_cast<Mask>(y))) {
            record(static_cast<Mask>(x), static_cast<Mask>(y));
            break;
          }
        }
      }
    } else {
      for (const auto& [sx, sy] : samples) {
        Mask x = sx;
        Mask y = law.wants_subset_pair ? (sx | sy) : sy;
        if (!law.holds(x, y)) {
          record(x, y);
          break;
        }
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace rsm
