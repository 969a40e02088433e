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

#include "rsm.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "rsm/induced.hpp"
#include "rsm/matroid.hpp"
#include "rsm/oracle.hpp"
#include "rsm/partition.hpp"
#include "rsm/properties.hpp"
#include "rsm/set_family.hpp"
#include "rsm/types.hpp"

struct rsm_partition {
  rsm::Partition value;
};

struct rsm_family {
  rsm::SetFamily value;
};

namespace {

thread_local std::string g_last_error;

int map_code(rsm::errc code) {
  switch (code) {
    case rsm::errc::bad_argument:
      return RSM_ERR_BAD_ARGUMENT;
    case rsm::errc::parse:
      return RSM_ERR_PARSE;
    case rsm::errc::unknown_element:
      return RSM_ERR_UNKNOWN_ELEMENT;
    case rsm::errc::universe_mismatch:
      return RSM_ERR_UNIVERSE_MISMATCH;
    case rsm::errc::cap_exceeded:
      return RSM_ERR_CAP_EXCEEDED;
    case rsm::errc::io:
      return RSM_ERR_IO;
    case rsm::errc::axiom_failure:
      return RSM_ERR_AXIOM_FAILURE;
    case rsm::errc::theorem_violation:
      return RSM_ERR_THEOREM_VIOLATION;
  }
  return RSM_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const rsm::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSM_ERR_INTERNAL;
  }
}

int set_error(int status, const std::string& message) {
  g_last_error = message;
  return status;
}

char* copy_text(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    rsm::fail(rsm::errc::io, "cannot open '" + std::string(path) + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int resolve_cap(int cap) {
  if (cap == 0) {
    return RSM_DEFAULT_CAP;
  }
  if (cap < 1 || cap > RSM_MAX_CAP) {
    rsm::fail(rsm::errc::bad_argument,
              "cap must be between 1 and " + std::to_string(RSM_MAX_CAP));
  }
  return cap;
}

void append_family(std::string& out, const char* name,
                   const rsm::SetFamily& family) {
  out += "FAMILY " + std::string(name) + " size=" +
         std::to_string(family.size()) + "\n";
  for (rsm::Mask m : family.masks()) {
    out += family.universe()->render(m);
    out += '\n';
  }
}

int finish_report(const std::string& text, bool check_failed,
                  char** out_report) {
  *out_report = copy_text(text);
  return check_failed ? RSM_CHECK_FAILED : RSM_OK;
}

// Theorem faults still produce a report: the fault line itself.
template <typename Fn>
int report_guarded(char** out_report, Fn&& fn) {
  if (out_report == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "output pointer is null");
  }
  *out_report = nullptr;
  try {
    g_last_error.clear();
    return fn();
  } catch (const rsm::Error& e) {
    g_last_error = e.what();
    if (e.code() == rsm::errc::theorem_violation) {
      *out_report = copy_text(std::string(e.what()) + "\n");
    }
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSM_ERR_INTERNAL;
  }
}

int check_report(const std::vector<rsm::AxiomReport>& reports,
                 const rsm::Universe& u, char** out_report) {
  return finish_report(rsm::format_axiom_reports(reports, u),
                       !rsm::all_passed(reports), out_report);
}

}  // namespace

extern "C" {

const char* rsm_version(void) { return "0.1.0"; }

const char* rsm_status_name(int status) {
  switch (status) {
    case RSM_OK:
      return "ok";
    case RSM_CHECK_FAILED:
      return "check-failed";
    case RSM_ERR_BAD_ARGUMENT:
      return "bad-argument";
    case RSM_ERR_PARSE:
      return "parse-error";
    case RSM_ERR_UNKNOWN_ELEMENT:
      return "unknown-element";
    case RSM_ERR_UNIVERSE_MISMATCH:
      return "universe-mismatch";
    case RSM_ERR_CAP_EXCEEDED:
      return "cap-exceeded";
    case RSM_ERR_IO:
      return "io-error";
    case RSM_ERR_AXIOM_FAILURE:
      return "axiom-failure";
    case RSM_ERR_THEOREM_VIOLATION:
      return "theorem-violation";
    default:
      return "internal-error";
  }
}

const char* rsm_last_error(void) { return g_last_error.c_str(); }

int rsm_partition_parse(const char* text, rsm_partition** out) {
  if (text == nullptr || out == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    *out = new rsm_partition{rsm::parse_partition(text)};
    return RSM_OK;
  });
}

int rsm_partition_parse_file(const char* path, rsm_partition** out) {
  if (path == nullptr || out == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::string text = read_file(path);
    *out = new rsm_partition{rsm::parse_partition(text)};
    return RSM_OK;
  });
}

void rsm_partition_free(rsm_partition* p) { delete p; }

int rsm_partition_universe_size(const rsm_partition* p) {
  return p == nullptr ? -1 : p->value.universe()->size();
}

int rsm_partition_block_count(const rsm_partition* p) {
  return p == nullptr ? -1 : p->value.block_count();
}

const char* rsm_partition_label(const rsm_partition* p, int index) {
  if (p == nullptr || index < 0 || index >= p->value.universe()->size()) {
    return nullptr;
  }
  return p->value.universe()->label(index).c_str();
}

int rsm_partition_block_of(const rsm_partition* p, const char* label,
                           uint32_t* out_block) {
  if (p == nullptr || label == nullptr || out_block == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out_block = p->value.block_of(label).mask();
    return RSM_OK;
  });
}

int rsm_partition_lower(const rsm_partition* p, uint32_t set, uint32_t* out) {
  if (p == nullptr || out == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    rsm::Subset x(p->value.universe(), set);
    *out = rsm::lower_approx(p->value, x).mask();
    return RSM_OK;
  });
}

int rsm_partition_upper(const rsm_partition* p, uint32_t set, uint32_t* out) {
  if (p == nullptr || out == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    rsm::Subset x(p->value.universe(), set);
    *out = rsm::upper_approx(p->value, x).mask();
    return RSM_OK;
  });
}

int rsm_partition_is_precise(const rsm_partition* p, uint32_t set,
                             int* out_precise) {
  if (p == nullptr || out_precise == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    rsm::Subset x(p->value.universe(), set);
    *out_precise = rsm::is_precise(p->value, x) ? 1 : 0;
    return RSM_OK;
  });
}

int rsm_partition_rank(const rsm_partition* p, uint32_t set, int* out_rank) {
  if (p == nullptr || out_rank == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out_rank = rsm::induced_rank(p->value, static_cast<rsm::Mask>(set));
    return RSM_OK;
  });
}

int rsm_family_parse(const char* text, rsm_family** out) {
  if (text == nullptr || out == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    *out = new rsm_family{rsm::parse_family(text)};
    return RSM_OK;
  });
}

int rsm_family_parse_file(const char* path, rsm_family** out) {
  if (path == nullptr || out == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    std::string text = read_file(path);
    *out = new rsm_family{rsm::parse_family(text)};
    return RSM_OK;
  });
}

void rsm_family_free(rsm_family* f) { delete f; }

int rsm_family_size(const rsm_family* f) {
  return f == nullptr ? -1 : static_cast<int>(f->value.size());
}

int rsm_family_universe_size(const rsm_family* f) {
  return f == nullptr ? -1 : f->value.universe()->size();
}

int rsm_family_member(const rsm_family* f, int index, uint32_t* out_mask) {
  if (f == nullptr || out_mask == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  if (index < 0 || index >= static_cast<int>(f->value.size())) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "member index out of range");
  }
  *out_mask = f->value.masks()[static_cast<std::size_t>(index)];
  return RSM_OK;
}

int rsm_family_emit(const rsm_family* f, char** out_text) {
  if (f == nullptr || out_text == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  *out_text = nullptr;
  return guarded([&] {
    *out_text = copy_text(rsm::format_family(f->value));
    return RSM_OK;
  });
}

int rsm_induced_family(const rsm_partition* p, char which, int cap,
                       rsm_family** out) {
  if (p == nullptr || out == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  *out = nullptr;
  return guarded([&] {
    const int bound = resolve_cap(cap);
    const rsm::InducedMatroid induced(p->value, bound);
    const rsm::SetFamily* family = nullptr;
    switch (which) {
      case 'S':
        family = &induced.supports();
        break;
      case 'B':
        family = &induced.bases();
        break;
      case 'I':
        family = &induced.independents();
        break;
      case 'H':
        family = &induced.hyperplanes();
        break;
      case 'L':
        family = &induced.closed_family();
        break;
      default:
        rsm::fail(rsm::errc::bad_argument,
                  "family selector must be one of S, B, I, H, L");
    }
    *out = new rsm_family{*family};
    return RSM_OK;
  });
}

int rsm_report_approx(const rsm_partition* p, const char* set_text,
                      char** out_report) {
  if (p == nullptr || set_text == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return report_guarded(out_report, [&] {
    const rsm::Partition& partition = p->value;
    rsm::Subset x = rsm::parse_subset(set_text, partition.universe());
    rsm::Subset lower = rsm::lower_approx(partition, x);
    rsm::Subset upper = rsm::upper_approx(partition, x);
    std::string text = "LOWER " + lower.to_string() + "\n" +
                       "UPPER " + upper.to_string() + "\n" + "VERDICT " +
                       (rsm::is_precise(partition, x) ? "PRECISE" : "ROUGH") +
                       "\n";
    return finish_report(text, false, out_report);
  });
}

int rsm_report_induce(const rsm_partition* p, int cap, char** out_report) {
  if (p == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return report_guarded(out_report, [&] {
    const int bound = resolve_cap(cap);
    const rsm::InducedMatroid induced(p->value, bound);
    std::string text;
    append_family(text, "S", induced.supports());
    append_family(text, "B", induced.bases());
    append_family(text, "I", induced.independents());
    append_family(text, "H", induced.hyperplanes());
    append_family(text, "L", induced.closed_family());
    text += "RANK " + std::to_string(induced.rank()) + "\n";
    return finish_report(text, false, out_report);
  });
}

int rsm_report_check_independence(const rsm_family* f, char** out_report) {
  if (f == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return report_guarded(out_report, [&] {
    return check_report(rsm::check_independence_axioms(f->value),
                        *f->value.universe(), out_report);
  });
}

int rsm_report_check_supports(const rsm_family* f, int cap,
                              char** out_report) {
  if (f == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return report_guarded(out_report, [&] {
    return check_report(
        rsm::check_support_axioms(f->value, resolve_cap(cap)),
        *f->value.universe(), out_report);
  });
}

int rsm_report_check_closed(const rsm_family* f, int cap, char** out_report) {
  if (f == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return report_guarded(out_report, [&] {
    return check_report(
        rsm::check_closedset_axioms(f->value, resolve_cap(cap)),
        *f->value.universe(), out_report);
  });
}

int rsm_report_verify(const rsm_partition* p, int cap, char** out_report) {
  if (p == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return report_guarded(out_report, [&] {
    const int bound = resolve_cap(cap);
    const auto diffs = rsm::oracle::cross_validate(p->value, bound);
    bool ok = true;
    for (const auto& diff : diffs) {
      ok = ok && diff.passed();
    }
    std::string text =
        rsm::oracle::format_diffs(diffs, *p->value.universe());
    text += ok ? "VERIFY PASS\n" : "VERIFY FAIL\n";
    return finish_report(text, !ok, out_report);
  });
}

int rsm_report_sweep(int n, char** out_report) {
  return report_guarded(out_report, [&] {
    const auto summary = rsm::oracle::sweep_all_partitions(n);
    return finish_report(summary.to_string(), summary.failures != 0,
                         out_report);
  });
}

int rsm_report_intersect(const rsm_partition* p1, const rsm_partition* p2,
                         int cap, char** out_report) {
  if (p1 == nullptr || p2 == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return report_guarded(out_report, [&] {
    const int bound = resolve_cap(cap);
    const auto report =
        rsm::intersection_inclusion_check(p1->value, p2->value, bound);
    return finish_report(report.to_string(*p1->value.universe()), false,
                         out_report);
  });
}

int rsm_report_properties(const rsm_partition* p, int exhaustive,
                          int sample_count, uint64_t seed, int cap,
                          char** out_report) {
  if (p == nullptr) {
    return set_error(RSM_ERR_BAD_ARGUMENT, "null argument");
  }
  return report_guarded(out_report, [&] {
    rsm::PropertyOptions options;
    options.exhaustive = exhaustive != 0;
    options.sample_count = sample_count;
    options.seed = seed;
    options.cap = resolve_cap(cap);
    const auto report = rsm::check_approx_properties(p->value, options);
    return finish_report(report.to_string(*p->value.universe()),
                         !report.all_passed(), out_report);
  });
}

void rsm_text_free(char* text) { delete[] text; }

}  // extern "C"
