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

// File-driven frontend over the rsm C API. Exit codes: 0 all checks pass,
// 1 a check failed (witness printed in the report), 2 input/usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rsm.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

int exit_code_for(int status) {
  switch (status) {
    case RSM_OK:
      return kExitOk;
    case RSM_CHECK_FAILED:
    case RSM_ERR_AXIOM_FAILURE:
    case RSM_ERR_THEOREM_VIOLATION:
      return kExitCheckFailed;
    default:
      return kExitInputError;
  }
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

int input_error(const std::string& context) {
  std::cerr << "error: " << context << ": " << rsm_last_error() << "\n";
  return kExitInputError;
}

// Emits the report (when present) and maps the status to an exit code.
int finish(int status, char* report, const std::string& output_path) {
  int code = exit_code_for(status);
  if (report != nullptr) {
    if (output_path.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(output_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write '" << output_path << "'\n";
        rsm_text_free(report);
        return kExitInputError;
      }
      out << report;
    }
    rsm_text_free(report);
  }
  if (code == kExitInputError) {
    std::cerr << "error: " << rsm_last_error() << "\n";
  }
  return code;
}

struct PartitionHandle {
  rsm_partition* value = nullptr;
  ~PartitionHandle() { rsm_partition_free(value); }
};

struct FamilyHandle {
  rsm_family* value = nullptr;
  ~FamilyHandle() { rsm_family_free(value); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rough-set approximation spaces and their induced matroids"};
  app.require_subcommand(1);

  std::string output_path;
  int cap = 0;  // 0 selects the library default
  std::uint64_t seed = 0;
  app.add_option("-o,--output", output_path,
                 "write the report to this file instead of stdout");
  app.add_option("--cap", cap,
                 "override the exhaustive enumeration cap (1..24)")
      ->check(CLI::Range(1, static_cast<int>(RSM_MAX_CAP)));
  app.add_option("--seed", seed,
                 "seed for sampled property checks (reserved; every verb "
                 "here runs exhaustively)");

  std::string approx_partition;
  std::string approx_set;
  auto* approx = app.add_subcommand(
      "approx", "lower/upper approximations and the precise/rough verdict");
  approx->add_option("partition", approx_partition, "partition file")
      ->required();
  approx->add_option("set", approx_set, "set file holding one set")
      ->required();

  std::string induce_partition;
  auto* induce = app.add_subcommand(
      "induce", "support sets, bases, independents, hyperplanes, closed "
                "sets and rank of the induced matroid");
  induce->add_option("partition", induce_partition, "partition file")
      ->required();

  std::string axioms_family;
  bool axioms_independents = false;
  bool axioms_supports = false;
  bool axioms_closed = false;
  auto* axioms =
      app.add_subcommand("check-axioms", "axiom reports for a set family");
  axioms->add_flag("--independents", axioms_independents,
                   "check the independence axioms I1-I3");
  axioms->add_flag("--supports", axioms_supports,
                   "check the support axioms S1-S3");
  axioms->add_flag("--closed", axioms_closed,
                   "check the closed-set axioms F1-F3");
  axioms->add_option("family", axioms_family, "family file")->required();

  std::string verify_partition;
  auto* verify = app.add_subcommand(
      "verify", "cross-validate all induced structures against the "
                "brute-force oracle");
  verify->add_option("partition", verify_partition, "partition file")
      ->required();

  int sweep_n = 0;
  auto* sweep = app.add_subcommand(
      "sweep", "cross-validate every partition of an n-element universe");
  sweep->add_option("n", sweep_n, "universe size (1..7)")->required();

  std::string intersect_first;
  std::string intersect_second;
  auto* intersect = app.add_subcommand(
      "intersect", "support-family inclusion for the intersection of two "
                   "equivalence relations");
  intersect->add_option("partition1", intersect_first, "partition file")
      ->required();
  intersect->add_option("partition2", intersect_second, "partition file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  if (*approx) {
    PartitionHandle p;
    if (rsm_partition_parse_file(approx_partition.c_str(), &p.value) !=
        RSM_OK) {
      return input_error(approx_partition);
    }
    std::string set_text;
    if (!read_file(approx_set, set_text)) {
      std::cerr << "error: cannot open '" << approx_set << "'\n";
      return kExitInputError;
    }
    char* report = nullptr;
    int status = rsm_report_approx(p.value, set_text.c_str(), &report);
    if (status != RSM_OK && report == nullptr) {
      return input_error(approx_set);
    }
    return finish(status, report, output_path);
  }

  if (*induce) {
    PartitionHandle p;
    if (rsm_partition_parse_file(induce_partition.c_str(), &p.value) !=
        RSM_OK) {
      return input_error(induce_partition);
    }
    char* report = nullptr;
    int status = rsm_report_induce(p.value, cap, &report);
    return finish(status, report, output_path);
  }

  if (*axioms) {
    const int selected = (axioms_independents ? 1 : 0) +
                         (axioms_supports ? 1 : 0) + (axioms_closed ? 1 : 0);
    if (selected != 1) {
      std::cerr << "error: check-axioms needs exactly one of "
                   "--independents, --supports, --closed\n";
      return kExitInputError;
    }
    FamilyHandle f;
    if (rsm_family_parse_file(axioms_family.c_str(), &f.value) != RSM_OK) {
      return input_error(axioms_family);
    }
    char* report = nullptr;
    int status = 0;
    if (axioms_independents) {
      status = rsm_report_check_independence(f.value, &report);
    } else if (axioms_supports) {
      status = rsm_report_check_supports(f.value, cap, &report);
    } else {
      status = rsm_report_check_closed(f.value, cap, &report);
    }
    return finish(status, report, output_path);
  }

  if (*verify) {
    PartitionHandle p;
    if (rsm_partition_parse_file(verify_partition.c_str(), &p.value) !=
        RSM_OK) {
      return input_error(verify_partition);
    }
    char* report = nullptr;
    int status = rsm_report_verify(p.value, cap, &report);
    return finish(status, report, output_path);
  }

  if (*sweep) {
    char* report = nullptr;
    int status = rsm_report_sweep(sweep_n, &report);
    return finish(status, report, output_path);
  }

  if (*intersect) {
    PartitionHandle first;
    if (rsm_partition_parse_file(intersect_first.c_str(), &first.value) !=
        RSM_OK) {
      return input_error(intersect_first);
    }
    PartitionHandle second;
    if (rsm_partition_parse_file(intersect_second.c_str(), &second.value) !=
        RSM_OK) {
      return input_error(intersect_second);
    }
    char* report = nullptr;
    int status =
        rsm_report_intersect(first.value, second.value, cap, &report);
    return finish(status, report, output_path);
  }

  std::cerr << "error: no command\n";
  return kExitInputError;
}
