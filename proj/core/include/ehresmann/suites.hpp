/*
 *   Copyright 2026 The ehresmann-lab developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

#include "ehresmann/common.hpp"
#include "ehresmann/io.hpp"

namespace ehresmann {

/// Dispatches an instance to the checker matching its kind. MAP files have
/// no laws of their own and check structurally.
struct InstanceCheck {
  bool ok = false;
  std::string summary;
  Violation why;
};

InstanceCheck check_instance(const InstanceFile& f);

struct SuiteOptions {
  std::string name;
  int max = 0;  ///< scale; 0 picks the suite default
  std::vector<std::string> extra_files;
  int witness_limit = 5;
};

struct SuiteCheck {
  std::string id;
  bool pass = true;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  int scale = 0;
  std::vector<SuiteCheck> checks;
  long long instances = 0;
  long long volume = 0;  ///< elementary table checks, approximate
  double wall_ms = 0.0;

  bool all_pass() const;
};

/// Runs one of: axioms, lemmas, theorem-two, theorem-three, theorem-four,
/// roundtrip, census. The report body is deterministic for fixed inputs and
/// flags; timing is carried separately.
Checked<SuiteReport> run_suite(const SuiteOptions& options);

std::string render_suite_text(const SuiteReport& report, bool include_timing);

}  // namespace ehresmann
