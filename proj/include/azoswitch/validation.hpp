// Copyright 2026 The azoswitch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "azoswitch/molecules.hpp"

namespace azoswitch {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Tolerances pinned for the self-check suite.
namespace limits {
inline constexpr double kTauAbs = 0.015;           // s, dataset vs pi/|J|
inline constexpr double kRatioAbs = 0.1;           // coupling ratio vs quoted value
inline constexpr double kTauRatioLo = 3.9;         // B3LYP slow/fast entangling-time ratio
inline constexpr double kTauRatioHi = 4.4;
inline constexpr double kClosedFormAbs = 1e-12;    // u_rot vs matrix exponential
inline constexpr double kMesAbs = 1e-9;            // concurrence at the entangling time
inline constexpr double kProductAbs = 1e-12;       // |+0> concurrence
inline constexpr double kFrameInfidelity = 1e-3;   // lab vs secular evolution
inline constexpr double kNormAbs = 1e-12;
inline constexpr double kLocalInvariance = 1e-10;
inline constexpr int kRandomTrials = 1000;
}  // namespace limits

// Quoted CAB/TAB coupling ratios per computed method, in kComputedMethods order.
inline constexpr double kQuotedRatios[] = {4.2, 3.6, 2.3, 2.4};

// Runs every self-check against `table`. Dataset-dependent checks read the
// table; the rest use fixed seeds, so the report is reproducible.
std::vector<CheckResult> run_validation(std::span<const IsomerRecord> table);

// One line per check: "PASS [id] name: detail".
std::string format_report(std::span<const CheckResult> results);

bool all_passed(std::span<const CheckResult> results);

}  // namespace azoswitch
