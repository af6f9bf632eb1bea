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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "azoswitch/molecules.hpp"

namespace azoswitch {

struct Peak {
  std::string owner;
  double frequency_hz = 0.0;  // offset from the nuclide's reference compound
  double intensity = 0.0;

  friend bool operator==(const Peak&, const Peak&) = default;
};

// Stick spectrum. Peaks are sorted by frequency (ties by owner); each spin's
// intensities sum to one. `references` maps nuclide to reference compound
// when the source system carries `reference_<nuclide>` metadata.
struct PeakList {
  std::vector<Peak> peaks;
  std::map<std::string, std::string> references;
};

// Spectrometer frequency per nuclide, in MHz.
using BaseFrequencies = std::map<std::string, double, std::less<>>;

// ppm x MHz = Hz. Throws std::invalid_argument for base <= 0.
double ppm_to_hz(double shift_ppm, double base_mhz);

// First-order multiplets: a spin with m coupling partners gives 2^m lines at
// nu0 + sum(+-J_k / 2), each of weight 2^-m; lines closer than
// kPeakMergeHz merge. Throws std::invalid_argument when a nuclide has no
// base frequency.
inline constexpr double kPeakMergeHz = 1e-9;
PeakList first_order_peaks(const SpinSystem& system, const BaseFrequencies& bases);

// Header `owner,frequency_hz,intensity`, LF endings.
std::string peak_csv(const PeakList& list);

// `base <nuclide> <MHz>` lines with '#' comments.
BaseFrequencies parse_base_config(std::string_view text);

}  // namespace azoswitch
