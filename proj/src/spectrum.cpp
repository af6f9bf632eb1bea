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

#include "azoswitch/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "azoswitch/error.hpp"
#include "azoswitch/numfmt.hpp"

namespace azoswitch {
namespace {

constexpr std::size_t kMaxPartners = 16;

}  // namespace

double ppm_to_hz(double shift_ppm, double base_mhz) {
  if (!(base_mhz > 0.0) || !std::isfinite(base_mhz)) {
    throw std::invalid_argument("base frequency must be positive, got " +
                                format_shortest(base_mhz) + " MHz");
  }
  return shift_ppm * base_mhz;
}

PeakList first_order_peaks(const SpinSystem& system, const BaseFrequencies& bases) {
  PeakList out;
  for (const Spin& spin : system.spins()) {
    const auto base = bases.find(spin.nuclide);
    if (base == bases.end()) {
      throw std::invalid_argument("no base frequency for nuclide " + spin.nuclide);
    }
    const double center = ppm_to_hz(spin.shift_ppm, base->second);
    const auto partners = system.partners(spin.label);
    if (partners.size() > kMaxPartners) {
      throw std::invalid_argument("spin " + spin.label + " has too many coupling partners");
    }
    const std::size_t m = partners.size();
    const double weight = std::ldexp(1.0, -static_cast<int>(m));

    std::vector<double> lines;
    lines.reserve(std::size_t{1} << m);
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      double nu = center;
      for (std::size_t k = 0; k < m; ++k) {
        nu += ((mask >> k) & 1 ? 0.5 : -0.5) * partners[k].second;
      }
      lines.push_back(nu);
    }
    std::sort(lines.begin(), lines.end());

    std::vector<Peak> merged;
    for (double nu : lines) {
      if (!merged.empty() && nu - merged.back().frequency_hz <= kPeakMergeHz) {
        merged.back().intensity += weight;
      } else {
        merged.push_back(Peak{spin.label, nu, weight});
      }
    }
    out.peaks.insert(out.peaks.end(), merged.begin(), merged.end());
  }
  std::stable_sort(out.peaks.begin(), out.peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.frequency_hz != b.frequency_hz) return a.frequency_hz < b.frequency_hz;
    return a.owner < b.owner;
  });

  constexpr std::string_view kPrefix = "reference_";
  for (const auto& [key, value] : system.meta()) {
    if (key.starts_with(kPrefix)) out.references.emplace(key.substr(kPrefix.size()), value);
  }
  return out;
}

std::string peak_csv(const PeakList& list) {
  std::string out = "owner,frequency_hz,intensity\n";
  for (const Peak& p : list.peaks) {
    out += p.owner;
    out += ',';
    out += format_shortest(p.frequency_hz);
    out += ',';
    out += format_shortest(p.intensity);
    out += '\n';
  }
  return out;
}

BaseFrequencies parse_base_config(std::string_view text) {
  BaseFrequencies out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string keyword, nuclide, mhz, extra;
    if (!(tokens >> keyword)) continue;
    if (keyword != "base" || !(tokens >> nuclide >> mhz) || (tokens >> extra)) {
      throw ParseError(line_no, "expected 'base <nuclide> <MHz>'");
    }
    const auto value = parse_decimal(mhz);
    if (!value || !(*value > 0.0)) {
      throw ParseError(line_no, "base frequency must be a positive number, got '" + mhz + "'");
    }
    out[nuclide] = *value;
  }
  return out;
}

}  // namespace azoswitch
