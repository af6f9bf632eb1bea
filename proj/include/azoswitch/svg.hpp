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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace azoswitch::svg {

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::vector<double> markers;  // vertical dashed lines at these x values
  std::optional<std::pair<double, double>> y_range;
  bool reverse_x = false;  // NMR convention: frequency decreasing to the right
};

// Static line chart(s), stacked vertically, one panel per chart. Output is a
// pure function of the input.
std::string render(std::span<const Chart> panels, int width = 720, int panel_height = 360);

}  // namespace azoswitch::svg
