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
#include <string>
#include <string_view>

namespace azoswitch {

// Locale-independent number text. `shortest` round-trips exactly.
std::string format_shortest(double value);
std::string format_fixed(double value, int decimals);

// Decimal with optional sign, fraction and exponent ("-3.8", "+1e5", ".5").
// Rejects inf/nan/hex and trailing garbage.
std::optional<double> parse_decimal(std::string_view text);

}  // namespace azoswitch
