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

#include <stdexcept>
#include <string>

namespace azoswitch {

// Malformed input document. `line()` is 1-based; 0 when not line-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message, const std::string& source = {})
      : std::runtime_error(describe(line, message, source)),
        line_(line),
        message_(message) {}

  int line() const { return line_; }
  const std::string& message() const { return message_; }

 private:
  static std::string describe(int line, const std::string& message, const std::string& source) {
    std::string out = source.empty() ? std::string() : source + ": ";
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    return out + message;
  }

  int line_;
  std::string message_;
};

}  // namespace azoswitch
