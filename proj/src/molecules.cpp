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

#include "azoswitch/molecules.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "azoswitch/error.hpp"
#include "azoswitch/numfmt.hpp"

namespace azoswitch {
namespace {

constexpr const char* kComputedNote = "6-31+G(d) basis; GIAO shifts; IEFPCM chloroform solvent";
constexpr const char* kExperimentNote =
    "nitrogen shift measured in a polycrystalline solid; carbon shift and C-C coupling in "
    "chloroform solution";

const std::array<IsomerRecord, 10> kTable = {{
    {Isomer::tab, Method::b3lyp, 504, 157, 37, -3.8, 0.84, kComputedNote},
    {Isomer::tab, Method::b3pw91, 501, 153, 35, -4.5, 0.70, kComputedNote},
    {Isomer::tab, Method::pw91pw91, 486, 157, 33, -8.9, 0.35, kComputedNote},
    {Isomer::tab, Method::pbepbe, 486, 156, 33, -8.5, 0.37, kComputedNote},
    {Isomer::tab, Method::experiment, 509, 153, 34, std::nullopt, std::nullopt, kExperimentNote},
    {Isomer::cab, Method::b3lyp, 547, 159, 37, -16, 0.20, kComputedNote},
    {Isomer::cab, Method::b3pw91, 542, 155, 36, -16, 0.20, kComputedNote},
    {Isomer::cab, Method::pw91pw91, 525, 158, 34, -21, 0.15, kComputedNote},
    {Isomer::cab, Method::pbepbe, 524, 158, 34, -20, 0.15, kComputedNote},
    {Isomer::cab, Method::experiment, 529, 154, 32, std::nullopt, std::nullopt, kExperimentNote},
}};

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

SpinSystem::LabelPair ordered(std::string_view a, std::string_view b) {
  return a < b ? SpinSystem::LabelPair{std::string(a), std::string(b)}
               : SpinSystem::LabelPair{std::string(b), std::string(a)};
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double number_or_throw(std::string_view token, int line, const char* what) {
  const auto value = parse_decimal(token);
  if (!value) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return *value;
}

std::string strip_prime(const std::string& label) {
  return !label.empty() && label.back() == '\'' ? label.substr(0, label.size() - 1) : label;
}

}  // namespace

std::string_view to_string(Isomer isomer) { return isomer == Isomer::tab ? "TAB" : "CAB"; }

std::string_view to_string(Method method) {
  switch (method) {
    case Method::b3lyp:
      return "B3LYP";
    case Method::b3pw91:
      return "B3PW91";
    case Method::pw91pw91:
      return "PW91PW91";
    case Method::pbepbe:
      return "PBEPBE";
    case Method::experiment:
      break;
  }
  return "EXPERIMENT";
}

Isomer parse_isomer(std::string_view name) {
  const std::string key = upper(name);
  if (key == "TAB") return Isomer::tab;
  if (key == "CAB") return Isomer::cab;
  throw std::invalid_argument("unknown isomer '" + std::string(name) + "' (expected TAB or CAB)");
}

Method parse_method(std::string_view name) {
  const std::string key = upper(name);
  for (Method m : {Method::b3lyp, Method::b3pw91, Method::pw91pw91, Method::pbepbe,
                   Method::experiment}) {
    if (key == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::span<const IsomerRecord> builtin_table() { return kTable; }

const IsomerRecord& lookup(std::span<const IsomerRecord> table, Isomer isomer, Method method) {
  const auto it = std::find_if(table.begin(), table.end(), [&](const IsomerRecord& r) {
    return r.isomer == isomer && r.method == method;
  });
  if (it == table.end()) {
    throw std::out_of_range("no dataset row for " + std::string(to_string(isomer)) + "/" +
                            std::string(to_string(method)));
  }
  return *it;
}

const IsomerRecord& lookup(Isomer isomer, std::string_view method) {
  return lookup(builtin_table(), isomer, parse_method(method));
}

void SpinSystem::add_spin(Spin spin) {
  if (spin.label.empty() || spin.nuclide.empty()) {
    throw std::invalid_argument("spin label and nuclide must be non-empty");
  }
  if (find(spin.label) != nullptr) {
    throw std::invalid_argument("duplicate spin label '" + spin.label + "'");
  }
  if (!std::isfinite(spin.shift_ppm)) {
    throw std::invalid_argument("spin '" + spin.label + "' has a non-finite shift");
  }
  spins_.push_back(std::move(spin));
}

void SpinSystem::set_coupling(const std::string& a, const std::string& b, double j_hz) {
  if (a == b) {
    throw std::invalid_argument("spin '" + a + "' cannot couple to itself");
  }
  for (const std::string* label : {&a, &b}) {
    if (find(*label) == nullptr) {
      throw std::invalid_argument("coupling references unknown spin '" + *label + "'");
    }
  }
  if (!std::isfinite(j_hz)) {
    throw std::invalid_argument("coupling " + a + "-" + b + " is not finite");
  }
  const LabelPair key = ordered(a, b);
  const auto it = couplings_.find(key);
  if (it != couplings_.end()) {
    if (it->second != j_hz) {
      throw std::invalid_argument("conflicting couplings for " + a + "-" + b + ": " +
                                  format_shortest(it->second) + " vs " + format_shortest(j_hz));
    }
    return;
  }
  couplings_.emplace(key, j_hz);
}

void SpinSystem::set_meta(const std::string& key, std::string value) {
  if (key.empty()) throw std::invalid_argument("meta key must be non-empty");
  meta_[key] = std::move(value);
}

const Spin* SpinSystem::find(std::string_view label) const {
  const auto it =
      std::find_if(spins_.begin(), spins_.end(), [&](const Spin& s) { return s.label == label; });
  return it == spins_.end() ? nullptr : &*it;
}

const Spin& SpinSystem::spin(std::string_view label) const {
  const Spin* s = find(label);
  if (s == nullptr) throw std::out_of_range("unknown spin '" + std::string(label) + "'");
  return *s;
}

std::optional<double> SpinSystem::coupling(std::string_view a, std::string_view b) const {
  const auto it = couplings_.find(ordered(a, b));
  if (it == couplings_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::string, double>> SpinSystem::partners(std::string_view label) const {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [key, j] : couplings_) {
    if (key.first == label) out.emplace_back(key.second, j);
    if (key.second == label) out.emplace_back(key.first, j);
  }
  return out;
}

std::optional<std::string> SpinSystem::meta_value(const std::string& key) const {
  const auto it = meta_.find(key);
  if (it == meta_.end()) return std::nullopt;
  return it->second;
}

SpinSystem SpinSystem::relabeled(const std::map<std::string, std::string>& mapping) const {
  auto rename = [&](const std::string& label) {
    const auto it = mapping.find(label);
    return it == mapping.end() ? label : it->second;
  };
  SpinSystem out;
  for (const Spin& s : spins_) out.add_spin(Spin{rename(s.label), s.nuclide, s.shift_ppm});
  for (const auto& [key, j] : couplings_) out.set_coupling(rename(key.first), rename(key.second), j);
  out.meta_ = meta_;
  return out;
}

std::string carbon_label(Isomer isomer) { return isomer == Isomer::tab ? "C1" : "C1'"; }
std::string nitrogen_label(Isomer isomer) { return isomer == Isomer::tab ? "N7" : "N7'"; }

SpinSystem record_system(const IsomerRecord& record) {
  SpinSystem sys;
  sys.add_spin(Spin{carbon_label(record.isomer), "13C", record.shift_c});
  sys.add_spin(Spin{nitrogen_label(record.isomer), "15N", record.shift_n});
  if (record.j_cn) {
    sys.set_coupling(carbon_label(record.isomer), nitrogen_label(record.isomer), *record.j_cn);
  }
  sys.set_meta("isomer", std::string(to_string(record.isomer)));
  sys.set_meta("method", std::string(to_string(record.method)));
  sys.set_meta("jcc_avg", format_shortest(record.j_cc_avg));
  if (record.tau_table) sys.set_meta("tau_table", format_shortest(*record.tau_table));
  if (!record.note.empty()) sys.set_meta("note", record.note);
  sys.set_meta("reference_13C", "TMS");
  sys.set_meta("reference_15N", "NH3");
  return sys;
}

SpinSystem two_spin_system(const IsomerRecord& record) {
  if (!record.j_cn) {
    throw std::invalid_argument("no C-N coupling available for " +
                                std::string(to_string(record.isomer)) + "/" +
                                std::string(to_string(record.method)));
  }
  return record_system(record);
}

IsomerRecord record_from_system(const SpinSystem& system) {
  auto required = [&](const std::string& key) {
    const auto value = system.meta_value(key);
    if (!value) throw ParseError(0, "dataset entry lacks 'meta " + key + "'");
    return *value;
  };
  auto number = [&](const std::string& key, const std::string& text) {
    const auto value = parse_decimal(text);
    if (!value) throw ParseError(0, "meta " + key + " is not a number: '" + text + "'");
    return *value;
  };
  auto only_spin = [&](const char* nuclide) -> const Spin& {
    const Spin* found = nullptr;
    for (const Spin& s : system.spins()) {
      if (s.nuclide != nuclide) continue;
      if (found != nullptr) throw ParseError(0, std::string("more than one ") + nuclide + " spin");
      found = &s;
    }
    if (found == nullptr) throw ParseError(0, std::string("no ") + nuclide + " spin");
    return *found;
  };

  IsomerRecord record{};
  try {
    record.isomer = parse_isomer(required("isomer"));
    record.method = parse_method(required("method"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  const Spin& carbon = only_spin("13C");
  const Spin& nitrogen = only_spin("15N");
  record.shift_c = carbon.shift_ppm;
  record.shift_n = nitrogen.shift_ppm;
  record.j_cc_avg = number("jcc_avg", required("jcc_avg"));
  record.j_cn = system.coupling(carbon.label, nitrogen.label);
  if (const auto tau = system.meta_value("tau_table")) record.tau_table = number("tau_table", *tau);
  record.note = system.meta_value("note").value_or("");
  return record;
}

SpinSystem azobenzene_three_spin(const IsomerRecord& record) {
  SpinSystem sys = record_system(record).relabeled(
      {{carbon_label(record.isomer), "C1"}, {nitrogen_label(record.isomer), "N7"}});
  sys.add_spin(Spin{"N7'", "15N", record.shift_n});
  sys.set_coupling("N7", "N7'", 0.0);
  return sys;
}

SpinSystem parse_spin_system(std::string_view text) {
  struct PendingCoupling {
    int line;
    std::string a;
    std::string b;
    double j;
  };
  SpinSystem sys;
  std::vector<PendingCoupling> couplings;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    const std::string_view keyword = tokens[0];
    if (keyword == "spin") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected 'spin <label> <nuclide> <shift_ppm>'");
      }
      const double shift = number_or_throw(tokens[3], line_no, "chemical shift");
      try {
        sys.add_spin(Spin{std::string(tokens[1]), std::string(tokens[2]), shift});
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
    } else if (keyword == "coupling") {
      if (tokens.size() != 4) {
        throw ParseError(line_no, "expected 'coupling <labelA> <labelB> <J_hz>'");
      }
      couplings.push_back({line_no, std::string(tokens[1]), std::string(tokens[2]),
                           number_or_throw(tokens[3], line_no, "coupling constant")});
    } else if (keyword == "meta") {
      if (tokens.size() < 3) throw ParseError(line_no, "expected 'meta <key> <value>'");
      const std::size_t key_end = tokens[1].data() + tokens[1].size() - line.data();
      sys.set_meta(std::string(tokens[1]), std::string(trim(line.substr(key_end))));
    } else {
      throw ParseError(line_no, "unknown statement '" + std::string(keyword) + "'");
    }
    if (eol == text.size()) break;
  }
  for (const PendingCoupling& c : couplings) {
    try {
      sys.set_coupling(c.a, c.b, c.j);
    } catch (const std::invalid_argument& e) {
      throw ParseError(c.line, e.what());
    }
  }
  return sys;
}

std::string serialize_spin_system(const SpinSystem& system) {
  std::ostringstream out;
  for (const auto& [key, value] : system.meta()) out << "meta " << key << ' ' << value << '\n';
  for (const Spin& s : system.spins()) {
    out << "spin " << s.label << ' ' << s.nuclide << ' ' << format_shortest(s.shift_ppm) << '\n';
  }
  for (const auto& [key, j] : system.couplings()) {
    out << "coupling " << key.first << ' ' << key.second << ' ' << format_shortest(j) << '\n';
  }
  return out.str();
}

SpinSystem read_spin_system_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open molecule file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_spin_system(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path);
  }
}

IsomerPair make_isomer_pair(SpinSystem tab, SpinSystem cab, Method method) {
  auto signature = [](const SpinSystem& s) {
    std::set<std::pair<std::string, std::string>> out;
    for (const Spin& spin : s.spins()) out.emplace(spin.label, spin.nuclide);
    return out;
  };
  if (signature(tab) != signature(cab)) {
    throw std::invalid_argument("isomer pair systems must share spin labels and nuclides");
  }
  return IsomerPair{std::move(tab), std::move(cab), method};
}

IsomerPair isomer_pair(Method method, std::span<const IsomerRecord> table) {
  auto canonical = [&](Isomer isomer) {
    const SpinSystem sys = two_spin_system(lookup(table, isomer, method));
    std::map<std::string, std::string> mapping;
    for (const Spin& s : sys.spins()) mapping[s.label] = strip_prime(s.label);
    return sys.relabeled(mapping);
  };
  return make_isomer_pair(canonical(Isomer::tab), canonical(Isomer::cab), method);
}

EvolutionSchedule isomer_schedule(const IsomerPair& pair, std::string_view spin_a,
                                  std::string_view spin_b, std::span<const double> switch_times,
                                  Isomer start, double total) {
  if (!std::isfinite(total) || total < 0.0) {
    throw std::invalid_argument("total duration must be finite and >= 0");
  }
  for (std::size_t i = 0; i < switch_times.size(); ++i) {
    const double t = switch_times[i];
    if (!std::isfinite(t) || t < 0.0 || t >= total) {
      throw std::invalid_argument("switch time " + format_shortest(t) + " must lie in [0, " +
                                  format_shortest(total) + ")");
    }
    if (i > 0 && !(t > switch_times[i - 1])) {
      throw std::invalid_argument("switch times must be strictly ascending");
    }
  }
  auto coupling_of = [&](Isomer isomer) {
    const SpinSystem& sys = pair.system(isomer);
    sys.spin(spin_a);
    sys.spin(spin_b);
    const auto j = sys.coupling(spin_a, spin_b);
    if (!j) {
      throw std::invalid_argument("no coupling between " + std::string(spin_a) + " and " +
                                  std::string(spin_b) + " in " + std::string(to_string(isomer)));
    }
    return *j;
  };
  auto tag_of = [&](Isomer isomer) {
    return std::string(to_string(isomer)) + "/" + std::string(to_string(pair.method));
  };

  std::vector<Segment> segments;
  Isomer current = start;
  double begin = 0.0;
  for (std::size_t i = 0; i <= switch_times.size(); ++i) {
    const double end = i < switch_times.size() ? switch_times[i] : total;
    segments.push_back(Segment{coupling_of(current), end - begin, tag_of(current)});
    begin = end;
    current = current == Isomer::tab ? Isomer::cab : Isomer::tab;
  }
  return EvolutionSchedule(std::move(segments));
}

}  // namespace azoswitch
