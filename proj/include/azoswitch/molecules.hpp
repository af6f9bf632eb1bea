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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "azoswitch/dynamics.hpp"

namespace azoswitch {

enum class Isomer { tab, cab };
enum class Method { b3lyp, b3pw91, pw91pw91, pbepbe, experiment };

inline constexpr Method kComputedMethods[] = {Method::b3lyp, Method::b3pw91, Method::pw91pw91,
                                              Method::pbepbe};

std::string_view to_string(Isomer isomer);
std::string_view to_string(Method method);
// Case-insensitive. Throws std::invalid_argument on unknown names.
Isomer parse_isomer(std::string_view name);
Method parse_method(std::string_view name);

// One row of the azobenzene dataset: nitrogen (7) and carbon (1) shifts, the
// averaged ortho carbon-carbon coupling, the carbon-nitrogen coupling and the
// printed maximal-entanglement time. Experimental rows have no C-N coupling
// or time.
struct IsomerRecord {
  Isomer isomer;
  Method method;
  double shift_n;   // ppm, relative to NH3
  double shift_c;   // ppm, relative to TMS
  double j_cc_avg;  // Hz, mean of J(C1,C2) and J(C1,C6); metadata only
  std::optional<double> j_cn;       // Hz
  std::optional<double> tau_table;  // s
  std::string note;

  bool computed() const { return method != Method::experiment; }
  friend bool operator==(const IsomerRecord&, const IsomerRecord&) = default;
};

// The ten built-in rows: four functionals plus experiment, for each isomer.
std::span<const IsomerRecord> builtin_table();

// Throws std::out_of_range when the (isomer, method) row is absent.
const IsomerRecord& lookup(std::span<const IsomerRecord> table, Isomer isomer, Method method);
const IsomerRecord& lookup(Isomer isomer, std::string_view method);

struct Spin {
  std::string label;
  std::string nuclide;  // e.g. "13C", "15N"
  double shift_ppm = 0.0;

  friend bool operator==(const Spin&, const Spin&) = default;
};

// Labelled spins with a symmetric, self-coupling-free J map and free-form
// string metadata.
class SpinSystem {
 public:
  using LabelPair = std::pair<std::string, std::string>;

  // Throws std::invalid_argument on duplicate labels or non-finite shifts.
  void add_spin(Spin spin);
  // Order of a and b is irrelevant. Throws on unknown labels, a == b, a
  // non-finite J, or an existing entry with a different value.
  void set_coupling(const std::string& a, const std::string& b, double j_hz);
  void set_meta(const std::string& key, std::string value);

  const std::vector<Spin>& spins() const { return spins_; }
  const Spin* find(std::string_view label) const;
  const Spin& spin(std::string_view label) const;
  std::optional<double> coupling(std::string_view a, std::string_view b) const;
  // Keys are stored with the lexicographically smaller label first.
  const std::map<LabelPair, double>& couplings() const { return couplings_; }
  std::vector<std::pair<std::string, double>> partners(std::string_view label) const;
  const std::map<std::string, std::string>& meta() const { return meta_; }
  std::optional<std::string> meta_value(const std::string& key) const;

  // Copy with spins renamed through `mapping`; unmapped labels are kept.
  SpinSystem relabeled(const std::map<std::string, std::string>& mapping) const;

  friend bool operator==(const SpinSystem&, const SpinSystem&) = default;

 private:
  std::vector<Spin> spins_;
  std::map<LabelPair, double> couplings_;
  std::map<std::string, std::string> meta_;
};

// Spin labels used for a record: C1/N7 for TAB, C1'/N7' for CAB.
std::string carbon_label(Isomer isomer);
std::string nitrogen_label(Isomer isomer);

// The modelled qubit pair {C1 (13C), N7 (15N)} with J(C1,N7) = j_cn. The
// C-C average is carried as metadata. Throws std::invalid_argument for rows
// without a C-N coupling.
SpinSystem two_spin_system(const IsomerRecord& record);

// Full molecule-file representation of a row, including experimental rows
// (which then have no coupling statement).
SpinSystem record_system(const IsomerRecord& record);
// Inverse of record_system. Throws ParseError(0, ...) on missing fields.
IsomerRecord record_from_system(const SpinSystem& system);

// Carbon plus both azo nitrogens, C1 / N7 / N7', with J(N7,N7') = 0.
SpinSystem azobenzene_three_spin(const IsomerRecord& record);

// Line-oriented molecule format:
//   spin <label> <nuclide> <shift_ppm>
//   coupling <labelA> <labelB> <J_hz>
//   meta <key> <value...>
// '#' starts a comment. Throws ParseError with a 1-based line number.
SpinSystem parse_spin_system(std::string_view text);
std::string serialize_spin_system(const SpinSystem& system);
SpinSystem read_spin_system_file(const std::string& path);

// Two isomers of the same molecule. Both systems carry identical spin labels
// and nuclides.
struct IsomerPair {
  SpinSystem tab;
  SpinSystem cab;
  Method method;

  const SpinSystem& system(Isomer isomer) const { return isomer == Isomer::tab ? tab : cab; }
};

IsomerPair make_isomer_pair(SpinSystem tab, SpinSystem cab, Method method);
// Built-in pair for a computed method, labelled C1/N7 in both isomers.
IsomerPair isomer_pair(Method method, std::span<const IsomerRecord> table = builtin_table());

// Alternates the isomers at each switch time, starting from `start`, and ends
// at `total`. Throws when the switch times are not strictly ascending, lie
// outside [0, total), or a label is unknown or the pair is uncoupled.
EvolutionSchedule isomer_schedule(const IsomerPair& pair, std::string_view spin_a,
                                  std::string_view spin_b, std::span<const double> switch_times,
                                  Isomer start, double total);

}  // namespace azoswitch
