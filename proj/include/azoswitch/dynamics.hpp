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

#include <string>
#include <vector>

#include "azoswitch/qcore.hpp"

namespace azoswitch {

// One constant-coupling interval. `tag` records provenance, e.g. "TAB/B3LYP".
struct Segment {
  double j = 0.0;
  double duration = 0.0;
  std::string tag;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Piecewise-constant coupling history. Isomer switches are instantaneous:
// segment boundaries carry no evolution of their own.
class EvolutionSchedule {
 public:
  EvolutionSchedule() = default;
  // Throws std::invalid_argument on a negative or non-finite duration or a
  // non-finite coupling.
  explicit EvolutionSchedule(std::vector<Segment> segments);

  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  double total_duration() const;

  // Sum of J_i * t_i. The propagator phase on |00> is minus a quarter of it.
  double coupling_integral() const;

  // Interior segment boundaries (cumulative end times of all but the last segment).
  std::vector<double> boundaries() const;

  // The prefix covering [0, t]; the last kept segment is shortened to fit.
  EvolutionSchedule truncated(double t) const;

  friend bool operator==(const EvolutionSchedule&, const EvolutionSchedule&) = default;

 private:
  std::vector<Segment> segments_;
};

// Product of u_rot(J_i, t_i) applied to a 2-qubit state, earliest segment first.
QuantumState evolve(const EvolutionSchedule& schedule, const QuantumState& initial);

// Time at which the Ising phase first reaches an odd multiple of pi:
// (pi / |J|) (2n + 1). Throws std::domain_error for J = 0, where no finite
// entangling time exists.
double mes_time(double j, int n = 0);

struct TrajectoryPoint {
  double t;
  double concurrence;
  QuantumState state;
};

// `samples` uniformly spaced times over [0, total_duration], both endpoints
// included. Each point is evolved independently from the initial state, so
// the result does not depend on evaluation order.
std::vector<TrajectoryPoint> concurrence_trajectory(const EvolutionSchedule& schedule,
                                                    const QuantumState& initial, int samples);

// Smallest t >= 0 such that |theta + j_next t| is an odd multiple of pi,
// i.e. how long to keep evolving under the new coupling until |++> becomes
// maximally entangled. `theta` is a coupling integral as returned by
// EvolutionSchedule::coupling_integral().
double remaining_time_to_mes(double theta, double j_next);

}  // namespace azoswitch
