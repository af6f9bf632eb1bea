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

#include "azoswitch/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "azoswitch/hamiltonians.hpp"

namespace azoswitch {

EvolutionSchedule::EvolutionSchedule(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  for (const Segment& s : segments_) {
    if (!std::isfinite(s.duration) || s.duration < 0.0) {
      throw std::invalid_argument("segment duration must be finite and >= 0");
    }
    if (!std::isfinite(s.j)) {
      throw std::invalid_argument("segment coupling must be finite");
    }
  }
}

double EvolutionSchedule::total_duration() const {
  double total = 0.0;
  for (const Segment& s : segments_) total += s.duration;
  return total;
}

double EvolutionSchedule::coupling_integral() const {
  double theta = 0.0;
  for (const Segment& s : segments_) theta += s.j * s.duration;
  return theta;
}

std::vector<double> EvolutionSchedule::boundaries() const {
  std::vector<double> out;
  double elapsed = 0.0;
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
    elapsed += segments_[i].duration;
    out.push_back(elapsed);
  }
  return out;
}

EvolutionSchedule EvolutionSchedule::truncated(double t) const {
  std::vector<Segment> kept;
  double elapsed = 0.0;
  for (const Segment& s : segments_) {
    if (elapsed >= t) break;
    Segment piece = s;
    piece.duration = std::min(s.duration, t - elapsed);
    elapsed += s.duration;
    kept.push_back(std::move(piece));
  }
  return EvolutionSchedule(std::move(kept));
}

QuantumState evolve(const EvolutionSchedule& schedule, const QuantumState& initial) {
  if (initial.qubits() != 2) {
    throw std::invalid_argument("evolve needs a 2-qubit state, got " +
                                std::to_string(initial.qubits()) + " qubits");
  }
  QuantumState state = initial;
  for (const Segment& s : schedule.segments()) {
    state = apply(u_rot(s.j, s.duration), state);
  }
  return state;
}

double mes_time(double j, int n) {
  if (n < 0) {
    throw std::invalid_argument("mes_time order n must be >= 0");
  }
  if (!std::isfinite(j)) {
    throw std::invalid_argument("coupling must be finite");
  }
  if (j == 0.0) {
    throw std::domain_error("zero coupling never produces a maximally entangled state");
  }
  return std::numbers::pi / std::abs(j) * static_cast<double>(2 * n + 1);
}

std::vector<TrajectoryPoint> concurrence_trajectory(const EvolutionSchedule& schedule,
                                                    const QuantumState& initial, int samples) {
  if (samples < 2) {
    throw std::invalid_argument("trajectory needs at least 2 samples");
  }
  const double total = schedule.total_duration();
  std::vector<TrajectoryPoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double t = k + 1 == samples ? total : total * k / (samples - 1);
    QuantumState state = evolve(schedule.truncated(t), initial);
    const double c = concurrence(state);
    out.push_back(TrajectoryPoint{t, c, std::move(state)});
  }
  return out;
}

double remaining_time_to_mes(double theta, double j_next) {
  if (!std::isfinite(theta) || !std::isfinite(j_next)) {
    throw std::invalid_argument("remaining_time_to_mes arguments must be finite");
  }
  if (j_next == 0.0) {
    throw std::domain_error("zero coupling never reaches a maximally entangled state");
  }
  constexpr double pi = std::numbers::pi;
  // Odd multiples of pi are (2m + 1) pi for integer m; pick the first one
  // the phase meets while moving in the direction of j_next.
  const double position = (theta / pi - 1.0) / 2.0;
  const double nearest = std::round(position);
  if (std::abs(position - nearest) <= 1e-12 * std::max(1.0, std::abs(position))) {
    return 0.0;
  }
  const double m = j_next > 0.0 ? std::ceil(position) : std::floor(position);
  const double target = (2.0 * m + 1.0) * pi;
  return (target - theta) / j_next;
}

}  // namespace azoswitch
