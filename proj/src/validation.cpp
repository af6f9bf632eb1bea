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

#include "azoswitch/validation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "azoswitch/dynamics.hpp"
#include "azoswitch/hamiltonians.hpp"
#include "azoswitch/numfmt.hpp"
#include "azoswitch/spectrum.hpp"

namespace azoswitch {
namespace {

using Rng = std::mt19937_64;

std::string sci(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

std::string row_name(const IsomerRecord& r) {
  return std::string(to_string(r.isomer)) + "/" + std::string(to_string(r.method));
}

QuantumState random_state(Rng& rng, int qubits) {
  std::normal_distribution<double> gauss;
  Eigen::VectorXcd v(Eigen::Index{1} << qubits);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(gauss(rng), gauss(rng));
  return QuantumState::normalized(std::move(v));
}

// Haar-like unitary from the QR factorization of a complex Gaussian matrix.
Operator random_unitary(Rng& rng, int qubits) {
  std::normal_distribution<double> gauss;
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  Eigen::MatrixXcd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = cplx(gauss(rng), gauss(rng));
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return Operator::propagator(std::move(q));
}

std::vector<double> computed_couplings(std::span<const IsomerRecord> table) {
  std::vector<double> out;
  for (const IsomerRecord& r : table) {
    if (r.computed() && r.j_cn) out.push_back(*r.j_cn);
  }
  return out;
}

CheckResult tau_regression(std::span<const IsomerRecord> table) {
  CheckResult res{"1", "dataset entangling-time regression", true, {}};
  double worst = 0.0;
  std::string worst_row = "-";
  int rows = 0;
  for (const IsomerRecord& r : table) {
    if (!r.computed()) continue;
    ++rows;
    if (!r.j_cn || !r.tau_table || *r.j_cn == 0.0) {
      res.passed = false;
      res.detail = row_name(r) + " lacks a coupling or a time";
      return res;
    }
    const double delta = std::abs(mes_time(*r.j_cn, 0) - *r.tau_table);
    if (delta > worst) worst = delta, worst_row = row_name(r);
  }
  res.passed = rows == 8 && worst <= limits::kTauAbs;
  res.detail = std::to_string(rows) + " rows, worst |pi/|J| - tau| = " + format_fixed(worst, 4) +
               " s (" + worst_row + "), limit " + format_fixed(limits::kTauAbs, 3) + " s";
  return res;
}

CheckResult coupling_ratio(std::span<const IsomerRecord> table) {
  CheckResult res{"2a", "CAB/TAB coupling ratio per method", true, {}};
  std::string detail;
  for (std::size_t i = 0; i < std::size(kComputedMethods); ++i) {
    const Method m = kComputedMethods[i];
    double ratio = std::numeric_limits<double>::quiet_NaN();
    try {
      const auto& tab = lookup(table, Isomer::tab, m);
      const auto& cab = lookup(table, Isomer::cab, m);
      if (tab.j_cn && cab.j_cn) ratio = std::abs(*cab.j_cn) / std::abs(*tab.j_cn);
    } catch (const std::out_of_range&) {
    }
    const bool ok = std::abs(ratio - kQuotedRatios[i]) <= limits::kRatioAbs;
    res.passed = res.passed && ok;
    if (!detail.empty()) detail += ", ";
    detail += std::string(to_string(m)) + " " + format_fixed(ratio, 3) + " vs " +
              format_shortest(kQuotedRatios[i]);
  }
  res.detail = detail + " (limit +-" + format_shortest(limits::kRatioAbs) + ")";
  return res;
}

CheckResult tau_ratio(std::span<const IsomerRecord> table) {
  CheckResult res{"2b", "B3LYP entangling-time ratio", false, {}};
  try {
    const double tau_tab = mes_time(lookup(table, Isomer::tab, Method::b3lyp).j_cn.value(), 0);
    const double tau_cab = mes_time(lookup(table, Isomer::cab, Method::b3lyp).j_cn.value(), 0);
    const double ratio = tau_tab / tau_cab;
    res.passed = ratio >= limits::kTauRatioLo && ratio <= limits::kTauRatioHi;
    res.detail = "tau(TAB)/tau(CAB) = " + format_fixed(ratio, 4) + " in [" +
                 format_shortest(limits::kTauRatioLo) + ", " +
                 format_shortest(limits::kTauRatioHi) + "]; " +
                 (tau_tab > tau_cab ? "TAB" : "CAB") + " is the slower isomer";
  } catch (const std::exception& e) {
    res.detail = e.what();
  }
  return res;
}

CheckResult closed_form_propagator() {
  CheckResult res{"3a", "closed-form propagator vs matrix exponential", false, {}};
  Rng rng(7);
  std::uniform_real_distribution<double> j_dist(-50.0, 50.0);
  std::uniform_real_distribution<double> t_dist(0.0, 2.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double j = j_dist(rng);
    const double t = t_dist(rng);
    worst = std::max(worst,
                     max_abs_diff(u_rot(j, t), matrix_exponential(secular_hamiltonian(j), t)));
  }
  res.passed = worst <= limits::kClosedFormAbs;
  res.detail = "100 draws, max entry error " + sci(worst);
  return res;
}

CheckResult plus_zero_overlaps() {
  CheckResult res{"3b", "evolved |+0> overlaps", false, {}};
  Rng rng(8);
  std::uniform_real_distribution<double> j_dist(-50.0, 50.0);
  std::uniform_real_distribution<double> t_dist(0.0, 2.0);
  const QuantumState plus0 = product_state("+0");
  const QuantumState minus0 = product_state("-0");
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double j = j_dist(rng);
    const double t = t_dist(rng);
    const QuantumState psi = evolve(EvolutionSchedule({{j, t, ""}}), plus0);
    worst = std::max(worst, std::abs(std::abs(plus0.inner(psi)) - std::abs(std::cos(j * t / 4))));
    worst = std::max(worst, std::abs(std::abs(minus0.inner(psi)) - std::abs(std::sin(j * t / 4))));
  }
  res.passed = worst <= limits::kClosedFormAbs;
  res.detail = "100 draws, max overlap error " + sci(worst);
  return res;
}

CheckResult mes_certification(std::span<const IsomerRecord> table) {
  CheckResult res{"4a", "maximal entanglement of |++> at pi/|J|", false, {}};
  const QuantumState plusplus = product_state("++");
  const auto couplings = computed_couplings(table);
  double worst = 0.0;
  for (double j : couplings) {
    for (int n = 0; n <= 2; ++n) {
      const QuantumState psi = apply(u_rot(j, mes_time(j, n)), plusplus);
      worst = std::max(worst, std::abs(concurrence(psi) - 1.0));
    }
  }
  res.passed = couplings.size() == 8 && worst <= limits::kMesAbs;
  res.detail = std::to_string(couplings.size()) + " couplings x n=0..2, max |C - 1| " + sci(worst);
  return res;
}

CheckResult trajectory_formula(std::span<const IsomerRecord> table) {
  CheckResult res{"4b", "concurrence trajectory matches |sin(Jt/2)|", false, {}};
  const QuantumState plusplus = product_state("++");
  double worst = 0.0;
  const auto couplings = computed_couplings(table);
  for (double j : couplings) {
    const EvolutionSchedule schedule({{j, 2.0 * mes_time(j, 0), ""}});
    for (const TrajectoryPoint& p : concurrence_trajectory(schedule, plusplus, 100)) {
      worst = std::max(worst, std::abs(p.concurrence - std::abs(std::sin(j * p.t / 2))));
    }
  }
  res.passed = !couplings.empty() && worst <= limits::kMesAbs;
  res.detail = "100 samples per coupling, max error " + sci(worst);
  return res;
}

CheckResult order_scaling(std::span<const IsomerRecord> table) {
  CheckResult res{"4c", "entangling time scales as (2n+1)", true, {}};
  for (double j : computed_couplings(table)) {
    const double base = mes_time(j, 0);
    for (int n = 0; n <= 2; ++n) {
      if (mes_time(j, n) != (2 * n + 1) * base) res.passed = false;
    }
  }
  res.detail = res.passed ? "exact for n = 0, 1, 2" : "mismatch";
  return res;
}

CheckResult product_state_fact(std::span<const IsomerRecord> table) {
  CheckResult res{"5", "|+0> stays a product state", false, {}};
  const QuantumState plus0 = product_state("+0");
  double worst = 0.0;
  int schedules = 0;
  for (Method m : kComputedMethods) {
    try {
      const IsomerPair pair = isomer_pair(m, table);
      const double total = mes_time(pair.tab.coupling("C1", "N7").value(), 0);
      const double switches[] = {total / 2};
      const auto schedule = isomer_schedule(pair, "C1", "N7", switches, Isomer::tab, total);
      for (const TrajectoryPoint& p : concurrence_trajectory(schedule, plus0, 101)) {
        worst = std::max(worst, p.concurrence);
      }
      ++schedules;
    } catch (const std::exception&) {
    }
  }
  res.passed = schedules == 4 && worst <= limits::kProductAbs;
  res.detail = std::to_string(schedules) + " switched schedules x 101 samples, max C " + sci(worst);
  return res;
}

CheckResult rotating_frame() {
  CheckResult res{"6", "rotating-frame consistency", false, {}};
  const TwoSpinParameters p{1e5, 3e5, 10.0};
  const double t = std::numbers::pi / 10.0;
  const QuantumState initial = product_state("++");
  const QuantumState lab = rotating_frame_state(p, initial, t);
  const QuantumState secular = apply(u_rot(p.j, t), initial);
  const double infidelity = 1.0 - fidelity(lab, secular);
  res.passed = infidelity <= limits::kFrameInfidelity;
  res.detail = "omega = (1e5, 3e5), J = 10, t = pi/10: infidelity " + sci(infidelity) +
               ", limit " + sci(limits::kFrameInfidelity);
  return res;
}

CheckResult norm_preservation() {
  CheckResult res{"7a", "norm preservation", false, {}};
  Rng rng(11);
  std::uniform_real_distribution<double> j_dist(-50.0, 50.0);
  std::uniform_real_distribution<double> t_dist(0.0, 2.0);
  double worst = 0.0;
  for (int k = 0; k < limits::kRandomTrials; ++k) {
    const QuantumState psi = random_state(rng, 2);
    const Operator ops[] = {u_rot(j_dist(rng), t_dist(rng)), hadamard(k % 2, 2),
                            random_unitary(rng, 2)};
    for (const Operator& op : ops) worst = std::max(worst, std::abs(apply(op, psi).norm() - 1.0));
  }
  res.passed = worst <= limits::kNormAbs;
  res.detail = std::to_string(limits::kRandomTrials) + " states x 3 unitaries, max drift " + sci(worst);
  return res;
}

CheckResult concurrence_bounds() {
  CheckResult res{"7b", "concurrence bounds", true, {}};
  Rng rng(12);
  double lo = 1.0;
  double hi = 0.0;
  for (int k = 0; k < limits::kRandomTrials; ++k) {
    const double c = concurrence(random_state(rng, 2));
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  res.passed = lo >= 0.0 && hi <= 1.0;
  res.detail = std::to_string(limits::kRandomTrials) + " states, range [" + format_fixed(lo, 4) +
               ", " + format_fixed(hi, 4) + "]";
  return res;
}

CheckResult local_invariance() {
  CheckResult res{"7c", "concurrence local-unitary invariance", false, {}};
  Rng rng(13);
  double worst = 0.0;
  for (int k = 0; k < limits::kRandomTrials; ++k) {
    const QuantumState psi = random_state(rng, 2);
    const Operator local = kron(random_unitary(rng, 1), random_unitary(rng, 1));
    worst = std::max(worst, std::abs(concurrence(apply(local, psi)) - concurrence(psi)));
  }
  res.passed = worst <= limits::kLocalInvariance;
  res.detail = std::to_string(limits::kRandomTrials) + " draws, max change " + sci(worst);
  return res;
}

CheckResult order_invariance() {
  CheckResult res{"7d", "schedule segment-order invariance", false, {}};
  Rng rng(14);
  std::uniform_real_distribution<double> j_dist(-25.0, 25.0);
  std::uniform_real_distribution<double> t_dist(0.0, 0.5);
  std::uniform_int_distribution<int> len_dist(2, 6);
  double worst = 0.0;
  for (int k = 0; k < limits::kRandomTrials; ++k) {
    std::vector<Segment> segments(static_cast<std::size_t>(len_dist(rng)));
    for (Segment& s : segments) s = Segment{j_dist(rng), t_dist(rng), ""};
    const QuantumState psi = random_state(rng, 2);
    const QuantumState a = evolve(EvolutionSchedule(segments), psi);
    std::shuffle(segments.begin(), segments.end(), rng);
    const QuantumState b = evolve(EvolutionSchedule(segments), psi);
    worst = std::max(worst, (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff());
  }
  res.passed = worst <= limits::kNormAbs;
  res.detail = std::to_string(limits::kRandomTrials) + " shuffled schedules, max amplitude diff " +
               sci(worst);
  return res;
}

CheckResult molecule_round_trip(std::span<const IsomerRecord> table) {
  CheckResult res{"7e", "molecule file round trip", true, {}};
  int systems = 0;
  for (const IsomerRecord& r : table) {
    for (const SpinSystem& sys : {record_system(r), azobenzene_three_spin(r)}) {
      const std::string text = serialize_spin_system(sys);
      const SpinSystem parsed = parse_spin_system(text);
      ++systems;
      if (!(parsed == sys) || serialize_spin_system(parsed) != text ||
          !(record_from_system(record_system(r)) == r)) {
        res.passed = false;
      }
    }
  }
  res.detail = std::to_string(systems) + " systems serialize -> parse -> serialize unchanged";
  return res;
}

CheckResult spectrum_invariants(std::span<const IsomerRecord> table) {
  CheckResult res{"7f", "first-order spectrum intensity and splitting", true, {}};
  const BaseFrequencies bases{{"13C", 100.0}, {"15N", 40.5}};
  double worst_sum = 0.0;
  double worst_split = 0.0;
  int doublets = 0;
  for (const IsomerRecord& r : table) {
    if (!r.j_cn || *r.j_cn == 0.0) continue;
    const SpinSystem sys = two_spin_system(r);
    const PeakList list = first_order_peaks(sys, bases);
    for (const Spin& s : sys.spins()) {
      std::vector<Peak> own;
      double sum = 0.0;
      for (const Peak& p : list.peaks) {
        if (p.owner == s.label) own.push_back(p), sum += p.intensity;
      }
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
      if (own.size() != 2) {
        res.passed = false;
        continue;
      }
      ++doublets;
      const double center = ppm_to_hz(s.shift_ppm, bases.at(s.nuclide));
      worst_split = std::max(worst_split, std::abs((own[1].frequency_hz - own[0].frequency_hz) -
                                                   std::abs(*r.j_cn)));
      worst_split = std::max(worst_split, std::abs((own[0].frequency_hz + own[1].frequency_hz) / 2 -
                                                   center));
    }
  }
  res.passed = res.passed && worst_sum <= 1e-12 && worst_split <= 1e-9 && doublets > 0;
  res.detail = std::to_string(doublets) + " doublets, intensity error " + sci(worst_sum) +
               ", splitting error " + sci(worst_split) + " Hz";
  return res;
}

}  // namespace

std::vector<CheckResult> run_validation(std::span<const IsomerRecord> table) {
  std::vector<CheckResult> out;
  auto guarded = [&](auto&& check) {
    try {
      out.push_back(check());
    } catch (const std::exception& e) {
      out.push_back(CheckResult{"?", "check raised", false, e.what()});
    }
  };
  guarded([&] { return tau_regression(table); });
  guarded([&] { return coupling_ratio(table); });
  guarded([&] { return tau_ratio(table); });
  guarded([&] { return closed_form_propagator(); });
  guarded([&] { return plus_zero_overlaps(); });
  guarded([&] { return mes_certification(table); });
  guarded([&] { return trajectory_formula(table); });
  guarded([&] { return order_scaling(table); });
  guarded([&] { return product_state_fact(table); });
  guarded([&] { return rotating_frame(); });
  guarded([&] { return norm_preservation(); });
  guarded([&] { return concurrence_bounds(); });
  guarded([&] { return local_invariance(); });
  guarded([&] { return order_invariance(); });
  guarded([&] { return molecule_round_trip(table); });
  guarded([&] { return spectrum_invariants(table); });
  return out;
}

std::string format_report(std::span<const CheckResult> results) {
  std::string out;
  for (const CheckResult& r : results) {
    out += r.passed ? "PASS" : "FAIL";
    out += " [" + r.id + "] " + r.name + ": " + r.detail + "\n";
  }
  return out;
}

bool all_passed(std::span<const CheckResult> results) {
  return !results.empty() &&
         std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace azoswitch
