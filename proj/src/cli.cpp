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

#include "azoswitch/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "azoswitch/dynamics.hpp"
#include "azoswitch/error.hpp"
#include "azoswitch/molecules.hpp"
#include "azoswitch/numfmt.hpp"
#include "azoswitch/spectrum.hpp"
#include "azoswitch/svg.hpp"
#include "azoswitch/validation.hpp"

namespace azoswitch::cli {
namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kInitTokens = {"00", "01", "10", "11", "+0", "++"};

// Raised for flag combinations CLI11 cannot express; maps to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an output file cannot be written; maps to kInputFile.
struct OutputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EvolveOptions {
  std::string molecule;
  std::string method = "B3LYP";
  std::vector<double> switch_at;
  std::optional<double> duration;
  bool until_mes = false;
  std::vector<std::string> segments;
  std::string init = "++";
  int samples = 101;
  std::string out;
  std::string svg;
};

struct SpectrumOptions {
  std::string molecule;
  std::string method = "B3LYP";
  std::string molecule_file;
  std::vector<std::string> bases;
  std::string base_file;
  std::string out;
  std::string svg;
  double linewidth = 1.0;
};

struct TableOptions {
  std::string table_dir;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw OutputError("cannot write '" + path + "'");
}

std::vector<IsomerRecord> load_table(const std::string& dir) {
  if (dir.empty()) {
    const auto table = builtin_table();
    return {table.begin(), table.end()};
  }
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".mol") files.push_back(entry.path());
  }
  if (ec) throw ParseError(0, "cannot read directory '" + dir + "'");
  std::sort(files.begin(), files.end());
  std::vector<IsomerRecord> out;
  for (const fs::path& path : files) {
    try {
      out.push_back(record_from_system(read_spin_system_file(path.string())));
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.message(), path.string());
    }
  }
  if (out.empty()) throw ParseError(0, "no .mol files in '" + dir + "'");
  // Same row order as the embedded table, whatever the file names are.
  std::stable_sort(out.begin(), out.end(), [](const IsomerRecord& a, const IsomerRecord& b) {
    return std::pair{a.isomer, a.method} < std::pair{b.isomer, b.method};
  });
  return out;
}

int cmd_table(const TableOptions& opt, std::ostream& out) {
  const std::vector<IsomerRecord> table = load_table(opt.table_dir);
  bool ok = true;
  out << "isomer method j_cn_hz tau_computed_s tau_table_s abs_delta_s\n";
  for (const IsomerRecord& r : table) {
    if (!r.computed()) continue;
    out << to_string(r.isomer) << ' ' << to_string(r.method) << ' ';
    if (!r.j_cn || !r.tau_table || *r.j_cn == 0.0) {
      out << "missing\n";
      ok = false;
      continue;
    }
    const double tau = mes_time(*r.j_cn, 0);
    const double delta = std::abs(tau - *r.tau_table);
    ok = ok && delta <= limits::kTauAbs;
    out << format_shortest(*r.j_cn) << ' ' << format_fixed(tau, 4) << ' '
        << format_shortest(*r.tau_table) << ' ' << format_fixed(delta, 4) << '\n';
  }
  out << "method ratio_cab_over_tab quoted abs_delta\n";
  for (std::size_t i = 0; i < std::size(kComputedMethods); ++i) {
    const Method m = kComputedMethods[i];
    out << to_string(m) << ' ';
    try {
      const double ratio = std::abs(lookup(table, Isomer::cab, m).j_cn.value()) /
                           std::abs(lookup(table, Isomer::tab, m).j_cn.value());
      const double delta = std::abs(ratio - kQuotedRatios[i]);
      ok = ok && delta <= limits::kRatioAbs;
      out << format_fixed(ratio, 4) << ' ' << format_shortest(kQuotedRatios[i]) << ' '
          << format_fixed(delta, 4) << '\n';
    } catch (const std::exception&) {
      out << "missing\n";
      ok = false;
    }
  }
  out << (ok ? "table: all rows within tolerance\n" : "table: tolerance violated\n");
  return ok ? kSuccess : kCheckFailed;
}

std::vector<Segment> parse_segments(const std::vector<std::string>& specs) {
  std::vector<Segment> out;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const std::string& s = specs[i];
    const auto colon = s.find(':');
    const auto j = colon == std::string::npos ? std::nullopt : parse_decimal(s.substr(0, colon));
    const auto t = colon == std::string::npos ? std::nullopt : parse_decimal(s.substr(colon + 1));
    if (!j || !t) throw UsageError("--segment expects <J>:<seconds>, got '" + s + "'");
    out.push_back(Segment{*j, *t, "segment" + std::to_string(i + 1)});
  }
  return out;
}

EvolutionSchedule build_schedule(const EvolveOptions& opt) {
  if (!opt.segments.empty()) {
    if (!opt.molecule.empty() || !opt.switch_at.empty() || opt.duration || opt.until_mes) {
      throw UsageError("--segment cannot be combined with --molecule/--switch-at/--duration");
    }
    return EvolutionSchedule(parse_segments(opt.segments));
  }
  if (opt.molecule.empty()) throw UsageError("give --molecule TAB|CAB or --segment J:t");
  if (opt.duration && opt.until_mes) throw UsageError("--duration and --until-mes are exclusive");

  const Isomer start = parse_isomer(opt.molecule);
  const IsomerPair pair = isomer_pair(parse_method(opt.method));
  const std::string a = carbon_label(Isomer::tab);
  const std::string b = nitrogen_label(Isomer::tab);
  if (opt.duration) return isomer_schedule(pair, a, b, opt.switch_at, start, *opt.duration);

  // Run until |++> is maximally entangled under the isomer active after the last switch.
  const double last = opt.switch_at.empty() ? 0.0 : opt.switch_at.back();
  const EvolutionSchedule probe = isomer_schedule(pair, a, b, opt.switch_at, start, last + 1.0);
  std::vector<Segment> segments = probe.segments();
  Segment final_segment = segments.back();
  segments.pop_back();
  const double theta = EvolutionSchedule(segments).coupling_integral();
  final_segment.duration = remaining_time_to_mes(theta, final_segment.j);
  segments.push_back(std::move(final_segment));
  return EvolutionSchedule(std::move(segments));
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& points) {
  std::string out = "t,concurrence,re_a00,im_a00,re_a01,im_a01,re_a10,im_a10,re_a11,im_a11\n";
  for (const TrajectoryPoint& p : points) {
    out += format_shortest(p.t);
    out += ',';
    out += format_shortest(p.concurrence);
    for (std::size_t k = 0; k < 4; ++k) {
      out += ',';
      out += format_shortest(p.state[k].real());
      out += ',';
      out += format_shortest(p.state[k].imag());
    }
    out += '\n';
  }
  return out;
}

int cmd_evolve(const EvolveOptions& opt, std::ostream& out) {
  const EvolutionSchedule schedule = build_schedule(opt);
  const auto points = concurrence_trajectory(schedule, product_state(opt.init), opt.samples);
  write_output(opt.out, trajectory_csv(points), out);

  if (!opt.svg.empty()) {
    svg::Chart chart;
    chart.title = "Concurrence from |" + opt.init + ">";
    chart.x_label = "t [s]";
    chart.y_label = "concurrence";
    chart.y_range = std::pair{0.0, 1.05};
    chart.markers = schedule.boundaries();
    svg::Series series;
    for (const TrajectoryPoint& p : points) {
      series.x.push_back(p.t);
      series.y.push_back(p.concurrence);
    }
    chart.series.push_back(std::move(series));
    const svg::Chart panels[] = {chart};
    write_output(opt.svg, svg::render(panels), out);
  }
  if (!opt.out.empty() && opt.out != "-") {
    const TrajectoryPoint& last = points.back();
    out << "evolved " << schedule.segments().size() << " segment(s) over "
        << format_shortest(last.t) << " s; final concurrence " << format_fixed(last.concurrence, 9)
        << '\n';
  }
  return kSuccess;
}

BaseFrequencies collect_bases(const SpectrumOptions& opt) {
  BaseFrequencies bases;
  if (!opt.base_file.empty()) {
    std::ifstream in(opt.base_file, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open base-frequency file '" + opt.base_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      bases = parse_base_config(buf.str());
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.message(), opt.base_file);
    }
  }
  for (const std::string& spec : opt.bases) {
    const auto eq = spec.find('=');
    const auto mhz = eq == std::string::npos ? std::nullopt : parse_decimal(spec.substr(eq + 1));
    if (!mhz || eq == 0 || !(*mhz > 0.0)) {
      throw UsageError("--base expects <nuclide>=<MHz>, got '" + spec + "'");
    }
    bases[spec.substr(0, eq)] = *mhz;
  }
  return bases;
}

svg::Chart spectrum_panel(const PeakList& list, const std::string& nuclide,
                          const SpinSystem& system, double linewidth) {
  std::vector<const Peak*> peaks;
  for (const Peak& p : list.peaks) {
    if (system.spin(p.owner).nuclide == nuclide) peaks.push_back(&p);
  }
  const double lo = peaks.front()->frequency_hz - 10.0 * linewidth;
  const double hi = peaks.back()->frequency_hz + 10.0 * linewidth;
  const double half = linewidth / 2.0;
  constexpr int kPoints = 2001;
  svg::Series series;
  for (int i = 0; i < kPoints; ++i) {
    const double nu = lo + (hi - lo) * i / (kPoints - 1);
    double y = 0.0;
    for (const Peak* p : peaks) {
      const double d = nu - p->frequency_hz;
      y += p->intensity * half * half / (d * d + half * half);
    }
    series.x.push_back(nu);
    series.y.push_back(y);
  }
  svg::Chart chart;
  chart.title = nuclide + " first-order spectrum";
  const auto ref = list.references.find(nuclide);
  chart.x_label = "offset [Hz]" + (ref == list.references.end() ? std::string()
                                                                 : " from " + ref->second);
  chart.y_label = "intensity";
  chart.reverse_x = true;
  chart.series.push_back(std::move(series));
  return chart;
}

int cmd_spectrum(const SpectrumOptions& opt, std::ostream& out) {
  if (!opt.molecule_file.empty() && !opt.molecule.empty()) {
    throw UsageError("--molecule and --molecule-file are exclusive");
  }
  SpinSystem system;
  if (!opt.molecule_file.empty()) {
    system = read_spin_system_file(opt.molecule_file);
  } else if (!opt.molecule.empty()) {
    system = record_system(lookup(builtin_table(), parse_isomer(opt.molecule),
                                  parse_method(opt.method)));
  } else {
    throw UsageError("give --molecule TAB|CAB or --molecule-file <path>");
  }
  const PeakList list = first_order_peaks(system, collect_bases(opt));
  write_output(opt.out, peak_csv(list), out);

  if (!opt.svg.empty()) {
    if (!(opt.linewidth > 0.0)) throw UsageError("--linewidth must be positive");
    std::vector<std::string> nuclides;
    for (const Spin& s : system.spins()) {
      if (std::find(nuclides.begin(), nuclides.end(), s.nuclide) == nuclides.end()) {
        nuclides.push_back(s.nuclide);
      }
    }
    std::vector<svg::Chart> panels;
    for (const std::string& n : nuclides) {
      panels.push_back(spectrum_panel(list, n, system, opt.linewidth));
    }
    write_output(opt.svg, svg::render(panels), out);
  }
  return kSuccess;
}

int cmd_validate(const TableOptions& opt, std::ostream& out) {
  const auto results = run_validation(load_table(opt.table_dir));
  out << format_report(results);
  const bool ok = all_passed(results);
  out << (ok ? "validate: all checks passed\n" : "validate: FAILED\n");
  return ok ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-spin entanglement control with photoswitchable couplings", "azoswitch"};
  app.require_subcommand(1);

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "Check entangling times and coupling ratios of the dataset");
  table->add_option("--table-dir", table_opt.table_dir, "Directory of .mol dataset files");

  EvolveOptions evolve_opt;
  auto* evolve = app.add_subcommand("evolve", "Concurrence trajectory under switched couplings");
  evolve->add_option("--molecule", evolve_opt.molecule, "Starting isomer (TAB or CAB)");
  evolve->add_option("--method", evolve_opt.method, "Dataset method")->capture_default_str();
  evolve->add_option("--switch-at", evolve_opt.switch_at, "Isomer switch time in s (repeatable)");
  evolve->add_option("--duration", evolve_opt.duration, "Total evolution time in s");
  evolve->add_flag("--until-mes", evolve_opt.until_mes,
                   "Stop when |++> is maximally entangled after the last switch");
  evolve->add_option("--segment", evolve_opt.segments, "Explicit segment <J>:<seconds> (repeatable)");
  evolve->add_option("--init", evolve_opt.init, "Initial state")
      ->check(CLI::IsMember(kInitTokens))
      ->capture_default_str();
  evolve->add_option("--samples", evolve_opt.samples, "Number of sample times")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  evolve->add_option("--out", evolve_opt.out, "Trajectory CSV path (default stdout)");
  evolve->add_option("--svg", evolve_opt.svg, "Concurrence chart SVG path");

  SpectrumOptions spectrum_opt;
  auto* spectrum = app.add_subcommand("spectrum", "First-order stick spectrum as CSV");
  spectrum->add_option("--molecule", spectrum_opt.molecule, "Built-in isomer (TAB or CAB)");
  spectrum->add_option("--method", spectrum_opt.method, "Dataset method")->capture_default_str();
  spectrum->add_option("--molecule-file", spectrum_opt.molecule_file, "Molecule definition file");
  spectrum->add_option("--base", spectrum_opt.bases, "Base frequency <nuclide>=<MHz> (repeatable)");
  spectrum->add_option("--base-file", spectrum_opt.base_file, "File of 'base <nuclide> <MHz>' lines");
  spectrum->add_option("--out", spectrum_opt.out, "Peak CSV path (default stdout)");
  spectrum->add_option("--svg", spectrum_opt.svg, "Lorentzian-broadened spectrum SVG path");
  spectrum->add_option("--linewidth", spectrum_opt.linewidth, "Full width at half height in Hz")
      ->capture_default_str();

  TableOptions validate_opt;
  auto* validate = app.add_subcommand("validate", "Run the built-in self-check suite");
  validate->add_option("--table-dir", validate_opt.table_dir, "Directory of .mol dataset files");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*table) return cmd_table(table_opt, out);
    if (*evolve) return cmd_evolve(evolve_opt, out);
    if (*spectrum) return cmd_spectrum(spectrum_opt, out);
    if (*validate) return cmd_validate(validate_opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputFile;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputFile;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace azoswitch::cli
