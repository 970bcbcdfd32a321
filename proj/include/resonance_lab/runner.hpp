#pragma once
#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "resonance_lab/csv.hpp"
#include "resonance_lab/decay_fit.hpp"
#include "resonance_lab/duhamel.hpp"
#include "resonance_lab/errors.hpp"
#include "resonance_lab/geometry.hpp"
#include "resonance_lab/osc_cases.hpp"
#include "resonance_lab/rate_experiments.hpp"
#include "resonance_lab/scenario_file.hpp"

// Batch front end: orchestrates geometry tracing, evolution, rate
// experiments, and special-function tables over parsed scenario files, and
// writes deterministic artifacts.  Data files carry no timestamps or other
// run-dependent content, so identical inputs produce byte-identical CSVs;
// run metadata lives in a separate manifest.

namespace rlab {

enum class Command { geometry, evolve, rates, oscillatory_tables, all };

inline std::optional<Command> parse_command(const std::string& s) {
  if (s == "geometry") return Command::geometry;
  if (s == "evolve") return Command::evolve;
  if (s == "rates") return Command::rates;
  if (s == "oscillatory_tables") return Command::oscillatory_tables;
  if (s == "all") return Command::all;
  return std::nullopt;
}

inline const char* to_string(Command c) {
  switch (c) {
    case Command::geometry: return "geometry";
    case Command::evolve: return "evolve";
    case Command::rates: return "rates";
    case Command::oscillatory_tables: return "oscillatory_tables";
    case Command::all: return "all";
  }
  return "?";
}

struct RunOptions {
  std::string out_dir = ".";
  int jobs = 1;                      // accepted; execution is serialized for
                                     // bit-identical artifacts
  std::optional<double> t_max_cap;   // clamps every experiment time ladder
  std::optional<int> resolution;     // overrides the geometry resolution
};

// One verdict line.  verdict is "pass"/"fail" for hard criteria and
// "reported" for best-effort probes (sharpness gaps).
struct ReportRow {
  std::string experiment;
  std::string label;
  std::string quantity;
  double predicted_exponent = 0;
  int predicted_log_power = 0;
  double measured_exponent = 0;
  double r_squared = 0;
  double tolerance = 0;
  std::string verdict;
  std::string note;  // plain-text report only, not part of the CSV schema
};

struct RunOutcome {
  int exit_code = 0;  // 0: all hard verdicts pass; 1: fail rows; 2: refusals
  int pass_count = 0, fail_count = 0, reported_count = 0;
  std::vector<std::string> errors;
  std::vector<std::string> artifacts;
};

namespace run_detail {

struct NormRow {
  std::string label;
  double t;
  std::string norm_kind;
  double q, s, value;
};

struct GeomRow {
  std::string label;
  std::string set;
  int segment, index;
  double xi, eta;
};

struct ProfileRow {  // G1/G2 sample tables
  std::string name;
  double x;
  std::complex<double> value;
};

struct RemainderRow {  // far-field comparison tables
  std::string name;
  double x;
  double claimed_order;
  double remainder;
};

struct CaseRow {  // leading-term comparison tables
  std::string label;
  double t;
  double claimed_order;
  std::complex<double> oracle;
  std::complex<double> leading;
  double abs_error;
};

struct Collector {
  std::vector<NormRow> norms;
  std::vector<GeomRow> geometry;
  std::vector<ReportRow> verdicts;
  std::vector<ProfileRow> profiles;
  std::vector<RemainderRow> remainders;
  std::vector<CaseRow> cases;
};

inline std::vector<double> time_ladder(double lo, double hi, int count) {
  std::vector<double> ts(count);
  for (int i = 0; i < count; ++i)
    ts[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  return ts;
}

// least-squares slope of log y against log x, with its r^2
struct SlopeFit {
  double slope = 0, r_squared = 0;
};

inline SlopeFit loglog_slope(const std::vector<double>& xs,
                             const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  SlopeFit out;
  const double vx = n * sxx - sx * sx;
  const double cov = n * sxy - sx * sy;
  const double vy = n * syy - sy * sy;
  out.slope = cov / vx;
  out.r_squared = vy > 0 ? (cov * cov) / (vx * vy) : 1.0;
  return out;
}

inline std::string q_text(double q) {
  if (std::isinf(q)) return "inf";
  std::ostringstream os;
  os << q;
  return os.str();
}

inline std::string norm_quantity(const NormSpec& ns) {
  std::string out = "q=" + q_text(ns.q);
  if (ns.s != 0.0) out += " s=" + q_text(ns.s);
  return out;
}

// ---------------------------------------------------------------------------
// per-command work
// ---------------------------------------------------------------------------

inline void collect_geometry(const Scenario& sc, Collector& col) {
  auto push_polylines = [&](const std::vector<Polyline>& lines,
                            const char* set) {
    for (std::size_t seg = 0; seg < lines.size(); ++seg)
      for (std::size_t i = 0; i < lines[seg].pts.size(); ++i) {
        const auto p = to_output_coords(lines[seg].pts[i]);
        col.geometry.push_back({sc.label, set, static_cast<int>(seg),
                                static_cast<int>(i), p[0], p[1]});
      }
  };
  push_polylines(sc.geometry.gamma, "gamma");
  push_polylines(sc.geometry.delta, "delta");
  for (std::size_t i = 0; i < sc.geometry.points.size(); ++i) {
    const ResonantPoint& rp = sc.geometry.points[i];
    col.geometry.push_back(
        {sc.label, "point", 0, static_cast<int>(i), rp.xi0, rp.eta0});
  }
  for (std::size_t i = 0; i < sc.geometry.characteristic_points.size(); ++i) {
    const CharacteristicPoint& cp = sc.geometry.characteristic_points[i];
    const auto p = to_output_coords({cp.xi, cp.eta});
    col.geometry.push_back(
        {sc.label, "characteristic", 0, static_cast<int>(i), p[0], p[1]});
  }
}

inline void collect_evolve(const Scenario& sc, const ScenarioFile& file,
                           const std::vector<double>& times, Collector& col) {
  std::vector<NormSpec> norms;
  for (double q : file.q_list) norms.push_back(NormSpec::lebesgue(q));
  const EvolutionResult run = evolve_batch(sc, times, norms);
  for (const auto& [ns, vals] : run.norm_table)
    for (std::size_t i = 0; i < times.size(); ++i)
      col.norms.push_back({sc.label, times[i],
                           ns.kind == NormSpec::Kind::lebesgue ? "lebesgue"
                                                               : "weighted_l2",
                           ns.q, ns.s, vals[i]});
}

inline void collect_rates(const Scenario& sc, const ScenarioFile& file,
                          const std::vector<double>& times,
                          std::optional<double> t_cap, Collector& col) {
  std::vector<NormSpec> norms;
  for (double q : file.q_list) {
    NormSpec ns = NormSpec::lebesgue(q);
    ns.s = file.data_weight_s;  // declares the data's weight class, which
                                // selects the predicted law
    norms.push_back(ns);
  }
  const std::vector<RateVerdict> verdicts =
      run_rate_scenario(sc, norms, times, file.regime);
  for (const RateVerdict& v : verdicts) {
    ReportRow hard;
    hard.experiment = "rates";
    hard.label = v.label;
    hard.quantity = "upper_bound " + norm_quantity(v.norm);
    hard.predicted_exponent = v.predicted.exponent;
    hard.predicted_log_power = v.predicted.log_power;
    hard.measured_exponent = v.measured.fitted_exponent;
    hard.r_squared = v.measured.r_squared;
    hard.tolerance = v.tolerance;
    hard.verdict = v.upper_bound_respected ? "pass" : "fail";
    hard.note = v.note;
    col.verdicts.push_back(hard);

    ReportRow probe = hard;
    probe.quantity = "sharpness " + norm_quantity(v.norm);
    probe.verdict = "reported";
    std::ostringstream os;
    os << "sharpness gap (envelope slope - measured) = " << v.sharpness_gap;
    probe.note = os.str();
    col.verdicts.push_back(probe);
  }

  if (file.lower_bound) {
    const RateVerdict v = lower_bound_probe(sc, file.lower_bound_q, times);
    ReportRow row;
    row.experiment = "lower_bound";
    row.label = v.label;
    row.quantity = "lower_bound q=" + q_text(file.lower_bound_q);
    row.predicted_exponent = v.predicted.exponent;
    row.predicted_log_power = v.predicted.log_power;
    row.measured_exponent = v.measured.fitted_exponent;
    row.r_squared = v.measured.r_squared;
    row.tolerance = v.tolerance;
    row.verdict = v.upper_bound_respected ? "pass" : "fail";
    row.note = v.note;
    col.verdicts.push_back(row);
  }

  if (file.strichartz) {
    const double T =
        t_cap ? std::min(file.strichartz_T, *t_cap) : file.strichartz_T;
    const double s_half = strichartz_integrated(sc, file.strichartz_p,
                                                file.strichartz_q, T / 2.0);
    const double s_full =
        strichartz_integrated(sc, file.strichartz_p, file.strichartz_q, T);
    const double ratio = s_half > 0 ? s_full / s_half : 1.0;
    ReportRow row;
    row.experiment = "strichartz";
    row.label = sc.label;
    row.quantity = "strichartz_ratio p=" + q_text(file.strichartz_p) +
                   " q=" + q_text(file.strichartz_q);
    row.predicted_exponent = 1.0;  // saturating integral: ratio tends to 1
    row.predicted_log_power = 0;
    row.measured_exponent = ratio;
    row.r_squared = 1.0;
    row.tolerance = 0.05;
    row.verdict = ratio <= 1.05 ? "pass" : "fail";
    std::ostringstream os;
    os << "time-integrated norm " << s_full << " at T=" << T << " vs "
       << s_half << " at T/2";
    row.note = os.str();
    col.verdicts.push_back(row);
  }
}

inline void collect_oscillatory(Collector& col) {
  // sample tables for the two boundary profiles
  for (int k = -80; k <= 80; ++k) {
    const double x = 0.25 * k;
    col.profiles.push_back({"G1", x, fresnel_g1(x)});
    col.profiles.push_back({"G2", x, fresnel_g2(x)});
  }

  // far-field comparison tables with slope verdicts
  const int nx = 25;
  for (const FarFieldForm& form : far_field_forms()) {
    std::vector<double> xs(nx), rs(nx);
    for (int k = 0; k < nx; ++k) {
      xs[k] = 10.0 * std::pow(10.0, static_cast<double>(k) / (nx - 1));
      rs[k] = form.remainder(xs[k]);
      col.remainders.push_back({form.name, xs[k], form.claimed_order, rs[k]});
    }
    const FitResult fit = fit_decay(xs, rs, FitModel::power);
    ReportRow row;
    row.experiment = "oscillatory_tables";
    row.label = "-";
    row.quantity = "far_field_slope " + form.name;
    row.predicted_exponent = form.claimed_order;
    row.predicted_log_power = 0;
    row.measured_exponent = fit.fitted_exponent;
    row.r_squared = fit.r_squared;
    row.tolerance = 0.1;
    row.verdict = fit.fitted_exponent <= form.claimed_order + 0.1 ? "pass"
                                                                  : "fail";
    row.note = "remainder must decay at least at the claimed order";
    col.verdicts.push_back(row);
  }

  // leading-term comparison tables with slope verdicts
  const std::vector<double> times = {1e2, 1e3, 1e4};
  for (const CanonicalOscCase& c : canonical_osc_cases()) {
    std::vector<double> es;
    double claimed = 0;
    for (double t : times) {
      const OscIntegralSpec spec = c.spec_at(t);
      const LeadingTerm lead = leading_term(spec, c.which);
      const std::complex<double> oracle = oracle_integral(spec);
      const double err = std::abs(oracle - lead.value);
      es.push_back(err);
      claimed = lead.claimed_error_order;
      col.cases.push_back(
          {c.label, t, lead.claimed_error_order, oracle, lead.value, err});
    }
    const SlopeFit fit = loglog_slope(times, es);
    ReportRow row;
    row.experiment = "oscillatory_cases";
    row.label = "-";
    row.quantity = "leading_term_slope " + c.label;
    row.predicted_exponent = claimed;
    row.predicted_log_power = 0;
    row.measured_exponent = fit.slope;
    row.r_squared = fit.r_squared;
    row.tolerance = 0.1;
    row.verdict = fit.slope <= claimed + 0.1 ? "pass" : "fail";
    row.note = c.note;
    col.verdicts.push_back(row);
  }
}

// ---------------------------------------------------------------------------
// sorting and writing
// ---------------------------------------------------------------------------

inline void sort_rows(Collector& col) {
  std::sort(col.norms.begin(), col.norms.end(),
            [](const NormRow& a, const NormRow& b) {
              if (a.label != b.label) return a.label < b.label;
              if (a.t != b.t) return a.t < b.t;
              if (a.norm_kind != b.norm_kind) return a.norm_kind < b.norm_kind;
              if (a.q != b.q) return a.q < b.q;
              return a.s < b.s;
            });
  std::sort(col.geometry.begin(), col.geometry.end(),
            [](const GeomRow& a, const GeomRow& b) {
              if (a.label != b.label) return a.label < b.label;
              if (a.set != b.set) return a.set < b.set;
              if (a.segment != b.segment) return a.segment < b.segment;
              return a.index < b.index;
            });
  std::sort(col.verdicts.begin(), col.verdicts.end(),
            [](const ReportRow& a, const ReportRow& b) {
              if (a.experiment != b.experiment)
                return a.experiment < b.experiment;
              if (a.label != b.label) return a.label < b.label;
              return a.quantity < b.quantity;
            });
  std::sort(col.profiles.begin(), col.profiles.end(),
            [](const ProfileRow& a, const ProfileRow& b) {
              if (a.name != b.name) return a.name < b.name;
              return a.x < b.x;
            });
  std::sort(col.remainders.begin(), col.remainders.end(),
            [](const RemainderRow& a, const RemainderRow& b) {
              if (a.name != b.name) return a.name < b.name;
              return a.x < b.x;
            });
  std::sort(col.cases.begin(), col.cases.end(),
            [](const CaseRow& a, const CaseRow& b) {
              if (a.label != b.label) return a.label < b.label;
              return a.t < b.t;
            });
}

inline void write_file(const std::string& path,
                       const std::vector<std::string>& lines,
                       std::vector<std::string>* artifacts) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot write output file: " + path);
  for (const std::string& l : lines) out << l << '\n';
  if (artifacts) artifacts->push_back(path);
}

inline std::string basename_of(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace run_detail

// ---------------------------------------------------------------------------
// top-level runner
// ---------------------------------------------------------------------------

struct ScenarioJob {
  ScenarioFile file;
  std::string source_path;
};

inline RunOutcome run_command(Command command, std::vector<ScenarioJob> jobs,
                              const RunOptions& options) {
  using namespace run_detail;
  RunOutcome outcome;
  Collector col;

  std::sort(jobs.begin(), jobs.end(),
            [](const ScenarioJob& a, const ScenarioJob& b) {
              return a.file.label < b.file.label;
            });

  const bool want_geometry =
      command == Command::geometry || command == Command::all;
  const bool want_evolve = command == Command::evolve || command == Command::all;
  const bool want_rates = command == Command::rates || command == Command::all;
  // the special-function tables are scenario independent; under `all` they
  // are produced only when there is at least one scenario, so that an empty
  // scenario list stays a vacuous pass with empty reports
  const bool want_tables =
      command == Command::oscillatory_tables ||
      (command == Command::all && !jobs.empty());

  if (want_tables) {
    try {
      collect_oscillatory(col);
    } catch (const std::exception& e) {
      outcome.errors.push_back(std::string("oscillatory_tables: ") + e.what());
    }
  }

  for (const ScenarioJob& job : jobs) {
    if (command == Command::oscillatory_tables) break;
    const ScenarioFile& f = job.file;
    // apply the global time cap to the experiment ladder
    double t_hi = f.t_hi;
    if (options.t_max_cap) t_hi = std::min(t_hi, *options.t_max_cap);
    if (!(f.t_lo < t_hi)) {
      outcome.errors.push_back(f.label +
                               ": the --t-max cap leaves an empty time "
                               "window (t_lo >= capped t_hi)");
      continue;
    }
    const std::vector<double> times = time_ladder(f.t_lo, t_hi, f.t_count);

    Scenario sc;
    try {
      sc = scenario_from(f, options.resolution);
    } catch (const std::exception& e) {
      outcome.errors.push_back(f.label + ": " + e.what());
      continue;
    }

    if (want_geometry) {
      try {
        collect_geometry(sc, col);
      } catch (const std::exception& e) {
        outcome.errors.push_back(f.label + ": geometry: " + e.what());
      }
    }
    if (want_evolve) {
      try {
        collect_evolve(sc, f, times, col);
      } catch (const std::exception& e) {
        outcome.errors.push_back(f.label + ": evolve: " + e.what());
      }
    }
    if (want_rates) {
      try {
        collect_rates(sc, f, times, options.t_max_cap, col);
      } catch (const std::exception& e) {
        outcome.errors.push_back(f.label + ": rates: " + e.what());
      }
    }
  }

  sort_rows(col);
  for (const ReportRow& r : col.verdicts) {
    if (r.verdict == "pass") ++outcome.pass_count;
    else if (r.verdict == "fail") ++outcome.fail_count;
    else ++outcome.reported_count;
  }

  // ---- data files ----------------------------------------------------------
  const std::string dir = options.out_dir.empty() ? "." : options.out_dir;
  auto path_of = [&](const char* name) { return dir + "/" + name; };

  if (want_geometry && !jobs.empty()) {
    std::vector<std::string> lines{"label,set,segment,index,xi,eta"};
    for (const GeomRow& r : col.geometry) {
      lines.push_back(r.label + "," + r.set + "," + csv_int(r.segment) + "," +
                      csv_int(r.index) + "," + csv_float(r.xi) + "," +
                      csv_float(r.eta));
    }
    write_file(path_of("geometry.csv"), lines, &outcome.artifacts);
  }
  if (want_evolve && !jobs.empty()) {
    std::vector<std::string> lines{"label,t,norm_kind,q,s,value"};
    for (const NormRow& r : col.norms) {
      lines.push_back(r.label + "," + csv_float(r.t) + "," + r.norm_kind +
                      "," + csv_float(r.q) + "," + csv_float(r.s) + "," +
                      csv_float(r.value));
    }
    write_file(path_of("norms.csv"), lines, &outcome.artifacts);
  }
  if ((want_rates && !jobs.empty()) || want_tables) {
    std::vector<std::string> lines{
        "experiment,label,quantity,predicted_exponent,predicted_log_power,"
        "measured_exponent,r_squared,tolerance,verdict"};
    for (const ReportRow& r : col.verdicts) {
      lines.push_back(r.experiment + "," + r.label + "," + r.quantity + "," +
                      csv_float(r.predicted_exponent) + "," +
                      csv_int(r.predicted_log_power) + "," +
                      csv_float(r.measured_exponent) + "," +
                      csv_float(r.r_squared) + "," + csv_float(r.tolerance) +
                      "," + r.verdict);
    }
    write_file(path_of("verdicts.csv"), lines, &outcome.artifacts);
  }
  if (want_tables) {
    std::vector<std::string> lines{"name,x,value_re,value_im"};
    for (const ProfileRow& r : col.profiles)
      lines.push_back(r.name + "," + csv_float(r.x) + "," +
                      csv_float(r.value.real()) + "," +
                      csv_float(r.value.imag()));
    write_file(path_of("oscillatory_tables.csv"), lines, &outcome.artifacts);

    lines = {"name,x,claimed_order,remainder"};
    for (const RemainderRow& r : col.remainders)
      lines.push_back(r.name + "," + csv_float(r.x) + "," +
                      csv_float(r.claimed_order) + "," +
                      csv_float(r.remainder));
    write_file(path_of("oscillatory_remainders.csv"), lines,
               &outcome.artifacts);

    lines = {
        "label,t,claimed_order,oracle_re,oracle_im,leading_re,leading_im,"
        "abs_error"};
    for (const CaseRow& r : col.cases)
      lines.push_back(r.label + "," + csv_float(r.t) + "," +
                      csv_float(r.claimed_order) + "," +
                      csv_float(r.oracle.real()) + "," +
                      csv_float(r.oracle.imag()) + "," +
                      csv_float(r.leading.real()) + "," +
                      csv_float(r.leading.imag()) + "," +
                      csv_float(r.abs_error));
    write_file(path_of("oscillatory_cases.csv"), lines, &outcome.artifacts);
  }

  // ---- plain-text report ----------------------------------------------------
  {
    std::vector<std::string> lines{"verdict report", "=============="};
    for (const ReportRow& r : col.verdicts) {
      std::ostringstream os;
      os << r.verdict << "  " << r.experiment << "  " << r.label << "  "
         << r.quantity << "  predicted t^" << r.predicted_exponent;
      if (r.predicted_log_power > 0) os << " log^" << r.predicted_log_power;
      os << "  measured " << r.measured_exponent << " (r2 " << r.r_squared
         << ")  tol " << r.tolerance;
      lines.push_back(os.str());
      if (!r.note.empty()) lines.push_back("    note: " + r.note);
    }
    std::ostringstream sum;
    sum << "summary: " << outcome.pass_count << " pass, "
        << outcome.fail_count << " fail, " << outcome.reported_count
        << " reported";
    lines.push_back(sum.str());
    if (outcome.errors.empty()) {
      lines.push_back("errors: none");
    } else {
      lines.push_back("errors:");
      for (const std::string& e : outcome.errors) lines.push_back("  " + e);
    }
    write_file(path_of("report.txt"), lines, &outcome.artifacts);
  }

  // ---- manifest (run metadata, separate from the data files) ----------------
  {
    std::vector<std::string> lines;
    lines.push_back("tool: resonance-lab");
    lines.push_back(std::string("command: ") + to_string(command));
    lines.push_back("jobs: " + std::to_string(options.jobs) +
                    " (serialized for determinism)");
    lines.push_back(std::string("t_max_cap: ") +
                    (options.t_max_cap ? csv_float(*options.t_max_cap)
                                       : std::string("none")));
    lines.push_back(std::string("resolution: ") +
                    (options.resolution ? std::to_string(*options.resolution)
                                        : std::string("per scenario file")));
    lines.push_back("scenarios: " + std::to_string(jobs.size()));
    for (const ScenarioJob& j : jobs)
      lines.push_back("  " + j.file.label + " <- " + j.source_path);
    lines.push_back("artifacts: " + std::to_string(outcome.artifacts.size()));
    for (const std::string& a : outcome.artifacts)
      lines.push_back("  " + run_detail::basename_of(a));
    lines.push_back("errors: " + std::to_string(outcome.errors.size()));
    for (const std::string& e : outcome.errors) lines.push_back("  " + e);
    run_detail::write_file(path_of("manifest.txt"), lines, nullptr);
  }

  outcome.exit_code =
      !outcome.errors.empty() ? 2 : (outcome.fail_count > 0 ? 1 : 0);
  return outcome;
}

}  // namespace rlab
