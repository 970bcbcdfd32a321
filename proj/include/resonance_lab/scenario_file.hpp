#pragma once
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "resonance_lab/bilinear.hpp"
#include "resonance_lab/dispersion.hpp"
#include "resonance_lab/duhamel.hpp"
#include "resonance_lab/rate_tables.hpp"
#include "resonance_lab/spectral.hpp"

namespace rlab {

// One parse problem, anchored to its source line (1-based; 0 = whole file).
struct Diagnostic {
  int line = 0;
  std::string message;
};

// Everything a scenario file can configure, with documented defaults.
// Sections: [dispersion] (required), [symbol], [data], [grid], [experiments].
struct ScenarioFile {
  // [dispersion]
  std::string preset;  // schrodinger | schrodinger_shifted | gap |
                       // definite | tilted; empty when coefficient lists
                       // are given instead
  double kappa = 1.0;  // shift for schrodinger_shifted
  std::optional<std::array<double, 5>> a_coeffs, b_coeffs, c_coeffs;

  // [symbol]: smooth plateau window on a frequency box
  double center_xi = 0.0, center_eta = 0.0;
  double half_width_xi = 3.0, half_width_eta = 3.0;
  double roll = 0.3;

  // [data]
  WitnessKind f_kind = WitnessKind::gaussian;
  WitnessKind g_kind = WitnessKind::gaussian;
  double f_center_x = 0.0, f_center_freq = 0.0, f_width = 4.0;
  double g_center_x = 0.0, g_center_freq = 0.0, g_width = 4.0;

  // [grid]
  int points = 8192;
  double length = 4000.0;
  double t_max = 100.0;

  // [experiments]
  std::string label;  // defaults to the file stem
  double t_lo = 10.0, t_hi = 100.0;  // defaults span exactly one decade
  int t_count = 16;
  std::vector<double> q_list = {2.0,
                                std::numeric_limits<double>::infinity()};
  double data_weight_s = 0.0;  // declared weight class of the data
  RateRegime regime = RateRegime::geometry_table;
  int resolution = 600;  // geometry trace resolution
  bool lower_bound = false;
  double lower_bound_q = 2.0;
  bool strichartz = false;
  double strichartz_p = 4.0, strichartz_q = 4.0, strichartz_T = 0.0;  // 0: t_hi
};

struct ParseResult {
  ScenarioFile file;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

namespace file_detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline bool parse_double(const std::string& text, double* out) {
  const std::string t = trim(text);
  if (t == "inf") {
    *out = std::numeric_limits<double>::infinity();
    return true;
  }
  std::size_t used = 0;
  try {
    *out = std::stod(t, &used);
  } catch (...) {
    return false;
  }
  return used == t.size() && std::isfinite(*out);
}

inline bool parse_int(const std::string& text, int* out) {
  const std::string t = trim(text);
  std::size_t used = 0;
  try {
    *out = std::stoi(t, &used);
  } catch (...) {
    return false;
  }
  return used == t.size();
}

inline bool parse_bool(const std::string& text, bool* out) {
  const std::string t = trim(text);
  if (t == "true" || t == "1") { *out = true; return true; }
  if (t == "false" || t == "0") { *out = false; return true; }
  return false;
}

// "[v0, v1, ...]" -> list of doubles ("inf" allowed)
inline bool parse_list(const std::string& text, std::vector<double>* out) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') return false;
  out->clear();
  std::string body = t.substr(1, t.size() - 2);
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    const std::string item =
        trim(body.substr(pos, comma == std::string::npos ? std::string::npos
                                                         : comma - pos));
    if (item.empty()) {
      if (out->empty() && comma == std::string::npos) return true;  // "[]"
      return false;
    }
    double v = 0;
    if (!parse_double(item, &v)) return false;
    out->push_back(v);
    if (comma == std::string::npos) return true;
    pos = comma + 1;
  }
}

inline bool parse_witness_kind(const std::string& text, WitnessKind* out) {
  const std::string t = trim(text);
  if (t == "gaussian") { *out = WitnessKind::gaussian; return true; }
  if (t == "flat_spectrum") { *out = WitnessKind::flat_spectrum; return true; }
  if (t == "band_bump") { *out = WitnessKind::band_bump; return true; }
  return false;
}

inline bool parse_regime(const std::string& text, RateRegime* out) {
  const std::string t = trim(text);
  for (RateRegime r :
       {RateRegime::geometry_table, RateRegime::transversal_generic,
        RateRegime::weighted_interpolation, RateRegime::curve_weighted,
        RateRegime::velocity_separated_weighted,
        RateRegime::point_resonance_weighted,
        RateRegime::point_resonance_lower}) {
    if (t == to_string(r)) {
      *out = r;
      return true;
    }
  }
  return false;
}

struct KeyHandlerContext {
  ScenarioFile* file;
  std::vector<Diagnostic>* diags;
  int line = 0;
  bool preset_seen = false;
};

inline void diag(KeyHandlerContext& cx, const std::string& message) {
  cx.diags->push_back({cx.line, message});
}

inline void set_double(KeyHandlerContext& cx, const std::string& key,
                       const std::string& value, double* slot) {
  if (!parse_double(value, slot))
    diag(cx, "value of '" + key + "' is not a number: '" + trim(value) + "'");
}

inline void set_positive(KeyHandlerContext& cx, const std::string& key,
                         const std::string& value, double* slot) {
  double v = 0;
  if (!parse_double(value, &v)) {
    diag(cx, "value of '" + key + "' is not a number: '" + trim(value) + "'");
    return;
  }
  if (!(v > 0) || std::isinf(v)) {
    diag(cx, "'" + key + "' must be a positive finite number");
    return;
  }
  *slot = v;
}

}  // namespace file_detail

// Strict line-oriented parser: '#' starts a comment, sections are
// "[name]", keys are "name = value".  Unknown sections/keys, malformed
// values, duplicate sections, and out-of-range numbers are all collected as
// line-numbered diagnostics; nothing is silently ignored.
inline ParseResult parse_scenario_text(const std::string& text,
                                       const std::string& default_label) {
  using namespace file_detail;
  ParseResult res;
  res.file.label = default_label;

  static const std::map<std::string, std::vector<std::string>> kSchema = {
      {"dispersion", {"preset", "kappa", "a", "b", "c"}},
      {"symbol",
       {"center_xi", "center_eta", "half_width_xi", "half_width_eta", "roll"}},
      {"data",
       {"f_kind", "f_center_x", "f_center_freq", "f_width", "g_kind",
        "g_center_x", "g_center_freq", "g_width"}},
      {"grid", {"points", "length", "t_max"}},
      {"experiments",
       {"label", "t_lo", "t_hi", "t_count", "q", "s", "regime", "resolution",
        "lower_bound", "lower_bound_q", "strichartz_p", "strichartz_q",
        "strichartz_t"}},
  };

  KeyHandlerContext cx{&res.file, &res.diagnostics, 0, false};
  std::map<std::string, int> section_lines;
  std::string section;
  int dispersion_line = 0;
  bool strichartz_T_seen = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    cx.line = line_no;
    std::string line = raw;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        diag(cx, "malformed section header: '" + line + "'");
        continue;
      }
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (!kSchema.count(name)) {
        diag(cx, "unknown section [" + name + "]");
        section = "?";  // swallow the section's keys; the header diagnostic
                        // already covers them
        continue;
      }
      auto it = section_lines.find(name);
      if (it != section_lines.end()) {
        std::ostringstream os;
        os << "duplicate section [" << name << "]: first declared on line "
           << it->second << ", repeated on line " << line_no;
        diag(cx, os.str());
        // stay inside the (known) section so the following keys are still
        // checked against its schema instead of producing cascade errors
        section = name;
        continue;
      }
      section_lines[name] = line_no;
      section = name;
      if (name == "dispersion") dispersion_line = line_no;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      diag(cx, "expected 'key = value': '" + line + "'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (section == "?") continue;  // inside a rejected section
    if (section.empty()) {
      diag(cx, "key '" + key + "' appears before any section header");
      continue;
    }
    const auto& keys = kSchema.at(section);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      diag(cx, "unknown key '" + key + "' in section [" + section + "]");
      continue;
    }
    if (value.empty()) {
      diag(cx, "key '" + key + "' has an empty value");
      continue;
    }

    ScenarioFile& f = res.file;
    if (section == "dispersion") {
      if (key == "preset") {
        static const std::vector<std::string> kPresets = {
            "schrodinger", "schrodinger_shifted", "gap", "definite", "tilted"};
        if (std::find(kPresets.begin(), kPresets.end(), value) ==
            kPresets.end()) {
          diag(cx, "unknown preset '" + value +
                       "' (expected schrodinger, schrodinger_shifted, gap, "
                       "definite, or tilted)");
        } else {
          f.preset = value;
          cx.preset_seen = true;
        }
      } else if (key == "kappa") {
        set_double(cx, key, value, &f.kappa);
      } else {  // a, b, c coefficient lists
        std::vector<double> coeffs;
        if (!parse_list(value, &coeffs) || coeffs.empty() ||
            coeffs.size() > 5) {
          diag(cx, "'" + key +
                       "' must be a coefficient list [c0, c1, c2, c3, c4] "
                       "with 1 to 5 finite entries");
        } else {
          std::array<double, 5> arr{};
          for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (std::isinf(coeffs[i])) {
              diag(cx, "'" + key + "' coefficients must be finite");
              arr = {};
              break;
            }
            arr[i] = coeffs[i];
          }
          if (key == "a") f.a_coeffs = arr;
          else if (key == "b") f.b_coeffs = arr;
          else f.c_coeffs = arr;
        }
      }
    } else if (section == "symbol") {
      if (key == "center_xi") set_double(cx, key, value, &f.center_xi);
      else if (key == "center_eta") set_double(cx, key, value, &f.center_eta);
      else if (key == "half_width_xi")
        set_positive(cx, key, value, &f.half_width_xi);
      else if (key == "half_width_eta")
        set_positive(cx, key, value, &f.half_width_eta);
      else {  // roll
        double v = 0;
        if (!parse_double(value, &v))
          diag(cx, "value of 'roll' is not a number: '" + value + "'");
        else if (!(v > 0 && v < 1))
          diag(cx, "'roll' must lie strictly between 0 and 1");
        else
          f.roll = v;
      }
    } else if (section == "data") {
      if (key == "f_kind" || key == "g_kind") {
        WitnessKind k;
        if (!parse_witness_kind(value, &k))
          diag(cx, "unknown witness kind '" + value +
                       "' (expected gaussian, flat_spectrum, or band_bump)");
        else
          (key[0] == 'f' ? f.f_kind : f.g_kind) = k;
      } else if (key == "f_center_x") set_double(cx, key, value, &f.f_center_x);
      else if (key == "g_center_x") set_double(cx, key, value, &f.g_center_x);
      else if (key == "f_center_freq")
        set_double(cx, key, value, &f.f_center_freq);
      else if (key == "g_center_freq")
        set_double(cx, key, value, &f.g_center_freq);
      else if (key == "f_width") set_positive(cx, key, value, &f.f_width);
      else set_positive(cx, key, value, &f.g_width);
    } else if (section == "grid") {
      if (key == "points") {
        int v = 0;
        if (!parse_int(value, &v))
          diag(cx, "value of 'points' is not an integer: '" + value + "'");
        else if (v < 16 || (v & (v - 1)) != 0)
          diag(cx, "'points' must be a power of two, at least 16");
        else
          f.points = v;
      } else if (key == "length") {
        set_positive(cx, key, value, &f.length);
      } else {  // t_max
        set_positive(cx, key, value, &f.t_max);
      }
    } else {  // experiments
      if (key == "label") {
        f.label = value;
      } else if (key == "t_lo") set_positive(cx, key, value, &f.t_lo);
      else if (key == "t_hi") set_positive(cx, key, value, &f.t_hi);
      else if (key == "t_count") {
        int v = 0;
        if (!parse_int(value, &v))
          diag(cx, "value of 't_count' is not an integer: '" + value + "'");
        else if (v < 2)
          diag(cx, "'t_count' must be at least 2");
        else
          f.t_count = v;
      } else if (key == "q") {
        std::vector<double> qs;
        double single = 0;
        if (parse_list(value, &qs)) {
        } else if (parse_double(value, &single)) {
          qs = {single};
        } else {
          diag(cx, "'q' must be a number or a list like [2, inf]");
          continue;
        }
        bool ok = !qs.empty();
        for (double q : qs)
          if (!(q >= 2.0)) ok = false;
        if (!ok)
          diag(cx,
               "value out of range for 'q': every entry must satisfy "
               "q ∈ [2, inf]");
        else
          f.q_list = qs;
      } else if (key == "s") {
        double v = 0;
        if (!parse_double(value, &v))
          diag(cx, "value of 's' is not a number: '" + value + "'");
        else if (!(v >= 0.0 && v <= 1.0) || std::isinf(v))
          diag(cx, "value out of range for 's': s ∈ [0, 1]");
        else
          f.data_weight_s = v;
      } else if (key == "regime") {
        if (!parse_regime(value, &f.regime))
          diag(cx, "unknown regime '" + value + "'");
      } else if (key == "resolution") {
        int v = 0;
        if (!parse_int(value, &v))
          diag(cx, "value of 'resolution' is not an integer: '" + value + "'");
        else if (v < 64)
          diag(cx, "'resolution' must be at least 64");
        else
          f.resolution = v;
      } else if (key == "lower_bound") {
        if (!parse_bool(value, &f.lower_bound))
          diag(cx, "'lower_bound' must be true or false");
      } else if (key == "lower_bound_q") {
        double v = 0;
        if (!parse_double(value, &v) || !(v >= 2.0))
          diag(cx,
               "value out of range for 'lower_bound_q': q ∈ [2, inf]");
        else
          f.lower_bound_q = v;
      } else if (key == "strichartz_p" || key == "strichartz_q") {
        double v = 0;
        if (!parse_double(value, &v) || !(v >= 2.0) || std::isinf(v))
          diag(cx, "'" + key + "' must be a finite number >= 2");
        else {
          (key == "strichartz_p" ? f.strichartz_p : f.strichartz_q) = v;
          f.strichartz = true;
        }
      } else {  // strichartz_t
        set_positive(cx, key, value, &f.strichartz_T);
        f.strichartz = true;
        strichartz_T_seen = true;
      }
    }
  }

  // cross-field validation
  cx.line = dispersion_line;
  const bool has_coeffs =
      res.file.a_coeffs || res.file.b_coeffs || res.file.c_coeffs;
  if (!section_lines.count("dispersion")) {
    res.diagnostics.push_back(
        {0, "missing required section [dispersion]"});
  } else if (!cx.preset_seen && !has_coeffs) {
    diag(cx,
         "section [dispersion] must set 'preset' or give coefficient lists "
         "a, b, c");
  } else if (cx.preset_seen && has_coeffs) {
    diag(cx,
         "section [dispersion] sets both a preset and explicit coefficient "
         "lists; choose one");
  } else if (!cx.preset_seen &&
             !(res.file.a_coeffs && res.file.b_coeffs && res.file.c_coeffs)) {
    diag(cx,
         "explicit dispersion requires all three coefficient lists a, b, c");
  }

  cx.line = 0;
  if (res.file.label.empty()) res.file.label = "scenario";
  if (res.file.label.find_first_of(",\"\n\r") != std::string::npos)
    diag(cx,
         "'label' must not contain commas, quotes, or line breaks (labels "
         "are written verbatim into CSV cells)");
  if (!(res.file.t_lo < res.file.t_hi))
    diag(cx, "'t_lo' must be smaller than 't_hi'");
  if (res.file.t_hi > res.file.t_max)
    diag(cx, "'t_hi' exceeds the grid's 't_max'");
  if (res.file.strichartz) {
    if (!strichartz_T_seen) res.file.strichartz_T = res.file.t_hi;
    if (res.file.strichartz_T > res.file.t_max)
      diag(cx, "'strichartz_t' exceeds the grid's 't_max'");
  }
  return res;
}

inline ParseResult parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult res;
    res.diagnostics.push_back({0, "cannot open scenario file: " + path});
    return res;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string stem = path;
  const std::size_t slash = stem.find_last_of("/\\");
  if (slash != std::string::npos) stem = stem.substr(slash + 1);
  const std::size_t dot = stem.find_last_of('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return parse_scenario_text(buf.str(), stem);
}

// ---------------------------------------------------------------------------
// building runtime objects from a parsed file
// ---------------------------------------------------------------------------

inline DispersionTriple triple_from(const ScenarioFile& f) {
  if (f.preset == "schrodinger") return preset_schrodinger();
  if (f.preset == "schrodinger_shifted")
    return preset_schrodinger_shifted(f.kappa);
  if (f.preset == "gap") return preset_gap();
  if (f.preset == "definite") return preset_definite();
  if (f.preset == "tilted") return preset_tilted();
  if (f.a_coeffs && f.b_coeffs && f.c_coeffs) {
    return {{Polynomial(*f.a_coeffs), "a"},
            {Polynomial(*f.b_coeffs), "b"},
            {Polynomial(*f.c_coeffs), "c"}};
  }
  throw config_error("scenario file lacks a dispersion triple");
}

inline FrequencyBox box_from(const ScenarioFile& f) {
  FrequencyBox box;
  box.xi_lo = f.center_xi - f.half_width_xi;
  box.xi_hi = f.center_xi + f.half_width_xi;
  box.eta_lo = f.center_eta - f.half_width_eta;
  box.eta_hi = f.center_eta + f.half_width_eta;
  return box;
}

// Full scenario assembly; throws config errors from deeper validation
// (grid compatibility, aliasing, wrap-around budget) that depend on the
// combination of fields rather than a single line.  The optional argument
// overrides the file's geometry-trace resolution.
inline Scenario scenario_from(const ScenarioFile& f,
                              std::optional<int> resolution_override = {}) {
  const Grid grid(f.points, f.length);
  const DispersionTriple trip = triple_from(f);
  const BilinearSymbol symbol =
      make_window_symbol(f.center_xi, f.center_eta, f.half_width_xi,
                         f.half_width_eta, f.roll);
  const SampledState wf =
      make_witness(f.f_kind, f.f_center_x, f.f_center_freq, f.f_width, grid);
  const SampledState wg =
      make_witness(f.g_kind, f.g_center_x, f.g_center_freq, f.g_width, grid);
  return make_scenario(trip, symbol, wf, wg, f.t_max, f.label,
                       resolution_override.value_or(f.resolution));
}

}  // namespace rlab
