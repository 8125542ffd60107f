// qsl command line: batch analyses of spectral state files.
//
// Talks to the library exclusively through the public C API in qsl.h; all
// numbers printed here are projections of library results, never local
// recomputations.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsl.h"

namespace {

using nlohmann::json;

struct CliError {
  int exit_code;
  std::string message;
};

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitComputation = 4;

int status_exit(qsl_status status) {
  switch (status) {
    case QSL_OK:
      return 0;
    case QSL_ERR_INVALID_ARGUMENT:
    case QSL_ERR_ZERO_NORM:
    case QSL_ERR_ZERO_DISPERSION:
    case QSL_ERR_NONPOSITIVE_DISPERSION:
    case QSL_ERR_MISSING_LOWER_BOUND:
    case QSL_ERR_DOMAIN_MISMATCH:
    case QSL_ERR_VALIDATION:
      return kExitValidation;
    default:
      return kExitComputation;
  }
}

void check(qsl_status status) {
  if (status == QSL_OK) return;
  throw CliError{status_exit(status), std::string(qsl_status_name(status)) + ": " +
                                          qsl_last_error_message()};
}

using StatePtr = std::unique_ptr<qsl_state, decltype(&qsl_state_free)>;
using SetPtr = std::unique_ptr<qsl_interval_set, decltype(&qsl_interval_set_free)>;

// 17 significant digits round-trip a double exactly; the human reports use 6.
std::string num17(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num6(double v) {
  if (std::isnan(v)) return "-";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct CommonFlags {
  std::optional<double> hbar_override;
  double horizon_multiplier = 50.0;
  double eps_orth = 1e-10;
  int oversample = 16;
  std::int64_t n_alpha = 100000;
  std::uint64_t seed = 0;
  std::string output = "report";
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags, bool with_output) {
  cmd->add_option("--hbar-override", flags->hbar_override,
                  "Replace the file's hbar value");
  cmd->add_option("--horizon-multiplier", flags->horizon_multiplier,
                  "Scan horizon in units of the MT bound")
      ->default_val(50.0);
  cmd->add_option("--eps-orth", flags->eps_orth, "|S| orthogonality threshold")
      ->default_val(1e-10);
  cmd->add_option("--oversample", flags->oversample,
                  "Grid points per fastest |S| period")
      ->default_val(16);
  cmd->add_option("--n-alpha", flags->n_alpha, "Alpha samples for the union")
      ->default_val(100000);
  cmd->add_option("--seed", flags->seed, "RNG seed (sweep only)")->default_val(0);
  if (with_output) {
    cmd->add_option("--output", flags->output, "Output form: report or json")
        ->check(CLI::IsMember({"report", "json"}))
        ->default_val("report");
  }
}

StatePtr load_state(const std::string& path,
                    const std::optional<double>& hbar_override) {
  std::ifstream in(path);
  if (!in) throw CliError{kExitParse, "cannot open " + path};
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw CliError{kExitParse, "malformed JSON in " + path};
  if (!doc.is_object()) {
    throw CliError{kExitParse, "state file must be a JSON object"};
  }
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "hbar" && key != "levels" && key != "nodes") {
      throw CliError{kExitParse, "unknown field '" + key + "' in " + path};
    }
  }
  if (!doc.contains("hbar") || !doc["hbar"].is_number()) {
    throw CliError{kExitParse, "field 'hbar' must be a number"};
  }
  const bool has_levels = doc.contains("levels");
  const bool has_nodes = doc.contains("nodes");
  if (has_levels == has_nodes) {
    throw CliError{kExitParse, "exactly one of 'levels' or 'nodes' is required"};
  }
  const double hbar = hbar_override.value_or(doc["hbar"].get<double>());

  qsl_state* raw = nullptr;
  if (has_levels) {
    const json& levels = doc["levels"];
    if (!levels.is_array() || levels.empty()) {
      throw CliError{kExitParse, "'levels' must be a non-empty array"};
    }
    std::vector<double> energy, re, im;
    for (const json& lv : levels) {
      if (!lv.is_object()) throw CliError{kExitParse, "level entries must be objects"};
      for (const auto& item : lv.items()) {
        const std::string& key = item.key();
        if (key != "energy" && key != "re" && key != "im") {
          throw CliError{kExitParse, "unknown level field '" + key + "'"};
        }
      }
      for (const char* key : {"energy", "re", "im"}) {
        if (!lv.contains(key) || !lv[key].is_number()) {
          throw CliError{kExitParse, std::string("level field '") + key +
                                         "' must be a number"};
        }
      }
      energy.push_back(lv["energy"].get<double>());
      re.push_back(lv["re"].get<double>());
      im.push_back(lv["im"].get<double>());
    }
    check(qsl_state_create_discrete(hbar, energy.data(), re.data(), im.data(),
                                    energy.size(), &raw));
  } else {
    const json& nodes = doc["nodes"];
    if (!nodes.is_array() || nodes.empty()) {
      throw CliError{kExitParse, "'nodes' must be a non-empty array"};
    }
    std::vector<double> energy, weight;
    for (const json& nd : nodes) {
      if (!nd.is_object()) throw CliError{kExitParse, "node entries must be objects"};
      for (const auto& item : nd.items()) {
        const std::string& key = item.key();
        if (key != "energy" && key != "weight") {
          throw CliError{kExitParse, "unknown node field '" + key + "'"};
        }
      }
      for (const char* key : {"energy", "weight"}) {
        if (!nd.contains(key) || !nd[key].is_number()) {
          throw CliError{kExitParse, std::string("node field '") + key +
                                         "' must be a number"};
        }
      }
      energy.push_back(nd["energy"].get<double>());
      weight.push_back(nd["weight"].get<double>());
    }
    check(qsl_state_create_quadrature(hbar, energy.data(), weight.data(),
                                      energy.size(), &raw));
  }
  return StatePtr(raw, &qsl_state_free);
}

/* ------------------------------------------------------------------ */

struct AnalysisReport {
  std::string path;
  qsl_state_kind kind = QSL_STATE_DISCRETE;
  double hbar = 1.0;
  std::size_t levels = 0;
  qsl_moments moments{};
  std::string t0_status;  // found | not_found_within_horizon | zero_dispersion
  qsl_orth_result orth{};
  double mt = 0.0;
  double ml = 0.0;
  std::string tightest;
  bool saturation_checked = false;
  qsl_saturation_result saturation{};
  bool has_union = false;
  qsl_interval union_interval{};
  std::size_t union_components = 0;
  CommonFlags flags;
};

AnalysisReport run_analysis(const std::string& path, const CommonFlags& flags) {
  AnalysisReport rep;
  rep.path = path;
  rep.flags = flags;

  StatePtr state = load_state(path, flags.hbar_override);
  check(qsl_state_get_kind(state.get(), &rep.kind));
  check(qsl_state_hbar(state.get(), &rep.hbar));
  check(qsl_state_size(state.get(), &rep.levels));
  check(qsl_state_moments(state.get(), &rep.moments));
  check(qsl_mt_bound(&rep.moments, rep.hbar, &rep.mt));
  check(qsl_ml_bound(&rep.moments, rep.hbar, &rep.ml));
  rep.tightest = rep.ml > rep.mt ? "ML" : (rep.mt > rep.ml ? "MT" : "tie");

  qsl_orth_options opts;
  qsl_orth_options_default(&opts);
  opts.eps_orth = flags.eps_orth;
  opts.oversample = flags.oversample;
  if (std::isfinite(rep.mt)) opts.horizon = flags.horizon_multiplier * rep.mt;

  const bool dispersive = rep.moments.variance > 0.0;
  if (dispersive) {
    check(qsl_orthogonalization_time(state.get(), &opts, &rep.orth));
    rep.t0_status = rep.orth.found ? "found" : "not_found_within_horizon";
  } else {
    rep.t0_status = "zero_dispersion";
    rep.orth.t0 = std::nan("");
  }

  if (rep.kind == QSL_STATE_DISCRETE && dispersive) {
    check(qsl_saturation_check(state.get(), &rep.saturation));
    rep.saturation_checked = true;
  }

  if (dispersive) {
    qsl_interval_set* set = nullptr;
    check(qsl_union_excluded(&rep.moments, rep.hbar, flags.n_alpha, &set));
    SetPtr owner(set, &qsl_interval_set_free);
    rep.union_components = qsl_interval_set_size(set);
    if (rep.union_components > 0) {
      qsl_interval first{}, last{};
      check(qsl_interval_set_get(set, 0, &first));
      check(qsl_interval_set_get(set, rep.union_components - 1, &last));
      rep.union_interval = qsl_interval{first.lo, last.hi};
      rep.has_union = true;
    }
  }
  return rep;
}

void print_report_human(const AnalysisReport& r) {
  std::printf("input:\n");
  std::printf("  file            %s\n", r.path.c_str());
  std::printf("  kind            %s\n",
              r.kind == QSL_STATE_DISCRETE ? "discrete" : "quadrature");
  std::printf("  levels          %zu\n", r.levels);
  std::printf("  hbar            %s\n", num6(r.hbar).c_str());
  std::printf("moments:\n");
  std::printf("  mean            %s\n", num6(r.moments.mean).c_str());
  std::printf("  second          %s\n", num6(r.moments.second).c_str());
  std::printf("  variance        %s\n", num6(r.moments.variance).c_str());
  std::printf("  dispersion      %s\n", num6(std::sqrt(r.moments.variance)).c_str());
  if (r.moments.has_min_energy) {
    std::printf("  min energy      %s\n", num6(r.moments.min_energy).c_str());
  }
  std::printf("orthogonalization:\n");
  std::printf("  status          %s\n", r.t0_status.c_str());
  if (r.t0_status == "found") {
    std::printf("  t0              %s\n", num6(r.orth.t0).c_str());
    std::printf("  residual        %s\n", num6(r.orth.residual).c_str());
  } else if (r.t0_status == "not_found_within_horizon") {
    std::printf("  min |S|         %s\n", num6(r.orth.min_abs_survival).c_str());
    std::printf("  at time         %s\n", num6(r.orth.argmin_time).c_str());
    std::printf("  horizon         %s\n", num6(r.orth.horizon).c_str());
  }
  std::printf("bounds:\n");
  std::printf("  mt              %s\n", num6(r.mt).c_str());
  std::printf("  ml              %s\n", num6(r.ml).c_str());
  std::printf("  tightest        %s\n", r.tightest.c_str());
  std::printf("saturation:\n");
  if (r.saturation_checked) {
    std::printf("  intelligent     %s\n", r.saturation.is_intelligent ? "yes" : "no");
    std::printf("  occupied        %zu\n", r.saturation.occupied_levels);
  } else {
    std::printf("  intelligent     -\n");
  }
  std::printf("excluded union:\n");
  if (r.has_union) {
    std::printf("  n_alpha         %lld\n",
                static_cast<long long>(r.flags.n_alpha));
    std::printf("  interval        (%s, %s)\n", num6(r.union_interval.lo).c_str(),
                num6(r.union_interval.hi).c_str());
  } else {
    std::printf("  interval        -\n");
  }
  std::printf("tolerances:\n");
  std::printf("  eps orth        %s\n", num6(r.flags.eps_orth).c_str());
  std::printf("  oversample      %d\n", r.flags.oversample);
  std::printf("  horizon mult    %s\n", num6(r.flags.horizon_multiplier).c_str());
}

void print_report_json(const AnalysisReport& r) {
  std::string out = "{\n";
  out += "  \"input\": {\"path\": \"" + r.path + "\", \"kind\": \"";
  out += r.kind == QSL_STATE_DISCRETE ? "discrete" : "quadrature";
  out += "\", \"hbar\": " + num17(r.hbar) +
         ", \"levels\": " + std::to_string(r.levels) + ",\n";
  out += "    \"moments\": {\"mean\": " + num17(r.moments.mean) +
         ", \"second\": " + num17(r.moments.second) +
         ", \"variance\": " + num17(r.moments.variance) + ", \"min_energy\": " +
         (r.moments.has_min_energy ? num17(r.moments.min_energy) : "null") +
         ", \"variance_clamped\": " +
         (r.moments.variance_clamped ? "true" : "false") + "}},\n";
  out += "  \"t0\": {\"status\": \"" + r.t0_status + "\"";
  if (r.t0_status != "zero_dispersion") {
    out += ", \"value\": " + num17(r.orth.t0);
    out += ", \"residual\": " + num17(r.orth.residual);
    out += ", \"min_abs_survival\": " + num17(r.orth.min_abs_survival);
    out += ", \"argmin_time\": " + num17(r.orth.argmin_time);
    out += ", \"horizon\": " + num17(r.orth.horizon);
  }
  out += "},\n";
  out += "  \"bounds\": {\"mt\": " + num17(r.mt) + ", \"ml\": " + num17(r.ml) +
         ", \"tightest\": \"" + r.tightest + "\"},\n";
  if (r.saturation_checked) {
    out += "  \"saturation\": {\"is_intelligent\": ";
    out += r.saturation.is_intelligent ? "true" : "false";
    out += ", \"occupied_levels\": " + std::to_string(r.saturation.occupied_levels);
    out += ", \"prob_deviation\": " + num17(r.saturation.prob_deviation);
    out += ", \"energy_deviation\": " + num17(r.saturation.energy_deviation) + "},\n";
  } else {
    out += "  \"saturation\": null,\n";
  }
  if (r.has_union) {
    out += "  \"union_excluded\": {\"n_alpha\": " + std::to_string(r.flags.n_alpha) +
           ", \"components\": " + std::to_string(r.union_components) +
           ", \"lo\": " + num17(r.union_interval.lo) +
           ", \"hi\": " + num17(r.union_interval.hi) + "},\n";
  } else {
    out += "  \"union_excluded\": null,\n";
  }
  char tolbuf[160];
  std::snprintf(tolbuf, sizeof tolbuf,
                "  \"tolerances\": {\"eps_orth\": %.17g, \"oversample\": %d, "
                "\"horizon_multiplier\": %.17g, \"n_alpha\": %lld}\n",
                r.flags.eps_orth, r.flags.oversample, r.flags.horizon_multiplier,
                static_cast<long long>(r.flags.n_alpha));
  out += tolbuf;
  out += "}\n";
  std::fputs(out.c_str(), stdout);
}

int cmd_analyze(const std::string& path, const CommonFlags& flags) {
  const AnalysisReport rep = run_analysis(path, flags);
  if (flags.output == "json") {
    print_report_json(rep);
  } else {
    print_report_human(rep);
  }
  return 0;
}

/* ------------------------------------------------------------------ */

int cmd_intervals(const std::string& path, const CommonFlags& flags) {
  StatePtr state = load_state(path, flags.hbar_override);
  double hbar = 0.0;
  check(qsl_state_hbar(state.get(), &hbar));
  qsl_moments m{};
  check(qsl_state_moments(state.get(), &m));
  qsl_interval omega{};
  check(qsl_omega_window(&m, &omega));

  if (flags.n_alpha < 2) throw CliError{kExitValidation, "--n-alpha must be >= 2"};
  const double width = omega.hi - omega.lo;
  const double margin = 1e-9 * width;
  const double lo = omega.lo + margin;
  const double step = (width - 2.0 * margin) / static_cast<double>(flags.n_alpha - 1);

  std::printf("alpha,lo,hi,empty\n");
  for (std::int64_t i = 0; i < flags.n_alpha; ++i) {
    const double alpha = lo + static_cast<double>(i) * step;
    int nonempty = 0;
    qsl_interval iv{};
    check(qsl_excluded_interval(&m, alpha, hbar, &nonempty, &iv));
    if (nonempty) {
      std::printf("%s,%s,%s,0\n", num17(alpha).c_str(), num17(iv.lo).c_str(),
                  num17(iv.hi).c_str());
    } else {
      std::printf("%s,,,1\n", num17(alpha).c_str());
    }
  }

  qsl_interval_set* set = nullptr;
  check(qsl_union_excluded(&m, hbar, flags.n_alpha, &set));
  SetPtr owner(set, &qsl_interval_set_free);
  const std::size_t components = qsl_interval_set_size(set);
  if (components > 0) {
    qsl_interval first{}, last{};
    check(qsl_interval_set_get(set, 0, &first));
    check(qsl_interval_set_get(set, components - 1, &last));
    std::printf("union,%s,%s,0\n", num17(first.lo).c_str(), num17(last.hi).c_str());
  } else {
    std::printf("union,,,1\n");
  }
  return 0;
}

/* ------------------------------------------------------------------ */

void print_certificate(const qsl_certificate& cert, double implied,
                       const std::string& output) {
  const char* family = cert.family == QSL_FAMILY_LINEAR ? "linear" : "quadratic";
  const char* domain = cert.domain == QSL_DOMAIN_FULL_LINE ? "full_line"
                                                           : "half_line_nonneg";
  if (output == "json") {
    std::string out = "{\n";
    out += "  \"family\": \"" + std::string(family) + "\",\n";
    out += "  \"domain\": \"" + std::string(domain) + "\",\n";
    out += "  \"coeffs\": [" + num17(cert.coeffs[0]) + ", " +
           num17(cert.coeffs[1]) + ", " + num17(cert.coeffs[2]) + "],\n";
    out += "  \"amplitude\": " + num17(cert.amplitude) + ",\n";
    out += "  \"phase\": " + num17(cert.phase) + ",\n";
    out += "  \"certified_slack\": " + num17(cert.certified_slack) + ",\n";
    out += "  \"implied_bound\": " + num17(implied) + "\n";
    out += "}\n";
    std::fputs(out.c_str(), stdout);
  } else {
    std::printf("family          %s\n", family);
    std::printf("domain          %s\n", domain);
    std::printf("f(x)            %s + %s x + %s x^2\n", num6(cert.coeffs[0]).c_str(),
                num6(cert.coeffs[1]).c_str(), num6(cert.coeffs[2]).c_str());
    std::printf("amplitude       %s\n", num6(cert.amplitude).c_str());
    std::printf("phase           %s\n", num6(cert.phase).c_str());
    std::printf("certified slack %s\n", num6(cert.certified_slack).c_str());
    std::printf("implied bound   %s\n", num6(implied).c_str());
  }
}

int cmd_minorant_verify(double alpha, double span, std::int64_t points,
                        const std::string& output) {
  qsl_minorant_scan scan{};
  check(qsl_verify_quadratic_minorant(alpha, span, points, &scan));
  if (output == "json") {
    std::string out = "{\n";
    out += "  \"alpha\": " + num17(alpha) + ",\n";
    out += "  \"min_value\": " + num17(scan.min_value) + ",\n";
    out += "  \"argmins\": [" + num17(scan.argmin_lo) + ", " +
           num17(scan.argmin_hi) + "]\n";
    out += "}\n";
    std::fputs(out.c_str(), stdout);
  } else {
    std::printf("alpha           %s\n", num6(alpha).c_str());
    std::printf("min value       %s\n", num6(scan.min_value).c_str());
    std::printf("argmins         %s, %s\n", num6(scan.argmin_lo).c_str(),
                num6(scan.argmin_hi).c_str());
    std::printf("expected        %s, %s\n", num6(-alpha - M_PI / 2).c_str(),
                num6(-alpha + M_PI / 2).c_str());
  }
  return 0;
}

int cmd_minorant_search(const std::string& path, const std::string& family,
                        const std::string& domain, const CommonFlags& flags) {
  StatePtr state = load_state(path, flags.hbar_override);
  double hbar = 0.0;
  check(qsl_state_hbar(state.get(), &hbar));
  qsl_moments m{};
  check(qsl_state_moments(state.get(), &m));

  const int fam = family == "linear" ? QSL_FAMILY_LINEAR : QSL_FAMILY_QUADRATIC;
  const int dom = domain == "nonneg" ? QSL_DOMAIN_HALF_LINE_NONNEG
                                     : QSL_DOMAIN_FULL_LINE;
  qsl_certificate cert{};
  check(qsl_optimize_family(fam, dom, &m, hbar, &cert));
  qsl_time_bound bound{};
  check(qsl_bound_from_certificate(&cert, &m, hbar, &bound));
  const double implied = bound.implied_lower_bound;
  qsl_time_bound_clear(&bound);
  print_certificate(cert, implied, flags.output);
  return 0;
}

/* ------------------------------------------------------------------ */

double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int cmd_sweep(int levels, int count, double emin, double emax,
              const CommonFlags& flags) {
  if (levels < 2) throw CliError{kExitValidation, "--levels must be >= 2"};
  if (count < 1) throw CliError{kExitValidation, "--count must be >= 1"};
  if (!(emin < emax)) throw CliError{kExitValidation, "--emin must be < --emax"};
  const double hbar = flags.hbar_override.value_or(1.0);

  std::mt19937_64 rng(flags.seed);
  std::printf("id,delta_e,mean_minus_min,mt_bound,ml_bound,t0_status,t0,slack\n");
  for (int id = 0; id < count; ++id) {
    std::vector<double> energy, re, im;
    if (id % 5 == 0) {
      // every fifth state is an equal-weight pair, the shape that reaches
      // its bound exactly; generic random states rarely orthogonalize at all
      const double de = (0.02 + 0.43 * next_uniform(rng)) * (emax - emin);
      const double mean = emin + de + (emax - emin - 2.0 * de) * next_uniform(rng);
      energy = {mean - de, mean + de};
      re = {std::sqrt(0.5), std::sqrt(0.5)};
      im = {0.0, 0.0};
    } else {
      energy.resize(levels);
      re.resize(levels);
      im.assign(levels, 0.0);
      for (int i = 0; i < levels; ++i) {
        energy[i] = emin + (emax - emin) * next_uniform(rng);
        re[i] = std::sqrt(next_uniform(rng) + 1e-9);
      }
    }
    qsl_state* raw = nullptr;
    check(qsl_state_create_discrete(hbar, energy.data(), re.data(), im.data(),
                                    energy.size(), &raw));
    StatePtr state(raw, &qsl_state_free);

    qsl_moments m{};
    check(qsl_state_moments(state.get(), &m));
    double mt = 0.0, ml = 0.0;
    check(qsl_mt_bound(&m, hbar, &mt));
    check(qsl_ml_bound(&m, hbar, &ml));

    qsl_orth_options opts;
    qsl_orth_options_default(&opts);
    opts.eps_orth = flags.eps_orth;
    opts.oversample = flags.oversample;
    if (std::isfinite(mt)) opts.horizon = flags.horizon_multiplier * mt;
    qsl_orth_result orth{};
    check(qsl_orthogonalization_time(state.get(), &opts, &orth));

    const double delta_e = std::sqrt(m.variance);
    const double gap = m.mean - m.min_energy;
    if (orth.found) {
      const double slack = orth.t0 - std::max(mt, ml);
      std::printf("%d,%s,%s,%s,%s,found,%s,%s\n", id, num17(delta_e).c_str(),
                  num17(gap).c_str(), num17(mt).c_str(), num17(ml).c_str(),
                  num17(orth.t0).c_str(), num17(slack).c_str());
    } else {
      std::printf("%d,%s,%s,%s,%s,not_found,,\n", id, num17(delta_e).c_str(),
                  num17(gap).c_str(), num17(mt).c_str(), num17(ml).c_str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum speed limit toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;

  std::string analyze_file;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Full analysis of a state file: moments, bounds, t0, union");
  analyze->add_option("state_file", analyze_file, "State file (JSON)")->required();
  add_common_flags(analyze, &flags, true);

  std::string intervals_file;
  CLI::App* intervals = app.add_subcommand(
      "intervals", "CSV of excluded intervals per alpha plus the union row");
  intervals->add_option("state_file", intervals_file, "State file (JSON)")
      ->required();
  add_common_flags(intervals, &flags, false);

  CLI::App* minorant =
      app.add_subcommand("minorant", "Comparison-function certificates");
  double verify_alpha = 0.0;
  double verify_span = 4.0 * M_PI;
  std::int64_t verify_points = 1000000;
  CLI::App* verify = minorant->add_subcommand(
      "verify", "Grid-certify the quadratic comparison function");
  verify->add_option("--alpha", verify_alpha, "Phase alpha")->default_val(0.0);
  verify->add_option("--span", verify_span, "Half-width of the scan window");
  verify->add_option("--points", verify_points, "Grid points")
      ->default_val(1000000);
  verify->add_option("--output", flags.output, "Output form: report or json")
      ->check(CLI::IsMember({"report", "json"}))
      ->default_val("report");

  std::string search_file, search_family = "quadratic", search_domain = "full";
  CLI::App* search = minorant->add_subcommand(
      "search", "Optimize a minorant family against a state's moments");
  search->add_option("state_file", search_file, "State file (JSON)")->required();
  search->add_option("--family", search_family, "linear or quadratic")
      ->check(CLI::IsMember({"linear", "quadratic"}))
      ->default_val("quadratic");
  search->add_option("--domain", search_domain, "full or nonneg")
      ->check(CLI::IsMember({"full", "nonneg"}))
      ->default_val("full");
  add_common_flags(search, &flags, true);
  minorant->require_subcommand(1);

  int sweep_levels = 4;
  int sweep_count = 100;
  double sweep_emin = -5.0;
  double sweep_emax = 5.0;
  CLI::App* sweep = app.add_subcommand(
      "sweep",
      "CSV of bounds vs measured t0 over random states; every fifth state is "
      "an equal-weight two-level pair so saturated rows appear");
  sweep->add_option("--levels", sweep_levels, "Levels per state")->default_val(4);
  sweep->add_option("--count", sweep_count, "Number of states")->default_val(100);
  sweep->add_option("--emin", sweep_emin, "Lower energy bound")->default_val(-5.0);
  sweep->add_option("--emax", sweep_emax, "Upper energy bound")->default_val(5.0);
  add_common_flags(sweep, &flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : kExitParse;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_file, flags);
    if (*intervals) return cmd_intervals(intervals_file, flags);
    if (*minorant) {
      if (*verify) {
        return cmd_minorant_verify(verify_alpha, verify_span, verify_points,
                                   flags.output);
      }
      return cmd_minorant_search(search_file, search_family, search_domain, flags);
    }
    if (*sweep) {
      return cmd_sweep(sweep_levels, sweep_count, sweep_emin, sweep_emax, flags);
    }
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitComputation;
  }
  return 0;
}
