// Copyright 2026 The murlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "murlab/error_measures.hpp"
#include "murlab/lund_wiseman.hpp"
#include "murlab/observables.hpp"
#include "murlab/relations.hpp"
#include "murlab/sampling.hpp"
#include "murlab/transport.hpp"

namespace murlab::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "mur-lab/1";

/// Shared command-line state, echoed back into every report.
struct Options {
  std::optional<double> theta;
  std::optional<std::string> theta_grid;
  double gamma = 1.0;
  std::optional<double> lambda;
  std::optional<std::string> state_bloch;
  std::optional<std::string> state_amplitudes;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::optional<std::string> out_path;
  bool weak = false;
  std::string a_bloch = "0,0,1";
  std::optional<std::string> c_bloch;
};

/// Deterministic float formatting for the CSV writers.
std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::vector<double> parse_doubles(const std::string& text, std::size_t count,
                                  const char* what) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      while (used < item.size() &&
             std::isspace(static_cast<unsigned char>(item[used]))) {
        ++used;
      }
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw precondition_error(std::string(what) + ": cannot parse '" + item +
                               "' as a number");
    }
  }
  if (values.size() != count) {
    throw precondition_error(std::string(what) + ": expected " +
                             std::to_string(count) +
                             " comma-separated numbers, got '" + text + "'");
  }
  return values;
}

/// One complex amplitude in "re", "imj" or "re+imj" form (j suffix).
Complex parse_amplitude(std::string text, const char* what) {
  const auto fail = [&]() -> Complex {
    throw precondition_error(std::string(what) + ": cannot parse '" + text +
                             "' as re+imj");
  };
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) return fail();

  const bool imaginary = compact.back() == 'j';
  if (imaginary) compact.pop_back();
  if (compact.empty()) return Complex(0.0, 1.0);

  // Split at the last top-level +/- (not leading, not an exponent sign).
  std::size_t split = std::string::npos;
  for (std::size_t i = compact.size(); i-- > 1;) {
    const char c = compact[i];
    if ((c == '+' || c == '-') && compact[i - 1] != 'e' &&
        compact[i - 1] != 'E') {
      split = i;
      break;
    }
  }

  try {
    std::size_t used = 0;
    if (!imaginary) {
      const double re = std::stod(compact, &used);
      if (used != compact.size()) return fail();
      return Complex(re, 0.0);
    }
    if (split == std::string::npos) {
      // Pure imaginary: "imj" or "+j"/"-j".
      if (compact == "+") return Complex(0.0, 1.0);
      if (compact == "-") return Complex(0.0, -1.0);
      const double im = std::stod(compact, &used);
      if (used != compact.size()) return fail();
      return Complex(0.0, im);
    }
    const std::string re_text = compact.substr(0, split);
    std::string im_text = compact.substr(split);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) return fail();
    if (im_text == "+") return Complex(re, 1.0);
    if (im_text == "-") return Complex(re, -1.0);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) return fail();
    return Complex(re, im);
  } catch (const precondition_error&) {
    throw;
  } catch (const std::exception&) {
    return fail();
  }
}

BlochVector parse_bloch(const std::string& text, const char* what) {
  const std::vector<double> v = parse_doubles(text, 3, what);
  return BlochVector(v[0], v[1], v[2]);
}

std::pair<Complex, Complex> parse_amplitude_pair(const std::string& text) {
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos) {
    throw precondition_error(
        "--state-amplitudes: expected two comma-separated amplitudes");
  }
  return {parse_amplitude(text.substr(0, comma), "--state-amplitudes"),
          parse_amplitude(text.substr(comma + 1), "--state-amplitudes")};
}

/// Ket of a pure qubit state given as a unit Bloch vector.
Ket bloch_to_ket(const BlochVector& r) {
  if (std::abs(r.norm() - 1.0) > 1e-9) {
    throw precondition_error(
        "--state-bloch: a pure (unit) Bloch vector is required here");
  }
  const double z = std::min(1.0, std::max(-1.0, r.z()));
  const double half = std::acos(z) / 2.0;
  const double phi = std::atan2(r.y(), r.x());
  Ket psi(2);
  psi << Complex(std::cos(half), 0.0), std::polar(std::sin(half), phi);
  return psi;
}

/// The state for direct-test: defaults to the maximally mixed qubit.
QuantumState resolve_state(const Options& opt) {
  if (opt.state_bloch && opt.state_amplitudes) {
    throw precondition_error(
        "--state-bloch and --state-amplitudes are mutually exclusive");
  }
  if (opt.state_amplitudes) {
    const auto [alpha, beta] = parse_amplitude_pair(*opt.state_amplitudes);
    Ket psi(2);
    psi << alpha, beta;
    return QuantumState::from_ket(psi);
  }
  if (opt.state_bloch) {
    return QuantumState::from_bloch(
        parse_bloch(*opt.state_bloch, "--state-bloch"));
  }
  return QuantumState::maximally_mixed(2);
}

/// The object amplitudes for the circuit: defaults to |0>.
std::pair<Complex, Complex> resolve_amplitudes(const Options& opt) {
  if (opt.state_bloch && opt.state_amplitudes) {
    throw precondition_error(
        "--state-bloch and --state-amplitudes are mutually exclusive");
  }
  if (opt.state_amplitudes) {
    return parse_amplitude_pair(*opt.state_amplitudes);
  }
  if (opt.state_bloch) {
    const Ket psi = bloch_to_ket(parse_bloch(*opt.state_bloch,
                                             "--state-bloch"));
    return {psi(0), psi(1)};
  }
  return {Complex(1.0, 0.0), Complex(0.0, 0.0)};
}

/// Theta list: --theta wins for a single point, --theta-grid start:stop:count
/// for a sweep, @p fallback when neither is given.
std::vector<double> resolve_thetas(const Options& opt,
                                   const std::vector<double>& fallback) {
  if (opt.theta && opt.theta_grid) {
    throw precondition_error("--theta and --theta-grid are mutually exclusive");
  }
  if (opt.theta) return {*opt.theta};
  if (!opt.theta_grid) return fallback;

  const std::string& spec = *opt.theta_grid;
  const std::size_t c1 = spec.find(':');
  const std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                                 : spec.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos) {
    throw precondition_error("--theta-grid: expected start:stop:count");
  }
  double start = 0.0;
  double stop = 0.0;
  long count = 0;
  try {
    start = std::stod(spec.substr(0, c1));
    stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    count = std::stol(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw precondition_error("--theta-grid: expected start:stop:count");
  }
  if (count < 1 || count > 1000000) {
    throw precondition_error("--theta-grid: count must be in [1, 10^6]");
  }
  std::vector<double> thetas(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    thetas[static_cast<std::size_t>(i)] =
        count == 1 ? start
                   : start + (stop - start) * static_cast<double>(i) /
                         static_cast<double>(count - 1);
  }
  return thetas;
}

json flags_block(const Options& opt) {
  json flags;
  flags["format"] = opt.format;
  flags["seed"] = opt.seed;
  flags["shots"] = opt.shots;
  flags["out"] = opt.out_path ? json(*opt.out_path) : json(nullptr);
  return flags;
}

json bloch_json(const BlochVector& v) { return json::array({v.x(), v.y(), v.z()}); }

json joint_json(const JointDistribution& joint) {
  json rows = json::array();
  for (const auto& atom : joint.atoms()) {
    json row;
    row["x"] = atom.x;
    row["y"] = atom.y;
    row["weight"] = atom.weight;
    rows.push_back(row);
  }
  return rows;
}

json estimate_json(const Estimate& sq, const Estimate& root,
                   const Options& opt) {
  json mc;
  mc["estimate_sq"] = sq.value;
  mc["std_error_sq"] = sq.std_error;
  mc["estimate"] = root.value;
  if (std::isnan(root.std_error)) {
    mc["std_error"] = json(nullptr);
  } else {
    mc["std_error"] = root.std_error;
  }
  mc["shots"] = sq.shots;
  mc["seed"] = opt.seed;
  return mc;
}

/// Two-outcome marginal as Bloch coefficients of each effect.
json marginal_json(const DiscreteObservable& obs) {
  json rows = json::array();
  for (const auto& outcome : obs.outcomes()) {
    const EffectBloch bloch = effect_bloch(outcome.effect);
    json row;
    row["value"] = outcome.value;
    row["weight"] = bloch.weight;
    row["vector"] = json::array(
        {bloch.vector.x(), bloch.vector.y(), bloch.vector.z()});
    rows.push_back(row);
  }
  return rows;
}

void emit(const json& report, const Options& opt, std::ostream& out);
void emit_text(const std::string& text, const Options& opt, std::ostream& out);

// ---------------------------------------------------------------------------
// direct-test
// ---------------------------------------------------------------------------

int cmd_direct_test(const Options& opt, std::ostream& out) {
  if (opt.lambda && opt.theta) {
    throw precondition_error(
        "direct-test: pass either --lambda (error mode) or --theta "
        "(disturbance mode), not both");
  }
  if (!opt.lambda && !opt.theta) {
    throw precondition_error(
        "direct-test: one of --lambda or --theta is required");
  }

  const QuantumState rho = resolve_state(opt);
  const BlochVector rho_bloch(
      real_expectation(rho, pauli_x()), real_expectation(rho, pauli_y()),
      real_expectation(rho, pauli_z()));

  json config;
  json analytic;
  std::optional<DirectTestResult> direct;

  if (opt.lambda) {
    const double lambda = *opt.lambda;
    if (lambda < 0.0 || lambda > 1.0) {
      throw precondition_error("--lambda must lie in [0, 1]");
    }
    const DiscreteObservable a =
        sharp_qubit_observable(BlochVector(0, 0, 1));
    std::vector<Outcome> outcomes(2);
    outcomes[0] = {+1.0, bloch_to_effect(lambda * BlochVector(0, 0, 1), +1)};
    outcomes[1] = {-1.0, bloch_to_effect(lambda * BlochVector(0, 0, 1), -1)};
    const DiscreteObservable c{outcomes};

    direct.emplace(epsilon_direct(rho, a, c));

    config["mode"] = "epsilon";
    config["lambda"] = lambda;
    config["target_bloch"] = bloch_json(BlochVector(0, 0, 1));
    config["approximator_bloch"] = bloch_json(lambda * BlochVector(0, 0, 1));
    config["state_bloch"] = bloch_json(rho_bloch);

    analytic["epsilon_sq"] = direct->squared;
    analytic["epsilon"] = direct->value;
  } else {
    const double theta = *opt.theta;
    const Instrument inst = z_instrument(theta);
    const DiscreteObservable b =
        sharp_qubit_observable(BlochVector(1, 0, 0));

    direct.emplace(eta_direct(rho, b, inst));

    config["mode"] = "eta";
    config["theta"] = theta;
    config["gamma"] = opt.gamma;
    config["target_bloch"] = bloch_json(BlochVector(1, 0, 0));
    config["state_bloch"] = bloch_json(rho_bloch);

    analytic["eta_sq"] = direct->squared;
    analytic["eta"] = direct->value;
  }
  analytic["joint"] = joint_json(direct->joint);

  json report;
  report["schema"] = kSchema;
  report["command"] = "direct-test";
  report["config"] = config;
  report["analytic"] = analytic;

  if (opt.shots > 0) {
    const ShotRecord record =
        sample_distribution(direct->joint, opt.shots, opt.seed);
    const Estimate sq = opt.lambda ? estimate_epsilon_direct(record)
                                   : estimate_eta_direct(record);
    report["monte_carlo"] = estimate_json(sq, sqrt_estimate(sq), opt);
  } else {
    report["monte_carlo"] = json(nullptr);
  }
  report["flags"] = flags_block(opt);

  if (opt.format == "json") {
    emit(report, opt, out);
    return 0;
  }

  // CSV: one summary row; absent fields stay empty.
  std::string csv =
      "mode,lambda,theta,analytic_sq,analytic,mc_estimate_sq,mc_std_error_sq,"
      "shots\n";
  csv += opt.lambda ? "epsilon," + fmt(*opt.lambda)
                    : "eta,," + fmt(*opt.theta);
  if (opt.lambda) {
    csv += ",";  // theta column empty in epsilon mode
  }
  csv += "," + fmt(direct->squared) + "," + fmt(direct->value);
  if (opt.shots > 0) {
    const json& mc = report["monte_carlo"];
    csv += "," + fmt(mc["estimate_sq"].get<double>()) + "," +
           fmt(mc["std_error_sq"].get<double>()) + "," +
           std::to_string(opt.shots);
  } else {
    csv += ",,,0";
  }
  csv += "\n";
  emit_text(csv, opt, out);
  return 0;
}

// ---------------------------------------------------------------------------
// circuit
// ---------------------------------------------------------------------------

json circuit_row(const CircuitConfig& cfg, const Options& opt) {
  cfg.validate();
  const OutcomeDistribution8 dist = simulate(cfg);
  const CircuitMarginals marg = marginals(cfg);

  json row;
  row["theta"] = cfg.theta;

  json table = json::array();
  for (int k : {+1, -1}) {
    for (int l : {+1, -1}) {
      for (int n : {+1, -1}) {
        json entry;
        entry["z_p"] = k;
        entry["x_f"] = l;
        entry["z_m"] = n;
        entry["p"] = dist.probability(k, l, n);
        table.push_back(entry);
      }
    }
  }
  row["outcomes"] = table;

  json marginals_block;
  marginals_block["probe"] = marginal_json(marg.probe);
  marginals_block["final_x"] = marginal_json(marg.final_x);
  marginals_block["apparatus"] = marginal_json(marg.apparatus);
  row["marginals"] = marginals_block;

  const bool weak_admissible =
      cfg.gamma * cfg.gamma > 0.5 + 1e-9;
  if (opt.weak && !weak_admissible) {
    throw precondition_error(
        "circuit: weak reconstruction requires gamma^2 > 1/2");
  }
  if (weak_admissible) {
    try {
      const WeakValuedEta weak = eta_weak(cfg);
      json weak_block;
      weak_block["eta_sq"] = weak.eta_squared;
      weak_block["eta"] = weak.eta;
      json quasi = json::array();
      bool any_negative = false;
      for (const auto& atom : weak.quasi.atoms()) {
        const bool negative = atom.weight < -kTolHermitian;
        any_negative |= negative;
        json entry;
        entry["delta_x"] = atom.value;
        entry["weight"] = atom.weight;
        entry["negative"] = negative;
        quasi.push_back(entry);
      }
      weak_block["p_wv"] = quasi;
      weak_block["any_negative"] = any_negative;
      row["eta_weak"] = weak_block;
    } catch (const precondition_error&) {
      if (opt.weak) throw;  // explicitly requested: surface the violation
      row["eta_weak"] = json(nullptr);
    }
  } else {
    row["eta_weak"] = json(nullptr);
  }

  if (std::abs(cfg.gamma - 1.0) <= kTolHermitian) {
    const StrongEta strong = eta_strong(cfg);
    json strong_block;
    strong_block["eta_sq"] = strong.eta_squared;
    strong_block["eta"] = strong.eta;
    row["eta_strong"] = strong_block;
  } else {
    row["eta_strong"] = json(nullptr);
  }

  if (opt.shots > 0) {
    const ShotRecord record =
        sample_distribution(dist, opt.shots, opt.seed);
    json mc;
    json counts = json::array();
    std::array<std::size_t, 8> tally{};
    for (std::size_t s = 0; s < record.shots(); ++s) {
      const std::size_t idx = OutcomeDistribution8::index(
          record.at(s, 0) > 0 ? +1 : -1, record.at(s, 1) > 0 ? +1 : -1,
          record.at(s, 2) > 0 ? +1 : -1);
      ++tally[idx];
    }
    for (std::size_t i = 0; i < 8; ++i) {
      counts.push_back(static_cast<double>(tally[i]) /
                       static_cast<double>(opt.shots));
    }
    mc["frequencies"] = counts;
    mc["shots"] = opt.shots;
    mc["seed"] = opt.seed;
    row["monte_carlo"] = mc;
  } else {
    row["monte_carlo"] = json(nullptr);
  }

  return row;
}

int cmd_circuit(const Options& opt, std::ostream& out) {
  const auto [alpha, beta] = resolve_amplitudes(opt);
  const std::vector<double> thetas = resolve_thetas(opt, {0.0});

  json config;
  config["gamma"] = opt.gamma;
  config["alpha"] = json::array({alpha.real(), alpha.imag()});
  config["beta"] = json::array({beta.real(), beta.imag()});
  config["thetas"] = thetas;
  config["weak_requested"] = opt.weak;

  json rows = json::array();
  for (double theta : thetas) {
    CircuitConfig cfg;
    cfg.alpha = alpha;
    cfg.beta = beta;
    cfg.gamma = opt.gamma;
    cfg.theta = theta;
    rows.push_back(circuit_row(cfg, opt));
  }

  json report;
  report["schema"] = kSchema;
  report["command"] = "circuit";
  report["config"] = config;
  report["analytic"] = json{{"rows", rows}};
  report["flags"] = flags_block(opt);

  if (opt.format == "json") {
    emit(report, opt, out);
    return 0;
  }

  std::string csv =
      "theta,gamma,p_ppp,p_ppm,p_pmp,p_pmm,p_mpp,p_mpm,p_mmp,p_mmm,"
      "eta_weak_sq,eta_strong_sq,p_wv_any_negative\n";
  for (const json& row : rows) {
    csv += fmt(row["theta"].get<double>()) + "," + fmt(opt.gamma);
    // The JSON table rows are ordered (k, l, n) = (+++, ++-, +-+, ...),
    // which matches the CSV column order.
    for (const json& entry : row["outcomes"]) {
      csv += "," + fmt(entry["p"].get<double>());
    }
    csv += ",";
    if (!row["eta_weak"].is_null()) {
      csv += fmt(row["eta_weak"]["eta_sq"].get<double>());
    }
    csv += ",";
    if (!row["eta_strong"].is_null()) {
      csv += fmt(row["eta_strong"]["eta_sq"].get<double>());
    }
    csv += ",";
    if (!row["eta_weak"].is_null()) {
      csv += row["eta_weak"]["any_negative"].get<bool>() ? "true" : "false";
    }
    csv += "\n";
  }
  emit_text(csv, opt, out);
  return 0;
}

// ---------------------------------------------------------------------------
// distance
// ---------------------------------------------------------------------------

int cmd_distance(const Options& opt, std::ostream& out) {
  const BlochVector a_axis = parse_bloch(opt.a_bloch, "--a-bloch");
  if (!opt.c_bloch) {
    throw precondition_error("distance: --c-bloch is required");
  }
  const BlochVector c_axis = parse_bloch(*opt.c_bloch, "--c-bloch");

  const DiscreteObservable a = sharp_qubit_observable(a_axis);
  std::vector<Outcome> outcomes(2);
  outcomes[0] = {+1.0, bloch_to_effect(c_axis, +1)};
  outcomes[1] = {-1.0, bloch_to_effect(c_axis, -1)};
  const DiscreteObservable c{outcomes};

  const Delta2Result numeric = delta2_observables(a, c);
  const double closed_sq = delta_sq_closed(a_axis, c_axis);
  const double eps_sq = epsilon_sq_closed(a_axis, c_axis);
  // The closed-form error is operationally faithful only for commuting
  // pairs; otherwise it is the formal bilinear value.
  const bool faithful = commute_check(a, c);

  json config;
  config["a_bloch"] = bloch_json(a_axis);
  config["c_bloch"] = bloch_json(c_axis);

  json analytic;
  analytic["delta2_sq"] = numeric.squared;
  analytic["delta2"] = numeric.distance;
  analytic["delta2_sq_closed"] = closed_sq;
  analytic["epsilon_sq_closed"] = eps_sq;
  analytic["epsilon_closed"] = std::sqrt(eps_sq);
  analytic["epsilon_faithful"] = faithful;
  analytic["difference_sq"] = std::abs(numeric.squared - closed_sq);
  analytic["maximizer_bloch"] = bloch_json(numeric.maximizer);

  json report;
  report["schema"] = kSchema;
  report["command"] = "distance";
  report["config"] = config;
  report["analytic"] = analytic;
  report["flags"] = flags_block(opt);

  if (opt.format == "json") {
    emit(report, opt, out);
    return 0;
  }

  std::string csv =
      "a_x,a_y,a_z,c_x,c_y,c_z,delta2_sq,delta2_sq_closed,epsilon_sq_closed,"
      "epsilon_faithful,difference_sq\n";
  csv += fmt(a_axis.x()) + "," + fmt(a_axis.y()) + "," + fmt(a_axis.z()) +
         "," + fmt(c_axis.x()) + "," + fmt(c_axis.y()) + "," +
         fmt(c_axis.z()) + "," + fmt(numeric.squared) + "," +
         fmt(closed_sq) + "," + fmt(eps_sq) + "," +
         (faithful ? "true" : "false") + "," +
         fmt(std::abs(numeric.squared - closed_sq)) + "\n";
  emit_text(csv, opt, out);
  return 0;
}

// ---------------------------------------------------------------------------
// inequality-scan
// ---------------------------------------------------------------------------

int cmd_inequality_scan(const Options& opt, std::ostream& out) {
  std::vector<double> fallback;
  for (int i = 0; i < 9; ++i) fallback.push_back(i * M_PI / 32.0);
  const std::vector<double> thetas = resolve_thetas(opt, fallback);

  std::vector<JointScheme> schemes = circuit_scheme_family(thetas);
  schemes.push_back({"identity", Instrument::identity(2)});
  const std::vector<ErrorPair> pairs = scan_joint_schemes(schemes);

  json config;
  config["thetas"] = thetas;

  json rows = json::array();
  bool all_satisfied = true;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    const BoundCheck disc = branciard_disc(pairs[i]);
    const BoundCheck additive = additive_bound(pairs[i]);
    all_satisfied &= disc.satisfied && additive.satisfied;

    json row;
    row["scheme"] = schemes[i].name;
    row["d_z"] = pairs[i].d_z;
    row["d_x"] = pairs[i].d_x;
    row["disc_lhs"] = disc.lhs;
    row["disc_satisfied"] = disc.satisfied;
    row["additive_sum"] = additive.lhs;
    row["additive_satisfied"] = additive.satisfied;
    rows.push_back(row);
  }

  json report;
  report["schema"] = kSchema;
  report["command"] = "inequality-scan";
  report["config"] = config;
  report["analytic"] = json{{"rows", rows}, {"all_satisfied", all_satisfied}};
  report["flags"] = flags_block(opt);

  if (opt.format == "json") {
    emit(report, opt, out);
    return 0;
  }

  std::string csv =
      "scheme,d_z,d_x,disc_lhs,disc_satisfied,additive_sum,"
      "additive_satisfied\n";
  for (const json& row : rows) {
    csv += row["scheme"].get<std::string>() + "," +
           fmt(row["d_z"].get<double>()) + "," +
           fmt(row["d_x"].get<double>()) + "," +
           fmt(row["disc_lhs"].get<double>()) + "," +
           (row["disc_satisfied"].get<bool>() ? "true" : "false") + "," +
           fmt(row["additive_sum"].get<double>()) + "," +
           (row["additive_satisfied"].get<bool>() ? "true" : "false") + "\n";
  }
  emit_text(csv, opt, out);
  return 0;
}

// ---------------------------------------------------------------------------

void emit_text(const std::string& text, const Options& opt,
               std::ostream& out) {
  if (opt.out_path) {
    std::ofstream file(*opt.out_path);
    if (!file) {
      throw std::runtime_error("cannot open output file: " + *opt.out_path);
    }
    file << text;
    return;
  }
  out << text;
}

void emit(const json& report, const Options& opt, std::ostream& out) {
  emit_text(report.dump(2) + "\n", opt, out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"mur-lab: direct tests of measurement uncertainty relations"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd, bool with_state) {
    cmd->add_option("--shots", opt.shots, "Monte Carlo repetitions (0 = off)");
    cmd->add_option("--seed", opt.seed, "RNG seed");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", [&opt](const std::vector<std::string>& v) {
          opt.out_path = v.back();
          return true;
        },
        "Write the report to this path instead of stdout");
    if (with_state) {
      cmd->add_option("--state-bloch",
                      [&opt](const std::vector<std::string>& v) {
                        opt.state_bloch = v.back();
                        return true;
                      },
                      "Qubit state as Bloch components x,y,z");
      cmd->add_option("--state-amplitudes",
                      [&opt](const std::vector<std::string>& v) {
                        opt.state_amplitudes = v.back();
                        return true;
                      },
                      "Qubit state as amplitudes re+imj,re+imj");
    }
  };
  const auto add_theta = [&](CLI::App* cmd) {
    cmd->add_option("--theta", [&opt](const std::vector<std::string>& v) {
          try {
            opt.theta = std::stod(v.back());
          } catch (const std::exception&) {
            return false;
          }
          return true;
        },
        "Apparatus angle in radians");
    cmd->add_option("--theta-grid",
                    [&opt](const std::vector<std::string>& v) {
                      opt.theta_grid = v.back();
                      return true;
                    },
                    "Angle sweep start:stop:count (radians)");
  };

  CLI::App* direct = app.add_subcommand(
      "direct-test", "Direct error (--lambda) or disturbance (--theta) test");
  direct->add_option("--lambda", [&opt](const std::vector<std::string>& v) {
        try {
          opt.lambda = std::stod(v.back());
        } catch (const std::exception&) {
          return false;
        }
        return true;
      },
      "Smearing strength of the Z approximator, in [0, 1]");
  direct->add_option("--theta", [&opt](const std::vector<std::string>& v) {
        try {
          opt.theta = std::stod(v.back());
        } catch (const std::exception&) {
          return false;
        }
        return true;
      },
      "Apparatus angle of the approximate-Z stage (radians)");
  direct->add_option("--gamma", opt.gamma, "Probe amplitude (echoed)");
  add_common(direct, true);

  CLI::App* circuit = app.add_subcommand(
      "circuit", "Three-qubit weak/strong disturbance circuit");
  circuit->add_option("--gamma", opt.gamma, "Probe amplitude in [0, 1]");
  add_theta(circuit);
  circuit->add_flag("--weak", opt.weak,
                    "Require the weak-valued reconstruction");
  add_common(circuit, true);

  CLI::App* distance = app.add_subcommand(
      "distance", "Observable distance Delta_2 and closed forms");
  distance->add_option("--a-bloch", opt.a_bloch,
                       "Sharp target axis x,y,z (default 0,0,1)");
  distance->add_option("--c-bloch", [&opt](const std::vector<std::string>& v) {
        opt.c_bloch = v.back();
        return true;
      },
      "Approximator Bloch vector x,y,z");
  add_common(distance, false);

  CLI::App* scan = app.add_subcommand(
      "inequality-scan", "Error/disturbance trade-off over the circuit family");
  add_theta(scan);
  add_common(scan, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (direct->parsed()) return cmd_direct_test(opt, out);
    if (circuit->parsed()) return cmd_circuit(opt, out);
    if (distance->parsed()) return cmd_distance(opt, out);
    if (scan->parsed()) return cmd_inequality_scan(opt, out);
    err << "no command given\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace murlab::cli
