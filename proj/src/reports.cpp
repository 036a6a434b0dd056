// Copyright 2026 The entcap Authors
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

#include "entcap/reports.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "entcap/capability.hpp"
#include "entcap/errors.hpp"
#include "entcap/io.hpp"
#include "entcap/operator_entanglement.hpp"
#include "entcap/random.hpp"

namespace entcap {

namespace {

constexpr double kReferenceBeta = 1.9123;
constexpr double kReferenceTStar = 0.2932;
constexpr double kDerivedX0 = 0.9168;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

double rounded(double x) { return std::stod(format_number(x)); }

nlohmann::json json_number(double x) {
  if (std::isfinite(x) && x == std::trunc(x) && std::abs(x) < 1e15) return static_cast<std::int64_t>(x);
  return rounded(x);
}

// "key=value,key=value" after the first ':'.
std::map<std::string, std::string> spec_options(std::string_view spec, std::string& head) {
  std::map<std::string, std::string> out;
  const auto colon = spec.find(':');
  head = std::string(spec.substr(0, colon));
  if (colon == std::string_view::npos) return out;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInputError("malformed option '" + std::string(item) + "' in '" + std::string(spec) + "'");
    }
    out[std::string(item.substr(0, eq))] = std::string(item.substr(eq + 1));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidInputError("cannot parse " + what + " from '" + text + "'");
  }
}

long parse_integer(const std::string& text, const std::string& what) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidInputError("cannot parse " + what + " from '" + text + "'");
  }
  return v;
}

Spin parse_spin(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Spin::from_value(parse_double(text, "spin j"));
  const long num = parse_integer(text.substr(0, slash), "spin j");
  const long den = parse_integer(text.substr(slash + 1), "spin j");
  if (den == 2) return Spin::from_twice(static_cast<int>(num));
  if (den == 1) return Spin::from_twice(static_cast<int>(2 * num));
  throw InvalidInputError("spin j must be a half-integer, got '" + text + "'");
}

std::string require_option(const std::map<std::string, std::string>& opts, const std::string& key,
                           std::string_view spec) {
  const auto it = opts.find(key);
  if (it == opts.end()) throw InvalidInputError("'" + std::string(spec) + "' needs " + key + "=<value>");
  return it->second;
}

bool traceless(const SelfInverseFactor& x) { return std::abs(x.matrix().trace()) < 1e-9; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInputError("cannot write " + path);
  out << text;
}

NamedScalar scalar(std::string name, double value, std::optional<double> reference = std::nullopt,
                   std::optional<double> tolerance = std::nullopt, std::string note = {}) {
  NamedScalar s;
  s.name = std::move(name);
  s.value = value;
  s.reference = reference;
  s.tolerance = tolerance;
  s.note = std::move(note);
  return s;
}

}  // namespace

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

std::optional<bool> NamedScalar::passed() const {
  if (verdict) return verdict;
  if (reference && tolerance) return std::abs(value - *reference) <= *tolerance;
  return std::nullopt;
}

const NamedScalar* RunRecord::find(std::string_view name) const {
  for (const auto& o : outputs)
    if (o.name == name) return &o;
  return nullptr;
}

bool RunRecord::all_passed() const {
  return std::none_of(outputs.begin(), outputs.end(), [](const auto& o) { return o.passed() == false; });
}

nlohmann::json RunRecord::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  nlohmann::json outs = nlohmann::json::object();
  for (const auto& o : outputs) {
    nlohmann::json e;
    e["value"] = json_number(o.value);
    if (o.reference) e["reference"] = rounded(*o.reference);
    if (o.tolerance) e["tolerance"] = rounded(*o.tolerance);
    if (const auto p = o.passed()) e["verdict"] = *p ? "PASS" : "FAIL";
    if (!o.note.empty()) e["note"] = o.note;
    outs[o.name] = e;
    j[o.name] = json_number(o.value);
  }
  j["outputs"] = outs;
  j["curves"] = curves ? nlohmann::json(*curves) : nlohmann::json(nullptr);
  j["timestamp"] = timestamp;
  return j;
}

std::string RunRecord::to_text() const {
  std::ostringstream os;
  os << command << '\n';
  for (const auto& o : outputs) {
    os << "  " << o.name << " = " << format_number(o.value);
    if (o.reference) os << "  (reference " << format_number(*o.reference);
    if (o.reference && o.tolerance) os << " +- " << format_number(*o.tolerance);
    if (o.reference) os << ')';
    if (!o.reference && o.tolerance) os << "  (tolerance " << format_number(*o.tolerance) << ')';
    if (const auto p = o.passed()) os << "  " << (*p ? "PASS" : "FAIL");
    if (!o.note.empty()) os << "  # " << o.note;
    os << '\n';
  }
  if (curves) os << "  curves written to " << *curves << '\n';
  return os.str();
}

SelfInverseFactor parse_factor_spec(std::string_view spec) {
  if (spec.starts_with("file:")) return factor_from_json(read_json_file(std::string(spec.substr(5))));
  const std::string_view name = spec.substr(0, spec.find(':'));
  if (name != "pauli-z" && name != "ising" && name != "parity" && name != "boson" && name != "identity") {
    if (spec.find('/') != std::string_view::npos || spec.ends_with(".json")) {
      return factor_from_json(read_json_file(std::string(spec)));
    }
    throw InvalidInputError("unknown factor spec '" + std::string(spec) + "'");
  }
  std::string head;
  const auto opts = spec_options(spec, head);
  if (head == "pauli-z" || head == "ising") return pauli_z();
  if (head == "parity") return parity(parse_spin(require_option(opts, "j", spec)));
  if (head == "boson") {
    const long d = parse_integer(require_option(opts, "D", spec), "truncation D");
    if (d < 2) throw InvalidInputError("boson:D needs D >= 2");
    return boson_parity(static_cast<std::size_t>(d));
  }
  if (head == "identity") {
    const long d = opts.contains("d") ? parse_integer(opts.at("d"), "dimension d") : 2;
    if (d < 1) throw InvalidInputError("identity:d needs d >= 1");
    return make_factor(ComplexMatrix::identity(static_cast<std::size_t>(d)));
  }
  throw InvalidInputError("unknown factor spec '" + std::string(spec) + "'");
}

BipartiteState parse_state_spec(std::string_view spec, const ProductHamiltonian& h, std::uint64_t seed) {
  auto from_file = [&](const std::string& path) {
    BipartiteState s = state_from_json(read_json_file(path));
    if (s.dA() != h.dA() || s.dB() != h.dB()) {
      throw InvalidInputError("state file " + path + " has split " + std::to_string(s.dA()) + "x" +
                              std::to_string(s.dB()) + ", Hamiltonian acts on " + std::to_string(h.dA()) +
                              "x" + std::to_string(h.dB()));
    }
    return s;
  };
  if (spec.starts_with("file:")) return from_file(std::string(spec.substr(5)));
  const std::string_view name = spec.substr(0, spec.find(':'));
  if (name != "optimal" && name != "eigen-product" && name != "random" && name != "max-entangled" && name != "ecs") {
    if (spec.find('/') != std::string_view::npos || spec.ends_with(".json")) return from_file(std::string(spec));
    throw InvalidInputError("unknown state spec '" + std::string(spec) + "'");
  }

  std::string head;
  const auto opts = spec_options(spec, head);
  if (head == "optimal") {
    const double x = opts.contains("x") ? parse_double(opts.at("x"), "x") : capability_bound().x0;
    return optimal_input(h.factorA(), h.factorB(), x);
  }
  if (head == "eigen-product") {
    return BipartiteState::product(h.factorA().eigenplus().column_vector(0),
                                   h.factorB().eigenplus().column_vector(0));
  }
  if (head == "random") {
    Rng rng(seed);
    return random_state(h.dA(), h.dB(), rng);
  }
  if (head == "max-entangled" || head == "ecs") {
    if (h.dA() != h.dB()) throw InvalidInputError("'" + head + "' needs equal subsystem dimensions");
    if (head == "max-entangled") return max_entangled(h.dA());
    const double radius = opts.contains("eta") ? parse_double(opts.at("eta"), "eta") : std::numbers::pi / 4.0;
    const double phase = opts.contains("phase") ? parse_double(opts.at("phase"), "phase") : 0.0;
    const double x = opts.contains("x") ? parse_double(opts.at("x"), "x") : capability_bound().x0;
    return ecs(Spin::from_twice(static_cast<int>(h.dA()) - 1), std::polar(radius, phase), x);
  }
  throw InvalidInputError("unknown state spec '" + std::string(spec) + "'");
}

std::vector<double> make_grid(double t0, double t1, int steps) {
  if (steps < 1) throw InvalidInputError("--steps must be at least 1");
  if (!(t0 < t1)) throw InvalidInputError("--t0 must be smaller than --t1");
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) grid[static_cast<std::size_t>(i)] = t0 + (t1 - t0) * (static_cast<double>(i) / steps);
  return grid;
}

RunRecord cmd_beta() {
  RunRecord rec;
  rec.command = "beta";
  rec.timestamp = utc_timestamp();
  const CapabilityResult c = capability_bound();
  rec.outputs.push_back(scalar("beta", c.beta, kReferenceBeta, 2e-4));
  rec.outputs.push_back(scalar("x0", c.x0, kDerivedX0, 5e-4,
                               "stationarity root; the four-digit value 0.9128 gives f = " +
                                   format_number(two_term_rate(0.9128))));
  rec.outputs.push_back(scalar("evaluations", static_cast<double>(c.evaluations)));
  return rec;
}

RunRecord cmd_capability(std::string_view factorA, std::string_view factorB,
                         const std::optional<std::string>& stateOut) {
  RunRecord rec;
  rec.command = "capability";
  rec.timestamp = utc_timestamp();
  rec.parameters = {{"factor-a", std::string(factorA)}, {"factor-b", std::string(factorB)}};
  const SelfInverseFactor a = parse_factor_spec(factorA);
  const SelfInverseFactor b = parse_factor_spec(factorB);
  const CapabilityResult c = capability_self_inverse(a, b);
  const BipartiteState& state = *c.optimalState;
  rec.outputs.push_back(scalar("beta", c.beta, kReferenceBeta, 2e-4));
  rec.outputs.push_back(scalar("x0", c.x0, kDerivedX0, 5e-4));
  rec.outputs.push_back(scalar("optimal_rate", rate_zero_schmidt(a, b, schmidt(state)), c.beta, 1e-8));
  rec.outputs.push_back(scalar("optimal_entropy_bits", entropy(state)));
  rec.outputs.push_back(scalar("gate_capability_quarter_pi",
                               gate_capability(a, b, std::numbers::pi / 4.0, 8, 1), 1.0, 1e-6));
  rec.outputs.push_back(scalar("dA", static_cast<double>(a.dim())));
  rec.outputs.push_back(scalar("dB", static_cast<double>(b.dim())));
  if (stateOut) {
    write_json_file(*stateOut, state_to_json(state));
    rec.parameters.emplace_back("state-out", *stateOut);
  }
  return rec;
}

RunRecord cmd_rate_curve(const CurveOptions& o) {
  RunRecord rec;
  rec.command = "rate-curve";
  rec.timestamp = utc_timestamp();
  rec.parameters = {{"factor-a", o.factorA}, {"factor-b", o.factorB}, {"state", o.state},
                    {"t0", format_number(o.t0)}, {"t1", format_number(o.t1)},
                    {"steps", std::to_string(o.steps)}, {"seed", std::to_string(o.seed)}};
  const ProductHamiltonian h(parse_factor_spec(o.factorA), parse_factor_spec(o.factorB));
  const BipartiteState state = parse_state_spec(o.state, h, o.seed);
  const std::vector<double> grid = make_grid(o.t0, o.t1, o.steps);
  const std::vector<RateReport> reports = rate_sweep(h, state, grid);

  std::ostringstream csv;
  csv << "t,entropy_bits,gamma_bits_per_time,method\n";
  // Summaries use the 10-digit values so they can be recomputed from the CSV exactly.
  double gamma_max = -std::numeric_limits<double>::infinity();
  std::optional<double> gamma_zero;
  std::map<double, std::pair<double, double>> spread;  // t -> (min, max) gamma over methods
  for (const auto& r : reports) {
    const double t = rounded(r.t);
    const double g = rounded(r.gamma);
    csv << format_number(t) << ',' << format_number(rounded(r.entropy)) << ',' << format_number(g) << ','
        << to_string(r.method) << '\n';
    auto [it, fresh] = spread.try_emplace(t, g, g);
    if (!fresh) it->second = {std::min(it->second.first, g), std::max(it->second.second, g)};
    if (r.method == RateMethod::Commutator) {
      gamma_max = std::max(gamma_max, g);
      if (std::abs(t) < 1e-12) gamma_zero = g;
    }
  }
  double deviation = 0.0;
  for (const auto& [t, mm] : spread) deviation = std::max(deviation, mm.second - mm.first);
  if (o.out) {
    write_text(*o.out, csv.str());
    rec.curves = *o.out;
  }

  const bool optimal_default = o.state == "optimal";
  const bool stationary = o.state == "eigen-product";
  std::optional<double> ref;
  std::optional<double> tol;
  if (optimal_default) {
    ref = capability_bound().beta;
    tol = 1e-6;
  } else if (stationary) {
    ref = 0.0;
    tol = 1e-9;
  }
  rec.outputs.push_back(scalar("entropy_initial_bits", entropy(state)));
  if (gamma_zero) rec.outputs.push_back(scalar("gamma_at_zero", *gamma_zero, ref, tol));
  rec.outputs.push_back(scalar("gamma_max", gamma_max));
  rec.outputs.push_back(scalar("max_method_deviation", deviation, 0.0, 1e-5));
  rec.outputs.push_back(scalar("rows", static_cast<double>(reports.size())));
  return rec;
}

RunRecord cmd_op_rate(const CurveOptions& o) {
  RunRecord rec;
  rec.command = "op-rate";
  rec.timestamp = utc_timestamp();
  rec.parameters = {{"factor-a", o.factorA}, {"factor-b", o.factorB}, {"t0", format_number(o.t0)},
                    {"t1", format_number(o.t1)}, {"steps", std::to_string(o.steps)}};
  const ProductHamiltonian h(parse_factor_spec(o.factorA), parse_factor_spec(o.factorB));
  const bool analytic = traceless(h.factorA()) && traceless(h.factorB());

  std::ostringstream csv;
  csv << "t,op_entanglement_bits,rate_fd,rate_analytic\n";
  double curve_max = -std::numeric_limits<double>::infinity();
  double curve_arg = 0.0;
  double deviation = 0.0;
  for (double t : make_grid(o.t0, o.t1, o.steps)) {
    const double e = rounded(op_entanglement(evolution(h, t), h.dA(), h.dB()));
    const double r = rounded(op_rate(h, t));
    csv << format_number(t) << ',' << format_number(e) << ',' << format_number(r) << ',';
    if (analytic) {
      const double ra = rounded(u1_rate_analytic(t));
      csv << format_number(ra);
      deviation = std::max(deviation, std::abs(r - ra));
    }
    csv << '\n';
    if (r > curve_max) {
      curve_max = r;
      curve_arg = rounded(t);
    }
  }
  if (o.out) {
    write_text(*o.out, csv.str());
    rec.curves = *o.out;
  }

  const OperatorRateCurve best = op_rate_max(h);
  const std::optional<double> beta_ref = analytic ? std::optional<double>(kReferenceBeta) : std::nullopt;
  const std::optional<double> t_ref = analytic ? std::optional<double>(kReferenceTStar) : std::nullopt;
  rec.outputs.push_back(scalar("rMax", best.rMax, beta_ref, analytic ? std::optional<double>(2e-4) : std::nullopt));
  rec.outputs.push_back(scalar("tStar", best.tStar, t_ref, analytic ? std::optional<double>(1.5e-3) : std::nullopt,
                               "arccos(sqrt(x0)) = " + format_number(std::acos(std::sqrt(capability_bound().x0)))));
  rec.outputs.push_back(scalar("curve_max_rate", curve_max));
  rec.outputs.push_back(scalar("curve_argmax_t", curve_arg));
  if (analytic) rec.outputs.push_back(scalar("max_fd_analytic_deviation", deviation, 0.0, 1e-5));
  return rec;
}

RunRecord cmd_verify(const acceptance::Options& options) {
  RunRecord rec;
  rec.command = "verify";
  rec.timestamp = utc_timestamp();
  rec.parameters = {{"seed", std::to_string(options.seed)},
                    {"beta-reference", format_number(options.betaReference)}};
  const acceptance::Report report = acceptance::run_all(options);
  for (const auto& c : report.criteria) {
    NamedScalar s = scalar(c.name, c.measured, std::nullopt, c.tolerance, c.detail);
    s.verdict = c.passed;
    rec.outputs.push_back(std::move(s));
  }
  for (const auto& n : report.notes) rec.outputs.push_back(scalar(n.name, n.value, std::nullopt, std::nullopt, n.detail));
  return rec;
}

}  // namespace entcap
