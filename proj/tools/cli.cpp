#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <json.hpp>

#include "bpb/closed_forms.hpp"
#include "bpb/moduli.hpp"
#include "bpb/serialize.hpp"
#include "bpb/space_spec.hpp"
#include "bpb/verify.hpp"
#include "bpb/witnesses.hpp"

namespace bpb::cli {

using json = nlohmann::ordered_json;

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, end - start));
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "bad number '" + item + "'");
    }
    start = end + 1;
  }
  return out;
}

std::vector<double> parse_range(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(':', start);
    parts.emplace_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  auto number = [](const std::string& s) {
    const auto v = parse_list(s);
    if (v.size() != 1) throw Error(ErrorKind::Parse, "bad number '" + s + "'");
    return v[0];
  };
  if (parts.size() == 1) return {number(parts[0])};
  if (parts.size() != 3) throw Error(ErrorKind::Parse, "range must be a:b:step");
  const double a = number(parts[0]);
  const double b = number(parts[1]);
  const double step = number(parts[2]);
  if (!(step > 0.0) || b < a) throw Error(ErrorKind::Parse, "range needs a <= b and step > 0");
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    double v = a + static_cast<double>(i) * step;
    if (v > b + 1e-12) break;
    // Snap to the 1e-12 grid so 0.1:0.5:0.1 yields 0.3, not 0.30000000000000004.
    v = std::round(v * 1e12) / 1e12;
    if (std::abs(v - b) <= 1e-12) v = b;
    out.push_back(v);
    if (out.size() > 100000) throw Error(ErrorKind::Parse, "range has too many points");
  }
  return out;
}

namespace {

struct Common {
  std::size_t resolution = 720;
  std::size_t outer_resolution = 128;
  std::size_t refine = 12;
  std::size_t threads = 0;
  double tol = 1e-9;
  double slack = 0.0;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string output;
};

struct Result {
  json doc;
  std::vector<std::string> columns;  // non-empty for tables
  int code = kOk;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--resolution", c.resolution, "Samples per sphere dimension")->capture_default_str();
  sub->add_option("--outer-resolution", c.outer_resolution, "Samples for the pairs explored by estimators")
      ->capture_default_str();
  sub->add_option("--refine-candidates", c.refine, "Coarse maxima taken into local refinement")->capture_default_str();
  sub->add_option("--tol", c.tol, "Numerical tolerance")->capture_default_str();
  sub->add_option("--delta-slack", c.slack, "Constraint is f(x) >= 1 - delta + slack")->capture_default_str();
  sub->add_option("--seed", c.seed, "Sampling seed (BPB_SEED is used when absent)");
  sub->add_option("--threads", c.threads, "Worker threads, 0 = all (BPB_THREADS caps)")->capture_default_str();
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output,-o", c.output, "Output file (default stdout)");
}

EstimatorConfig make_config(const Common& c) {
  EstimatorConfig cfg;
  cfg.resolution = c.resolution;
  cfg.outer_resolution = c.outer_resolution;
  cfg.refine_candidates = c.refine;
  cfg.threads = c.threads;
  cfg.tol = c.tol;
  cfg.delta_slack = c.slack;
  if (c.seed) {
    cfg.seed = *c.seed;
  } else if (const char* env = std::getenv("BPB_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidConfig, "BPB_SEED must be an unsigned integer");
    }
  }
  cfg.validate();
  return cfg;
}

std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return fmt::format("{}", v.get<double>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  }
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + cell(v[i]);
    return s;
  }
  return v.dump();
}

// Flattens nested objects into dotted keys.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else {
      out.emplace_back(key, *it);
    }
  }
}

std::string render(const Result& r, const std::string& format) {
  if (format == "json") return r.doc.dump(2) + "\n";
  std::string s;
  if (!r.columns.empty()) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) s += (i ? "," : "") + r.columns[i];
    s += "\n";
    for (const auto& row : r.doc.at("rows")) {
      for (std::size_t i = 0; i < r.columns.size(); ++i) s += (i ? "," : "") + cell(row.at(r.columns[i]));
      s += "\n";
    }
    return s;
  }
  std::vector<std::pair<std::string, json>> fields;
  flatten(r.doc, "", fields);
  s = "key,value\n";
  for (const auto& [k, v] : fields) s += k + "," + cell(v) + "\n";
  return s;
}

json header(const std::string& command) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Vector to_vector(const std::vector<double>& v, std::size_t dim) {
  if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "vector has the wrong number of coordinates");
  return Vector::from(v);
}

// Table rows: every row gets a status; all-flagged tables exit with kRegime.
Result table(const std::string& command, std::vector<std::string> columns, json meta,
             const std::vector<double>& xs, const std::function<json(double)>& row) {
  Result r;
  columns.push_back("status");
  r.doc = header(command);
  for (auto it = meta.begin(); it != meta.end(); ++it) r.doc[it.key()] = *it;
  r.doc["columns"] = columns;
  json rows = json::array();
  bool any_ok = false;
  for (double x : xs) {
    json out;
    try {
      out = row(x);
      out["status"] = "ok";
      any_ok = true;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Regime && e.kind() != ErrorKind::EmptySample) throw;
      out = json::object();
      out[columns.front()] = x;
      out["status"] = to_string(e.kind());
    }
    json ordered;
    for (const auto& c : columns) ordered[c] = out.contains(c) ? out[c] : json();
    rows.push_back(ordered);
  }
  r.doc["rows"] = rows;
  r.columns = std::move(columns);
  r.code = any_ok ? kOk : kRegime;
  return r;
}

std::optional<double> modulus_closed_form(const NormedSpace& space, const ModulusQuery& q) {
  const auto is = [&](SpaceKind k, double p, std::size_t n) { return space.kind() == k && space.p() == p && space.dim() == n; };
  if (is(SpaceKind::Lp, 2.0, 2) && q.mu >= q.theta) return hilbert_modulus(q);
  if (is(SpaceKind::Lp, kInfinity, 2) && q.regime_psi) return phi_upper_bound(q);
  if (space.kind() == SpaceKind::Lp && space.dim() == 1) return real_witness(q).predicted;
  if ((space.kind() == SpaceKind::Sum1 || space.kind() == SpaceKind::SumInf) && q.regime_sum) {
    const auto real = [](const NormedSpace& s) { return s.kind() == SpaceKind::Lp && s.dim() == 1; };
    if (real(space.first()) && real(space.second())) return psi(q);
  }
  return std::nullopt;
}

void merge(json& into, const json& from) {
  for (auto it = from.begin(); it != from.end(); ++it) into[it.key()] = *it;
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bishop-Phelps-Bollobas moduli, distances to Pi(X) and non-squareness for finite-dimensional normed spaces"};
  app.require_subcommand(1);
  app.footer(
      "Space specs: l1:n l2:n linf:n lp:n:p=<p|inf> r:1 hex:2 poly:@file.json poly:[[..],..] sum1(a,b) suminf(a,b)\n"
      "Ranges: a:b:step (ends included within 1e-12) or a single value.\n"
      "Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 numeric regime error.\n"
      "Environment: BPB_THREADS caps worker threads, BPB_SEED sets the seed when --seed is absent.");

  Common common;
  std::string space_spec;
  std::string delta_text;
  std::string eps_text;
  std::string x_text;
  std::string f_text;
  double mu = 1.0;
  double theta = 1.0;
  double delta = 0.0;
  std::optional<double> k;
  std::optional<double> alpha_tilde;
  std::optional<double> alpha_dual;
  std::string mode = "sphere";
  std::string kind = "linf2";
  std::string first = "r:1";
  std::string second = "r:1";
  std::string suite = "all";
  bool with_dual = false;
  bool check = false;

  auto* psi_cmd = app.add_subcommand("psi", "Tabulate Psi(mu, theta, delta) with the upper and lower bounds");
  psi_cmd->add_option("--mu", mu)->required();
  psi_cmd->add_option("--theta", theta)->required();
  psi_cmd->add_option("--delta", delta_text, "Value or a:b:step")->required();
  psi_cmd->footer("CSV columns: delta,psi,upper_bound,lower_bound,lower_exact,status");

  auto* bound_cmd = app.add_subcommand("bound", "Closed-form bounds: Psi family, or the non-square bound");
  bound_cmd->add_option("--mu", mu);
  bound_cmd->add_option("--theta", theta);
  bound_cmd->add_option("--delta", delta_text, "Value or a:b:step")->required();
  bound_cmd->add_option("--alpha-tilde", alpha_tilde, "Switch to the non-square bound with this alpha");
  bound_cmd->footer(
      "CSV columns: delta,upper_bound,psi,one_plus_mu,one_plus_theta,lower_bound,lower_exact,k,eta,hilbert_modulus,status\n"
      "With --alpha-tilde: delta,nonsquare_bound,sqrt_2delta,k,status");

  auto* distance_cmd = app.add_subcommand("distance", "Distance from (x, f) to Pi(X)");
  distance_cmd->add_option("--space", space_spec)->required();
  distance_cmd->add_option("--x", x_text, "Comma-separated point")->required();
  distance_cmd->add_option("--f", f_text, "Comma-separated functional")->required();

  auto* modulus_cmd = app.add_subcommand("modulus", "Sampled Bishop-Phelps-Bollobas modulus");
  modulus_cmd->add_option("--space", space_spec)->required();
  modulus_cmd->add_option("--mode", mode, "ball, sphere or mut")->check(CLI::IsMember({"ball", "sphere", "mut"}));
  modulus_cmd->add_option("--delta", delta_text, "Value or a:b:step")->required();
  modulus_cmd->add_option("--mu", mu, "Norm of x (mode mut)");
  modulus_cmd->add_option("--theta", theta, "Norm of f (mode mut)");
  modulus_cmd->footer("CSV columns: delta,estimate,mesh_error,sqrt_2delta,closed_form,status");

  auto* alpha_cmd = app.add_subcommand("alpha", "Non-squareness parameter alpha(X)");
  alpha_cmd->add_option("--space", space_spec)->required();
  alpha_cmd->add_flag("--dual", with_dual, "Also estimate alpha of the dual space");

  auto* convexity_cmd = app.add_subcommand("convexity", "Modulus of convexity");
  convexity_cmd->add_option("--space", space_spec)->required();
  convexity_cmd->add_option("--eps", eps_text, "Value or a:b:step")->required();
  convexity_cmd->footer("CSV columns: eps,delta_x,mesh_error,ceiling,status");

  auto* corrector_cmd = app.add_subcommand("corrector", "Pair of Pi(X) within delta/k and 2k - (2/3) k alpha");
  corrector_cmd->add_option("--space", space_spec)->required();
  corrector_cmd->add_option("--x", x_text)->required();
  corrector_cmd->add_option("--f", f_text)->required();
  corrector_cmd->add_option("--delta", delta)->required();
  corrector_cmd->add_option("--alpha-tilde", alpha_tilde)->required();
  corrector_cmd->add_option("--k", k, "Defaults to the value balancing both bounds");
  corrector_cmd->add_option("--alpha-dual", alpha_dual, "Known alpha of the dual; alpha-tilde must be below it");

  auto* witness_cmd = app.add_subcommand("witness", "Extremal pair with its predicted distance");
  witness_cmd->add_option("--kind", kind, "linf2, sum1, suminf or real")
      ->check(CLI::IsMember({"linf2", "sum1", "suminf", "real"}));
  witness_cmd->add_option("--mu", mu)->required();
  witness_cmd->add_option("--theta", theta)->required();
  witness_cmd->add_option("--delta", delta)->required();
  witness_cmd->add_option("--first", first, "First summand for sum kinds");
  witness_cmd->add_option("--second", second, "Second summand for sum kinds");
  witness_cmd->add_flag("--check", check, "Also measure the distance to Pi(X)");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", suite, "sharpness, hilbert, alpha, nonsquare or all")
      ->check(CLI::IsMember({"sharpness", "hilbert", "alpha", "nonsquare", "all"}));
  verify_cmd->footer("CSV columns: suite,name,status,measured,tolerance,detail");

  auto* describe_cmd = app.add_subcommand("describe", "Canonical JSON of a space spec");
  describe_cmd->add_option("--space", space_spec)->required();

  for (auto* sub : app.get_subcommands({})) add_common(sub, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const EstimatorConfig cfg = make_config(common);
    Result r;
    std::string default_format = "json";

    if (psi_cmd->parsed()) {
      default_format = "csv";
      r = table("psi", {"delta", "psi", "upper_bound", "lower_bound", "lower_exact"}, {{"mu", mu}, {"theta", theta}},
                parse_range(delta_text), [&](double d) {
                  const ModulusQuery q = ModulusQuery::make(mu, theta, d);
                  const LowerBound lb = phi_lower_bound(q);
                  return json{{"delta", d}, {"psi", psi(q)}, {"upper_bound", phi_upper_bound(q)},
                              {"lower_bound", lb.value}, {"lower_exact", lb.exact}};
                });
    } else if (bound_cmd->parsed()) {
      default_format = "csv";
      if (alpha_tilde) {
        r = table("bound", {"delta", "nonsquare_bound", "sqrt_2delta", "k"}, {{"alpha_tilde", *alpha_tilde}},
                  parse_range(delta_text), [&](double d) {
                    return json{{"delta", d}, {"nonsquare_bound", nonsquare_phi_bound(d, *alpha_tilde)},
                                {"sqrt_2delta", std::sqrt(2.0 * d)}, {"k", nonsquare_k(d, *alpha_tilde)}};
                  });
      } else {
        r = table("bound",
                  {"delta", "upper_bound", "psi", "one_plus_mu", "one_plus_theta", "lower_bound", "lower_exact", "k",
                   "eta", "hilbert_modulus"},
                  {{"mu", mu}, {"theta", theta}}, parse_range(delta_text), [&](double d) {
                    const ModulusQuery q = ModulusQuery::make(mu, theta, d);
                    const LowerBound lb = phi_lower_bound(q);
                    json row{{"delta", d}, {"upper_bound", phi_upper_bound(q)}, {"psi", psi(q)},
                             {"one_plus_mu", 1.0 + mu}, {"one_plus_theta", 1.0 + theta},
                             {"lower_bound", lb.value}, {"lower_exact", lb.exact}};
                    try {
                      const KEta ke = k_eta_auxiliaries(q);
                      row["k"] = ke.k;
                      row["eta"] = ke.eta;
                    } catch (const Error&) {
                    }
                    if (mu >= theta) row["hilbert_modulus"] = hilbert_modulus(q);
                    return row;
                  });
      }
    } else if (distance_cmd->parsed()) {
      const NormedSpace space = parse_space(space_spec);
      const Vector x = to_vector(parse_list(x_text), space.dim());
      const Functional f = as_functional(to_vector(parse_list(f_text), space.dim()));
      const PiCloud cloud(space, cfg);
      const PiWitness w = cloud.nearest(x, f);
      std::optional<double> closed;
      if (space.kind() == SpaceKind::Lp && space.p() == 2.0) {
        if (space.dim() == 1 && std::abs(x[0]) <= 1.0 && std::abs(f[0]) <= 1.0) closed = real_line_distance(x[0], f[0]);
        if (space.dim() >= 2 && euclidean_norm(x) <= 1.0 && euclidean_norm(f) <= 1.0) {
          closed = hilbert_distance(HilbertPair::make(x, as_vector(f)));
        }
      }
      r.doc = header("distance");
      r.doc["space"] = space_to_json(space);
      r.doc["x"] = to_json(x);
      r.doc["f"] = to_json(f);
      merge(r.doc, to_json(w));
      r.doc["mesh_error"] = cloud.mesh_gap();
      r.doc["closed_form"] = opt(closed);
      r.doc["discrepancy"] = closed ? json(std::abs(w.distance - *closed)) : json();
    } else if (modulus_cmd->parsed()) {
      default_format = "csv";
      const NormedSpace space = parse_space(space_spec);
      r = table("modulus", {"delta", "estimate", "mesh_error", "sqrt_2delta", "closed_form"},
                {{"space", space_to_json(space)}, {"mode", mode}}, parse_range(delta_text), [&](double d) {
                  Estimate e;
                  std::optional<double> closed;
                  if (mode == "mut") {
                    const ModulusQuery q = ModulusQuery::make(mu, theta, d);
                    e = estimate_phi_mut(space, q, cfg);
                    closed = modulus_closed_form(space, q);
                  } else {
                    e = estimate_phi(space, d, mode == "ball" ? ModulusMode::Ball : ModulusMode::Sphere, cfg);
                    if (mode == "sphere") closed = modulus_closed_form(space, ModulusQuery::make(1.0, 1.0, d));
                  }
                  return json{{"delta", d}, {"estimate", e.value}, {"mesh_error", e.mesh_error},
                              {"sqrt_2delta", std::sqrt(2.0 * d)}, {"closed_form", opt(closed)}};
                });
      if (mode == "mut") {
        r.doc["mu"] = mu;
        r.doc["theta"] = theta;
      }
    } else if (alpha_cmd->parsed()) {
      const NormedSpace space = parse_space(space_spec);
      r.doc = header("alpha");
      r.doc["space"] = space_to_json(space);
      if (with_dual) {
        const SelfDualReport s = check_alpha_self_dual(space, cfg);
        merge(r.doc, to_json(s.primal));
        r.doc["alpha_dual"] = s.dual.alpha;
        r.doc["alpha_dual_mesh_error"] = s.dual.mesh_error;
        r.doc["difference"] = std::abs(s.primal.alpha - s.dual.alpha);
      } else {
        merge(r.doc, to_json(estimate_alpha(space, cfg)));
      }
    } else if (convexity_cmd->parsed()) {
      default_format = "csv";
      const NormedSpace space = parse_space(space_spec);
      r = table("convexity", {"eps", "delta_x", "mesh_error", "ceiling"}, {{"space", space_to_json(space)}},
                parse_range(eps_text), [&](double e) {
                  const ConvexityReport c = estimate_convexity_modulus(space, e, cfg);
                  return json{{"eps", e}, {"delta_x", c.delta_x}, {"mesh_error", c.mesh_error},
                              {"ceiling", 1.0 - std::sqrt(1.0 - e * e / 4.0)}};
                });
    } else if (corrector_cmd->parsed()) {
      const NormedSpace space = parse_space(space_spec);
      const Vector x = to_vector(parse_list(x_text), space.dim());
      const Functional f = as_functional(to_vector(parse_list(f_text), space.dim()));
      const double kk = k ? *k : nonsquare_k(delta, *alpha_tilde);
      const CorrectorResult c = bpb_corrector(space, PairState::make(space, x, f), delta, kk, *alpha_tilde, cfg, alpha_dual);
      r.doc = header("corrector");
      r.doc["space"] = space_to_json(space);
      r.doc["k"] = kk;
      merge(r.doc, to_json(c));
    } else if (witness_cmd->parsed()) {
      const ModulusQuery q = ModulusQuery::make(mu, theta, delta);
      Witness w;
      NormedSpace space = NormedSpace::real_line();
      if (kind == "linf2") {
        w = linf2_witness(q);
        space = NormedSpace::linf(2);
      } else if (kind == "real") {
        w = real_witness(q);
      } else {
        const NormedSpace a = parse_space(first);
        const NormedSpace b = parse_space(second);
        const bool one = kind == "sum1";
        w = one ? sum1_witness(a, b, q, canonical_pin(a), canonical_pin(b))
                : suminf_witness(a, b, q, canonical_pin(a), canonical_pin(b));
        space = one ? NormedSpace::sum1(a, b) : NormedSpace::suminf(a, b);
      }
      r.doc = header("witness");
      r.doc["kind"] = kind;
      r.doc["space"] = space_to_json(space);
      merge(r.doc, to_json(w));
      if (check) {
        const PiCloud cloud(space, cfg);
        r.doc["distance"] = cloud.nearest(w.pair.x, w.pair.f).distance;
        r.doc["mesh_error"] = cloud.mesh_gap();
      }
    } else if (verify_cmd->parsed()) {
      default_format = "csv";
      const auto checks = run_suite(suite, cfg);
      r.doc = header("verify");
      r.doc["suite"] = suite;
      r.columns = {"suite", "name", "status", "measured", "tolerance", "detail"};
      r.doc["columns"] = r.columns;
      json rows = json::array();
      bool all = true;
      for (const auto& c : checks) {
        all = all && c.passed;
        rows.push_back(json{{"suite", c.suite}, {"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"},
                            {"measured", std::isfinite(c.measured) ? json(c.measured) : json()},
                            {"tolerance", c.tolerance}, {"detail", c.detail}});
      }
      r.doc["rows"] = rows;
      r.doc["passed"] = all;
      r.code = all ? kOk : kVerifyFailed;
    } else if (describe_cmd->parsed()) {
      const std::string text = describe(parse_space(space_spec)) + "\n";
      if (common.output.empty()) {
        out << text;
      } else {
        std::ofstream(common.output, std::ios::binary) << text;
      }
      return kOk;
    }

    const std::string text = render(r, common.format.empty() ? default_format : common.format);
    if (common.output.empty()) {
      out << text;
    } else {
      std::ofstream file(common.output, std::ios::binary);
      if (!file) throw Error(ErrorKind::InvalidConfig, "cannot write " + common.output);
      file << text;
    }
    return r.code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Regime:
      case ErrorKind::EmptySample:
        return kRegime;
      case ErrorKind::NotFound:
        return kVerifyFailed;
      default:
        return kUsage;
    }
  }
}

}  // namespace bpb::cli
