#include "bpb/verify.hpp"

#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "bpb/closed_forms.hpp"
#include "bpb/moduli.hpp"
#include "bpb/pi_set.hpp"
#include "bpb/sampling.hpp"
#include "bpb/witnesses.hpp"

namespace bpb {
namespace {

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  // Passes when measured <= tolerance.
  void check(std::string name, double measured, double tolerance, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)});
  }

  void error(std::string name, const std::exception& e) {
    out_.push_back({suite_, std::move(name), false, std::nan(""), 0.0, e.what()});
  }

  std::vector<CheckResult> take() { return std::move(out_); }

 private:
  std::string suite_;
  std::vector<CheckResult> out_;
};

template <class F>
void guarded(Report& r, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.error(name, e);
  }
}

std::vector<CheckResult> sharpness(const EstimatorConfig& config) {
  Report r("sharpness");
  const NormedSpace linf = NormedSpace::linf(2);
  const PiCloud cloud(linf, config);
  for (double mu : {0.5, 0.8, 1.0}) {
    for (double theta : {0.5, 0.8, 1.0}) {
      for (double delta : {0.3, 0.8, 1.5}) {
        const ModulusQuery q = ModulusQuery::make(mu, theta, delta);
        if (!q.regime_psi) continue;
        const std::string tag = fmt::format("({}, {}, {})", mu, theta, delta);
        guarded(r, "linf2 witness " + tag, [&] {
          const Witness w = linf2_witness(q);
          const double d = cloud.nearest(w.pair.x, w.pair.f).distance;
          r.check("linf2 witness " + tag, std::abs(d - w.predicted), 5e-3,
                  fmt::format("distance {:.6f} predicted {:.6f}", d, w.predicted));
        });
        guarded(r, "linf2 modulus " + tag, [&] {
          const Estimate e = estimate_phi_mut(linf, q, config);
          const double bound = phi_upper_bound(q);
          r.check("linf2 modulus " + tag, std::abs(e.value - bound), 1e-2,
                  fmt::format("estimate {:.6f} bound {:.6f}", e.value, bound));
        });
      }
    }
  }
  const NormedSpace line = NormedSpace::real_line();
  for (const char* kind : {"sum1", "suminf"}) {
    const std::string name = fmt::format("{} witness (0.9, 0.9, 0.4)", kind);
    guarded(r, name, [&] {
      const ModulusQuery q = ModulusQuery::make(0.9, 0.9, 0.4);
      const Pin pin = canonical_pin(line);
      const bool one = std::string(kind) == "sum1";
      const Witness w = one ? sum1_witness(line, line, q, pin, pin) : suminf_witness(line, line, q, pin, pin);
      const NormedSpace sum = one ? NormedSpace::sum1(line, line) : NormedSpace::suminf(line, line);
      const double d = distance_to_pi(sum, w.pair, config).distance;
      r.check(name, std::abs(d - w.predicted), 5e-3, fmt::format("distance {:.6f} predicted {:.6f}", d, w.predicted));
    });
  }
  for (double delta : {0.5, 0.9, 1.2, 1.9}) {
    const std::string name = fmt::format("real witness (0.8, 0.9, {})", delta);
    guarded(r, name, [&] {
      const Witness w = real_witness(ModulusQuery::make(0.8, 0.9, delta));
      const double d = real_line_distance(w.pair.x[0], w.pair.f[0]);
      r.check(name, std::abs(d - w.predicted), 1e-12);
    });
  }
  return r.take();
}

std::vector<CheckResult> hilbert(const EstimatorConfig& config) {
  Report r("hilbert");
  const NormedSpace l2 = NormedSpace::l2(2);
  r.check("anchor x=(1,0) y=(0.5,0)",
          std::abs(hilbert_distance(HilbertPair::make(Vector{1.0, 0.0}, Vector{0.5, 0.0})) - 0.5), 1e-9);
  r.check("anchor x=(1,0) y=(0,1)",
          std::abs(hilbert_distance(HilbertPair::make(Vector{1.0, 0.0}, Vector{0.0, 1.0})) -
                   std::sqrt(2.0 - std::numbers::sqrt2)),
          1e-9);
  EstimatorConfig plain = config;
  plain.closed_form_refine = false;
  const PiCloud cloud(l2, plain);
  for (int i = 0; i < 12; ++i) {
    const double a = 0.5 * i;
    const Vector x{0.9 * std::cos(a), 0.9 * std::sin(a)};
    const Vector y{0.4 * std::cos(2.3 * a + 1.0), 0.4 * std::sin(2.3 * a + 1.0)};
    const double closed = hilbert_distance(HilbertPair::make(x, y));
    const double sampled = cloud.nearest(x, as_functional(y)).distance;
    r.check(fmt::format("distance sample {}", i), std::abs(closed - sampled), 1e-4,
            fmt::format("closed {:.8f} sampled {:.8f}", closed, sampled));
  }
  for (const auto& [mu, theta, delta] : {std::tuple{1.0, 1.0, 0.2}, std::tuple{1.0, 1.0, 0.4}, std::tuple{1.0, 0.5, 0.6}}) {
    const std::string name = fmt::format("modulus ({}, {}, {})", mu, theta, delta);
    guarded(r, name, [&] {
      const ModulusQuery q = ModulusQuery::make(mu, theta, delta);
      const double closed = hilbert_modulus(q);
      const Estimate e = estimate_phi_mut(l2, q, plain);
      r.check(name, std::abs(closed - e.value), 1e-2, fmt::format("closed {:.6f} estimate {:.6f}", closed, e.value));
    });
  }
  return r.take();
}

std::vector<CheckResult> alpha(const EstimatorConfig& config) {
  Report r("alpha");
  guarded(r, "alpha l2:2", [&] {
    const AlphaReport a = estimate_alpha(NormedSpace::l2(2), config);
    r.check("alpha l2:2", std::abs(a.alpha - (2.0 - std::numbers::sqrt2)), 1e-3, fmt::format("{:.8f}", a.alpha));
  });
  for (const auto& [name, space] : {std::pair{"l1:2", NormedSpace::l1(2)}, std::pair{"linf:2", NormedSpace::linf(2)}}) {
    guarded(r, std::string("alpha ") + name, [&] {
      r.check(std::string("alpha ") + name, std::abs(estimate_alpha(space, config).alpha), 1e-9);
    });
  }
  guarded(r, "self-dual hexagon", [&] {
    const SelfDualReport s = check_alpha_self_dual(NormedSpace::hexagon(), config);
    r.check("self-dual hexagon", std::abs(s.primal.alpha - s.dual.alpha), 2e-2,
            fmt::format("{:.6f} vs {:.6f}", s.primal.alpha, s.dual.alpha));
  });
  guarded(r, "convexity ceiling l1:2", [&] {
    double worst = -kInfinity;
    for (double eps = 0.25; eps <= 2.0 + 1e-12; eps += 0.25) {
      const ConvexityReport c = estimate_convexity_modulus(NormedSpace::l1(2), eps, config);
      worst = std::max(worst, c.delta_x - (1.0 - std::sqrt(1.0 - eps * eps / 4.0)) - c.mesh_error);
    }
    r.check("convexity ceiling l1:2", worst, 0.0);
  });
  return r.take();
}

std::vector<CheckResult> nonsquare(const EstimatorConfig& config) {
  Report r("nonsquare");
  const NormedSpace l2 = NormedSpace::l2(2);
  const double alpha_tilde = 0.58;
  for (double delta : {0.05, 0.1, 0.2, 0.3, 0.4, 0.45}) {
    const std::string name = fmt::format("spherical modulus l2:2 delta={}", delta);
    guarded(r, name, [&] {
      const Estimate e = estimate_phi(l2, delta, ModulusMode::Sphere, config);
      const double bound = nonsquare_phi_bound(delta, alpha_tilde);
      r.check(name, e.value - bound, 1e-2, fmt::format("estimate {:.6f} bound {:.6f}", e.value, bound));
    });
  }
  for (double delta : {0.1, 0.2, 0.3}) {
    const std::string name = fmt::format("corrector l2:2 delta={}", delta);
    guarded(r, name, [&] {
      const double t = std::acos(1.0 - 0.9 * delta);
      const PairState p = PairState::make(l2, Vector{1.0, 0.0}, Functional{std::cos(t), std::sin(t)});
      const double k = nonsquare_k(delta, alpha_tilde);
      const CorrectorResult c = bpb_corrector(l2, p, delta, k, alpha_tilde, config);
      r.check(name, -std::min(c.slack_x, c.slack_f), 0.0);
    });
  }
  return r.take();
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const EstimatorConfig& config) {
  config.validate();
  if (suite == "sharpness") return sharpness(config);
  if (suite == "hilbert") return hilbert(config);
  if (suite == "alpha") return alpha(config);
  if (suite == "nonsquare") return nonsquare(config);
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s : {"sharpness", "hilbert", "alpha", "nonsquare"}) {
      auto part = run_suite(s, config);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw Error(ErrorKind::Parse, "unknown suite '" + suite + "'");
}

}  // namespace bpb
