#include <algorithm>
#include <cmath>
#include <limits>

#include "bpb/moduli.hpp"
#include "bpb/parallel.hpp"

namespace bpb {

CorrectorResult bpb_corrector(const NormedSpace& space, const PairState& p, double delta, double k,
                              double alpha_tilde, const EstimatorConfig& config, std::optional<double> alpha_dual) {
  config.validate();
  if (p.x.dim() != space.dim() || p.f.dim() != space.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "pair dimension differs from the space");
  }
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::Regime, what);
  };
  const double nx = space.norm(p.x);
  const double nf = space.dual_norm(p.f);
  require(std::abs(nx - 1.0) <= config.tol && std::abs(nf - 1.0) <= config.tol,
          "corrector needs ||x|| = ||f|| = 1");
  require(delta > 0.0 && delta < 2.0, "delta must lie in (0, 2)");
  require(action(p.f, p.x) > 1.0 - delta, "corrector needs f(x) > 1 - delta");
  require(k > 0.0 && k <= 0.5, "k must lie in (0, 1/2]");
  require(alpha_tilde > 0.0, "alpha_tilde must be positive");
  if (alpha_dual) require(alpha_tilde < *alpha_dual, "alpha_tilde must be below alpha of the dual space");

  const double bound_x = delta / k;
  const double bound_f = 2.0 * k - (2.0 / 3.0) * k * alpha_tilde;
  require(bound_f > 0.0, "functional bound 2k - (2/3) k alpha_tilde must be positive");

  // Both bounds hold exactly when the larger of the two ratios is <= 1.
  const PiCloud::Objective score = [&](const Vector& y, const Functional& g) {
    return std::max(space.norm(p.x - y) / bound_x, space.dual_norm(p.f - g) / bound_f);
  };

  double best_score = kInfinity;
  double best_slack_x = -kInfinity;
  double best_slack_f = -kInfinity;
  EstimatorConfig cfg = config;
  for (int attempt = 0; attempt < 4; ++attempt) {
    const PiCloud cloud(space, cfg);
    const auto& samples = cloud.samples();
    std::vector<double> scores(samples.size());
    parallel_for(samples.size(), thread_count(cfg.threads), [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) scores[i] = score(samples[i].first, samples[i].second);
    });
    const std::size_t i =
        static_cast<std::size_t>(std::min_element(scores.begin(), scores.end()) - scores.begin());
    PiWitness w = cloud.local_min(i, score, {samples[i].first, samples[i].second, scores[i]});

    const double ex = space.norm(p.x - w.y);
    const double ef = space.dual_norm(p.f - w.g);
    if (ex <= bound_x && ef <= bound_f) {
      w.distance = std::max(ex, ef);
      return {w, bound_x, bound_f, bound_x - ex, bound_f - ef, cfg.resolution};
    }
    if (w.distance < best_score) {
      best_score = w.distance;
      best_slack_x = bound_x - ex;
      best_slack_f = bound_f - ef;
    }
    cfg.resolution *= 2;
  }
  throw Error(ErrorKind::NotFound, "no pair of Pi(X) meets both corrector bounds; best slacks " +
                                       std::to_string(best_slack_x) + ", " + std::to_string(best_slack_f));
}

}  // namespace bpb
