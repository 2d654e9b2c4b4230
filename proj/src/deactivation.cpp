#include "uassoc/deactivation.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace uassoc {

void LinearNetParams::validate() const {
  if (!(d > 0.0)) throw std::invalid_argument("d: must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta: must lie in (0,1)");
  if (!(gamma >= 2.0)) throw std::invalid_argument("gamma: must be >= 2");
  if (!std::isfinite(noise_dbw)) throw std::invalid_argument("noise_dbw: must be finite");
}

namespace {

struct SinrTerms {
  double a, b, c;
};

// The three SINRs the linear network reduces to. nd = N * d^gamma.
SinrTerms sinr_terms(const LinearNetParams& p) {
  const double nd = dbw_to_watts(p.noise_dbw) * std::pow(p.d, p.gamma);
  const double near = std::pow(1.0 - p.delta, -p.gamma);
  const double far = std::pow(1.0 + p.delta, -p.gamma);
  return {near / nd, far / nd, near / (far + nd)};
}

ThresholdReport make_report(double lhs, const SinrTerms& t) {
  ThresholdReport rep;
  rep.lhs = lhs;
  // Strictly greater: the lhs = 1 boundary resolves to f2 (load balancing).
  rep.winner = lhs > 1.0 ? LinearWinner::F1 : LinearWinner::F2;
  rep.a_term = t.a;
  rep.b_term = t.b;
  rep.c_term = t.c;
  return rep;
}

}  // namespace

ThresholdReport rate_threshold(const LinearNetParams& p) {
  p.validate();
  const SinrTerms t = sinr_terms(p);
  const double lhs = std::sqrt((1.0 + t.a) * (1.0 + t.b)) / ((1.0 + t.c) * (1.0 + t.c));
  return make_report(lhs, t);
}

ThresholdReport delay_threshold(const LinearNetParams& p) {
  p.validate();
  const SinrTerms t = sinr_terms(p);
  const double la = std::log1p(t.a);
  const double lb = std::log1p(t.b);
  const double lc = std::log1p(t.c);
  const double lhs = (la * lb) / (lc * (la + lb));
  return make_report(lhs, t);
}

namespace {

// Bisect lhs(delta) = 1 inside [lo, hi]; assumes a sign change of lhs - 1.
double bisect_delta(double gamma, double d, double noise_dbw, bool rate, double lo, double hi) {
  auto lhs_at = [&](double delta) {
    LinearNetParams p{d, delta, gamma, noise_dbw};
    return (rate ? rate_threshold(p) : delay_threshold(p)).lhs - 1.0;
  };
  double flo = lhs_at(lo);
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = lhs_at(mid);
    if ((flo <= 0.0) == (fmid <= 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

DecisionBoundary decision_boundary(double gamma, double d, const std::vector<double>& delta_grid,
                                   const std::vector<double>& noise_grid_dbw) {
  if (delta_grid.empty() || noise_grid_dbw.empty())
    throw std::invalid_argument("decision_boundary: grids must be non-empty");
  for (size_t i = 1; i < delta_grid.size(); ++i)
    if (delta_grid[i] <= delta_grid[i - 1])
      throw std::invalid_argument("decision_boundary: delta grid must be sorted ascending");

  DecisionBoundary out;
  for (double noise : noise_grid_dbw) {
    for (bool rate : {true, false}) {
      auto lhs_at = [&](double delta) {
        LinearNetParams p{d, delta, gamma, noise};
        return (rate ? rate_threshold(p) : delay_threshold(p)).lhs - 1.0;
      };
      for (size_t i = 0; i + 1 < delta_grid.size(); ++i) {
        const double f0 = lhs_at(delta_grid[i]);
        const double f1 = lhs_at(delta_grid[i + 1]);
        if ((f0 <= 0.0) == (f1 <= 0.0)) continue;
        const double star = bisect_delta(gamma, d, noise, rate, delta_grid[i], delta_grid[i + 1]);
        (rate ? out.rate : out.delay).push_back({noise, star});
      }
    }
  }
  return out;
}

SolveReport brute_force_deactivated(const Scenario& s, DeactObjective objective) {
  const auto t0 = std::chrono::steady_clock::now();
  s.validate();
  const int n_mu = s.num_mu();
  const int n_bs = s.num_bs();
  const double count = std::pow(static_cast<double>(n_bs), static_cast<double>(n_mu));
  if (count > kEnumerationCap)
    throw EnumerationCapError("instance too large: " + std::to_string(n_bs) + "^" +
                              std::to_string(n_mu) + " assignments exceeds the enumeration cap");

  const bool maximize = objective == DeactObjective::RATE;
  Assignment best, f;
  f.bs_of_mu.assign(n_mu, 0);
  double best_value = maximize ? -std::numeric_limits<double>::infinity()
                               : std::numeric_limits<double>::infinity();
  int iterations = 0;
  while (true) {
    ++iterations;
    const EvalResult ev = evaluate_deactivated(s, f);
    const double value = maximize ? ev.sum_rate : ev.sum_delay;
    if (maximize ? value > best_value : value < best_value) {
      best_value = value;
      best = f;
    }
    int i = n_mu - 1;
    while (i >= 0 && f.bs_of_mu[i] == n_bs - 1) f.bs_of_mu[i--] = 0;
    if (i < 0) break;
    ++f.bs_of_mu[i];
  }

  SolveReport report;
  report.formulation = maximize ? Formulation::C1R_DEACT : Formulation::C1D_DEACT;
  report.rounded = best;
  report.objective_value = best_value;
  report.eval = evaluate(s, rate_table(s), best);
  report.iterations = iterations;
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

double activation_penalty(const Scenario& s, const std::vector<uint8_t>& active,
                          const std::function<double(double, double)>& coupling) {
  s.validate();
  if (active.size() != static_cast<size_t>(s.num_bs()))
    throw std::invalid_argument("activation_penalty: active set size mismatch");
  double total = 0.0;
  for (int a = 0; a < s.num_bs(); ++a) {
    if (!active[a]) continue;
    for (int b = 0; b < s.num_bs(); ++b) {
      if (b == a || !active[b]) continue;
      total += coupling(s.powers[a], s.powers[b]) * distance(s.bs_positions[a], s.bs_positions[b]);
    }
  }
  return total;
}

}  // namespace uassoc
