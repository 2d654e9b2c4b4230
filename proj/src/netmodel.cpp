#include "uassoc/netmodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uassoc {

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double dbw_to_watts(double dbw) { return std::pow(10.0, dbw / 10.0); }

double watts_to_dbw(double watts) { return 10.0 * std::log10(watts); }

bool Arena::contains(const Point& p) const {
  const double eps = 1e-9;
  return p.x >= origin.x - eps && p.x <= origin.x + width + eps && p.y >= origin.y - eps &&
         p.y <= origin.y + height + eps;
}

void Scenario::validate() const {
  if (bs_positions.empty()) throw std::invalid_argument("bs_positions: at least one BS required");
  if (mu_positions.empty()) throw std::invalid_argument("mu_positions: at least one MU required");
  if (powers.size() != bs_positions.size())
    throw std::invalid_argument("powers: must have one entry per BS");
  for (size_t a = 0; a < powers.size(); ++a) {
    if (!(powers[a] > 0.0) || !std::isfinite(powers[a]))
      throw std::invalid_argument("powers[" + std::to_string(a) + "]: must be positive and finite");
  }
  if (!(noise_w >= 0.0) || !std::isfinite(noise_w))
    throw std::invalid_argument("noise_w: must be nonnegative and finite");
  if (!(gamma >= 2.0)) throw std::invalid_argument("gamma: must be >= 2");
  if (!(arena.width > 0.0) || !(arena.height > 0.0))
    throw std::invalid_argument("arena: width and height must be positive");
  for (size_t a = 0; a < bs_positions.size(); ++a) {
    if (!arena.contains(bs_positions[a]))
      throw std::invalid_argument("bs_positions[" + std::to_string(a) + "]: outside arena");
  }
  for (size_t p = 0; p < mu_positions.size(); ++p) {
    if (!arena.contains(mu_positions[p]))
      throw std::invalid_argument("mu_positions[" + std::to_string(p) + "]: outside arena");
  }
}

void Assignment::validate(int n_bs) const {
  if (bs_of_mu.empty()) throw std::invalid_argument("assignment: empty");
  for (size_t p = 0; p < bs_of_mu.size(); ++p) {
    if (bs_of_mu[p] < 0 || bs_of_mu[p] >= n_bs)
      throw std::invalid_argument("assignment[" + std::to_string(p) + "]: BS index out of range");
  }
}

double attenuation(const Point& y, const Point& y2, double gamma) {
  if (!(gamma >= 2.0)) throw std::invalid_argument("gamma: must be >= 2");
  const double d = std::max(distance(y, y2), kMinDistanceM);
  return std::pow(d, -gamma);
}

RateTable rate_table(const Scenario& s) {
  s.validate();
  const int n_mu = s.num_mu();
  const int n_bs = s.num_bs();
  RateTable rt{Matrix(n_mu, n_bs), Matrix(n_mu, n_bs)};
  for (int p = 0; p < n_mu; ++p) {
    for (int a = 0; a < n_bs; ++a) {
      const double signal = s.powers[a] * attenuation(s.bs_positions[a], s.mu_positions[p], s.gamma);
      double interference = 0.0;
      for (int b = 0; b < n_bs; ++b) {
        if (b == a) continue;
        interference += s.powers[b] * attenuation(s.bs_positions[b], s.mu_positions[p], s.gamma);
      }
      const double sinr = signal / (interference + s.noise_w);
      const double rate = std::log1p(sinr);
      if (!std::isfinite(sinr) || !(rate > 0.0))
        throw std::logic_error("rate_table: non-finite or non-positive entry (zero noise with a single BS?)");
      rt.sinrs(p, a) = sinr;
      rt.rates(p, a) = rate;
    }
  }
  return rt;
}

std::vector<int> occupancy_of(const Assignment& f, int n_bs) {
  std::vector<int> kappa(n_bs, 0);
  for (int b : f.bs_of_mu) ++kappa[b];
  return kappa;
}

namespace {

EvalResult finish_eval(const std::vector<double>& link_rate, const Assignment& f, int n_bs) {
  EvalResult out;
  out.occupancy = occupancy_of(f, n_bs);
  out.active_set.resize(n_bs);
  for (int a = 0; a < n_bs; ++a) out.active_set[a] = out.occupancy[a] > 0 ? 1 : 0;
  const int n_mu = f.num_mu();
  out.per_mu_rate.resize(n_mu);
  for (int p = 0; p < n_mu; ++p) {
    const double r = link_rate[p] / out.occupancy[f.bs_of_mu[p]];
    out.per_mu_rate[p] = r;
    out.sum_rate += r;
    out.sum_delay += 1.0 / r;
  }
  return out;
}

}  // namespace

EvalResult evaluate(const Scenario& s, const RateTable& rt, const Assignment& f) {
  f.validate(s.num_bs());
  if (rt.rates.rows() != s.num_mu() || rt.rates.cols() != s.num_bs())
    throw std::invalid_argument("rate table shape does not match scenario");
  if (f.num_mu() != s.num_mu()) throw std::invalid_argument("assignment size does not match scenario");
  std::vector<double> link_rate(s.num_mu());
  for (int p = 0; p < s.num_mu(); ++p) link_rate[p] = rt.rates(p, f.bs_of_mu[p]);
  return finish_eval(link_rate, f, s.num_bs());
}

EvalResult evaluate_deactivated(const Scenario& s, const Assignment& f) {
  s.validate();
  f.validate(s.num_bs());
  if (f.num_mu() != s.num_mu()) throw std::invalid_argument("assignment size does not match scenario");
  const std::vector<int> kappa = occupancy_of(f, s.num_bs());
  std::vector<double> link_rate(s.num_mu());
  for (int p = 0; p < s.num_mu(); ++p) {
    const int a = f.bs_of_mu[p];
    const double signal = s.powers[a] * attenuation(s.bs_positions[a], s.mu_positions[p], s.gamma);
    double interference = 0.0;
    for (int b = 0; b < s.num_bs(); ++b) {
      if (b == a || kappa[b] == 0) continue;
      interference += s.powers[b] * attenuation(s.bs_positions[b], s.mu_positions[p], s.gamma);
    }
    link_rate[p] = std::log1p(signal / (interference + s.noise_w));
  }
  return finish_eval(link_rate, f, s.num_bs());
}

}  // namespace uassoc
