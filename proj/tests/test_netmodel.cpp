#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "uassoc/netmodel.hpp"
#include "uassoc/scenario.hpp"
#include "uassoc/solvers.hpp"

using namespace uassoc;

TEST_CASE("attenuation follows the pathloss law with a 1 m clamp") {
  CHECK(attenuation({0, 0}, {0, 10}, 2.0) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(attenuation({0, 0}, {100, 0}, 3.0) == doctest::Approx(1e-6).epsilon(1e-12));
  // Coincident points hit the clamp: d_min^-3 = 1.
  CHECK(attenuation({5, 5}, {5, 5}, 3.0) == doctest::Approx(1.0));
  CHECK(attenuation({0, 0}, {0.25, 0}, 3.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(attenuation({0, 0}, {1, 0}, 1.5), std::invalid_argument);
}

TEST_CASE("dbw conversion") {
  CHECK(dbw_to_watts(-90.0) == doctest::Approx(1e-9).epsilon(1e-12));
  CHECK(watts_to_dbw(1e-9) == doctest::Approx(-90.0).epsilon(1e-12));
  CHECK(dbw_to_watts(0.0) == doctest::Approx(1.0));
}

TEST_CASE("rate table: single BS has no interference") {
  Scenario s;
  s.arena = {{0, 0}, 200, 200};
  s.bs_positions = {{0, 0}};
  s.mu_positions = {{100, 0}};
  s.powers = {1.0};
  s.noise_w = 1e-9;
  s.gamma = 3.0;
  const RateTable rt = rate_table(s);
  // g = 100^-3 = 1e-6, sinr = 1e-6/1e-9 = 1000.
  CHECK(rt.sinrs(0, 0) == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(rt.rates(0, 0) == doctest::Approx(std::log(1001.0)).epsilon(1e-12));
}

TEST_CASE("rate table: linear scenario near-BS SINR recomputed by hand") {
  const Scenario s = linear_scenario({100.0, 0.5, 3.0, -90.0});
  const RateTable rt = rate_table(s);
  // Near distance 50, far distance 150, noise 1e-9 W:
  // sinr = 50^-3 / (150^-3 + 1e-9) = 8e-6 / (1/3375000 + 1e-9).
  const double expected = 8e-6 / (1.0 / 3375000.0 + 1e-9);
  CHECK(expected == doctest::Approx(26.909).epsilon(1e-3));
  CHECK(rt.sinrs(0, 0) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(rt.sinrs(1, 1) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("rate table: mirror symmetry of the linear scenario is exact") {
  const Scenario s = linear_scenario({100.0, 0.4, 3.0, -90.0});
  const RateTable rt = rate_table(s);
  CHECK(rt.rates(0, 0) == rt.rates(1, 1));
  CHECK(rt.rates(0, 1) == rt.rates(1, 0));
  CHECK(rt.sinrs(0, 0) == rt.sinrs(1, 1));
}

TEST_CASE("rate table: rates are log1p of sinrs and strictly positive") {
  const Scenario s = oracles::random_instance(3, 5, 7);
  const RateTable rt = rate_table(s);
  for (int p = 0; p < s.num_mu(); ++p) {
    for (int a = 0; a < s.num_bs(); ++a) {
      CHECK(rt.rates(p, a) > 0.0);
      CHECK(rt.rates(p, a) == doctest::Approx(std::log1p(rt.sinrs(p, a))).epsilon(1e-15));
    }
  }
}

TEST_CASE("evaluate: single MU and shared-BS multiplexing") {
  Scenario s;
  s.arena = {{0, 0}, 10, 10};
  s.bs_positions = {{1, 1}};
  s.powers = {1.0};
  s.noise_w = 1e-9;
  s.gamma = 3.0;

  SUBCASE("one MU keeps the full link rate") {
    s.mu_positions = {{5, 5}};
    RateTable rt{Matrix(1, 1), Matrix(1, 1)};
    rt.rates(0, 0) = 2.0;
    rt.sinrs(0, 0) = std::expm1(2.0);
    const EvalResult ev = evaluate(s, rt, Assignment{{0}});
    CHECK(ev.per_mu_rate[0] == doctest::Approx(2.0));
    CHECK(ev.sum_rate == doctest::Approx(2.0));
    CHECK(ev.sum_delay == doctest::Approx(0.5));
    CHECK(ev.occupancy == std::vector<int>{1});
  }

  SUBCASE("two MUs on one BS halve their rates") {
    s.mu_positions = {{5, 5}, {6, 6}};
    RateTable rt{Matrix(2, 1), Matrix(2, 1)};
    rt.rates(0, 0) = rt.rates(1, 0) = 2.0;
    rt.sinrs(0, 0) = rt.sinrs(1, 0) = std::expm1(2.0);
    const EvalResult ev = evaluate(s, rt, Assignment{{0, 0}});
    CHECK(ev.per_mu_rate[0] == doctest::Approx(1.0));
    CHECK(ev.per_mu_rate[1] == doctest::Approx(1.0));
    CHECK(ev.sum_delay == doctest::Approx(2.0));
  }
}

TEST_CASE("evaluate matches the exhaustive oracle on the constructed topology") {
  const Scenario s = constructed_topology();
  const RateTable rt = rate_table(s);
  const oracles::Best best = oracles::exhaustive(s, oracles::Objective::SUM_DELAY);
  const SolveReport c1d = solve_c1d(s, rt);
  CHECK(c1d.rounded.bs_of_mu == best.assignment.bs_of_mu);
  CHECK(c1d.eval.sum_delay == doctest::Approx(best.value).epsilon(1e-12));
}

TEST_CASE("evaluate_deactivated: lone active BS sees only noise") {
  const Scenario s = oracles::random_instance(3, 4, 21);
  const Assignment all_on_one{{1, 1, 1, 1}};
  const EvalResult ev = evaluate_deactivated(s, all_on_one);
  for (int p = 0; p < s.num_mu(); ++p) {
    const double g = s.powers[1] * attenuation(s.bs_positions[1], s.mu_positions[p], s.gamma);
    const double expected = std::log1p(g / s.noise_w) / 4.0;
    CHECK(ev.per_mu_rate[p] == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(ev.active_set == std::vector<uint8_t>{0, 1, 0});
}

TEST_CASE("evaluate_deactivated: linear f1 SINRs match the closed forms") {
  const double d = 100.0, delta = 0.5, gamma = 3.0;
  const Scenario s = linear_scenario({d, delta, gamma, -90.0});
  const double nd = 1e-9 * std::pow(d, gamma);
  const double a_term = std::pow(1.0 - delta, -gamma) / nd;
  const double b_term = std::pow(1.0 + delta, -gamma) / nd;

  const EvalResult ev = evaluate_deactivated(s, Assignment{{0, 0}});
  CHECK(ev.per_mu_rate[0] == doctest::Approx(std::log1p(a_term) / 2.0).epsilon(1e-12));
  CHECK(ev.per_mu_rate[1] == doctest::Approx(std::log1p(b_term) / 2.0).epsilon(1e-12));
}

TEST_CASE("deactivation dominance: per-MU rates never drop when idle BSs go quiet") {
  for (uint64_t seed : {1, 2, 3, 4, 5}) {
    const Scenario s = oracles::random_instance(3, 2, seed);
    const RateTable rt = rate_table(s);
    Assignment f{{0, 0}};
    for (f.bs_of_mu[0] = 0; f.bs_of_mu[0] < 3; ++f.bs_of_mu[0]) {
      for (f.bs_of_mu[1] = 0; f.bs_of_mu[1] < 3; ++f.bs_of_mu[1]) {
        const EvalResult active = evaluate(s, rt, f);
        const EvalResult deact = evaluate_deactivated(s, f);
        for (int p = 0; p < 2; ++p)
          CHECK(deact.per_mu_rate[p] >= active.per_mu_rate[p] * (1.0 - 1e-12));
        CHECK(deact.sum_rate >= active.sum_rate * (1.0 - 1e-12));
      }
    }
  }
}

TEST_CASE("adding an idle BS leaves deactivated evaluation unchanged") {
  Scenario s = oracles::random_instance(2, 3, 31);
  const Assignment f{{0, 1, 0}};
  const EvalResult before = evaluate_deactivated(s, f);
  const RateTable rt_before = rate_table(s);

  Scenario bigger = s;
  bigger.bs_positions.push_back({900.0, 900.0});
  bigger.powers.push_back(125.0);
  const EvalResult after = evaluate_deactivated(bigger, f);
  for (int p = 0; p < 3; ++p) CHECK(after.per_mu_rate[p] == before.per_mu_rate[p]);

  // All-active SINRs weakly decrease under the extra interferer.
  const RateTable rt_after = rate_table(bigger);
  for (int p = 0; p < 3; ++p)
    for (int a = 0; a < 2; ++a) CHECK(rt_after.sinrs(p, a) <= rt_before.sinrs(p, a));
}

TEST_CASE("occupancy conservation") {
  const Scenario s = oracles::random_instance(3, 5, 17);
  const RateTable rt = rate_table(s);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Assignment f;
    for (int p = 0; p < 5; ++p) f.bs_of_mu.push_back(rng.next_below(3));
    const EvalResult ev = evaluate(s, rt, f);
    int total = 0;
    for (int k : ev.occupancy) total += k;
    CHECK(total == s.num_mu());
    for (int a = 0; a < 3; ++a) CHECK((ev.active_set[a] == 1) == (ev.occupancy[a] > 0));
  }
}

TEST_CASE("scaling powers and noise together leaves SINRs unchanged") {
  const Scenario s = oracles::random_instance(4, 6, 11);
  Scenario scaled = s;
  for (double& p : scaled.powers) p *= 37.5;
  scaled.noise_w *= 37.5;
  const RateTable a = rate_table(s);
  const RateTable b = rate_table(scaled);
  for (int p = 0; p < s.num_mu(); ++p)
    for (int bs = 0; bs < s.num_bs(); ++bs)
      CHECK(b.sinrs(p, bs) == doctest::Approx(a.sinrs(p, bs)).epsilon(1e-12));
}

TEST_CASE("scenario validation names the offending field") {
  Scenario s = oracles::random_instance(2, 2, 3);

  SUBCASE("negative power") {
    s.powers[1] = -5.0;
    CHECK_THROWS_WITH_AS(s.validate(), "powers[1]: must be positive and finite",
                         std::invalid_argument);
  }
  SUBCASE("gamma below 2") {
    s.gamma = 1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
  SUBCASE("position outside the arena") {
    s.mu_positions[0] = {5000.0, 0.0};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
  SUBCASE("assignment index out of range") {
    CHECK_THROWS_AS(Assignment{{0, 7}}.validate(2), std::invalid_argument);
  }
}
