#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "anyonwalk/walk_abelian.hpp"
#include "anyonwalk/walk_nonabelian.hpp"
#include "test_util.hpp"

using namespace anyonwalk;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

SpinorField evolve(double phi, int t, const Spinor& s = default_spin()) {
  SpinorField f(s);
  for (int i = 0; i < t; ++i) f = abelian_step(f, phi);
  return f;
}

double fit_exponent(double phi, int t0, int t1) {
  // Least squares slope of log v against log t.
  SpinorField f(default_spin());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int t = 1; t <= t1; ++t) {
    f = abelian_step(f, phi);
    if (t < t0) continue;
    const double x = std::log(t), y = std::log(f.variance());
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

}  // namespace

TEST_CASE("one step splits the walker evenly") {
  const SpinorField f = evolve(0.0, 1);
  CHECK(f.probability(-1) == doctest::Approx(0.5));
  CHECK(f.probability(1) == doctest::Approx(0.5));
  CHECK(f.probability(0) == doctest::Approx(0.0));
  for (double phi : {0.3, 1.0, 2.5, 4.0}) {
    const SpinorField g = evolve(phi, 1);
    CHECK(g.probability(-1) == doctest::Approx(0.5));
    CHECK(g.probability(1) == doctest::Approx(0.5));
  }
}

TEST_CASE("spin 0 moves right after a step without coin mixing") {
  // Coin x-component 0 is carried to s + 1.
  const SpinorField f = evolve(0.0, 1);
  CHECK(f.at(1).tail<2>().norm() == doctest::Approx(0.0));
  CHECK(f.at(-1).head<2>().norm() == doctest::Approx(0.0));
}

TEST_CASE("norm and parity are preserved") {
  SpinorField f(default_spin());
  for (int t = 1; t <= 100; ++t) {
    f = abelian_step(f, 0.9);
    CHECK(std::abs(f.norm_squared() - 1.0) < 1e-12);
  }
  for (int s = -100; s <= 100; ++s)
    if ((s + 100) % 2 != 0) CHECK(f.probability(s) == 0.0);
}

TEST_CASE("momentum operator reduces to the die toss at the origin") {
  const Eigen::Matrix4cd m = momentum_operator(0.0, 0.0);
  const double h = 0.5;
  const cd i(0, 1);
  Eigen::Matrix4cd expected;
  expected << h, h * i, h * i, -h, h * i, h, -h, h * i, h * i, -h, h, h * i, -h, h * i, h * i, h;
  CHECK((m - expected).norm() < 1e-14);
  CHECK((m.adjoint() * m - Eigen::Matrix4cd::Identity()).norm() < 1e-14);
}

TEST_CASE("momentum operator eigenphases follow the beta formula") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> phi_dist(0.0, 2 * pi), k_dist(-pi, pi);
  for (int trial = 0; trial < 50; ++trial) {
    const double phi = phi_dist(rng), k = k_dist(rng);
    const Eigen::Matrix4cd m = momentum_operator(phi, k);
    CHECK((m.adjoint() * m - Eigen::Matrix4cd::Identity()).norm() < 1e-12);
    const auto beta = eigen_phases(phi, k);
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(m);
    std::vector<double> expected{beta[0], -beta[0], beta[1], -beta[1]};
    for (Eigen::Index j = 0; j < 4; ++j) {
      const double phase = std::arg(es.eigenvalues()(j));
      double best = 10.0;
      for (double e : expected) best = std::min(best, std::abs(std::remainder(phase - e, 2 * pi)));
      CHECK(best < 1e-8);
    }
  }
  const auto origin = eigen_phases(0.0, 0.0);
  CHECK(origin[1] == doctest::Approx(0.0));
  CHECK(origin[0] == doctest::Approx(pi / 2));
}

TEST_CASE("analytic moments at one step") {
  CHECK(std::abs(moments_analytic(0.0, 1, 1)) < 1e-12);
  CHECK(moments_analytic(0.4, 1, 2) == doctest::Approx(1.0));
  CHECK_ERROR_CODE(moments_analytic(0.0, 0, 1), "invalid-configuration");
  CHECK_ERROR_CODE(moments_analytic(0.0, 3, 3), "invalid-configuration");
}

TEST_CASE("analytic moments match direct evolution") {
  for (double phi : {0.0, 0.3, pi / 2}) {
    const SpinorField f = evolve(phi, 30);
    const double m1 = moments_analytic(phi, 30, 1);
    const double m2 = moments_analytic(phi, 30, 2);
    CHECK(std::abs(m2 - f.moment(2)) / f.moment(2) < 1e-8);
    CHECK(std::abs(m1 - f.moment(1)) < 1e-8);
  }
  Spinor s;
  s << 0.5, cd(0, 0.5), -0.5, 0.5;
  const SpinorField f = evolve(1.1, 20, s);
  CHECK(std::abs(moments_analytic(1.1, 20, 2, s) - f.moment(2)) / f.moment(2) < 1e-8);
  CHECK(std::abs(moments_analytic(1.1, 20, 1, s) - f.moment(1)) < 1e-8);
}

TEST_CASE("position amplitudes from the momentum representation") {
  const double phi = 0.8;
  const int t = 50, K = 4096;
  const SpinorField f = evolve(phi, t);
  double worst = 0.0;
  std::vector<Spinor> evolved(K);
  for (int j = 0; j < K; ++j) {
    const double k = -pi + 2 * pi * j / K;
    Spinor v = default_spin();
    const Eigen::Matrix4cd m = momentum_operator(phi, k);
    for (int r = 0; r < t; ++r) v = m * v;
    evolved[static_cast<std::size_t>(j)] = v;
  }
  for (int s = -t; s <= t; ++s) {
    Spinor amp = Spinor::Zero();
    for (int j = 0; j < K; ++j) amp += std::polar(1.0, (-pi + 2 * pi * j / K) * s) * evolved[static_cast<std::size_t>(j)];
    amp /= K;
    worst = std::max(worst, (amp - f.at(s)).norm());
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("asymptotic coefficients at zero angle match the two-state walk") {
  const AsymptoticCoefficients c = asymptotic_coefficients(0.0);
  CHECK(c.excluded_points == 0);
  const int t = 400;
  const double product = baseline_quantum(t, beam_splitter_coin()).variance() / (double(t) * t);
  CHECK(c.variance_slope() == doctest::Approx(product).epsilon(0.01));
  // The walk started in |0> drifts with speed 1 - 1/sqrt(2).
  CHECK(std::abs(c.c2 - (1 - 1 / std::sqrt(2.0))) < 1e-6);
  CHECK(std::abs(c.variance_slope() - (1 / std::sqrt(2.0) - 0.5)) < 1e-6);
  CHECK(product_walk_variance(0, t) == doctest::Approx(baseline_quantum(t, beam_splitter_coin()).variance()).epsilon(1e-12));
}

TEST_CASE("a generic angle lowers the quadratic coefficient") {
  CHECK(asymptotic_coefficients(0.7).c2 < asymptotic_coefficients(0.0).c2);
}

TEST_CASE("quadratic coefficient is positive on a grid") {
  for (int j = 0; j < 64; ++j) {
    const double phi = 2 * pi * j / 64;
    const AsymptoticCoefficients c = asymptotic_coefficients(phi, default_spin(), 256);
    CHECK(c.c2 > 0.0);
    CHECK(c.variance_slope() > 0.0);
  }
}

TEST_CASE("variance surface is symmetric under phi -> 2 pi - phi") {
  std::vector<double> phis{0.3, 1.2, 2.0, 2 * pi - 0.3, 2 * pi - 1.2, 2 * pi - 2.0};
  const VarianceSurface s = variance_surface(phis, {10, 40, 80});
  for (std::size_t ti = 0; ti < 3; ++ti)
    for (std::size_t p = 0; p < 3; ++p)
      CHECK(s.simulated[ti][p] == doctest::Approx(s.simulated[ti][p + 3]).epsilon(1e-10));
  CHECK_FALSE(s.analytic.has_value());
}

TEST_CASE("variance grows quadratically") {
  for (double phi : {0.0, 0.4, pi / 4, 1.3, pi / 2, 2.2, pi}) {
    const double e = fit_exponent(phi, 50, 200);
    CHECK(e >= 1.9);
    CHECK(e <= 2.0);
  }
}

TEST_CASE("analytic sheet tracks simulation at t = 100") {
  const std::vector<double> phis{0.3, pi / 4, 1.0, 2.0, 3 * pi / 4, 2.8};
  const VarianceSurface s = variance_surface(phis, {100}, default_spin(), true);
  REQUIRE(s.analytic.has_value());
  for (std::size_t p = 0; p < phis.size(); ++p)
    CHECK(std::abs((*s.analytic)[0][p] - s.simulated[0][p]) / s.simulated[0][p] < 0.05);
}

TEST_CASE("variance surface argument checks") {
  CHECK_ERROR_CODE(variance_surface({}, {1}), "invalid-configuration");
  CHECK_ERROR_CODE(variance_surface({0.1}, {-1}), "invalid-configuration");
  Spinor bad = Spinor::Zero();
  bad(0) = 2.0;
  CHECK_ERROR_CODE(variance_surface({0.1}, {3}, bad), "invalid-configuration");
  AbelianConfig cfg;
  cfg.t = -2;
  CHECK_ERROR_CODE(cfg.validate(), "invalid-configuration");
}

TEST_CASE("quarter-turn angles keep the die spins unentangled") {
  for (double phi : {0.0, pi / 2, pi, 3 * pi / 2}) CHECK(mean_spin_entanglement(evolve(phi, 40)) < 1e-20);
  CHECK(mean_spin_entanglement(evolve(0.7, 40)) > 1e-3);
}

TEST_CASE("quarter-turn angles reproduce the product walk variance") {
  for (int m : {0, 1, 2, 3}) {
    const double phi = m * pi / 2;
    for (int t : {10, 57, 100}) CHECK(simulated_variance(phi, t) == doctest::Approx(product_walk_variance(m, t)).epsilon(1e-10));
  }
}
