#pragma once

#include <array>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace anyonwalk {

/// Die spin |x>|y>, index 2x + y; x = 0 moves right (+1), x = 1 moves left.
using Spinor = Eigen::Vector4cd;

Spinor default_spin();  // |0>_x |0>_y

struct AbelianConfig {
  double phi = 0.0;  // statistical angle in [0, 2pi)
  int t = 0;
  Spinor initial_spin = default_spin();

  /// Throws "invalid-configuration" unless the spin is normalised to 1e-12
  /// and t >= 0.
  void validate() const;
};

/// Walker spinors on sites [-extent, extent], origin at the start site.
class SpinorField {
 public:
  explicit SpinorField(const Spinor& initial);
  SpinorField(int extent, std::vector<Spinor> sites);

  int extent() const { return extent_; }
  const Spinor& at(int s) const { return sites_[static_cast<std::size_t>(s + extent_)]; }
  double probability(int s) const { return at(s).squaredNorm(); }
  double norm_squared() const;
  /// <s^m> of the position distribution.
  double moment(int m) const;
  double variance() const;

 private:
  int extent_;
  std::vector<Spinor> sites_;
};

/// One step: coin e^{i pi/4 (X_x + X_y)}, phase e^{i phi Z_x Z_y}, then shift.
SpinorField abelian_step(const SpinorField& state, double phi);

/// e^{-ik Z_x} e^{i phi Z_x Z_y} e^{i pi/4 (X_x + X_y)}.
Eigen::Matrix4cd momentum_operator(double phi, double k);

/// {beta_minus, beta_plus} of the eigenphase formula.
std::array<double, 2> eigen_phases(double phi, double k);

/// Exact <s^m>_t (m = 1 or 2) from the momentum-space sums, evaluated in the
/// eigenbasis of M_k on a periodic quadrature grid. quad_points = 0 picks the
/// default (at least 1024 and above 2t + 1, where the rule is exact).
double moments_analytic(double phi, int t, int m, const Spinor& initial = default_spin(), int quad_points = 0);

struct AsymptoticCoefficients {
  double c1 = 0.0;  // <s>_t ~ c1 t
  double c2 = 0.0;  // <s^2>_t ~ c2 t^2
  int excluded_points = 0;  // grid points skipped as near-degenerate
  double variance_slope() const { return c2 - c1 * c1; }
};

/// Leading-order coefficients from the diagonal eigenbasis terms.
AsymptoticCoefficients asymptotic_coefficients(double phi, const Spinor& initial = default_spin(),
                                               int quad_points = 1024);

struct VarianceSurface {
  std::vector<double> phi_grid;
  std::vector<int> t_grid;
  // Indexed [t index][phi index].
  std::vector<std::vector<double>> simulated;
  std::optional<std::vector<std::vector<double>>> analytic;

  bool operator==(const VarianceSurface&) const = default;
};

/// Simulated variance on the grid; with `with_analytic`, also the
/// leading-order (c2 - c1^2) t^2 sheet.
VarianceSurface variance_surface(const std::vector<double>& phi_grid, const std::vector<int>& t_grid,
                                 const Spinor& initial = default_spin(), bool with_analytic = false,
                                 unsigned threads = 0);

/// Variance after t steps by direct simulation.
double simulated_variance(double phi, int t, const Spinor& initial = default_spin());

/// Variance of the two-state walk with coin Z^m e^{i pi/4 X} and coin 0
/// moving right, started in `x_initial`. At phi = m pi/2 the die walk splits
/// into this walk on the x spin and an idle y spin.
double product_walk_variance(int quarter_turns, int t, const Eigen::Vector2cd& x_initial = Eigen::Vector2cd(1, 0));

/// Mean over sites (weighted by probability) of the smaller Schmidt
/// coefficient squared of the x/y split of each site spinor.
double mean_spin_entanglement(const SpinorField& field);

}  // namespace anyonwalk
