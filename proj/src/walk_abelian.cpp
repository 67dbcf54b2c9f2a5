#include "anyonwalk/walk_abelian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/parallel.hpp"

namespace anyonwalk {

namespace {

using cd = std::complex<double>;
using namespace std::complex_literals;

// e^{i pi/4 (X_x + X_y)} = u (x) u with u = (1/sqrt2)[[1, i], [i, 1]].
Eigen::Matrix4cd die_toss() {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd u;
  u << r, r * 1i, r * 1i, r;
  Eigen::Matrix4cd out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) out(2 * a + c, 2 * b + d) = u(a, b) * u(c, d);
  return out;
}

// Z_x Z_y eigenvalue of basis state 2x + y.
constexpr int parity(int idx) { return ((idx >> 1) ^ idx) & 1 ? -1 : 1; }

Eigen::Matrix4cd phase_coin(double phi) {
  Eigen::Matrix4cd out = die_toss();
  for (int r = 0; r < 4; ++r) out.row(r) *= std::polar(1.0, phi * parity(r));
  return out;
}

int default_grid(int t) {
  int k = 1024;
  while (k <= 2 * t + 1) k *= 2;
  return k;
}

// Geometric sum sum_{j=1}^t r^j for |r| = 1.
cd geometric(cd r, int t) {
  if (std::abs(r - 1.0) < 1e-9) {
    cd acc = 0.0, p = 1.0;
    for (int j = 1; j <= t; ++j) acc += (p *= r);
    return acc;
  }
  return r * (1.0 - std::pow(r, t)) / (1.0 - r);
}

struct Eigenbasis {
  Eigen::Matrix4cd vectors;  // unitary, columns are eigenvectors
  Eigen::Vector4cd values;
};

// Schur form of a normal matrix is diagonal; columns sorted by eigenphase so
// branches stay continuous in k.
Eigenbasis eigenbasis(const Eigen::Matrix4cd& m) {
  Eigen::ComplexSchur<Eigen::Matrix4cd> schur(m);
  Eigenbasis out;
  std::array<int, 4> order{0, 1, 2, 3};
  const auto& t = schur.matrixT();
  std::sort(order.begin(), order.end(), [&](int a, int b) { return std::arg(t(a, a)) < std::arg(t(b, b)); });
  for (int l = 0; l < 4; ++l) {
    out.vectors.col(l) = schur.matrixU().col(order[l]);
    out.values(l) = t(order[l], order[l]);
  }
  return out;
}

double quadrature_node(int j, int points) {
  return -std::numbers::pi + (j + 0.5) * 2.0 * std::numbers::pi / points;
}

}  // namespace

Spinor default_spin() {
  Spinor s = Spinor::Zero();
  s(0) = 1.0;
  return s;
}

void AbelianConfig::validate() const {
  if (t < 0) throw domain_error("invalid-configuration", "step count must be non-negative");
  if (std::abs(initial_spin.squaredNorm() - 1.0) > 1e-12)
    throw domain_error("invalid-configuration", "initial spin must be normalised");
}

SpinorField::SpinorField(const Spinor& initial) : extent_(0), sites_{initial} {}

SpinorField::SpinorField(int extent, std::vector<Spinor> sites) : extent_(extent), sites_(std::move(sites)) {
  if (sites_.size() != static_cast<std::size_t>(2 * extent + 1))
    throw domain_error("invalid-configuration", "spinor field size does not match extent");
}

double SpinorField::norm_squared() const {
  double acc = 0.0;
  for (const auto& s : sites_) acc += s.squaredNorm();
  return acc;
}

double SpinorField::moment(int m) const {
  double acc = 0.0;
  for (int s = -extent_; s <= extent_; ++s) acc += std::pow(static_cast<double>(s), m) * probability(s);
  return acc;
}

double SpinorField::variance() const {
  const double mean = moment(1);
  return moment(2) - mean * mean;
}

SpinorField abelian_step(const SpinorField& state, double phi) {
  const Eigen::Matrix4cd coin = phase_coin(phi);
  const int extent = state.extent() + 1;
  std::vector<Spinor> next(2 * extent + 1, Spinor::Zero());
  for (int s = -state.extent(); s <= state.extent(); ++s) {
    const Spinor tossed = coin * state.at(s);
    // x = 0 components (indices 0, 1) move right, x = 1 (2, 3) move left.
    next[static_cast<std::size_t>(s + 1 + extent)].head<2>() += tossed.head<2>();
    next[static_cast<std::size_t>(s - 1 + extent)].tail<2>() += tossed.tail<2>();
  }
  return SpinorField(extent, std::move(next));
}

Eigen::Matrix4cd momentum_operator(double phi, double k) {
  Eigen::Matrix4cd shift = Eigen::Matrix4cd::Zero();
  for (int r = 0; r < 4; ++r) shift(r, r) = std::polar(1.0, r < 2 ? -k : k);
  Eigen::Matrix4cd phase = Eigen::Matrix4cd::Zero();
  for (int r = 0; r < 4; ++r) phase(r, r) = std::polar(1.0, phi * parity(r));
  return shift * phase * die_toss();
}

std::array<double, 2> eigen_phases(double phi, double k) {
  const double ck = std::cos(k), cp = std::cos(phi);
  const double root = std::sqrt(std::max(0.0, (cp * cp - 2.0) * ck * ck + 2.0));
  auto acos_clamped = [](double x) { return std::acos(std::clamp(x, -1.0, 1.0)); };
  return {acos_clamped(0.5 * (ck * cp - root)), acos_clamped(0.5 * (ck * cp + root))};
}

double moments_analytic(double phi, int t, int m, const Spinor& initial, int quad_points) {
  if (t < 1) throw domain_error("invalid-configuration", "moments need t >= 1");
  if (m != 1 && m != 2) throw domain_error("invalid-configuration", "only the first two moments are supported");
  const int points = quad_points > 0 ? quad_points : default_grid(t);
  // With <s|k> = e^{iks}, s acts as i d/dk and dM/dk = -i Z_x M, so
  // d/dk (M^t psi) = -i g with g = sum_j M^{t-j} Z_x M^j psi. Then
  // <s> = avg_k <M^t psi, g> and <s^2> = avg_k |g|^2.
  Eigen::Vector4d z;
  z << 1, 1, -1, -1;
  double acc = 0.0;
  for (int j = 0; j < points; ++j) {
    const Eigenbasis eb = eigenbasis(momentum_operator(phi, quadrature_node(j, points)));
    const Eigen::Vector4cd c = eb.vectors.adjoint() * initial;
    const Eigen::Matrix4cd zl = eb.vectors.adjoint() * z.asDiagonal() * eb.vectors;
    Eigen::Vector4cd g = Eigen::Vector4cd::Zero();
    for (int l = 0; l < 4; ++l) {
      const cd lt = std::pow(eb.values(l), t);
      for (int lp = 0; lp < 4; ++lp) g(l) += zl(l, lp) * c(lp) * lt * geometric(eb.values(lp) / eb.values(l), t);
    }
    if (m == 1) {
      Eigen::Vector4cd evolved;
      for (int l = 0; l < 4; ++l) evolved(l) = std::pow(eb.values(l), t) * c(l);
      acc += evolved.dot(g).real();
    } else {
      acc += g.squaredNorm();
    }
  }
  return acc / points;
}

AsymptoticCoefficients asymptotic_coefficients(double phi, const Spinor& initial, int quad_points) {
  AsymptoticCoefficients out;
  double sum_left = 0.0, sum_left_right = 0.0;
  int used = 0;
  for (int j = 0; j < quad_points; ++j) {
    const Eigenbasis eb = eigenbasis(momentum_operator(phi, quadrature_node(j, quad_points)));
    double gap = 4.0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) gap = std::min(gap, std::abs(eb.values(a) - eb.values(b)));
    if (gap < 1e-8) {
      ++out.excluded_points;
      continue;
    }
    ++used;
    const Eigen::Vector4cd c = eb.vectors.adjoint() * initial;
    for (int l = 0; l < 4; ++l) {
      const double right = eb.vectors.col(l).head<2>().squaredNorm();
      const double left = eb.vectors.col(l).tail<2>().squaredNorm();
      sum_left += std::norm(c(l)) * left;
      sum_left_right += std::norm(c(l)) * left * right;
    }
  }
  if (used == 0) throw numeric_error("quadrature", "every grid point is degenerate");
  // (1/pi) int dk f = 2 <f>_k over [-pi, pi].
  out.c1 = 1.0 - 2.0 * sum_left / used;
  out.c2 = 1.0 - 4.0 * sum_left_right / used;
  return out;
}

double simulated_variance(double phi, int t, const Spinor& initial) {
  SpinorField field(initial);
  for (int step = 0; step < t; ++step) field = abelian_step(field, phi);
  return field.variance();
}

VarianceSurface variance_surface(const std::vector<double>& phi_grid, const std::vector<int>& t_grid,
                                 const Spinor& initial, bool with_analytic, unsigned threads) {
  if (phi_grid.empty() || t_grid.empty()) throw domain_error("invalid-configuration", "variance grids must be nonempty");
  for (int t : t_grid)
    if (t < 0) throw domain_error("invalid-configuration", "step counts must be non-negative");
  AbelianConfig{0.0, 0, initial}.validate();

  VarianceSurface out{phi_grid, t_grid, {}, std::nullopt};
  out.simulated.assign(t_grid.size(), std::vector<double>(phi_grid.size(), 0.0));
  if (with_analytic) out.analytic.emplace(t_grid.size(), std::vector<double>(phi_grid.size(), 0.0));
  const int t_max = *std::max_element(t_grid.begin(), t_grid.end());

  parallel_for(phi_grid.size(), threads, [&](unsigned, std::size_t p) {
    const double phi = phi_grid[p];
    SpinorField field(initial);
    std::vector<double> by_step(t_max + 1, 0.0);
    for (int step = 1; step <= t_max; ++step) {
      field = abelian_step(field, phi);
      by_step[step] = field.variance();
    }
    for (std::size_t ti = 0; ti < t_grid.size(); ++ti) out.simulated[ti][p] = by_step[t_grid[ti]];
    if (with_analytic) {
      const double slope = asymptotic_coefficients(phi, initial).variance_slope();
      for (std::size_t ti = 0; ti < t_grid.size(); ++ti)
        (*out.analytic)[ti][p] = slope * static_cast<double>(t_grid[ti]) * t_grid[ti];
    }
  });
  return out;
}

double product_walk_variance(int quarter_turns, int t, const Eigen::Vector2cd& x_initial) {
  if (t < 0) throw domain_error("invalid-configuration", "step count must be non-negative");
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd coin;
  coin << r, r * 1i, r * 1i, r;
  if (((quarter_turns % 2) + 2) % 2 == 1) coin.row(1) *= -1.0;
  const std::size_t sites = static_cast<std::size_t>(2 * t + 1);
  std::vector<Eigen::Vector2cd> state(sites, Eigen::Vector2cd::Zero()), next = state;
  state[static_cast<std::size_t>(t)] = x_initial;
  for (int step = 0; step < t; ++step) {
    for (auto& v : next) v.setZero();
    for (std::size_t j = 0; j < sites; ++j) {
      const Eigen::Vector2cd tossed = coin * state[j];
      if (j + 1 < sites) next[j + 1](0) += tossed(0);
      if (j > 0) next[j - 1](1) += tossed(1);
    }
    std::swap(state, next);
  }
  double m1 = 0.0, m2 = 0.0;
  for (std::size_t j = 0; j < sites; ++j) {
    const double s = static_cast<double>(j) - t;
    const double p = state[j].squaredNorm();
    m1 += s * p;
    m2 += s * s * p;
  }
  return m2 - m1 * m1;
}

double mean_spin_entanglement(const SpinorField& field) {
  double acc = 0.0, total = 0.0;
  for (int s = -field.extent(); s <= field.extent(); ++s) {
    const Spinor& v = field.at(s);
    const double p = v.squaredNorm();
    if (p < 1e-300) continue;
    Eigen::Matrix2cd m;
    m << v(0), v(1), v(2), v(3);
    const Eigen::Vector2d sv = Eigen::JacobiSVD<Eigen::Matrix2cd>(m).singularValues();
    acc += sv(1) * sv(1);
    total += p;
  }
  return total > 0.0 ? acc / total : 0.0;
}

}  // namespace anyonwalk
