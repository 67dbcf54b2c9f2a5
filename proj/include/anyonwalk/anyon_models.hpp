#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace anyonwalk {

using Rational = boost::multiprecision::cpp_rational;

struct AnyonLabel {
  int id = 0;
  std::string name;
};

/// A unit phase stored as a rational multiple of pi, e^{i pi num/den}.
struct PhaseAngle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double radians() const;
  std::complex<double> value() const;
};

/// Fusion data and braiding parameters of an anyon model whose mobile and
/// static anyons are all of type sigma. Immutable once built.
///
/// Only SU(2)_k is constructed here; labels are the spins j = 0, 1/2, ..., k/2
/// with id 2j, so id 0 is the vacuum and id 1 is sigma.
class AnyonModel {
 public:
  int level() const { return level_; }
  const std::vector<AnyonLabel>& labels() const { return labels_; }
  int label_count() const { return static_cast<int>(labels_.size()); }
  static constexpr int vacuum() { return 0; }
  static constexpr int sigma() { return 1; }

  /// N_{ab}^c, 0 or 1.
  int fusion(int a, int b, int c) const;
  std::vector<int> channels(int a, int b) const;

  /// Quantum dimension of sigma, d = 2cos(pi/(k+2)).
  double quantum_dimension() const { return d_; }
  /// Kauffman parameter A = e^{i pi (k+3)/(2(k+2))}.
  const PhaseAngle& kauffman_phase() const { return a_phase_; }
  std::complex<double> kauffman_a() const { return a_phase_.value(); }

  /// Loop weight of a label: the quantum dimension [2j+1]_q of spin j.
  double loop_weight(int label) const;

  /// True when F and R matrices are tabulated (SU(2)_2 only).
  bool has_explicit_data() const { return level_ == 2; }

  /// CLI-style tag, "su2k:<k>".
  std::string tag() const;

 private:
  friend AnyonModel build_su2k(int k);

  int level_ = 0;
  double d_ = 0.0;
  PhaseAngle a_phase_;
  std::vector<AnyonLabel> labels_;
  std::vector<std::uint8_t> fusion_;  // dense L*L*L multiplicity table
};

/// SU(2)_k for k >= 2; throws "invalid-level" otherwise.
AnyonModel build_su2k(int k);

/// F move (F_{abc}^d)_x^y. Rows index x in a*b (with x*c -> d), columns index
/// y in b*c (with a*y -> d), both in ascending label order. SU(2)_2 only.
Eigen::MatrixXcd f_matrix(const AnyonModel& model, int a, int b, int c, int d);

/// Braiding eigenvalue R_{ab}^c. SU(2)_2 only.
std::complex<double> r_phase(const AnyonModel& model, int a, int b, int c);

/// Parameters of the (2,1) irrep of the quantum double D(S_N).
struct DoubleIrrepParams {
  int N = 5;
  Rational dim;    // d[2,1] = N(N-1)/2
  Rational gchar;  // <g_2>_1 = 1
  Rational z;      // gchar / dim
  Rational zbar;

  std::string tag() const;
};

/// Throws "invalid-order" for N < 5.
DoubleIrrepParams build_double_irrep(int N);

using ModelSpec = std::variant<AnyonModel, DoubleIrrepParams>;

/// Parses "su2k:<k>" or "dsn:<N>".
ModelSpec parse_model_spec(const std::string& text);

}  // namespace anyonwalk
