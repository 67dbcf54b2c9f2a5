#include "anyonwalk/anyon_models.hpp"

#include <cmath>
#include <numbers>

#include "anyonwalk/errors.hpp"

namespace anyonwalk {

namespace {

std::string spin_name(int twice_j) {
  if (twice_j % 2 == 0) return std::to_string(twice_j / 2);
  return std::to_string(twice_j) + "/2";
}

void check_label(const AnyonModel& model, int label) {
  if (label < 0 || label >= model.label_count())
    throw domain_error("fusion", "label id " + std::to_string(label) + " not in " + model.tag());
}

void require_explicit(const AnyonModel& model) {
  if (!model.has_explicit_data())
    throw domain_error("unsupported-model",
                       "explicit F/R data exists only for SU(2)_2, not " + model.tag());
}

}  // namespace

double PhaseAngle::radians() const {
  return std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
}

std::complex<double> PhaseAngle::value() const { return std::polar(1.0, radians()); }

int AnyonModel::fusion(int a, int b, int c) const {
  const int L = label_count();
  if (a < 0 || b < 0 || c < 0 || a >= L || b >= L || c >= L) return 0;
  return fusion_[(static_cast<std::size_t>(a) * L + b) * L + c];
}

std::vector<int> AnyonModel::channels(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < label_count(); ++c)
    if (fusion(a, b, c)) out.push_back(c);
  return out;
}

double AnyonModel::loop_weight(int label) const {
  const double q = std::numbers::pi / (level_ + 2);
  return std::sin(q * (label + 1)) / std::sin(q);
}

std::string AnyonModel::tag() const { return "su2k:" + std::to_string(level_); }

AnyonModel build_su2k(int k) {
  if (k < 2) throw domain_error("invalid-level", "SU(2)_k requires k >= 2, got " + std::to_string(k));
  AnyonModel m;
  m.level_ = k;
  m.d_ = 2.0 * std::cos(std::numbers::pi / (k + 2));
  m.a_phase_ = PhaseAngle{k + 3, 2 * (k + 2)};

  const int L = k + 1;
  m.labels_.reserve(L);
  for (int id = 0; id < L; ++id) m.labels_.push_back({id, spin_name(id)});
  if (k == 2) {
    m.labels_[0].name = "1";
    m.labels_[1].name = "σ";
    m.labels_[2].name = "ψ";
  }

  // j1 x j2 = |j1-j2|, ..., min(j1+j2, k-j1-j2) in integer steps (twice-spin units step 2).
  m.fusion_.assign(static_cast<std::size_t>(L) * L * L, 0);
  for (int a = 0; a < L; ++a)
    for (int b = 0; b < L; ++b) {
      const int hi = std::min(a + b, 2 * k - a - b);
      for (int c = std::abs(a - b); c <= hi; c += 2)
        m.fusion_[(static_cast<std::size_t>(a) * L + b) * L + c] = 1;
    }
  return m;
}

Eigen::MatrixXcd f_matrix(const AnyonModel& model, int a, int b, int c, int d) {
  require_explicit(model);
  for (int x : {a, b, c, d}) check_label(model, x);

  std::vector<int> left, right;
  for (int x : model.channels(a, b))
    if (model.fusion(x, c, d)) left.push_back(x);
  for (int y : model.channels(b, c))
    if (model.fusion(a, y, d)) right.push_back(y);
  if (left.empty() || left.size() != right.size())
    throw domain_error("fusion", "inadmissible F move labels");

  constexpr int s = AnyonModel::sigma();
  constexpr int p = 2;  // psi
  if (a == s && b == s && c == s && d == s) {
    const double r = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXcd f(2, 2);
    f << r, r, r, -r;
    return f;
  }
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Identity(1, 1);
  if ((a == s && b == p && c == s && d == p) || (a == p && b == s && c == p && d == s)) f(0, 0) = -1.0;
  return f;
}

std::complex<double> r_phase(const AnyonModel& model, int a, int b, int c) {
  require_explicit(model);
  for (int x : {a, b, c}) check_label(model, x);
  if (!model.fusion(a, b, c)) throw domain_error("fusion", "inadmissible braiding channel");

  constexpr int s = AnyonModel::sigma();
  constexpr int p = 2;
  using namespace std::complex_literals;
  if (a == s && b == s) return c == AnyonModel::vacuum() ? 1.0 + 0i : 1i;
  if (a == p && b == p) return -1.0;
  if ((a == s && b == p) || (a == p && b == s)) return -1i;
  return 1.0;
}

std::string DoubleIrrepParams::tag() const { return "dsn:" + std::to_string(N); }

DoubleIrrepParams build_double_irrep(int N) {
  if (N < 5) throw domain_error("invalid-order", "D(S_N) (2,1) irrep requires N >= 5, got " + std::to_string(N));
  DoubleIrrepParams p;
  p.N = N;
  p.dim = Rational(N * (N - 1), 2);
  p.gchar = 1;
  p.z = p.gchar / p.dim;
  p.zbar = p.z;
  return p;
}

ModelSpec parse_model_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw usage_error("model must be su2k:<k> or dsn:<N>, got '" + text + "'");
  const std::string family = text.substr(0, colon);
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw usage_error("model parameter must be an integer in '" + text + "'");
  }
  if (family == "su2k") return build_su2k(value);
  if (family == "dsn") return build_double_irrep(value);
  throw usage_error("unknown model family '" + family + "'");
}

}  // namespace anyonwalk
