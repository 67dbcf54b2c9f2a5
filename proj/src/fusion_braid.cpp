#include "anyonwalk/fusion_braid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "anyonwalk/errors.hpp"

namespace anyonwalk {

namespace {

void check_generator_index(int n, int i) {
  if (i < 1 || i > n - 1)
    throw domain_error("index-out-of-range",
                       "generator index " + std::to_string(i) + " outside [1, " + std::to_string(n - 1) + "]");
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

}  // namespace

FusionSpace::FusionSpace(AnyonModel model, int n, std::vector<FusionPath> basis)
    : model_(std::move(model)), n_(n), basis_(std::move(basis)) {}

std::size_t FusionSpace::index_of(const FusionPath& path) const {
  const auto it = std::lower_bound(basis_.begin(), basis_.end(), path);
  if (it == basis_.end() || *it != path) return basis_.size();
  return static_cast<std::size_t>(it - basis_.begin());
}

int FusionSpace::height(std::size_t basis_index, int m) const {
  if (m == 0 || m == n_) return AnyonModel::vacuum();
  if (m == 1) return AnyonModel::sigma();
  return basis_[basis_index].outcomes[m - 2];
}

FusionSpace enumerate_fusion_basis(const AnyonModel& model, int n) {
  if (n < 4 || n % 2 != 0)
    throw domain_error("invalid-configuration", "anyon count must be even and >= 4, got " + std::to_string(n));
  const int L = model.label_count();
  constexpr int s = AnyonModel::sigma();
  const int slots = n - 2;

  // reach[m][a]: a_m = a can still be completed to total charge vacuum.
  std::vector<std::vector<char>> reach(slots + 1, std::vector<char>(L, 0));
  for (int a = 0; a < L; ++a) reach[slots][a] = static_cast<char>(model.fusion(a, s, AnyonModel::vacuum()));
  for (int m = slots - 1; m >= 1; --m)
    for (int a = 0; a < L; ++a)
      for (int b = 0; b < L && !reach[m][a]; ++b)
        if (model.fusion(a, s, b) && reach[m + 1][b]) reach[m][a] = 1;

  std::vector<FusionPath> basis;
  std::vector<int> current;
  current.reserve(slots);
  auto recurse = [&](auto&& self, int prev) -> void {
    const int m = static_cast<int>(current.size()) + 1;
    if (m > slots) {
      basis.push_back({current});
      return;
    }
    for (int a = 0; a < L; ++a) {
      if (!model.fusion(prev, s, a) || !reach[m][a]) continue;
      current.push_back(a);
      self(self, a);
      current.pop_back();
    }
  };
  recurse(recurse, s);

  if (basis.empty())
    throw domain_error("empty-space", "no vacuum-charge fusion path for n = " + std::to_string(n) + " in " + model.tag());
  return FusionSpace(model, n, std::move(basis));
}

std::size_t fusion_dimension(const AnyonModel& model, int n) {
  const int L = model.label_count();
  constexpr int s = AnyonModel::sigma();
  // count[c] = number of ways the first j anyons fuse to c.
  std::vector<std::size_t> count(L, 0);
  count[s] = 1;
  for (int j = 2; j <= n; ++j) {
    std::vector<std::size_t> next(L, 0);
    for (int a = 0; a < L; ++a)
      if (count[a])
        for (int c = 0; c < L; ++c)
          if (model.fusion(a, s, c)) next[c] += count[a];
    count.swap(next);
  }
  return count[AnyonModel::vacuum()];
}

Eigen::VectorXcd vacuum_pair_state(const FusionSpace& space) {
  FusionPath path;
  for (int m = 1; m <= space.anyons() - 2; ++m)
    path.outcomes.push_back(m % 2 == 1 ? AnyonModel::vacuum() : AnyonModel::sigma());
  const std::size_t idx = space.index_of(path);
  if (idx == space.dim()) throw domain_error("fusion", "vacuum-pair path not admissible in " + space.model().tag());
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dim()));
  v(static_cast<Eigen::Index>(idx)) = 1.0;
  return v;
}

SparseMatrix tl_generator(const FusionSpace& space, int i) {
  const int n = space.anyons();
  check_generator_index(n, i);
  const AnyonModel& model = space.model();
  constexpr int s = AnyonModel::sigma();
  const auto dim = static_cast<Eigen::Index>(space.dim());

  std::vector<Eigen::Triplet<std::complex<double>>> entries;
  for (std::size_t col = 0; col < space.dim(); ++col) {
    const int below = space.height(col, i - 1);
    const int above = space.height(col, i + 1);
    if (below != above) continue;
    const int mid = space.height(col, i);
    for (int h = 0; h < model.label_count(); ++h) {
      if (!model.fusion(below, s, h) || !model.fusion(h, s, above)) continue;
      std::size_t row = col;
      if (h != mid) {
        // Only interior heights are free; h_1 and h_{n-1} are pinned to sigma.
        FusionPath moved = space.basis()[col];
        moved.outcomes[i - 2] = h;
        row = space.index_of(moved);
        if (row == space.dim()) continue;
      }
      const double w = std::sqrt(model.loop_weight(mid) * model.loop_weight(h)) / model.loop_weight(below);
      entries.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col), w);
    }
  }
  SparseMatrix e(dim, dim);
  e.setFromTriplets(entries.begin(), entries.end());
  return e;
}

BraidGeneratorMatrix braid_generator(const FusionSpace& space, int i) {
  const std::complex<double> a = space.model().kauffman_a();
  SparseMatrix e = tl_generator(space, i);
  SparseMatrix id(e.rows(), e.cols());
  id.setIdentity();
  SparseMatrix b = a * id + (1.0 / a) * e;
  b.prune(std::complex<double>(0.0), 0.0);
  return {i, std::move(b)};
}

Eigen::MatrixXcd su22_qubit_generator(int n, int i) {
  if (n < 4 || n % 2 != 0)
    throw domain_error("invalid-configuration", "anyon count must be even and >= 4, got " + std::to_string(n));
  check_generator_index(n, i);
  using namespace std::complex_literals;
  const int m = n / 2 - 1;

  Eigen::MatrixXcd r(2, 2);
  r << 1.0, 0.0, 0.0, 1i;
  const std::complex<double> up = std::polar(1.0 / std::sqrt(2.0), std::numbers::pi / 4);
  const std::complex<double> dn = std::conj(up);
  Eigen::MatrixXcd b(2, 2);
  b << up, dn, dn, up;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
  a.diagonal() << 1.0, 1i, 1i, 1.0;

  // Qubit q (1-based) and the local block starting there.
  int first = 0;
  Eigen::MatrixXcd block;
  if (i == 1) {
    first = 1, block = r;
  } else if (i == n - 1) {
    first = m, block = r;
  } else if (i % 2 == 0) {
    first = i / 2, block = b;
  } else {
    first = (i - 1) / 2, block = a;
  }
  const int span = static_cast<int>(block.rows()) == 4 ? 2 : 1;
  const Eigen::Index before = Eigen::Index{1} << (first - 1);
  const Eigen::Index after = Eigen::Index{1} << (m - first - span + 1);
  return kron(kron(Eigen::MatrixXcd::Identity(before, before), block), Eigen::MatrixXcd::Identity(after, after));
}

}  // namespace anyonwalk
