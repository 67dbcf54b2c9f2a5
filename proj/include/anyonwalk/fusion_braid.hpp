#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "anyonwalk/anyon_models.hpp"

namespace anyonwalk {

using SparseMatrix = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

/// Intermediate fusion outcomes (a_1, ..., a_{n-2}) of n sigma anyons, where
/// a_m is the total charge of the first m+1 anyons.
struct FusionPath {
  std::vector<int> outcomes;

  auto operator<=>(const FusionPath&) const = default;
};

/// Vacuum-charge fusion space of n sigma anyons, basis in lexicographic order.
class FusionSpace {
 public:
  FusionSpace(AnyonModel model, int n, std::vector<FusionPath> basis);

  int anyons() const { return n_; }
  const AnyonModel& model() const { return model_; }
  const std::vector<FusionPath>& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }

  /// Position of a path in the basis, or dim() if absent.
  std::size_t index_of(const FusionPath& path) const;

  /// Charge line height h_m for m in [0, n]: h_0 = h_n = vacuum, h_1 = sigma,
  /// h_m = a_{m-1} otherwise.
  int height(std::size_t basis_index, int m) const;

 private:
  AnyonModel model_;
  int n_;
  std::vector<FusionPath> basis_;
};

/// Throws "invalid-configuration" for odd n or n < 4, "empty-space" when no
/// vacuum-charge path exists.
FusionSpace enumerate_fusion_basis(const AnyonModel& model, int n);

/// sum over a_1..a_{n-2} of N_{ss}^{a_1} N_{a_1 s}^{a_2} ... N_{a_{n-2} s}^{1},
/// computed by a transfer product independent of the enumeration.
std::size_t fusion_dimension(const AnyonModel& model, int n);

/// Unit vector on the nearest-neighbour vacuum-pair path (1, s, 1, s, ...).
Eigen::VectorXcd vacuum_pair_state(const FusionSpace& space);

/// Temperley-Lieb generator E_i (1 <= i <= n-1) in the path representation.
SparseMatrix tl_generator(const FusionSpace& space, int i);

struct BraidGeneratorMatrix {
  int index = 0;
  SparseMatrix matrix;
};

/// b_i = A Id + A^{-1} E_i.
BraidGeneratorMatrix braid_generator(const FusionSpace& space, int i);

/// Qubit form of the SU(2)_2 generators on (C^2)^{(n/2-1)}, qubit j holding
/// a_{2j-1} (|0> = vacuum, |1> = psi), qubit 1 most significant.
Eigen::MatrixXcd su22_qubit_generator(int n, int i);

}  // namespace anyonwalk
