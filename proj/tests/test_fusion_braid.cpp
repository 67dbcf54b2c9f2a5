#include <algorithm>
#include <cmath>
#include <complex>

#include <doctest.h>

#include "anyonwalk/fusion_braid.hpp"
#include "anyonwalk/temperley_lieb.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace anyonwalk;
using cd = std::complex<double>;

namespace {

Eigen::MatrixXcd dense(const SparseMatrix& m) { return Eigen::MatrixXcd(m); }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

TEST_CASE("level 2 fusion spaces hold n/2 - 1 qubits") {
  const AnyonModel m = build_su2k(2);
  const FusionSpace s4 = enumerate_fusion_basis(m, 4);
  REQUIRE(s4.dim() == 2);
  CHECK(s4.basis()[0].outcomes == std::vector<int>{0, 1});
  CHECK(s4.basis()[1].outcomes == std::vector<int>{2, 1});
  CHECK(enumerate_fusion_basis(m, 6).dim() == 4);
  for (int n = 4; n <= 14; n += 2) CHECK(enumerate_fusion_basis(m, n).dim() == (std::size_t{1} << (n / 2 - 1)));
}

TEST_CASE("level 2 paths carry sigma at every even position") {
  const FusionSpace s = enumerate_fusion_basis(build_su2k(2), 10);
  for (const auto& p : s.basis())
    for (std::size_t j = 1; j < p.outcomes.size(); j += 2) CHECK(p.outcomes[j] == 1);
}

TEST_CASE("22 anyons at high level give the Catalan number of paths") {
  const std::uint64_t brute = oracle::brute_force_path_count(22, 11);
  CHECK(brute == 58786);
  CHECK(enumerate_fusion_basis(build_su2k(11), 22).dim() == 58786);
  CHECK(enumerate_fusion_basis(build_su2k(40), 22).dim() == 58786);
}

TEST_CASE("enumeration, transfer count and brute force agree") {
  for (int k = 2; k <= 7; ++k)
    for (int n = 4; n <= 14; n += 2) {
      const std::size_t dim = enumerate_fusion_basis(build_su2k(k), n).dim();
      CHECK(dim == fusion_dimension(build_su2k(k), n));
      CHECK(dim == oracle::brute_force_path_count(n, k));
    }
}

TEST_CASE("basis is lexicographic and index_of inverts it") {
  const FusionSpace s = enumerate_fusion_basis(build_su2k(4), 10);
  CHECK(std::is_sorted(s.basis().begin(), s.basis().end()));
  CHECK(std::adjacent_find(s.basis().begin(), s.basis().end()) == s.basis().end());
  for (std::size_t i = 0; i < s.dim(); ++i) CHECK(s.index_of(s.basis()[i]) == i);
  CHECK(s.index_of(FusionPath{{5, 5}}) == s.dim());
}

TEST_CASE("invalid anyon counts") {
  const AnyonModel m = build_su2k(3);
  CHECK_ERROR_CODE(enumerate_fusion_basis(m, 5), "invalid-configuration");
  CHECK_ERROR_CODE(enumerate_fusion_basis(m, 2), "invalid-configuration");
  CHECK_ERROR_CODE(su22_qubit_generator(7, 1), "invalid-configuration");
}

TEST_CASE("dimension is nondecreasing in the level and saturates") {
  for (int n = 4; n <= 14; n += 2) {
    std::size_t prev = 0;
    for (int k = 2; k <= n / 2 + 3; ++k) {
      const std::size_t dim = fusion_dimension(build_su2k(k), n);
      CHECK(dim >= prev);
      if (k >= n / 2) CHECK(dim == catalan(n / 2));
      prev = dim;
    }
  }
}

TEST_CASE("vacuum pair state") {
  const FusionSpace s = enumerate_fusion_basis(build_su2k(2), 4);
  const Eigen::VectorXcd v = vacuum_pair_state(s);
  CHECK(v.norm() == doctest::Approx(1.0));
  CHECK(v(static_cast<Eigen::Index>(s.index_of(FusionPath{{0, 1}}))) == cd(1.0));
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (s.basis()[i].outcomes[0] == 2) CHECK(v(static_cast<Eigen::Index>(i)) == cd(0.0));
  const FusionSpace big = enumerate_fusion_basis(build_su2k(5), 10);
  const Eigen::VectorXcd w = vacuum_pair_state(big);
  const auto idx = big.index_of(FusionPath{{0, 1, 0, 1, 0, 1, 0, 1}});
  CHECK(w(static_cast<Eigen::Index>(idx)) == cd(1.0));
  CHECK(w.norm() == doctest::Approx(1.0));
}

TEST_CASE("first TL generator at level 2 projects onto the vacuum channel") {
  const AnyonModel m = build_su2k(2);
  const FusionSpace s = enumerate_fusion_basis(m, 4);
  const Eigen::MatrixXcd e1 = dense(tl_generator(s, 1));
  Eigen::Matrix2cd expected = Eigen::Matrix2cd::Zero();
  expected(0, 0) = m.quantum_dimension();
  CHECK((e1 - expected).norm() < 1e-14);
}

TEST_CASE("TL relations in the path representation") {
  for (int k : {2, 3, 5}) {
    const AnyonModel m = build_su2k(k);
    const double d = m.quantum_dimension();
    for (int n = 4; n <= 10; n += 2) {
      const FusionSpace s = enumerate_fusion_basis(m, n);
      std::vector<Eigen::MatrixXcd> e(static_cast<std::size_t>(n));
      for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i)] = dense(tl_generator(s, i));
      for (int i = 1; i < n; ++i) {
        const auto& ei = e[static_cast<std::size_t>(i)];
        CHECK((ei - ei.adjoint()).norm() < 1e-10);
        CHECK((ei * ei - d * ei).norm() < 1e-10);
        if (i + 1 < n) {
          const auto& ej = e[static_cast<std::size_t>(i + 1)];
          CHECK((ei * ej * ei - ei).norm() < 1e-10);
          CHECK((ej * ei * ej - ej).norm() < 1e-10);
        }
        for (int j = i + 2; j < n; ++j) {
          const auto& ej = e[static_cast<std::size_t>(j)];
          CHECK((ei * ej - ej * ei).norm() < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("TL generator spectrum and trace") {
  const AnyonModel m = build_su2k(3);
  const FusionSpace s = enumerate_fusion_basis(m, 6);
  const double d = m.quantum_dimension();
  cd trace0 = dense(tl_generator(s, 1)).trace();
  for (int i = 1; i < 6; ++i) {
    const Eigen::MatrixXcd e = dense(tl_generator(s, i));
    CHECK(std::abs(e.trace() - trace0) < 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(e);
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
      const double ev = es.eigenvalues()(j);
      CHECK((std::abs(ev) < 1e-12 || std::abs(ev - d) < 1e-12));
    }
  }
  CHECK_ERROR_CODE(tl_generator(s, 0), "index-out-of-range");
  CHECK_ERROR_CODE(tl_generator(s, 6), "index-out-of-range");
}

TEST_CASE("braid generator spectrum at level 2") {
  const AnyonModel m = build_su2k(2);
  const FusionSpace s = enumerate_fusion_basis(m, 4);
  const BraidGeneratorMatrix b = braid_generator(s, 1);
  CHECK(b.index == 1);
  const Eigen::MatrixXcd bd = dense(b.matrix);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(bd);
  const cd a = m.kauffman_a();
  const cd l0 = es.eigenvalues()(0), l1 = es.eigenvalues()(1);
  const cd x = -std::pow(a, -3);
  CHECK(((std::abs(l0 - a) < 1e-12 && std::abs(l1 - x) < 1e-12) || (std::abs(l1 - a) < 1e-12 && std::abs(l0 - x) < 1e-12)));
  // Ratio of the psi-channel eigenvalue to the vacuum one is i, as for R.
  CHECK(std::abs(x / a - cd(0, 1)) < 1e-12);
  CHECK(std::abs(x / a - r_phase(m, 1, 1, 2) / r_phase(m, 1, 1, 0)) < 1e-12);
}

TEST_CASE("braid generators are unitary, local and satisfy the braid relations") {
  for (int k : {2, 3, 5}) {
    const AnyonModel m = build_su2k(k);
    for (int n = 4; n <= 10; n += 2) {
      const FusionSpace s = enumerate_fusion_basis(m, n);
      std::vector<Eigen::MatrixXcd> b(static_cast<std::size_t>(n));
      for (int i = 1; i < n; ++i) {
        const SparseMatrix sp = braid_generator(s, i).matrix;
        const SparseMatrix col = SparseMatrix(sp.transpose());
        for (Eigen::Index c = 0; c < col.outerSize(); ++c) {
          int nnz = 0;
          for (SparseMatrix::InnerIterator it(col, c); it; ++it) ++nnz;
          CHECK(nnz <= 2);
        }
        b[static_cast<std::size_t>(i)] = dense(sp);
      }
      const auto id = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(s.dim()), static_cast<Eigen::Index>(s.dim()));
      for (int i = 1; i < n; ++i) {
        const auto& bi = b[static_cast<std::size_t>(i)];
        CHECK((bi * bi.adjoint() - id).norm() < 1e-12);
        if (i + 1 < n) {
          const auto& bj = b[static_cast<std::size_t>(i + 1)];
          CHECK((bi * bj * bi - bj * bi * bj).norm() < 1e-10);
        }
        for (int j = i + 2; j < n; ++j) {
          const auto& bj = b[static_cast<std::size_t>(j)];
          CHECK((bi * bj - bj * bi).norm() < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("braid generators couple only paths differing at one outcome") {
  const FusionSpace s = enumerate_fusion_basis(build_su2k(4), 8);
  for (int i = 2; i < 7; ++i) {
    const SparseMatrix b = braid_generator(s, i).matrix;
    for (Eigen::Index r = 0; r < b.outerSize(); ++r)
      for (SparseMatrix::InnerIterator it(b, r); it; ++it) {
        const auto& p = s.basis()[static_cast<std::size_t>(it.row())].outcomes;
        const auto& q = s.basis()[static_cast<std::size_t>(it.col())].outcomes;
        for (std::size_t j = 0; j < p.size(); ++j)
          if (static_cast<int>(j) != i - 2) CHECK(p[j] == q[j]);
      }
  }
}

TEST_CASE("qubit generators for 4 and 6 anyons") {
  const double r = 1.0 / std::sqrt(2.0);
  const cd w = std::polar(1.0, std::numbers::pi / 4), wc = std::conj(w);
  Eigen::Matrix2cd B;
  B << r * w, r * wc, r * wc, r * w;
  CHECK((su22_qubit_generator(4, 2) - Eigen::MatrixXcd(B)).norm() < 1e-15);
  Eigen::Matrix2cd R = Eigen::Matrix2cd::Zero();
  R(0, 0) = 1.0;
  R(1, 1) = cd(0, 1);
  CHECK((su22_qubit_generator(4, 1) - Eigen::MatrixXcd(R)).norm() < 1e-15);
  CHECK((su22_qubit_generator(4, 3) - Eigen::MatrixXcd(R)).norm() < 1e-15);
  Eigen::Matrix4cd A = Eigen::Matrix4cd::Zero();
  A(0, 0) = 1.0;
  A(1, 1) = cd(0, 1);
  A(2, 2) = cd(0, 1);
  A(3, 3) = 1.0;
  CHECK((su22_qubit_generator(6, 3) - Eigen::MatrixXcd(A)).norm() < 1e-15);
  const Eigen::MatrixXcd I2 = Eigen::MatrixXcd::Identity(2, 2);
  CHECK((su22_qubit_generator(6, 2) - kron(B, I2)).norm() < 1e-15);
  CHECK((su22_qubit_generator(6, 4) - kron(I2, B)).norm() < 1e-15);
  CHECK_ERROR_CODE(su22_qubit_generator(6, 6), "index-out-of-range");
}

TEST_CASE("qubit generators satisfy the braid relations") {
  for (int n : {4, 6, 8, 10}) {
    std::vector<Eigen::MatrixXcd> b(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) b[static_cast<std::size_t>(i)] = su22_qubit_generator(n, i);
    const auto id = Eigen::MatrixXcd::Identity(b[1].rows(), b[1].cols());
    for (int i = 1; i < n; ++i) {
      const auto& bi = b[static_cast<std::size_t>(i)];
      CHECK((bi * bi.adjoint() - id).norm() < 1e-12);
      if (i + 1 < n) {
        const auto& bj = b[static_cast<std::size_t>(i + 1)];
        CHECK((bi * bj * bi - bj * bi * bj).norm() < 1e-10);
      }
      for (int j = i + 2; j < n; ++j) CHECK((bi * b[static_cast<std::size_t>(j)] - b[static_cast<std::size_t>(j)] * bi).norm() < 1e-10);
    }
  }
}

TEST_CASE("qubit and path generators share spectra up to a phase") {
  const AnyonModel m = build_su2k(2);
  for (int n : {4, 6, 8}) {
    const FusionSpace s = enumerate_fusion_basis(m, n);
    for (int i = 1; i < n; ++i) {
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> tl(dense(braid_generator(s, i).matrix));
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> qb(su22_qubit_generator(n, i));
      // Both spectra are {x, x * ratio}; compare the ratio of distinct values.
      auto ratio = [](const Eigen::VectorXcd& ev) {
        for (Eigen::Index j = 1; j < ev.size(); ++j)
          if (std::abs(ev(j) - ev(0)) > 1e-8) return ev(j) / ev(0);
        return cd(1.0);
      };
      const cd rt = ratio(tl.eigenvalues()), rq = ratio(qb.eigenvalues());
      CHECK((std::abs(rt - rq) < 1e-10 || std::abs(rt - 1.0 / rq) < 1e-10 || std::abs(rt - std::conj(rq)) < 1e-10));
    }
  }
}
