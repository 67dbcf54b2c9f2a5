#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "anyonwalk/anyon_models.hpp"
#include "anyonwalk/braid_word.hpp"
#include "anyonwalk/distribution.hpp"

namespace anyonwalk {

/// Site layout of the walker among n static anyons. The walker starts at
/// site s0 and a step from site p to the right braids strands p, p+1.
struct WalkGeometry {
  int n = 4;
  int s0 = 2;

  /// n = 2t + 2 when n is 0; s0 = n/2. Validated for t steps.
  static WalkGeometry for_steps(int t, int n = 0);

  /// Throws "invalid-configuration" for odd n and "boundary" when a t-step
  /// walk could leave the strand range.
  void validate(int t) const;
};

/// Coin outcomes a_1..a_t, 0 = left, 1 = right.
using PathVector = std::vector<int>;

/// Coin operator with the initial coin state.
struct CoinSpec {
  std::string name;  // "H", "U" or "custom"
  Eigen::Matrix2cd matrix;
  Eigen::Vector2cd initial;

  /// "H|0>" style description for metadata.
  std::string describe() const;
};

/// (1/sqrt2)[[1, 1], [1, -1]].
CoinSpec hadamard_coin(int initial_basis = 0);
/// (1/sqrt2)[[1, i], [i, 1]].
CoinSpec beam_splitter_coin(int initial_basis = 0);
/// "H" or "U"; anything else is a usage error.
CoinSpec coin_by_name(const std::string& name, int initial_basis = 0);

/// Letter (p + a_r - 1, +1) per step, starting from p = s0.
BraidWord path_braid_word(const WalkGeometry& geom, const PathVector& a);

/// Coin amplitude prod_r <a_r|C|a_{r-1}> with the first factor <a_1|C|psi>.
std::complex<double> path_amplitude(const PathVector& a, const Eigen::Matrix2cd& coin, const Eigen::Vector2cd& psi);

/// c_a conj(c_ap) when the final coins agree, else 0.
std::complex<double> coin_trace(const PathVector& a, const PathVector& ap, const Eigen::Matrix2cd& coin,
                                const Eigen::Vector2cd& psi);

/// Sign rule for the Hadamard coin started in |0>: (-1)^z / 2^t where z counts
/// consecutive (1, 1) coin pairs across both paths.
double hadamard_coin_trace(const PathVector& a, const PathVector& ap);

/// P(s) as a sum over path pairs of coin trace times anyon trace.
Distribution distribution_pathsum(const AnyonModel& model, const WalkGeometry& geom, int t, const CoinSpec& coin,
                                  unsigned threads = 0);

enum class Representation {
  TemperleyLieb,  // path representation, any level
  Su22Qubit,      // SU(2)_2 qubit generators
  Trivial,        // every braid acts as the identity
};

/// Bytes the dense engine may allocate for state vectors.
inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;

/// Full state evolution on coin x position x fusion space. Throws
/// "memory-budget" when the state would exceed `memory_budget` bytes.
Distribution distribution_dense(const AnyonModel& model, const WalkGeometry& geom, int t, const CoinSpec& coin,
                                Representation rep = Representation::TemperleyLieb, unsigned threads = 0,
                                std::size_t memory_budget = kDefaultMemoryBudget);

/// Standard two-state coined walk, coin 0 moving left.
Distribution baseline_quantum(int t, const CoinSpec& coin);

/// Binomial distribution with exact "p/q" strings.
Distribution baseline_classical(int t);

enum class Engine { Auto, Dense, Pathsum };

/// Auto picks pathsum for t <= 5 and dense beyond.
Engine resolve_engine(Engine engine, int t);

Distribution su2k_distribution(const AnyonModel& model, const WalkGeometry& geom, int t, const CoinSpec& coin,
                               Engine engine = Engine::Auto, unsigned threads = 0);

struct SweepRow {
  int k = 0;
  double d_q = 0.0;  // distance to the standard quantum walk
  double d_c = 0.0;  // distance to the classical binomial walk

  bool operator==(const SweepRow&) const = default;
};

std::vector<SweepRow> sweep_levels(const std::vector<int>& levels, int t, int n, const CoinSpec& coin,
                                   Engine engine = Engine::Dense, unsigned threads = 0);

}  // namespace anyonwalk
