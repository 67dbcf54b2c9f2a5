#pragma once

#include <string>
#include <vector>

namespace anyonwalk {

struct DistributionMeta {
  std::string engine;   // "dense", "pathsum", "markov", "baseline-quantum", ...
  std::string model;    // "su2k:3", "dsn:5", "none"
  int t = 0;
  int n = 0;            // anyon count, 0 when not applicable
  int s0 = 0;           // start site in the anyon layout
  std::string initial;  // coin and initial-state description

  bool operator==(const DistributionMeta&) const = default;
};

/// Walker position distribution. Positions are relative to the start site.
struct Distribution {
  std::vector<int> positions;
  std::vector<double> probs;
  /// Exact values as "p/q" strings, parallel to probs, or empty.
  std::vector<std::string> exact;
  DistributionMeta meta;

  double total() const;
  double mean() const;
  double variance() const;
  /// Probability at a relative position, 0 outside the support.
  double at(int s) const;

  /// Throws a numeric error when a probability is below -1e-12 or the total
  /// drifts from 1 by 1e-9 or more.
  void validate() const;

  bool operator==(const Distribution&) const = default;
};

/// Euclidean distance over the union of supports (missing sites count as 0).
double distance(const Distribution& p, const Distribution& q);

/// Builds a distribution from a dense array over relative positions
/// [-t, t], dropping sites of the wrong parity.
Distribution from_dense(const std::vector<double>& by_offset, int t, DistributionMeta meta);

}  // namespace anyonwalk
