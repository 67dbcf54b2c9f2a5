#include "anyonwalk/distribution.hpp"

#include <cmath>
#include <map>
#include <span>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/parallel.hpp"

namespace anyonwalk {

double Distribution::total() const { return pairwise_sum(std::span<const double>(probs)); }

double Distribution::mean() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) acc += positions[i] * probs[i];
  return acc;
}

double Distribution::variance() const {
  const double m = mean();
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) acc += (positions[i] - m) * (positions[i] - m) * probs[i];
  return acc;
}

double Distribution::at(int s) const {
  for (std::size_t i = 0; i < positions.size(); ++i)
    if (positions[i] == s) return probs[i];
  return 0.0;
}

void Distribution::validate() const {
  if (positions.size() != probs.size())
    throw numeric_error("malformed-distribution", "positions and probabilities differ in length");
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (!(probs[i] >= -1e-12))
      throw numeric_error("negative-probability",
                          "probability " + std::to_string(probs[i]) + " at s=" + std::to_string(positions[i]));
  const double sum = total();
  if (!(std::abs(sum - 1.0) < 1e-9))
    throw numeric_error("normalization", "probabilities sum to " + std::to_string(sum));
}

double distance(const Distribution& p, const Distribution& q) {
  std::map<int, double> diff;
  for (std::size_t i = 0; i < p.positions.size(); ++i) diff[p.positions[i]] += p.probs[i];
  for (std::size_t i = 0; i < q.positions.size(); ++i) diff[q.positions[i]] -= q.probs[i];
  double acc = 0.0;
  for (const auto& [s, v] : diff) acc += v * v;
  return std::sqrt(acc);
}

Distribution from_dense(const std::vector<double>& by_offset, int t, DistributionMeta meta) {
  Distribution out;
  out.meta = std::move(meta);
  for (int s = -t; s <= t; s += 2) {
    out.positions.push_back(s);
    out.probs.push_back(by_offset[static_cast<std::size_t>(s + t)]);
  }
  return out;
}

}  // namespace anyonwalk
