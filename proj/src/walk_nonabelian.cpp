#include "anyonwalk/walk_nonabelian.hpp"

#include <array>
#include <cmath>
#include <map>
#include <span>
#include <utility>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/fusion_braid.hpp"
#include "anyonwalk/kauffman.hpp"
#include "anyonwalk/parallel.hpp"

namespace anyonwalk {

namespace {

using cd = std::complex<double>;
using namespace std::complex_literals;

Eigen::Vector2cd basis_state(int b) {
  if (b != 0 && b != 1) throw usage_error("initial coin state must be 0 or 1");
  Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
  v(b) = 1.0;
  return v;
}

struct WalkPath {
  PathVector bits;
  int offset = 0;
  cd amplitude;
  BraidWord word;
};

std::vector<WalkPath> enumerate_paths(const WalkGeometry& geom, int t, const CoinSpec& coin) {
  std::vector<WalkPath> out;
  out.reserve(std::size_t{1} << t);
  for (std::size_t code = 0; code < (std::size_t{1} << t); ++code) {
    WalkPath p;
    p.bits.resize(static_cast<std::size_t>(t));
    for (int r = 0; r < t; ++r) {
      p.bits[static_cast<std::size_t>(r)] = static_cast<int>((code >> (t - 1 - r)) & 1u);
      p.offset += 2 * p.bits[static_cast<std::size_t>(r)] - 1;
    }
    p.amplitude = path_amplitude(p.bits, coin.matrix, coin.initial);
    p.word = path_braid_word(geom, p.bits);
    out.push_back(std::move(p));
  }
  return out;
}

DistributionMeta walk_meta(std::string engine, std::string model, const WalkGeometry& geom, int t,
                           const CoinSpec& coin) {
  return DistributionMeta{std::move(engine), std::move(model), t, geom.n, geom.s0, coin.describe()};
}

}  // namespace

WalkGeometry WalkGeometry::for_steps(int t, int n) {
  if (t < 0) throw domain_error("invalid-configuration", "step count must be non-negative");
  WalkGeometry g;
  g.n = n == 0 ? 2 * t + 2 : n;
  g.s0 = g.n / 2;
  g.validate(t);
  return g;
}

void WalkGeometry::validate(int t) const {
  if (n % 2 != 0 || n < 2) throw domain_error("invalid-configuration", "anyon count must be even and at least 2");
  if (t < 0) throw domain_error("invalid-configuration", "step count must be non-negative");
  if (s0 - t < 1 || s0 + t > n)
    throw domain_error("boundary", "a " + std::to_string(t) + "-step walk from site " + std::to_string(s0) +
                                       " leaves the " + std::to_string(n) + "-anyon line; use n >= 2t+2");
}

std::string CoinSpec::describe() const {
  if (initial == basis_state(0)) return name + "|0>";
  if (initial == basis_state(1)) return name + "|1>";
  return name + "|psi>";
}

CoinSpec hadamard_coin(int initial_basis) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << r, r, r, -r;
  return CoinSpec{"H", h, basis_state(initial_basis)};
}

CoinSpec beam_splitter_coin(int initial_basis) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd u;
  u << r, r * 1i, r * 1i, r;
  return CoinSpec{"U", u, basis_state(initial_basis)};
}

CoinSpec coin_by_name(const std::string& name, int initial_basis) {
  if (name == "H") return hadamard_coin(initial_basis);
  if (name == "U") return beam_splitter_coin(initial_basis);
  throw usage_error("unknown coin '" + name + "' (expected H or U)");
}

BraidWord path_braid_word(const WalkGeometry& geom, const PathVector& a) {
  std::vector<BraidLetter> letters;
  letters.reserve(a.size());
  int p = geom.s0;
  for (int bit : a) {
    if (bit != 0 && bit != 1) throw domain_error("invalid-configuration", "path entries must be 0 or 1");
    const int index = p + bit - 1;
    if (index < 1 || index > geom.n - 1)
      throw domain_error("boundary", "path leaves the strand range at site " + std::to_string(p));
    letters.push_back({index, 1});
    p += 2 * bit - 1;
  }
  return BraidWord(geom.n, std::move(letters));
}

std::complex<double> path_amplitude(const PathVector& a, const Eigen::Matrix2cd& coin, const Eigen::Vector2cd& psi) {
  if (a.empty()) return 1.0;
  cd amp = (coin * psi)(a.front());
  for (std::size_t r = 1; r < a.size(); ++r) amp *= coin(a[r], a[r - 1]);
  return amp;
}

std::complex<double> coin_trace(const PathVector& a, const PathVector& ap, const Eigen::Matrix2cd& coin,
                                const Eigen::Vector2cd& psi) {
  if (a.size() != ap.size()) throw domain_error("invalid-configuration", "paths differ in length");
  if (!a.empty() && a.back() != ap.back()) return 0.0;
  return path_amplitude(a, coin, psi) * std::conj(path_amplitude(ap, coin, psi));
}

double hadamard_coin_trace(const PathVector& a, const PathVector& ap) {
  if (a.size() != ap.size()) throw domain_error("invalid-configuration", "paths differ in length");
  if (!a.empty() && a.back() != ap.back()) return 0.0;
  int z = 0;
  for (const PathVector* p : {&a, &ap})
    for (std::size_t r = 1; r < p->size(); ++r) z += (*p)[r] & (*p)[r - 1];
  return (z % 2 ? -1.0 : 1.0) / std::ldexp(1.0, static_cast<int>(a.size()));
}

Distribution distribution_pathsum(const AnyonModel& model, const WalkGeometry& geom, int t, const CoinSpec& coin,
                                  unsigned threads) {
  geom.validate(t);
  if (t > 20) throw domain_error("invalid-configuration", "path-sum engine limited to t <= 20; use the dense engine");
  const std::vector<WalkPath> paths = enumerate_paths(geom, t, coin);

  // Only pairs sharing endpoint and final coin contribute.
  std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < paths.size(); ++i)
    groups[{paths[i].offset, t > 0 ? paths[i].bits.back() : 0}].push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<int> pair_offset;
  for (const auto& [key, members] : groups)
    for (std::size_t x : members)
      for (std::size_t y : members) {
        pairs.emplace_back(x, y);
        pair_offset.push_back(key.first);
      }

  if (threads == 0) threads = default_thread_count();
  std::vector<BracketEvaluator> evaluators;
  for (unsigned w = 0; w < threads; ++w) evaluators.emplace_back(geom.n, model.kauffman_a());
  std::vector<cd> contribution(pairs.size());
  parallel_for(pairs.size(), threads, [&](unsigned w, std::size_t idx) {
    const WalkPath& a = paths[pairs[idx].first];
    const WalkPath& ap = paths[pairs[idx].second];
    const cd ct = a.amplitude * std::conj(ap.amplitude);
    contribution[idx] = ct == 0.0 ? cd{0.0} : ct * evaluators[w].anyon_trace(a.word, ap.word);
  });

  std::vector<double> by_offset(static_cast<std::size_t>(2 * t + 1), 0.0);
  std::size_t begin = 0;
  while (begin < pairs.size()) {
    std::size_t end = begin;
    while (end < pairs.size() && pair_offset[end] == pair_offset[begin]) ++end;
    const cd sum = pairwise_sum(std::span<const cd>(contribution).subspan(begin, end - begin));
    if (std::abs(sum.imag()) >= 1e-9)
      throw numeric_error("imaginary-residue", "position " + std::to_string(pair_offset[begin]) +
                                                   " has imaginary part " + std::to_string(sum.imag()));
    by_offset[static_cast<std::size_t>(pair_offset[begin] + t)] += sum.real();
    begin = end;
  }
  Distribution out = from_dense(by_offset, t, walk_meta("pathsum", model.tag(), geom, t, coin));
  out.validate();
  return out;
}

Distribution distribution_dense(const AnyonModel& model, const WalkGeometry& geom, int t, const CoinSpec& coin,
                                Representation rep, unsigned threads, std::size_t memory_budget) {
  geom.validate(t);
  std::vector<SparseMatrix> gens(static_cast<std::size_t>(geom.n));  // gens[i] = b_i
  Eigen::VectorXcd fusion_start;
  std::size_t dim = 1;
  if (rep == Representation::Su22Qubit && model.level() != 2)
    throw domain_error("unsupported-model", "the qubit representation exists only for SU(2)_2");
  if (rep == Representation::Trivial) {
    fusion_start = Eigen::VectorXcd::Ones(1);
  } else {
    if (geom.n < 4) throw domain_error("invalid-configuration", "braided walks need at least 4 anyons");
    dim = rep == Representation::TemperleyLieb ? fusion_dimension(model, geom.n)
                                               : std::size_t{1} << (geom.n / 2 - 1);
  }
  const std::size_t sites = static_cast<std::size_t>(2 * t + 1);
  const std::size_t bytes = 2 * sites * 2 * dim * sizeof(cd);
  if (bytes > memory_budget)
    throw domain_error("memory-budget", "dense state needs " + std::to_string(bytes >> 20) +
                                            " MiB, above the budget; use the pathsum engine");

  if (rep == Representation::TemperleyLieb) {
    const FusionSpace space = enumerate_fusion_basis(model, geom.n);
    fusion_start = vacuum_pair_state(space);
    for (int i = std::max(1, geom.s0 - t); i <= std::min(geom.n - 1, geom.s0 + t - 1); ++i)
      gens[static_cast<std::size_t>(i)] = braid_generator(space, i).matrix;
  } else if (rep == Representation::Su22Qubit) {
    fusion_start = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    fusion_start(0) = 1.0;
    for (int i = std::max(1, geom.s0 - t); i <= std::min(geom.n - 1, geom.s0 + t - 1); ++i)
      gens[static_cast<std::size_t>(i)] = su22_qubit_generator(geom.n, i).sparseView();
  }

  // state[site][coin], site index j is position s0 - t + j.
  using Slice = std::array<Eigen::VectorXcd, 2>;
  const auto zero = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  std::vector<Slice> state(sites, Slice{zero, zero}), next = state;
  std::vector<char> live(sites, 0), next_live(sites, 0);
  state[static_cast<std::size_t>(t)][0] = coin.initial(0) * fusion_start;
  state[static_cast<std::size_t>(t)][1] = coin.initial(1) * fusion_start;
  live[static_cast<std::size_t>(t)] = 1;

  auto braid = [&](int index, const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    if (rep == Representation::Trivial) return v;
    return gens[static_cast<std::size_t>(index)] * v;
  };

  for (int step = 0; step < t; ++step) {
    parallel_for(sites, threads, [&](unsigned, std::size_t j) {
      const int p = geom.s0 - t + static_cast<int>(j);
      Slice& out = next[j];
      out[0].setZero();
      out[1].setZero();
      next_live[j] = 0;
      // Arriving with coin 1 from the left neighbour, braid b_{p-1}.
      if (j > 0 && live[j - 1]) {
        const Slice& src = state[j - 1];
        out[1] = braid(p - 1, coin.matrix(1, 0) * src[0] + coin.matrix(1, 1) * src[1]);
        next_live[j] = 1;
      }
      // Arriving with coin 0 from the right neighbour, braid b_{p}.
      if (j + 1 < sites && live[j + 1]) {
        const Slice& src = state[j + 1];
        out[0] = braid(p, coin.matrix(0, 0) * src[0] + coin.matrix(0, 1) * src[1]);
        next_live[j] = 1;
      }
    });
    std::swap(state, next);
    std::swap(live, next_live);
  }

  std::vector<double> by_offset(sites, 0.0);
  for (std::size_t j = 0; j < sites; ++j) by_offset[j] = state[j][0].squaredNorm() + state[j][1].squaredNorm();
  const std::string engine = rep == Representation::TemperleyLieb ? "dense"
                             : rep == Representation::Su22Qubit   ? "dense-qubit"
                                                                  : "dense-trivial";
  Distribution out =
      from_dense(by_offset, t, walk_meta(engine, rep == Representation::Trivial ? "none" : model.tag(), geom, t, coin));
  out.validate();
  return out;
}

Distribution baseline_quantum(int t, const CoinSpec& coin) {
  if (t < 0) throw domain_error("invalid-configuration", "step count must be non-negative");
  const std::size_t sites = static_cast<std::size_t>(2 * t + 1);
  std::vector<Eigen::Vector2cd> state(sites, Eigen::Vector2cd::Zero()), next = state;
  state[static_cast<std::size_t>(t)] = coin.initial;
  for (int step = 0; step < t; ++step) {
    for (auto& v : next) v.setZero();
    for (std::size_t j = 0; j < sites; ++j) {
      const Eigen::Vector2cd tossed = coin.matrix * state[j];
      if (j > 0) next[j - 1](0) += tossed(0);
      if (j + 1 < sites) next[j + 1](1) += tossed(1);
    }
    std::swap(state, next);
  }
  std::vector<double> by_offset(sites);
  for (std::size_t j = 0; j < sites; ++j) by_offset[j] = state[j].squaredNorm();
  return from_dense(by_offset, t, DistributionMeta{"baseline-quantum", "none", t, 0, 0, coin.describe()});
}

Distribution baseline_classical(int t) {
  if (t < 0) throw domain_error("invalid-configuration", "step count must be non-negative");
  Distribution out;
  out.meta = DistributionMeta{"baseline-classical", "none", t, 0, 0, "binomial"};
  const boost::multiprecision::cpp_int denom = boost::multiprecision::cpp_int(1) << t;
  boost::multiprecision::cpp_int binom = 1;
  for (int j = 0; j <= t; ++j) {
    const Rational p(binom, denom);
    out.positions.push_back(2 * j - t);
    out.probs.push_back(p.convert_to<double>());
    out.exact.push_back(p.str());
    binom = binom * (t - j) / (j + 1);
  }
  return out;
}

Engine resolve_engine(Engine engine, int t) {
  if (engine != Engine::Auto) return engine;
  return t <= 5 ? Engine::Pathsum : Engine::Dense;
}

Distribution su2k_distribution(const AnyonModel& model, const WalkGeometry& geom, int t, const CoinSpec& coin,
                               Engine engine, unsigned threads) {
  if (resolve_engine(engine, t) == Engine::Pathsum) return distribution_pathsum(model, geom, t, coin, threads);
  return distribution_dense(model, geom, t, coin, Representation::TemperleyLieb, threads);
}

std::vector<SweepRow> sweep_levels(const std::vector<int>& levels, int t, int n, const CoinSpec& coin, Engine engine,
                                   unsigned threads) {
  const WalkGeometry geom = WalkGeometry::for_steps(t, n);
  const Distribution quantum = baseline_quantum(t, coin);
  const Distribution classical = baseline_classical(t);
  std::vector<SweepRow> rows;
  rows.reserve(levels.size());
  for (int k : levels) {
    const Distribution p = su2k_distribution(build_su2k(k), geom, t, coin, engine, threads);
    rows.push_back({k, distance(p, quantum), distance(p, classical)});
  }
  return rows;
}

}  // namespace anyonwalk
