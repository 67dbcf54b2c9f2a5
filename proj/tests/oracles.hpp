#pragma once

// Reference computations that share no code with the library engines.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

#include "anyonwalk/braid_word.hpp"
#include "anyonwalk/kauffman.hpp"
#include "anyonwalk/laurent.hpp"

namespace oracle {

using anyonwalk::BraidWord;
using anyonwalk::Closure;
using anyonwalk::LaurentPoly;

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Kauffman bracket by the full state sum: every crossing is smoothed
/// independently and the loops of the resulting planar diagram are counted
/// with a union-find over strand end points. Normalised so one unknot is 1.
inline LaurentPoly state_sum_bracket(const BraidWord& w, Closure closure) {
  const int n = w.strands();
  const int levels = static_cast<int>(w.size()) + 1;
  const auto node = [n](int level, int pos) { return level * n + pos; };
  const std::size_t c = w.size();
  const LaurentPoly d = LaurentPoly::loop_value();
  LaurentPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    std::vector<int> parent(static_cast<std::size_t>(levels * n));
    std::iota(parent.begin(), parent.end(), 0);
    const auto join = [&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); };
    int a_power = 0;
    for (std::size_t r = 0; r < c; ++r) {
      const auto& letter = w.letters()[r];
      const int lo = letter.index - 1, hi = letter.index;
      const bool vertical = ((mask >> r) & 1u) == 0;
      // Positive crossing: vertical smoothing carries A, cup-cap carries A^-1.
      a_power += (vertical ? 1 : -1) * letter.power;
      const int level = static_cast<int>(r);
      for (int j = 0; j < n; ++j)
        if (j != lo && j != hi) join(node(level, j), node(level + 1, j));
      if (vertical) {
        join(node(level, lo), node(level + 1, lo));
        join(node(level, hi), node(level + 1, hi));
      } else {
        join(node(level, lo), node(level, hi));
        join(node(level + 1, lo), node(level + 1, hi));
      }
    }
    const int top = levels - 1;
    if (closure == Closure::Plat) {
      for (int j = 0; j + 1 < n; j += 2) {
        join(node(0, j), node(0, j + 1));
        join(node(top, j), node(top, j + 1));
      }
    } else {
      for (int j = 0; j < n; ++j) join(node(0, j), node(top, j));
    }
    int loops = 0;
    for (int x = 0; x < levels * n; ++x)
      if (find_root(parent, x) == x) ++loops;
    total += LaurentPoly::monomial(1, a_power) * d.pow(static_cast<unsigned>(loops - 1));
  }
  return total;
}

inline double t3_shift(int k) {
  const double q = std::numbers::pi / (k + 2);
  return std::cos(2 * q) * std::cos(3 * q) / std::cos(q);
}

/// SU(2)_k walk with the Hadamard coin from |0>, offsets -3, -1, 1, 3.
inline std::vector<double> su2k_t3(int k) {
  const double c = t3_shift(k);
  return {0.125, 0.375 + c / 4, 0.375 - c / 4, 0.125};
}

/// Same walk at t = 4, offsets -4, -2, 0, 2, 4.
inline std::vector<double> su2k_t4(int k) {
  const double q = std::numbers::pi / (k + 2);
  const double sec2 = 1.0 / (std::cos(q) * std::cos(q));
  return {1.0 / 16, (-3 * std::cos(2 * q) + 3 * std::cos(4 * q) + 5) / 8,
          (3 * std::cos(2 * q) - std::cos(4 * q) - 3 * std::cos(6 * q) + 5) * sec2 / 32,
          (2 * std::cos(2 * q) - std::cos(4 * q) + 1) * sec2 / 16, 1.0 / 16};
}

/// Number of height sequences h_0 = 0, |h_{m+1} - h_m| = 1, 0 <= h <= k,
/// h_n = 0, found by trying all 2^n step sequences.
inline std::uint64_t brute_force_path_count(int n, int k) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int h = 0;
    bool ok = true;
    for (int m = 0; m < n && ok; ++m) {
      h += ((mask >> m) & 1u) ? 1 : -1;
      ok = h >= 0 && h <= k;
    }
    if (ok && h == 0) ++count;
  }
  return count;
}

/// Standard coined walk by summing amplitudes over all 2^t coin paths;
/// coin 0 steps left. Returns probabilities at offsets -t, -t+2, ..., t.
inline std::vector<double> coined_walk_by_paths(int t, const std::complex<double> coin[2][2],
                                                const std::complex<double> psi[2]) {
  std::vector<std::complex<double>> amp(static_cast<std::size_t>(2 * (t + 1)), 0.0);  // (site, last coin)
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
    std::complex<double> a = 1.0;
    int prev = -1, rights = 0;
    for (int r = 0; r < t; ++r) {
      const int x = static_cast<int>((mask >> r) & 1u);
      a *= prev < 0 ? coin[x][0] * psi[0] + coin[x][1] * psi[1] : coin[x][prev];
      prev = x;
      rights += x;
    }
    amp[static_cast<std::size_t>(2 * rights + (prev < 0 ? 0 : prev))] += a;
  }
  std::vector<double> out(static_cast<std::size_t>(t + 1), 0.0);
  for (int j = 0; j <= t; ++j) out[static_cast<std::size_t>(j)] = std::norm(amp[2 * j]) + std::norm(amp[2 * j + 1]);
  return out;
}

}  // namespace oracle
