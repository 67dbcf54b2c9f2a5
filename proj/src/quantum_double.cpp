#include "anyonwalk/quantum_double.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include "anyonwalk/errors.hpp"
#include "anyonwalk/parallel.hpp"

namespace anyonwalk {

namespace {

using Letter = std::pair<int, int>;  // (index, power +-1)
using Word = std::vector<Letter>;

void check_order(int N) {
  if (N < 5) throw domain_error("invalid-order", "D(S_N) needs N >= 5, got " + std::to_string(N));
}

Rational irrep_dim(int N) { return Rational(N * (N - 1), 2); }

std::string word_string(const Word& w) {
  std::string out;
  for (const auto& [i, e] : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e * i);
  }
  return out.empty() ? "(empty)" : out;
}

bool far(int i, int j) { return std::abs(i - j) >= 2; }

// Cancels b_i^e ... b_i^-e (cyclically) whenever every letter between them
// commutes with b_i.
void free_reduce_cyclic(Word& w) {
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t len = w.size();
    for (std::size_t x = 0; x < len && !changed; ++x) {
      const auto [i, e] = w[x];
      for (std::size_t step = 1; step < len; ++step) {
        const std::size_t y = (x + step) % len;
        const auto [j, g] = w[y];
        if (j == i && g == -e) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(std::max(x, y)));
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(std::min(x, y)));
          changed = true;
          break;
        }
        if (!far(i, j)) break;
      }
    }
  }
}

// Free reduction plus Markov moves on the largest or smallest generator
// when it occurs once; each Markov move multiplies by z = 1/d.
void simplify(Word& w, Rational& acc, const Rational& d) {
  for (;;) {
    free_reduce_cyclic(w);
    if (w.empty()) return;
    std::map<int, int> count;
    for (const auto& [i, e] : w) ++count[i];
    int removable = 0;
    if (count.rbegin()->second == 1)
      removable = count.rbegin()->first;
    else if (count.begin()->second == 1)
      removable = count.begin()->first;
    if (removable == 0) return;
    std::erase_if(w, [&](const Letter& l) { return l.first == removable; });
    acc /= d;
  }
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    Word cand(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    cand.insert(cand.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    best = std::min(best, cand);
  }
  return best;
}

// Total power per generator when the letters of every generator form a
// single cyclic run among the letters that do not commute with it.
std::optional<std::map<int, int>> canonical_powers(const Word& w) {
  std::map<int, int> powers;
  for (const auto& [i, e] : w) powers[i] += e;
  for (auto& [i, m] : powers) {
    Word seq;
    for (const auto& l : w)
      if (!far(l.first, i)) seq.push_back(l);
    const auto first_other = std::find_if(seq.begin(), seq.end(), [&](const Letter& l) { return l.first != i; });
    if (first_other == seq.end()) continue;
    std::rotate(seq.begin(), first_other, seq.end());
    int runs = 0;
    int prev = -1;
    for (const auto& l : seq) {
      if (l.first == i && prev != i) ++runs;
      prev = l.first;
    }
    if (runs > 1) return std::nullopt;
  }
  return powers;
}

std::vector<Word> neighbours(const Word& w) {
  std::vector<Word> out;
  const std::size_t len = w.size();
  // Far commutation of cyclically adjacent letters.
  for (std::size_t r = 0; r < len; ++r) {
    const std::size_t s = (r + 1) % len;
    if (s != r && far(w[r].first, w[s].first)) {
      Word v = w;
      std::swap(v[r], v[s]);
      out.push_back(std::move(v));
    }
  }
  // b_i^e (b_j^m) b_i^-e -> b_j^-e (b_i^m) b_j^e for |i - j| = 1, a
  // consequence of the braid relation.
  if (len < 3) return out;
  for (std::size_t r = 0; r < len; ++r) {
    Word v(w.begin() + static_cast<std::ptrdiff_t>(r), w.end());
    v.insert(v.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r));
    const auto [i, e] = v[0];
    const int j = v[1].first;
    if (std::abs(i - j) != 1) continue;
    std::size_t s = 1;
    while (s < len && v[s].first == j) ++s;
    if (s < len && v[s] == Letter{i, -e}) {
      Word u{{j, -e}};
      for (std::size_t q = 1; q < s; ++q) u.emplace_back(i, v[q].second);
      u.emplace_back(j, e);
      u.insert(u.end(), v.begin() + static_cast<std::ptrdiff_t>(s + 1), v.end());
      out.push_back(std::move(u));
    }
  }
  return out;
}

// Exact Gaussian rational (re + i im).
struct Gaussian {
  Rational re, im;
};

// Coin amplitude of a path as (2^{-t/2}) i^q; returns q mod 4.
int coin_phase(const PathVector& a, const CoinSpec& coin, int start) {
  int q = 0;
  int c = start;
  for (int x : a) {
    if (coin.name == "U")
      q += x != c ? 1 : 0;
    else
      q += (x == 1 && c == 1) ? 2 : 0;
    c = x;
  }
  return q % 4;
}

}  // namespace

CanonicalWord::CanonicalWord(std::vector<CanonicalFactor> factors) : factors_(std::move(factors)) {
  std::set<int> seen;
  for (const auto& f : factors_) {
    if (f.power == 0) throw domain_error("invalid-power", "canonical factors need nonzero powers");
    if (!seen.insert(f.index).second)
      throw domain_error("non-canonical", "generator " + std::to_string(f.index) + " appears twice");
  }
}

std::string CanonicalWord::to_string() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += ' ';
    out += "b" + std::to_string(f.index) + "^" + std::to_string(f.power);
  }
  return out;
}

Rational link_factor(int N, int m) {
  check_order(N);
  // 1 + 2cos(2 m pi / 3) is 3 when 3 | m and 0 otherwise.
  const Rational cos_term = (m % 3 == 0) ? Rational(3) : Rational(0);
  const Rational parity_term = (m % 2 == 0) ? Rational(2) : Rational(0);
  return 1 + Rational(2, 3) * (N - 2) * cos_term + Rational(1, 4) * (N - 2) * (N - 3) * parity_term;
}

Rational canonical_link_polynomial(int N, const CanonicalWord& w) {
  check_order(N);
  Rational out = 1;
  for (const auto& f : w.factors()) out *= link_factor(N, f.power);
  return out;
}

Rational canonical_markov_value(int N, const CanonicalWord& w) {
  check_order(N);
  Rational out = 1;
  for (const auto& f : w.factors()) out *= link_factor(N, f.power) / irrep_dim(N);
  return out;
}

MarkovValue markov_trace_word(int N, const BraidWord& w, std::size_t state_cap) {
  check_order(N);
  const Rational d = irrep_dim(N);
  Word start;
  for (const auto& l : w.letters()) start.emplace_back(l.index, l.power);

  struct State {
    Word word;
    Rational acc;
    std::ptrdiff_t parent;
  };
  std::vector<State> states;
  std::set<Word> seen;
  std::deque<std::size_t> queue;

  Rational acc = 1;
  Word first = start;
  simplify(first, acc, d);
  first = canonical_rotation(first);
  seen.insert(first);
  states.push_back({first, acc, -1});
  queue.push_back(0);

  auto finish = [&](std::size_t idx, const Rational& value) {
    MarkovValue out{value, {word_string(start)}};
    std::vector<std::string> chain;
    for (std::ptrdiff_t s = static_cast<std::ptrdiff_t>(idx); s >= 0; s = states[static_cast<std::size_t>(s)].parent)
      chain.push_back(word_string(states[static_cast<std::size_t>(s)].word));
    out.trace.insert(out.trace.end(), chain.rbegin(), chain.rend());
    return out;
  };

  while (!queue.empty() && seen.size() < state_cap) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const Word current = states[idx].word;
    const Rational current_acc = states[idx].acc;
    if (current.empty()) return finish(idx, current_acc);
    if (const auto powers = canonical_powers(current)) {
      Rational value = current_acc;
      for (const auto& [i, m] : *powers) value *= link_factor(N, m) / d;
      return finish(idx, value);
    }
    for (Word next : neighbours(current)) {
      Rational next_acc = current_acc;
      simplify(next, next_acc, d);
      Word key = canonical_rotation(next);
      if (seen.insert(key).second) {
        states.push_back({std::move(key), next_acc, static_cast<std::ptrdiff_t>(idx)});
        queue.push_back(states.size() - 1);
      }
    }
  }
  throw domain_error("irreducible-word", "no canonical form found for braid word '" + word_string(start) +
                                             "' (reduced to '" + word_string(first) + "')");
}

Distribution double_walk_distribution(int N, int t, const CoinSpec& coin, unsigned threads) {
  check_order(N);
  if (coin.name != "H" && coin.name != "U")
    throw usage_error("the quantum-double walk supports only the H and U coins");
  int start = -1;
  if (coin.initial == Eigen::Vector2cd(1, 0)) start = 0;
  if (coin.initial == Eigen::Vector2cd(0, 1)) start = 1;
  if (start < 0) throw usage_error("the quantum-double walk needs a basis initial coin state");
  const WalkGeometry geom = WalkGeometry::for_steps(t);

  struct PathInfo {
    int offset = 0;
    int last = 0;
    int phase = 0;
    BraidWord word;
  };
  std::vector<PathInfo> paths;
  for (std::size_t code = 0; code < (std::size_t{1} << t); ++code) {
    PathVector a(static_cast<std::size_t>(t));
    int offset = 0;
    for (int r = 0; r < t; ++r) {
      a[static_cast<std::size_t>(r)] = static_cast<int>((code >> (t - 1 - r)) & 1u);
      offset += 2 * a[static_cast<std::size_t>(r)] - 1;
    }
    paths.push_back({offset, t > 0 ? a.back() : start, coin_phase(a, coin, start), path_braid_word(geom, a)});
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < paths.size(); ++x)
    for (std::size_t y = 0; y < paths.size(); ++y)
      if (paths[x].offset == paths[y].offset && paths[x].last == paths[y].last) pairs.emplace_back(x, y);

  if (threads == 0) threads = default_thread_count();
  std::vector<std::unordered_map<std::string, Rational>> caches(threads);
  std::vector<Rational> weight(pairs.size());
  parallel_for(pairs.size(), threads, [&](unsigned w, std::size_t idx) {
    const BraidWord combined = paths[pairs[idx].first].word.then(paths[pairs[idx].second].word.inverse());
    const std::string key = combined.free_reduced().to_string();
    auto it = caches[w].find(key);
    if (it == caches[w].end()) it = caches[w].emplace(key, markov_trace_word(N, combined).value).first;
    weight[idx] = it->second;
  });

  const Rational scale = Rational(1, boost::multiprecision::cpp_int(1) << t);
  std::map<int, Gaussian> sums;
  for (int s = -t; s <= t; s += 2) sums[s] = {};
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const auto& [x, y] = pairs[idx];
    const int q = ((paths[x].phase - paths[y].phase) % 4 + 4) % 4;
    const Rational v = weight[idx] * scale;
    Gaussian& g = sums[paths[x].offset];
    switch (q) {
      case 0: g.re += v; break;
      case 1: g.im += v; break;
      case 2: g.re -= v; break;
      default: g.im -= v; break;
    }
  }

  Distribution out;
  out.meta = DistributionMeta{"markov", build_double_irrep(N).tag(), t, geom.n, geom.s0, coin.describe()};
  Rational total = 0;
  for (const auto& [s, g] : sums) {
    if (g.im != 0)
      throw numeric_error("imaginary-residue", "exact imaginary part " + g.im.str() + " at s=" + std::to_string(s));
    if (g.re < 0) throw numeric_error("negative-probability", "exact value " + g.re.str() + " at s=" + std::to_string(s));
    out.positions.push_back(s);
    out.probs.push_back(g.re.convert_to<double>());
    out.exact.push_back(g.re.str());
    total += g.re;
  }
  if (total != 1) throw numeric_error("normalization", "exact total " + total.str());
  return out;
}

}  // namespace anyonwalk
