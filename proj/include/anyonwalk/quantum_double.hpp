#pragma once

#include <string>
#include <vector>

#include "anyonwalk/anyon_models.hpp"
#include "anyonwalk/braid_word.hpp"
#include "anyonwalk/distribution.hpp"
#include "anyonwalk/walk_nonabelian.hpp"

namespace anyonwalk {

struct CanonicalFactor {
  int index = 1;
  int power = 1;

  bool operator==(const CanonicalFactor&) const = default;
};

/// Product of generator powers b_{i_1}^{m_1} b_{i_2}^{m_2} ... with pairwise
/// distinct indices. Throws "non-canonical" on a repeated index and
/// "invalid-power" on a zero power.
class CanonicalWord {
 public:
  CanonicalWord() = default;
  explicit CanonicalWord(std::vector<CanonicalFactor> factors);

  const std::vector<CanonicalFactor>& factors() const { return factors_; }
  std::string to_string() const;

 private:
  std::vector<CanonicalFactor> factors_;
};

/// 1 + (2/3)(N-2)[1 + 2cos(2 m pi/3)] + (1/4)(N-2)(N-3)[1 + (-1)^m].
Rational link_factor(int N, int m);

/// Product of link factors over the word; throws "invalid-order" for N < 5.
Rational canonical_link_polynomial(int N, const CanonicalWord& w);

/// phi of a canonical word: each factor contributes link_factor / d.
Rational canonical_markov_value(int N, const CanonicalWord& w);

struct MarkovValue {
  Rational value;
  /// Words visited on the way to the canonical form, first entry the input.
  std::vector<std::string> trace;
};

/// Rewrite limits for markov_trace_word.
inline constexpr std::size_t kDefaultRewriteStates = 20000;

/// Markov trace phi(w) of the (2,1) irrep of D(S_N), normalised so the empty
/// word gives 1. Throws "irreducible-word" when the rewrite search cannot
/// reach a canonical word within `state_cap` states.
MarkovValue markov_trace_word(int N, const BraidWord& w, std::size_t state_cap = kDefaultRewriteStates);

/// Walk distribution with the Markov trace as anyonic weight. The coin must
/// be H or U with a basis initial state; values are exact.
Distribution double_walk_distribution(int N, int t, const CoinSpec& coin = beam_splitter_coin(),
                                      unsigned threads = 0);

}  // namespace anyonwalk
