#pragma once

#include <complex>
#include <string>
#include <unordered_map>

#include "anyonwalk/anyon_models.hpp"
#include "anyonwalk/braid_word.hpp"
#include "anyonwalk/laurent.hpp"
#include "anyonwalk/temperley_lieb.hpp"

namespace anyonwalk {

enum class Closure { Plat, Markov };

// Bracket values are normalised so that a single unknot gives 1: the raw
// state sum sum_D c_D d^{loops(D)} is divided by d exactly once.

LaurentPoly plat_bracket(const BraidWord& w);
std::complex<double> plat_bracket(const BraidWord& w, std::complex<double> a);
LaurentPoly markov_bracket(const BraidWord& w);
std::complex<double> markov_bracket(const BraidWord& w, std::complex<double> a);

LaurentPoly bracket(const BraidWord& w, Closure closure);
std::complex<double> bracket(const BraidWord& w, Closure closure, std::complex<double> a);

/// tr(B |alpha><alpha| Bp^dagger) = <(Bp^{-1} B)^plat> / d^{n/2-1} at the
/// model's A, with both words on n strands.
std::complex<double> anyon_trace(const AnyonModel& model, int n, const BraidWord& b, const BraidWord& bp);

/// Memoised numeric anyon-trace evaluator for one worker. Pairs whose
/// combined word Bp^{-1}B reduces freely to the same word share one bracket.
class BracketEvaluator {
 public:
  BracketEvaluator(int strands, std::complex<double> a);

  std::complex<double> anyon_trace(const BraidWord& b, const BraidWord& bp);
  std::size_t evaluations() const { return cache_.size(); }

 private:
  TLAlgebra algebra_;
  SkeinConstants<std::complex<double>> constants_;
  std::complex<double> normaliser_;  // d^{n/2}
  std::unordered_map<std::string, std::complex<double>> cache_;
};

}  // namespace anyonwalk
