#include "anyonwalk/kauffman.hpp"

#include "anyonwalk/errors.hpp"

namespace anyonwalk {

namespace {

int closure_loops(const TLDiagram& d, Closure closure) {
  return closure == Closure::Plat ? plat_loops(d) : markov_loops(d);
}

template <class Coeff>
Coeff close(TLAlgebra& algebra, const std::unordered_map<TLAlgebra::Id, Coeff>& element, Closure closure,
            const Coeff& loop) {
  Coeff sum = Coeff(0);
  for (const auto& [id, c] : algebra.in_diagram_order(element)) sum += *c * power_of(loop, closure_loops(algebra.diagram(id), closure) - 1);
  return sum;
}

void check_plat(const BraidWord& w, Closure closure) {
  if (closure == Closure::Plat && w.strands() % 2 != 0)
    throw domain_error("odd-strands", "plat closure needs an even strand count");
}

}  // namespace

LaurentPoly bracket(const BraidWord& w, Closure closure) {
  check_plat(w, closure);
  TLAlgebra algebra(w.strands());
  const auto k = exact_skein_constants();
  return close(algebra, algebra.expand(w, k), closure, k.loop);
}

std::complex<double> bracket(const BraidWord& w, Closure closure, std::complex<double> a) {
  check_plat(w, closure);
  TLAlgebra algebra(w.strands());
  const auto k = numeric_skein_constants(a);
  return close(algebra, algebra.expand(w, k), closure, k.loop);
}

LaurentPoly plat_bracket(const BraidWord& w) { return bracket(w, Closure::Plat); }
std::complex<double> plat_bracket(const BraidWord& w, std::complex<double> a) { return bracket(w, Closure::Plat, a); }
LaurentPoly markov_bracket(const BraidWord& w) { return bracket(w, Closure::Markov); }
std::complex<double> markov_bracket(const BraidWord& w, std::complex<double> a) {
  return bracket(w, Closure::Markov, a);
}

std::complex<double> anyon_trace(const AnyonModel& model, int n, const BraidWord& b, const BraidWord& bp) {
  if (b.strands() != n || bp.strands() != n) throw_strand_mismatch(b.strands() != n ? b.strands() : bp.strands(), n);
  BracketEvaluator eval(n, model.kauffman_a());
  return eval.anyon_trace(b, bp);
}

BracketEvaluator::BracketEvaluator(int strands, std::complex<double> a)
    : algebra_(strands), constants_(numeric_skein_constants(a)) {
  if (strands % 2 != 0) throw domain_error("odd-strands", "anyon traces need an even strand count");
  normaliser_ = power_of(constants_.loop, strands / 2 - 1);
}

std::complex<double> BracketEvaluator::anyon_trace(const BraidWord& b, const BraidWord& bp) {
  if (b.strands() != algebra_.strands()) throw_strand_mismatch(b.strands(), algebra_.strands());
  if (bp.strands() != algebra_.strands()) throw_strand_mismatch(bp.strands(), algebra_.strands());
  const BraidWord combined = b.then(bp.inverse()).free_reduced();
  const std::string key = combined.to_string();
  if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
  const auto element = algebra_.expand(combined, constants_);
  const std::complex<double> value = close(algebra_, element, Closure::Plat, constants_.loop) / normaliser_;
  cache_.emplace(key, value);
  return value;
}

}  // namespace anyonwalk
