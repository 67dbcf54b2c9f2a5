#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "anyonwalk/braid_word.hpp"
#include "anyonwalk/laurent.hpp"

namespace anyonwalk {

/// Planar non-crossing perfect matching on 2n boundary points. Top points are
/// numbered 0..n-1 left to right, bottom points n..2n-1 left to right; the
/// diagram maps bottom (input) to top (output).
class TLDiagram {
 public:
  TLDiagram(int strands, std::vector<std::uint8_t> partner);

  static TLDiagram identity(int strands);
  /// e_i caps top points i-1,i and bottom points i-1,i (1 <= i <= n-1).
  static TLDiagram generator(int strands, int i);

  int strands() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int point) const { return partner_[point]; }
  const std::vector<std::uint8_t>& partners() const { return partner_; }
  /// Arcs as (p, q) with p < q, sorted.
  std::vector<std::pair<int, int>> arcs() const;

  auto operator<=>(const TLDiagram&) const = default;

 private:
  std::vector<std::uint8_t> partner_;
};

struct TLDiagramHash {
  std::size_t operator()(const TLDiagram& d) const noexcept;
};

struct Composition {
  TLDiagram diagram;
  int loops = 0;
};

/// Stacks `upper` on top of `lower` (lower acts first); closed loops are
/// removed and counted. Throws "strand-mismatch".
Composition tl_compose(const TLDiagram& upper, const TLDiagram& lower);

/// Closed loops after capping neighbours (1,2)(3,4)... top and bottom.
/// Throws "odd-strands" for odd n.
int plat_loops(const TLDiagram& d);
/// Closed loops after joining top point j to bottom point j.
int markov_loops(const TLDiagram& d);

/// Number of TL diagrams on n strands, the Catalan number C_n (saturates).
std::uint64_t catalan(int n);

/// Linear combination of diagrams with coefficients in a commutative ring.
template <class Coeff>
struct TLElement {
  int strands = 0;
  std::map<TLDiagram, Coeff> terms;
};

/// Ring constants used by the skein expansion.
template <class Coeff>
struct SkeinConstants {
  Coeff a;
  Coeff a_inv;
  Coeff loop;  // d = -A^2 - A^-2
};

SkeinConstants<LaurentPoly> exact_skein_constants();
SkeinConstants<std::complex<double>> numeric_skein_constants(std::complex<double> a);

/// Diagram algebra on a fixed strand count with interned diagrams and a
/// memo of (diagram, generator) products. Not thread-safe: one per worker.
class TLAlgebra {
 public:
  using Id = std::uint32_t;

  explicit TLAlgebra(int strands);

  int strands() const { return strands_; }
  const TLDiagram& diagram(Id id) const { return diagrams_[id]; }
  Id intern(const TLDiagram& d);
  /// e_i stacked on top of diagram `id`.
  std::pair<Id, int> apply_generator(int i, Id id);
  std::size_t memo_size() const { return memo_.size(); }

  /// Entries of an expansion sorted by diagram, so sums over them do not
  /// depend on the order in which diagrams were interned.
  template <class Coeff>
  std::vector<std::pair<Id, const Coeff*>> in_diagram_order(const std::unordered_map<Id, Coeff>& element) const;

  /// Expands a braid word: each positive letter becomes A Id + A^-1 e_i,
  /// each negative letter A^-1 Id + A e_i, loops folded in as powers of d.
  template <class Coeff>
  std::unordered_map<Id, Coeff> expand(const BraidWord& w, const SkeinConstants<Coeff>& k);

  template <class Coeff>
  TLElement<Coeff> skein_expand(const BraidWord& w, const SkeinConstants<Coeff>& k);

 private:
  int strands_;
  std::vector<TLDiagram> diagrams_;
  std::unordered_map<TLDiagram, Id, TLDiagramHash> ids_;
  std::unordered_map<std::uint64_t, std::pair<Id, int>> memo_;
};

template <class Coeff>
Coeff power_of(const Coeff& base, int exponent) {
  Coeff out = Coeff(1);
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

void check_support(std::size_t support, int strands);
[[noreturn]] void throw_strand_mismatch(int got, int expected);

template <class Coeff>
std::vector<std::pair<TLAlgebra::Id, const Coeff*>> TLAlgebra::in_diagram_order(
    const std::unordered_map<Id, Coeff>& element) const {
  std::vector<std::pair<Id, const Coeff*>> out;
  out.reserve(element.size());
  for (const auto& [id, c] : element) out.emplace_back(id, &c);
  std::sort(out.begin(), out.end(), [this](const auto& x, const auto& y) { return diagrams_[x.first] < diagrams_[y.first]; });
  return out;
}

template <class Coeff>
std::unordered_map<TLAlgebra::Id, Coeff> TLAlgebra::expand(const BraidWord& w, const SkeinConstants<Coeff>& k) {
  if (w.strands() != strands_) throw_strand_mismatch(w.strands(), strands_);
  std::unordered_map<Id, Coeff> current;
  current.emplace(intern(TLDiagram::identity(strands_)), Coeff(1));
  for (const auto& letter : w.letters()) {
    const Coeff& keep = letter.power > 0 ? k.a : k.a_inv;
    const Coeff& smooth = letter.power > 0 ? k.a_inv : k.a;
    std::unordered_map<Id, Coeff> next;
    next.reserve(current.size() * 2);
    for (const auto& [id, cp] : in_diagram_order(current)) {
      const Coeff& c = *cp;
      next[id] += c * keep;
      const auto [moved, loops] = apply_generator(letter.index, id);
      next[moved] += c * smooth * power_of(k.loop, loops);
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == Coeff(0); });
    check_support(next.size(), strands_);
    current.swap(next);
  }
  return current;
}

template <class Coeff>
TLElement<Coeff> TLAlgebra::skein_expand(const BraidWord& w, const SkeinConstants<Coeff>& k) {
  TLElement<Coeff> out;
  out.strands = strands_;
  for (auto& [id, c] : expand(w, k)) out.terms.emplace(diagrams_[id], std::move(c));
  return out;
}

/// Skein expansion with a fresh algebra, exact coefficients.
TLElement<LaurentPoly> skein_expand(const BraidWord& w);

}  // namespace anyonwalk
