#include "anyonwalk/temperley_lieb.hpp"

#include <string>

#include "anyonwalk/errors.hpp"

namespace anyonwalk {

namespace {

void require_same(int a, int b) {
  if (a != b) throw_strand_mismatch(a, b);
}

// Cycles of the graph whose edges are the diagram arcs plus `closure` arcs.
template <class Closure>
int closed_loops(const TLDiagram& d, Closure closure) {
  const int points = 2 * d.strands();
  std::vector<char> seen(points, 0);
  int loops = 0;
  for (int start = 0; start < points; ++start) {
    if (seen[start]) continue;
    ++loops;
    int p = start;
    do {
      seen[p] = 1;
      const int q = d.partner(p);
      seen[q] = 1;
      p = closure(q);
    } while (p != start);
  }
  return loops;
}

}  // namespace

void throw_strand_mismatch(int got, int expected) {
  throw domain_error("strand-mismatch",
                     "strand count " + std::to_string(got) + " does not match " + std::to_string(expected));
}

TLDiagram::TLDiagram(int strands, std::vector<std::uint8_t> partner) : partner_(std::move(partner)) {
  if (strands < 1 || strands > 127 || partner_.size() != static_cast<std::size_t>(2 * strands))
    throw domain_error("invalid-diagram", "partner table size does not match strand count");
  for (std::size_t p = 0; p < partner_.size(); ++p) {
    const std::size_t q = partner_[p];
    if (q >= partner_.size() || q == p || partner_[q] != p)
      throw domain_error("invalid-diagram", "partner table is not a perfect matching");
  }
  // Planarity: walk the boundary counterclockwise (top left-to-right, then
  // bottom right-to-left); arcs must nest like parentheses.
  std::vector<int> order;
  for (int j = 0; j < strands; ++j) order.push_back(j);
  for (int j = strands - 1; j >= 0; --j) order.push_back(strands + j);
  std::vector<int> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<int>(r);
  std::vector<int> stack;
  for (int p : order) {
    const int q = partner_[p];
    if (rank[q] > rank[p]) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q) throw domain_error("invalid-diagram", "arcs cross");
      stack.pop_back();
    }
  }
}

TLDiagram TLDiagram::identity(int strands) {
  std::vector<std::uint8_t> partner(2 * strands);
  for (int j = 0; j < strands; ++j) {
    partner[j] = static_cast<std::uint8_t>(strands + j);
    partner[strands + j] = static_cast<std::uint8_t>(j);
  }
  return TLDiagram(strands, std::move(partner));
}

TLDiagram TLDiagram::generator(int strands, int i) {
  if (i < 1 || i >= strands)
    throw domain_error("index-out-of-range", "e_" + std::to_string(i) + " not in TL_" + std::to_string(strands));
  TLDiagram d = identity(strands);
  auto& p = d.partner_;
  const auto a = static_cast<std::uint8_t>(i - 1), b = static_cast<std::uint8_t>(i);
  const auto n = static_cast<std::uint8_t>(strands);
  p[a] = b, p[b] = a;
  p[n + a] = static_cast<std::uint8_t>(n + b), p[n + b] = static_cast<std::uint8_t>(n + a);
  return d;
}

std::vector<std::pair<int, int>> TLDiagram::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t p = 0; p < partner_.size(); ++p)
    if (p < partner_[p]) out.emplace_back(static_cast<int>(p), partner_[p]);
  return out;
}

std::size_t TLDiagramHash::operator()(const TLDiagram& d) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : d.partners()) h = (h ^ b) * 1099511628211ull;
  return h;
}

Composition tl_compose(const TLDiagram& upper, const TLDiagram& lower) {
  require_same(upper.strands(), lower.strands());
  const int n = upper.strands();
  std::vector<std::uint8_t> out(2 * n, 0);
  std::vector<char> middle(n, 0);  // glued points, upper bottom j == lower top j

  // Follows a strand entering the middle layer at upper bottom `j` (going
  // down) or lower top `j` (going up) until it exits on the outer boundary.
  auto exit_from = [&](bool in_upper, int point) -> int {
    for (;;) {
      if (in_upper) {
        const int r = upper.partner(point);
        if (r < n) return r;
        middle[r - n] = 1;
        in_upper = false, point = r - n;
      } else {
        const int r = lower.partner(point);
        if (r >= n) return r;
        middle[r] = 1;
        in_upper = true, point = n + r;
      }
    }
  };

  for (int p = 0; p < 2 * n; ++p) {
    // Outer point p: upper top (p < n) or lower bottom (p >= n).
    const int q = p < n ? exit_from(true, p) : exit_from(false, p);
    out[p] = static_cast<std::uint8_t>(q);
  }

  int loops = 0;
  for (int j = 0; j < n; ++j) {
    if (middle[j]) continue;
    ++loops;
    int point = j;  // lower top j
    do {
      middle[point] = 1;
      const int down = lower.partner(point);  // another lower top point
      middle[down] = 1;
      point = upper.partner(n + down) - n;  // back through the upper diagram
    } while (!middle[point]);
  }
  return {TLDiagram(n, std::move(out)), loops};
}

int plat_loops(const TLDiagram& d) {
  const int n = d.strands();
  if (n % 2 != 0) throw domain_error("odd-strands", "plat closure needs an even strand count, got " + std::to_string(n));
  return closed_loops(d, [n](int q) {
    const int side = q < n ? 0 : n;
    const int j = q - side;
    return side + (j ^ 1);
  });
}

int markov_loops(const TLDiagram& d) {
  const int n = d.strands();
  return closed_loops(d, [n](int q) { return q < n ? q + n : q - n; });
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) {
    const unsigned __int128 next = static_cast<unsigned __int128>(c) * (2 * (2 * i + 1)) / (i + 2);
    if (next > UINT64_MAX) return UINT64_MAX;
    c = static_cast<std::uint64_t>(next);
  }
  return c;
}

void check_support(std::size_t support, int strands) {
  if (support > catalan(strands))
    throw numeric_error("tl-support", "TL element support exceeds Catalan(" + std::to_string(strands) + ")");
}

SkeinConstants<LaurentPoly> exact_skein_constants() {
  return {LaurentPoly::monomial(1, 1), LaurentPoly::monomial(1, -1), LaurentPoly::loop_value()};
}

SkeinConstants<std::complex<double>> numeric_skein_constants(std::complex<double> a) {
  return {a, 1.0 / a, -a * a - 1.0 / (a * a)};
}

TLAlgebra::TLAlgebra(int strands) : strands_(strands) {
  if (strands < 1 || strands > 127) throw domain_error("strand-mismatch", "unsupported strand count");
}

TLAlgebra::Id TLAlgebra::intern(const TLDiagram& d) {
  require_same(d.strands(), strands_);
  const auto [it, inserted] = ids_.try_emplace(d, static_cast<Id>(diagrams_.size()));
  if (inserted) diagrams_.push_back(d);
  return it->second;
}

std::pair<TLAlgebra::Id, int> TLAlgebra::apply_generator(int i, Id id) {
  const std::uint64_t key = (static_cast<std::uint64_t>(id) << 8) | static_cast<std::uint64_t>(i);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  Composition c = tl_compose(TLDiagram::generator(strands_, i), diagrams_[id]);
  const std::pair<Id, int> result{intern(c.diagram), c.loops};
  memo_.emplace(key, result);
  return result;
}

TLElement<LaurentPoly> skein_expand(const BraidWord& w) {
  TLAlgebra algebra(w.strands());
  return algebra.skein_expand(w, exact_skein_constants());
}

}  // namespace anyonwalk
