#include "anyonwalk/laurent.hpp"

#include "anyonwalk/errors.hpp"

namespace anyonwalk {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw numeric_error("overflow", "Laurent coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw numeric_error("overflow", "Laurent coefficient overflow");
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::int64_t constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::loop_value() { return monomial(-1, 2) + monomial(-1, -2); }

std::int64_t LaurentPoly::coefficient(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, checked_mul(c1, c2));
  terms_.swap(out.terms_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  out -= *this;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::mirror() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.add_term(-e, c);
  return out;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> a) const {
  std::complex<double> sum = 0.0;
  for (const auto& [e, c] : terms_) sum += static_cast<double>(c) * std::pow(a, e);
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const std::int64_t magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += std::to_string(magnitude) + "*";
    out += e == 1 ? std::string("A") : "A^" + std::to_string(e);
  }
  return out;
}

}  // namespace anyonwalk
