#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace anyonwalk {

/// Laurent polynomial in A with integer coefficients. Zero coefficients are
/// never stored. Arithmetic throws "overflow" rather than wrapping.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t constant);  // NOLINT: integers promote naturally
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  /// The loop value d = -A^2 - A^{-2}.
  static LaurentPoly loop_value();

  const std::map<int, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly&) const = default;

  LaurentPoly pow(unsigned exponent) const;
  /// A -> A^{-1}.
  LaurentPoly mirror() const;
  std::complex<double> evaluate(std::complex<double> a) const;

  /// Terms "c*A^e" in descending exponent order, unit coefficients elided,
  /// e.g. "-A^4 - A^-4"; "0" if empty.
  std::string to_string() const;

 private:
  void add_term(int exponent, std::int64_t coeff);
  std::map<int, std::int64_t> terms_;
};

}  // namespace anyonwalk
