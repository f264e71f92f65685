#ifndef BITENSOR_CUT_POLYNOMIALS_HPP
#define BITENSOR_CUT_POLYNOMIALS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bitensor/rational.hpp"

namespace bitensor {

/// Polynomial in t with rational coefficients; coefficients[k] multiplies t^k.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial t() { return Polynomial({0, 1}); }

  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
  Rational coeff(std::size_t k) const { return k < coefficients_.size() ? coefficients_[k] : Rational(0); }
  bool is_zero() const noexcept { return coefficients_.empty(); }

  /// Exact ∫_a^b p(t) dt.
  Rational integrate(const Rational& a, const Rational& b) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// "1 + 6t + 6t^2"; the zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

/// A_{n,k} = Σ_{1 <= j1 < ... < jk < n} n! / (j1! (j2-j1)! ... (n-jk)!),
/// the number of ways to cut a word of length n at k positions weighted by
/// the multinomial of the pieces. A_{n,0} = 1. Throws IndexOutOfRange unless
/// n >= 1 and 0 <= k <= n-1.
Integer a_nk(int n, int k);

/// P_0 = 0, P_1 = 1, P_n = 1 + t Σ_{k=1}^{n-1} C(n,k) P_k.
Polynomial pn_polynomial(int n);

/// ∫_{-1}^0 P_n(t) dt.
Rational pn_integral(int n);

/// Expands (e^z - 1) / (1 - t(e^z - 1)) to order z^{n_max} and checks that
/// n! [z^n] equals P_n for 0 <= n <= n_max.
bool gf_coefficient_check(int n_max);

}  // namespace bitensor

#endif  // BITENSOR_CUT_POLYNOMIALS_HPP
