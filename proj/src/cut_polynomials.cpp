#include "bitensor/cut_polynomials.hpp"

#include <algorithm>
#include <cstdint>

#include "bitensor/errors.hpp"

namespace bitensor {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::integrate(const Rational& a, const Rational& b) const {
  Rational sum = 0;
  Rational pa = a;
  Rational pb = b;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    sum += coefficients_[k] * (pb - pa) / Rational(static_cast<long>(k + 1));
    pa *= a;
    pb *= b;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) coefficients_.resize(other.coefficients_.size());
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coefficients_;
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Rational& c = coefficients_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += bitensor::to_string(mag);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

Integer a_nk(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) throw IndexOutOfRange("a_nk needs n >= 1 and 0 <= k <= n-1");
  if (n > 30) throw IndexOutOfRange("a_nk: n too large for subset enumeration");
  const Integer nfact = factorial(static_cast<unsigned long>(n));
  Integer sum = 0;
  // Bit i of `cuts` set means a cut after position i+1.
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t cuts = 0; cuts < limit; ++cuts) {
    if (__builtin_popcount(cuts) != k) continue;
    Integer term = nfact;
    int last = 0;
    for (int j = 1; j < n; ++j) {
      if (!(cuts & (1u << (j - 1)))) continue;
      term /= factorial(static_cast<unsigned long>(j - last));
      last = j;
    }
    term /= factorial(static_cast<unsigned long>(n - last));
    sum += term;
  }
  return sum;
}

Polynomial pn_polynomial(int n) {
  if (n < 0) throw IndexOutOfRange("pn_polynomial needs n >= 0");
  std::vector<Polynomial> p(static_cast<std::size_t>(std::max(n, 1)) + 1);
  p[1] = Polynomial::constant(1);
  for (int m = 2; m <= n; ++m) {
    Polynomial inner;
    for (int k = 1; k < m; ++k)
      inner += Rational(binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k))) * p[static_cast<std::size_t>(k)];
    p[static_cast<std::size_t>(m)] = Polynomial::constant(1) + Polynomial::t() * inner;
  }
  return p[static_cast<std::size_t>(n)];
}

Rational pn_integral(int n) { return pn_polynomial(n).integrate(-1, 0); }

bool gf_coefficient_check(int n_max) {
  if (n_max < 0) throw IndexOutOfRange("gf_coefficient_check needs n_max >= 0");
  using Series = std::vector<Polynomial>;  // index = power of z
  const std::size_t len = static_cast<std::size_t>(n_max) + 1;
  auto mul = [len](const Series& a, const Series& b) {
    Series out(len);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
    return out;
  };

  Series e(len);  // e^z - 1
  for (std::size_t m = 1; m < len; ++m) e[m] = Polynomial::constant(Rational(Integer(1), factorial(m)));
  Series te(len);  // t (e^z - 1)
  for (std::size_t m = 0; m < len; ++m) te[m] = Polynomial::t() * e[m];

  // 1 / (1 - te) = Σ_j te^j; te has no constant term, so j <= n_max suffices.
  Series geometric(len);
  geometric[0] = Polynomial::constant(1);
  Series power = geometric;
  for (std::size_t j = 1; j < len; ++j) {
    power = mul(power, te);
    for (std::size_t m = 0; m < len; ++m) geometric[m] += power[m];
  }
  const Series f = mul(e, geometric);
  for (std::size_t n = 0; n < len; ++n)
    if (Rational(factorial(n)) * f[n] != pn_polynomial(static_cast<int>(n))) return false;
  return true;
}

}  // namespace bitensor
