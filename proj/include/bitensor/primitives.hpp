#ifndef BITENSOR_PRIMITIVES_HPP
#define BITENSOR_PRIMITIVES_HPP

#include <cstddef>
#include <vector>

#include "bitensor/element.hpp"

namespace bitensor {

/// A symmetric tensor of degree k >= 1: a word-supported element of a single
/// degree that is invariant under every permutation of tensor positions.
class SymmetricTensor {
 public:
  /// Throws InvalidArgument if `carrier` is not symmetric.
  explicit SymmetricTensor(Element carrier);

  const Element& carrier() const noexcept { return carrier_; }
  int degree() const noexcept { return degree_; }

 private:
  Element carrier_;
  int degree_;
};

/// Unnormalized sum over all k! permutations of the letters of w.
SymmetricTensor symmetrize(const Word& w, int dim);

/// Δa == 1 ⊗̃ a + a ⊗̃ 1.
bool is_primitive(const Element& a);

/// φ(U) a with φ(z) = (1 - e^{-z}) / z = Σ_p (-1)^p z^p / (p+1)!.
Element phi_u(const Element& a);

/// φ(U) of a symmetric tensor; throws PrimitivityViolation if the result is
/// not primitive.
Element primitive_from_symmetric(const SymmetricTensor& v0);

/// Power series in t with coefficients in A, truncated after t^N.
struct TruncatedSeries {
  std::vector<Element> coefficients;

  std::size_t order() const noexcept { return coefficients.size() - 1; }
  /// Product under •, truncated to the order of the shorter factor.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
};

/// g_x = 1 + Σ_{k=1..N} t^k x^{⊗k}.
TruncatedSeries grouplike_series(Letter x, int order, int dim);

/// t^n coefficient of log g_x = Σ_m (-1)^{m+1} h^{•m} / m, h = g_x - 1.
Element grouplike_log_coefficient(Letter x, int n, int dim);

/// Δ g_x - g_x ⊗̃ g_x vanishes in every t-degree up to `order`.
bool truncated_grouplike_check(Letter x, int order, int dim);

/// (x_{l1} + ... + x_{ln})^{⊗k} equals the sum over tuples using every
/// position plus the signed sums over position-omitting subsets.
bool inclusion_exclusion_check(const std::vector<Letter>& letters, int k, int dim);

/// Basis of the degree-n primitive subspace, from the kernel of
/// v -> Δv - 1 ⊗̃ v - v ⊗̃ 1 in canonical coordinates.
std::vector<Element> prim_basis(int n, int d);

/// The φ(U)-images of symmetrized words of degree k, one per letter multiset.
/// Degree 1 gives the letters themselves.
std::vector<Element> symmetric_primitives(int k, int d);

struct DegreeDimension {
  int degree;
  std::size_t dimension;
  friend bool operator==(const DegreeDimension&, const DegreeDimension&) = default;
};

/// Graded Lie closure of the letters and the φ(U) S^k(V) for 2 <= k <= N,
/// under [a, b] = a|b - b|a. Returns one basis per degree 1..N.
std::vector<std::vector<Element>> lie_span_bases(int max_degree, int d);
std::vector<DegreeDimension> lie_span_dims(int max_degree, int d);

struct ConjectureRow {
  int degree;
  std::size_t lie_span_dim;
  std::size_t prim_dim;
  bool equal;
};

/// Per-degree comparison of the Lie span above with the full primitive space.
std::vector<ConjectureRow> conjecture_report(int max_degree, int d);

}  // namespace bitensor

#endif  // BITENSOR_PRIMITIVES_HPP
