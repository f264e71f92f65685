#include "bitensor/primitives.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "bitensor/basis.hpp"
#include "bitensor/errors.hpp"
#include "bitensor/hopf.hpp"
#include "bitensor/linalg.hpp"

namespace bitensor {

SymmetricTensor::SymmetricTensor(Element carrier) : carrier_(std::move(carrier)), degree_(0) {
  if (carrier_.is_zero()) throw InvalidArgument("symmetric tensor must be nonzero");
  degree_ = static_cast<int>(carrier_.terms().begin()->first.degree());
  if (degree_ < 1) throw InvalidArgument("symmetric tensor must have positive degree");
  for (const auto& [p, c] : carrier_.terms()) {
    if (p.word_count() != 1) throw InvalidArgument("symmetric tensor must be supported on single words");
    if (static_cast<int>(p.degree()) != degree_) throw InvalidArgument("symmetric tensor must be homogeneous");
    // Adjacent transpositions generate the symmetric group.
    for (int i = 0; i + 1 < degree_; ++i) {
      Word w = p.letters();
      std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i + 1)]);
      if (carrier_.coeff(Phrase::word(w)) != c) throw InvalidArgument("tensor is not symmetric");
    }
  }
}

SymmetricTensor symmetrize(const Word& w, int dim) {
  std::vector<std::size_t> perm(w.size());
  std::iota(perm.begin(), perm.end(), 0);
  Element sum(dim);
  do {
    Word permuted(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) permuted[i] = w[perm[i]];
    sum.add_term(Phrase::word(permuted), 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SymmetricTensor(std::move(sum));
}

bool is_primitive(const Element& a) {
  Tensor2 defect = coproduct(a);
  defect -= tensor(Element::unit(a.dim()), a);
  defect -= tensor(a, Element::unit(a.dim()));
  return defect.is_zero();
}

Element phi_u(const Element& a) {
  // term = U^p a / p!, weighted by (-1)^p / (p+1).
  Element sum = a;
  Element term = a;
  for (int p = 1;; ++p) {
    term = cut_operator(term);
    if (term.is_zero()) break;
    term *= Rational(1, p);
    sum += Rational(p % 2 == 0 ? 1 : -1, p + 1) * term;
  }
  return sum;
}

Element primitive_from_symmetric(const SymmetricTensor& v0) {
  Element v = phi_u(v0.carrier());
  if (!is_primitive(v)) throw PrimitivityViolation("φ(U) of a symmetric tensor failed the primitivity test");
  return v;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.coefficients.size(), b.coefficients.size());
  const int dim = a.coefficients.front().dim();
  TruncatedSeries out{std::vector<Element>(n, Element(dim))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) {
      if (a.coefficients[i].is_zero() || b.coefficients[j].is_zero()) continue;
      out.coefficients[i + j] += product(a.coefficients[i], b.coefficients[j]);
    }
  return out;
}

TruncatedSeries grouplike_series(Letter x, int order, int dim) {
  if (order < 0) throw InvalidArgument("negative truncation order");
  TruncatedSeries g{std::vector<Element>(static_cast<std::size_t>(order) + 1, Element(dim))};
  g.coefficients[0] = Element::unit(dim);
  const Element letter = Element::letter(dim, x);
  for (int k = 1; k <= order; ++k) g.coefficients[static_cast<std::size_t>(k)] = tensor_power(letter, k);
  return g;
}

Element grouplike_log_coefficient(Letter x, int n, int dim) {
  if (n < 1) throw InvalidArgument("log coefficient index must be positive");
  TruncatedSeries h = grouplike_series(x, n, dim);
  h.coefficients[0] = Element(dim);
  // h^{•m} has no terms below t^m, so m <= n suffices.
  Element out(dim);
  TruncatedSeries power = h;
  for (int m = 1; m <= n; ++m) {
    out += Rational(m % 2 == 1 ? 1 : -1, m) * power.coefficients[static_cast<std::size_t>(n)];
    power = power * h;
  }
  return out;
}

bool truncated_grouplike_check(Letter x, int order, int dim) {
  const TruncatedSeries g = grouplike_series(x, order, dim);
  for (int m = 0; m <= order; ++m) {
    Tensor2 defect = coproduct(g.coefficients[static_cast<std::size_t>(m)]);
    for (int i = 0; i <= m; ++i)
      defect -= tensor(g.coefficients[static_cast<std::size_t>(i)], g.coefficients[static_cast<std::size_t>(m - i)]);
    if (!defect.is_zero()) return false;
  }
  return true;
}

bool inclusion_exclusion_check(const std::vector<Letter>& letters, int k, int dim) {
  const int n = static_cast<int>(letters.size());
  if (n < 1 || k < 1) throw InvalidArgument("inclusion_exclusion_check: need n >= 1 and k >= 1");
  if (n > 20) throw InvalidArgument("inclusion_exclusion_check: too many letters");

  auto partial_sum = [&](unsigned omitted) {
    Element s(dim);
    for (int i = 0; i < n; ++i)
      if (!(omitted & (1u << i))) s += Element::letter(dim, letters[static_cast<std::size_t>(i)]);
    return s;
  };

  const Element lhs = tensor_power(partial_sum(0), k);

  // Tuples of positions in {0..n-1}^k that use every position.
  Element rhs(dim);
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  while (true) {
    unsigned seen = 0;
    for (int j : tuple) seen |= 1u << j;
    if (seen == (1u << n) - 1) {
      Word w;
      for (int j : tuple) w.push_back(letters[static_cast<std::size_t>(j)]);
      rhs.add_term(Phrase::word(w), 1);
    }
    int i = k - 1;
    while (i >= 0 && tuple[static_cast<std::size_t>(i)] == n - 1) tuple[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++tuple[static_cast<std::size_t>(i)];
  }
  for (unsigned omitted = 1; omitted < (1u << n); ++omitted) {
    const int p = std::popcount(omitted);
    rhs += Rational(p % 2 == 1 ? 1 : -1) * tensor_power(partial_sum(omitted), k);
  }
  return lhs == rhs;
}

std::vector<Element> prim_basis(int n, int d) {
  if (n < 1) throw InvalidArgument("prim_basis: degree must be positive");
  const std::vector<Phrase> basis = basis_phrases(n, d);
  // One constraint row per (left, right) pair of the reduced coproduct.
  std::map<Tensor2::Key, SparseVector> rows;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Tensor2 delta = coproduct(basis[j], d);
    for (const auto& [key, c] : delta.terms()) {
      if (key.first.is_unit() || key.second.is_unit()) continue;
      rows[key].emplace_back(j, c);
    }
  }
  RowEchelon ech(basis.size());
  for (auto& [key, row] : rows) ech.insert(std::move(row));
  std::vector<Element> out;
  for (const auto& v : ech.kernel_basis()) out.push_back(from_coords(v, basis, d));
  return out;
}

std::vector<Element> symmetric_primitives(int k, int d) {
  if (k < 1) throw InvalidArgument("symmetric_primitives: degree must be positive");
  std::vector<Element> out;
  for (const Word& w : words_of_length(k, d)) {
    if (!std::is_sorted(w.begin(), w.end())) continue;
    out.push_back(phi_u(symmetrize(w, d).carrier()));
  }
  return out;
}

std::vector<std::vector<Element>> lie_span_bases(int max_degree, int d) {
  if (max_degree < 1) throw InvalidArgument("lie_span: degree bound must be positive");
  std::vector<std::vector<Element>> bases(static_cast<std::size_t>(max_degree) + 1);
  for (int n = 1; n <= max_degree; ++n) {
    const BasisIndex index(basis_phrases(n, d));
    RowEchelon ech(index.size());
    auto& out = bases[static_cast<std::size_t>(n)];
    auto offer = [&](const Element& e) {
      if (e.is_zero()) return;
      if (ech.insert(coords(e, index))) out.push_back(e);
    };
    for (const auto& g : symmetric_primitives(n, d)) offer(g);
    for (int i = 1; i < n; ++i)
      for (const auto& a : bases[static_cast<std::size_t>(i)])
        for (const auto& b : bases[static_cast<std::size_t>(n - i)]) offer(product(a, b) - product(b, a));
  }
  bases.erase(bases.begin());
  return bases;
}

std::vector<DegreeDimension> lie_span_dims(int max_degree, int d) {
  std::vector<DegreeDimension> out;
  const auto bases = lie_span_bases(max_degree, d);
  for (std::size_t i = 0; i < bases.size(); ++i) out.push_back({static_cast<int>(i) + 1, bases[i].size()});
  return out;
}

std::vector<ConjectureRow> conjecture_report(int max_degree, int d) {
  std::vector<ConjectureRow> out;
  for (const auto& [n, lie] : lie_span_dims(max_degree, d)) {
    const std::size_t prim = prim_basis(n, d).size();
    out.push_back({n, lie, prim, lie == prim});
  }
  return out;
}

}  // namespace bitensor
