#include "bitensor/pairing.hpp"

#include <algorithm>

#include "bitensor/basis.hpp"
#include "bitensor/errors.hpp"
#include "bitensor/hopf.hpp"
#include "bitensor/primitives.hpp"

namespace bitensor {

CompositionType::CompositionType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw EmptyPhrase("a composition type needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw InvalidArgument("composition parts must be positive");
    size_ += static_cast<std::size_t>(p);
  }
}

std::vector<Cell> CompositionType::cells() const {
  std::vector<Cell> out;
  out.reserve(size_);
  for (std::size_t q = 0; q < parts_.size(); ++q)
    for (int j = 1; j <= parts_[q]; ++j) out.push_back({static_cast<int>(q) + 1, j});
  return out;
}

CompositionType type_of(const Phrase& p) {
  if (p.is_unit()) throw EmptyPhrase("the unit phrase has no type");
  return CompositionType(p.lengths());
}

CompositionType left_justify(const std::vector<Cell>& cells) {
  std::map<int, int> per_row;
  for (const auto& c : cells) ++per_row[c.row];
  std::vector<int> parts;
  for (const auto& [row, count] : per_row) parts.push_back(count);
  return CompositionType(std::move(parts));
}

Phrase extract_subphrase(const Phrase& p, const std::vector<Cell>& cells) {
  std::vector<Cell> sorted = cells;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> row_start;
  std::size_t start = 0;
  for (int len : p.lengths()) {
    row_start.push_back(start);
    start += static_cast<std::size_t>(len);
  }
  std::vector<Letter> letters;
  std::vector<int> lengths;
  int current_row = 0;
  for (const auto& c : sorted) {
    if (c.row < 1 || static_cast<std::size_t>(c.row) > p.word_count() || c.col < 1 ||
        c.col > p.lengths()[static_cast<std::size_t>(c.row - 1)])
      throw InvalidArgument("cell outside the phrase diagram");
    letters.push_back(p.letters()[row_start[static_cast<std::size_t>(c.row - 1)] + static_cast<std::size_t>(c.col - 1)]);
    if (c.row != current_row) {
      lengths.push_back(0);
      current_row = c.row;
    }
    ++lengths.back();
  }
  return Phrase::from_parts(std::move(letters), std::move(lengths));
}

bool is_good_bijection(const CompositionType& j, const CompositionType& k, const GoodBijection& phi) {
  const auto jc = j.cells();
  const auto kc = k.cells();
  if (jc.size() != kc.size() || phi.image.size() != jc.size()) return false;
  std::vector<bool> hit(kc.size(), false);
  for (auto t : phi.image) {
    if (t >= kc.size() || hit[t]) return false;
    hit[t] = true;
  }
  for (std::size_t a = 0; a < jc.size(); ++a)
    for (std::size_t b = 0; b < jc.size(); ++b) {
      if (precedes_in_row(kc[phi.image[a]], kc[phi.image[b]]) && !(jc[a] < jc[b])) return false;
      if (precedes_in_row(jc[a], jc[b]) && !(kc[phi.image[a]] < kc[phi.image[b]])) return false;
    }
  return true;
}

namespace {

struct BijectionSearch {
  const std::vector<Cell>& jc;
  const std::vector<Cell>& kc;
  std::vector<std::size_t> image;
  std::vector<bool> used;
  std::vector<GoodBijection> out;

  // Cells before position i are assigned and lexicographically smaller than
  // jc[i], so only two local tests remain for a candidate target c:
  //   c ≺ φ(earlier)            would force jc[i] < earlier (false);
  //   earlier ≺ jc[i] (same row) requires φ(earlier) < c.
  bool admissible(std::size_t i, const Cell& c) const {
    for (std::size_t e = 0; e < i; ++e) {
      const Cell& target = kc[image[e]];
      if (precedes_in_row(c, target)) return false;
      if (jc[e].row == jc[i].row && !(target < c)) return false;
    }
    return true;
  }

  void run(std::size_t i) {
    if (i == jc.size()) {
      out.push_back({image});
      return;
    }
    for (std::size_t t = 0; t < kc.size(); ++t) {
      if (used[t] || !admissible(i, kc[t])) continue;
      used[t] = true;
      image[i] = t;
      run(i + 1);
      used[t] = false;
    }
  }
};

}  // namespace

std::vector<GoodBijection> good_bijections(const CompositionType& j, const CompositionType& k) {
  if (j.size() != k.size()) throw CardinalMismatch("types have different cell counts");
  const auto jc = j.cells();
  const auto kc = k.cells();
  BijectionSearch search{jc, kc, std::vector<std::size_t>(jc.size()), std::vector<bool>(kc.size(), false), {}};
  search.run(0);
  return std::move(search.out);
}

GoodBijection inverse(const GoodBijection& phi) {
  GoodBijection inv{std::vector<std::size_t>(phi.image.size())};
  for (std::size_t i = 0; i < phi.image.size(); ++i) inv.image[phi.image[i]] = i;
  return inv;
}

Integer horizontality(const CompositionType& j, const CompositionType& k, const GoodBijection& phi) {
  const auto jc = j.cells();
  const auto kc = k.cells();
  std::map<std::pair<int, int>, unsigned long> counts;
  for (std::size_t i = 0; i < jc.size(); ++i) ++counts[{jc[i].row, kc[phi.image[i]].row}];
  Integer h = 1;
  for (const auto& [rows, n] : counts) h *= factorial(n);
  return h;
}

std::vector<GoodCut> good_cuts(const CompositionType& k) {
  const auto& parts = k.parts();
  std::vector<int> prefix(parts.size(), 0);
  std::vector<GoodCut> out;
  while (true) {
    GoodCut cut;
    for (std::size_t q = 0; q < parts.size(); ++q)
      for (int j = 1; j <= parts[q]; ++j)
        (j <= prefix[q] ? cut.kept : cut.rest).push_back({static_cast<int>(q) + 1, j});
    out.push_back(std::move(cut));
    std::size_t q = parts.size();
    while (q > 0 && prefix[q - 1] == parts[q - 1]) prefix[--q] = 0;
    if (q == 0) break;
    ++prefix[q - 1];
  }
  return out;
}

const std::vector<PairingTable::Weighted>& PairingTable::bijections(const CompositionType& j,
                                                                     const CompositionType& k) const {
  auto key = std::make_pair(j, k);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::vector<Weighted> list;
  for (auto& phi : good_bijections(j, k)) {
    Rational w(Integer(1), horizontality(j, k, phi));
    list.push_back({std::move(phi), std::move(w)});
  }
  return cache_.emplace(std::move(key), std::move(list)).first->second;
}

Rational PairingTable::pair_phrases(const Phrase& v, const Phrase& alpha) const {
  if (v.is_unit() || alpha.is_unit()) return (v.is_unit() && alpha.is_unit()) ? 1 : 0;
  if (v.degree() != alpha.degree()) return 0;
  const auto& x = v.letters();
  const auto& xi = alpha.letters();
  Rational sum = 0;
  for (const auto& [phi, w] : bijections(type_of(v), type_of(alpha))) {
    bool match = true;
    for (std::size_t q = 0; q < x.size() && match; ++q) match = x[q] == xi[phi.image[q]];
    if (match) sum += w;
  }
  return sum;
}

Rational PairingTable::pair_phrases_dual(const Phrase& v, const Phrase& alpha) const {
  if (v.is_unit() || alpha.is_unit()) return (v.is_unit() && alpha.is_unit()) ? 1 : 0;
  if (v.degree() != alpha.degree()) return 0;
  const auto& x = v.letters();
  const auto& xi = alpha.letters();
  Rational sum = 0;
  for (const auto& [psi, w] : bijections(type_of(alpha), type_of(v))) {
    bool match = true;
    for (std::size_t q = 0; q < xi.size() && match; ++q) match = x[psi.image[q]] == xi[q];
    if (match) sum += w;
  }
  return sum;
}

namespace {

template <class PhrasePairing>
Rational bilinear(const Element& v, const Element& alpha, PhrasePairing&& f) {
  require_same_alphabet(v.dim(), alpha.dim());
  Rational sum = 0;
  for (const auto& [p, c] : v.terms())
    for (const auto& [q, e] : alpha.terms()) {
      if (p.degree() != q.degree()) continue;
      Rational val = f(p, q);
      if (val != 0) sum += c * e * val;
    }
  return sum;
}

Rational oracle_phrases(const Phrase& v, const Phrase& alpha, int dim) {
  if (v.is_unit() || alpha.is_unit()) return (v.is_unit() && alpha.is_unit()) ? 1 : 0;
  if (v.degree() != alpha.degree()) return 0;
  if (v.word_count() == 1) {
    if (v.letters() != alpha.letters()) return 0;
    Integer denom = 1;
    for (int k : alpha.lengths()) denom *= factorial(static_cast<unsigned long>(k));
    return Rational(Integer(1), denom);
  }
  const auto head = v.word_at(0);
  const Phrase first = Phrase::word(head);
  const Phrase rest = Phrase::from_parts(std::vector<Letter>(v.letters().begin() + static_cast<std::ptrdiff_t>(head.size()), v.letters().end()),
                                         std::vector<int>(v.lengths().begin() + 1, v.lengths().end()));
  Rational sum = 0;
  const Tensor2 delta = coproduct(alpha, dim);
  for (const auto& [key, c] : delta.terms()) {
    if (key.first.degree() != first.degree()) continue;
    Rational left = oracle_phrases(first, key.first, dim);
    if (left == 0) continue;
    sum += c * left * oracle_phrases(rest, key.second, dim);
  }
  return sum;
}

}  // namespace

Rational pair(const Element& v, const Element& alpha) {
  PairingTable table;
  return bilinear(v, alpha, [&](const Phrase& p, const Phrase& q) { return table.pair_phrases(p, q); });
}

Rational pair_dual_side(const Element& v, const Element& alpha) {
  PairingTable table;
  return bilinear(v, alpha, [&](const Phrase& p, const Phrase& q) { return table.pair_phrases_dual(p, q); });
}

Rational pair_oracle(const Element& v, const Element& alpha) {
  const int dim = v.dim();
  return bilinear(v, alpha, [&](const Phrase& p, const Phrase& q) { return oracle_phrases(p, q, dim); });
}

Matrix gram_matrix(int n, int d) {
  if (n < 1) throw InvalidArgument("gram_matrix: degree must be positive");
  const auto basis = basis_phrases(n, d);
  PairingTable table;
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) g(i, j) = table.pair_phrases(basis[i], basis[j]);
  return g;
}

std::vector<Element> radical_basis(int n, int d) {
  const auto basis = basis_phrases(n, d);
  std::vector<Element> out;
  for (const auto& v : kernel_basis(gram_matrix(n, d).transpose())) out.push_back(from_coords(v, basis, d));
  return out;
}

namespace {

// True when e pairs to zero with every column of the Gram matrix.
bool orthogonal_to_all(const Element& e, const BasisIndex& index, const Matrix& g) {
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Rational s = 0;
    for (const auto& [p, c] : e.terms()) s += c * g(index.index_of(p), j);
    if (s != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<Element> ideal_spanning_set(int n, int d) {
  std::vector<Element> out;
  for (int m = 2; m <= n; ++m) {
    const auto generators = symmetric_primitives(m, d);
    for (int i = 0; i <= n - m; ++i) {
      const auto left = basis_phrases(i, d);
      const auto right = basis_phrases(n - m - i, d);
      for (const auto& gen : generators)
        for (const auto& a : left)
          for (const auto& b : right) out.push_back(product(product(Element(d, a), gen), Element(d, b)));
    }
  }
  return out;
}

std::size_t ideal_dimension(int n, int d) {
  const BasisIndex index(basis_phrases(n, d));
  RowEchelon echelon(index.size());
  for (const auto& e : ideal_spanning_set(n, d)) echelon.insert(coords(e, index));
  return echelon.rank();
}

bool ideal_in_kernel_check(int n, int d) {
  if (n < 2) return true;
  const BasisIndex index(basis_phrases(n, d));
  const Matrix g = gram_matrix(n, d);
  for (const auto& e : ideal_spanning_set(n, d))
    if (!orthogonal_to_all(e, index, g)) return false;
  return true;
}

bool radical_ideal_check(int n, int d) {
  const auto radical = radical_basis(n, d);
  if (radical.empty()) return true;
  const BasisIndex index(basis_phrases(n + 1, d));
  const Matrix g = gram_matrix(n + 1, d);
  for (const auto& r : radical)
    for (Letter x = 1; x <= d; ++x) {
      const Element letter = Element::letter(d, x);
      if (!orthogonal_to_all(product(letter, r), index, g)) return false;
      if (!orthogonal_to_all(product(r, letter), index, g)) return false;
    }
  return true;
}

bool adjoint_antipode_check(int n, int d) {
  return adjoint_antipode_check(n, d, [](const Element& a) { return antipode(a); });
}

bool adjoint_antipode_check(int n, int d, const EndoMap& s) {
  const BasisIndex index(basis_phrases(n, d));
  const Matrix g = gram_matrix(n, d);
  std::vector<Element> images;
  for (const auto& p : index.phrases()) images.push_back(s(Element(d, p)));
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j) {
      Rational lhs = 0;  // <S b_i, b_j>
      for (const auto& [p, c] : images[i].terms()) lhs += c * g(index.index_of(p), j);
      Rational rhs = 0;  // <b_i, S b_j>
      for (const auto& [p, c] : images[j].terms()) rhs += c * g(i, index.index_of(p));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace bitensor
