#include "bitensor/basis.hpp"

#include <algorithm>

#include "bitensor/errors.hpp"

namespace bitensor {

namespace {

void compositions_with_parts(int n, int parts, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (n == 0) out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= n - (parts - 1); ++first) {
    prefix.push_back(first);
    compositions_with_parts(n - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> compositions(int n) {
  if (n < 0) throw InvalidArgument("negative degree");
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  for (int parts = 1; parts <= n; ++parts) compositions_with_parts(n, parts, prefix, out);
  return out;
}

std::vector<Word> words_of_length(int k, int d) {
  if (k < 0 || d < 1) throw InvalidArgument("words_of_length: need k >= 0 and d >= 1");
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(k), 1);
  while (true) {
    out.push_back(w);
    int i = k - 1;
    while (i >= 0 && w[static_cast<std::size_t>(i)] == d) w[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++w[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<Phrase> basis_phrases(int n, int d) {
  if (n < 0 || d < 1) throw InvalidArgument("basis_phrases: need n >= 0 and d >= 1");
  std::vector<Phrase> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const auto fillings = words_of_length(n, d);
  for (const auto& comp : compositions(n))
    for (const auto& letters : fillings) out.push_back(Phrase::from_parts(letters, comp));
  return out;
}

BasisIndex::BasisIndex(std::vector<Phrase> phrases) : phrases_(std::move(phrases)) {
  for (std::size_t i = 0; i < phrases_.size(); ++i) index_.emplace(phrases_[i], i);
}

std::size_t BasisIndex::index_of(const Phrase& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw UnknownBasisPhrase("phrase not in basis");
  return it->second;
}

std::vector<Rational> coords(const Element& e, const BasisIndex& basis) {
  std::vector<Rational> v(basis.size());
  for (const auto& [p, c] : e.terms()) v[basis.index_of(p)] = c;
  return v;
}

std::vector<Rational> coords(const Element& e, const std::vector<Phrase>& basis) {
  return coords(e, BasisIndex(basis));
}

Element from_coords(const std::vector<Rational>& v, const std::vector<Phrase>& basis, int dim) {
  if (v.size() != basis.size()) throw InvalidArgument("coordinate vector length differs from basis size");
  Element e(dim);
  for (std::size_t i = 0; i < v.size(); ++i) e.add_term(basis[i], v[i]);
  return e;
}

}  // namespace bitensor
