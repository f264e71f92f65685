#ifndef BITENSOR_BASIS_HPP
#define BITENSOR_BASIS_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "bitensor/element.hpp"

namespace bitensor {

/// Compositions of n in canonical order: fewer parts first, then
/// lexicographic on the parts. compositions(0) is the single empty composition.
std::vector<std::vector<int>> compositions(int n);

/// All words of length k over {1..d} in lexicographic order.
std::vector<Word> words_of_length(int k, int d);

/// The degree-n basis of A_V for dim V = d, in canonical basis order:
/// composition order first, then letter fillings lexicographically.
/// Size is 2^(n-1) d^n for n >= 1 and 1 (the unit) for n = 0.
std::vector<Phrase> basis_phrases(int n, int d);

/// An ordered basis with O(log n) phrase lookup.
class BasisIndex {
 public:
  explicit BasisIndex(std::vector<Phrase> phrases);

  const std::vector<Phrase>& phrases() const noexcept { return phrases_; }
  std::size_t size() const noexcept { return phrases_.size(); }
  const Phrase& operator[](std::size_t i) const { return phrases_[i]; }

  /// Position of p; throws UnknownBasisPhrase when absent.
  std::size_t index_of(const Phrase& p) const;
  bool contains(const Phrase& p) const { return index_.count(p) != 0; }

 private:
  std::vector<Phrase> phrases_;
  std::map<Phrase, std::size_t> index_;
};

std::vector<Rational> coords(const Element& e, const BasisIndex& basis);
std::vector<Rational> coords(const Element& e, const std::vector<Phrase>& basis);

/// Inverse of coords.
Element from_coords(const std::vector<Rational>& v, const std::vector<Phrase>& basis, int dim);

}  // namespace bitensor

#endif  // BITENSOR_BASIS_HPP
