#ifndef BITENSOR_ELEMENT_HPP
#define BITENSOR_ELEMENT_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bitensor/rational.hpp"

namespace bitensor {

using Letter = int;
using Word = std::vector<Letter>;

/// A basis element of A_V: a product w1 | ... | wr of nonempty words.
///
/// Letters are stored concatenated in reading order together with the word
/// lengths. The empty phrase is the unit; there is no separate representation
/// of the empty word, so the unit of T(V) and the unit of the outer tensor
/// algebra coincide by construction.
///
/// Phrases are totally ordered by the canonical basis order: total degree,
/// then number of words, then the word-length sequence (lexicographic), then
/// the letter sequence (lexicographic).
class Phrase {
 public:
  Phrase() = default;

  /// Single-word phrase; an empty `word` gives the unit.
  static Phrase word(std::span<const Letter> letters);
  static Phrase word(std::initializer_list<Letter> letters);
  static Phrase from_words(const std::vector<Word>& words);
  /// Builds a phrase from concatenated letters and word lengths (all >= 1).
  static Phrase from_parts(std::vector<Letter> letters, std::vector<int> lengths);

  bool is_unit() const noexcept { return lengths_.empty(); }
  std::size_t degree() const noexcept { return letters_.size(); }
  std::size_t word_count() const noexcept { return lengths_.size(); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  const std::vector<int>& lengths() const noexcept { return lengths_; }
  std::span<const Letter> word_at(std::size_t i) const;
  std::vector<Word> words() const;

  Letter max_letter() const noexcept;

  /// Outer product (•): concatenation of the word lists.
  friend Phrase operator|(const Phrase& a, const Phrase& b);

  friend bool operator==(const Phrase&, const Phrase&) = default;
  friend bool operator<(const Phrase& a, const Phrase& b);

 private:
  std::vector<Letter> letters_;
  std::vector<int> lengths_;
};

/// A finite linear combination of phrases over an alphabet of size dim.
/// Stored coefficients are never zero; iteration follows canonical basis order.
class Element {
 public:
  using Terms = std::map<Phrase, Rational>;

  explicit Element(int dim);
  Element(int dim, const Phrase& p, const Rational& c = 1);

  static Element zero(int dim) { return Element(dim); }
  static Element unit(int dim, const Rational& c = 1) { return Element(dim, Phrase(), c); }
  static Element letter(int dim, Letter x);
  static Element word(int dim, std::span<const Letter> letters);
  static Element word(int dim, std::initializer_list<Letter> letters);

  int dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coeff(const Phrase& p) const;

  /// Adds c * p; letter indices are validated against dim.
  void add_term(const Phrase& p, const Rational& c);

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Rational& c);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Rational(-1); }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend bool operator==(const Element&, const Element&) = default;

  /// True when every phrase of the support has at most one word.
  bool is_word_supported() const;

 private:
  int dim_;
  Terms terms_;
};

Element add(const Element& a, const Element& b);
Element scale(const Rational& c, const Element& a);

/// An element of A ⊗̃ A.
class Tensor2 {
 public:
  using Key = std::pair<Phrase, Phrase>;
  using Terms = std::map<Key, Rational>;

  explicit Tensor2(int dim);

  int dim() const noexcept { return dim_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coeff(const Phrase& left, const Phrase& right) const;

  void add_term(const Phrase& left, const Phrase& right, const Rational& c);

  Tensor2& operator+=(const Tensor2& other);
  Tensor2& operator-=(const Tensor2& other);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  int dim_;
  Terms terms_;
};

/// a ⊗̃ b.
Tensor2 tensor(const Element& a, const Element& b);

void require_same_alphabet(int a, int b);

}  // namespace bitensor

#endif  // BITENSOR_ELEMENT_HPP
