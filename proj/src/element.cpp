#include "bitensor/element.hpp"

#include <algorithm>
#include <string>

#include "bitensor/errors.hpp"

namespace bitensor {

Phrase Phrase::word(std::span<const Letter> letters) {
  Phrase p;
  if (letters.empty()) return p;
  p.letters_.assign(letters.begin(), letters.end());
  p.lengths_.push_back(static_cast<int>(letters.size()));
  return p;
}

Phrase Phrase::word(std::initializer_list<Letter> letters) {
  return word(std::span<const Letter>(letters.begin(), letters.size()));
}

Phrase Phrase::from_words(const std::vector<Word>& words) {
  Phrase p;
  for (const auto& w : words) {
    if (w.empty()) throw InvalidArgument("phrases cannot contain the empty word");
    p.letters_.insert(p.letters_.end(), w.begin(), w.end());
    p.lengths_.push_back(static_cast<int>(w.size()));
  }
  return p;
}

Phrase Phrase::from_parts(std::vector<Letter> letters, std::vector<int> lengths) {
  std::size_t total = 0;
  for (int len : lengths) {
    if (len < 1) throw InvalidArgument("word lengths must be positive");
    total += static_cast<std::size_t>(len);
  }
  if (total != letters.size()) throw InvalidArgument("word lengths do not cover the letters");
  Phrase p;
  p.letters_ = std::move(letters);
  p.lengths_ = std::move(lengths);
  return p;
}

std::span<const Letter> Phrase::word_at(std::size_t i) const {
  std::size_t start = 0;
  for (std::size_t k = 0; k < i; ++k) start += static_cast<std::size_t>(lengths_[k]);
  return std::span<const Letter>(letters_).subspan(start, static_cast<std::size_t>(lengths_.at(i)));
}

std::vector<Word> Phrase::words() const {
  std::vector<Word> out;
  out.reserve(lengths_.size());
  auto it = letters_.begin();
  for (int len : lengths_) {
    out.emplace_back(it, it + len);
    it += len;
  }
  return out;
}

Letter Phrase::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Phrase operator|(const Phrase& a, const Phrase& b) {
  Phrase p = a;
  p.letters_.insert(p.letters_.end(), b.letters_.begin(), b.letters_.end());
  p.lengths_.insert(p.lengths_.end(), b.lengths_.begin(), b.lengths_.end());
  return p;
}

bool operator<(const Phrase& a, const Phrase& b) {
  if (a.letters_.size() != b.letters_.size()) return a.letters_.size() < b.letters_.size();
  if (a.lengths_.size() != b.lengths_.size()) return a.lengths_.size() < b.lengths_.size();
  if (a.lengths_ != b.lengths_) return a.lengths_ < b.lengths_;
  return a.letters_ < b.letters_;
}

void require_same_alphabet(int a, int b) {
  if (a != b)
    throw AlphabetMismatch("alphabet sizes differ: " + std::to_string(a) + " vs " + std::to_string(b));
}

namespace {

void check_letters(const Phrase& p, int dim) {
  for (Letter x : p.letters())
    if (x < 1 || x > dim)
      throw LetterOutOfRange("letter x" + std::to_string(x) + " outside alphabet 1.." + std::to_string(dim));
}

template <class Map>
void accumulate(Map& terms, const typename Map::key_type& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

}  // namespace

Element::Element(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidArgument("alphabet size must be positive");
}

Element::Element(int dim, const Phrase& p, const Rational& c) : Element(dim) { add_term(p, c); }

Element Element::letter(int dim, Letter x) { return Element(dim, Phrase::word({x})); }

Element Element::word(int dim, std::span<const Letter> letters) { return Element(dim, Phrase::word(letters)); }

Element Element::word(int dim, std::initializer_list<Letter> letters) {
  return Element(dim, Phrase::word(letters));
}

Rational Element::coeff(const Phrase& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const Phrase& p, const Rational& c) {
  check_letters(p, dim_);
  accumulate(terms_, p, c);
}

Element& Element::operator+=(const Element& other) {
  require_same_alphabet(dim_, other.dim_);
  for (const auto& [p, c] : other.terms_) accumulate(terms_, p, c);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_alphabet(dim_, other.dim_);
  for (const auto& [p, c] : other.terms_) accumulate(terms_, p, Rational(-c));
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

bool Element::is_word_supported() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.word_count() <= 1; });
}

Element add(const Element& a, const Element& b) { return a + b; }

Element scale(const Rational& c, const Element& a) { return c * a; }

Tensor2::Tensor2(int dim) : dim_(dim) {
  if (dim < 1) throw InvalidArgument("alphabet size must be positive");
}

Rational Tensor2::coeff(const Phrase& left, const Phrase& right) const {
  auto it = terms_.find(Key(left, right));
  return it == terms_.end() ? Rational(0) : it->second;
}

void Tensor2::add_term(const Phrase& left, const Phrase& right, const Rational& c) {
  check_letters(left, dim_);
  check_letters(right, dim_);
  accumulate(terms_, Key(left, right), c);
}

Tensor2& Tensor2::operator+=(const Tensor2& other) {
  require_same_alphabet(dim_, other.dim_);
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& other) {
  require_same_alphabet(dim_, other.dim_);
  for (const auto& [k, c] : other.terms_) accumulate(terms_, k, Rational(-c));
  return *this;
}

Tensor2 tensor(const Element& a, const Element& b) {
  require_same_alphabet(a.dim(), b.dim());
  Tensor2 out(a.dim());
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, e] : b.terms()) out.add_term(p, q, c * e);
  return out;
}

}  // namespace bitensor
