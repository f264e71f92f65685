#include "bitensor/hopf.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "bitensor/errors.hpp"

namespace bitensor {

Element product(const Element& a, const Element& b) {
  require_same_alphabet(a.dim(), b.dim());
  Element out(a.dim());
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, e] : b.terms()) out.add_term(p | q, c * e);
  return out;
}

Element tensor_word(const Element& a, const Element& b) {
  require_same_alphabet(a.dim(), b.dim());
  if (!a.is_word_supported() || !b.is_word_supported())
    throw NotWordSupported("'*' needs operands supported on single words");
  Element out(a.dim());
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, e] : b.terms()) {
      Word w = p.letters();
      w.insert(w.end(), q.letters().begin(), q.letters().end());
      out.add_term(Phrase::word(w), c * e);
    }
  return out;
}

Element tensor_power(const Element& a, int k) {
  if (k < 0) throw InvalidArgument("negative tensor power");
  Element out = Element::unit(a.dim());
  for (int i = 0; i < k; ++i) out = tensor_word(out, a);
  return out;
}

Tensor2 coproduct(const Phrase& p, int dim) {
  Tensor2 out(dim);
  const auto& lengths = p.lengths();
  const auto& letters = p.letters();
  const std::size_t r = lengths.size();
  // cut[i] letters of word i go left, the rest go right.
  std::vector<int> cut(r, 0);
  while (true) {
    std::vector<Letter> left_letters, right_letters;
    std::vector<int> left_lengths, right_lengths;
    std::size_t start = 0;
    for (std::size_t i = 0; i < r; ++i) {
      const int len = lengths[i];
      const int c = cut[i];
      if (c > 0) {
        left_letters.insert(left_letters.end(), letters.begin() + static_cast<std::ptrdiff_t>(start),
                            letters.begin() + static_cast<std::ptrdiff_t>(start) + c);
        left_lengths.push_back(c);
      }
      if (c < len) {
        right_letters.insert(right_letters.end(), letters.begin() + static_cast<std::ptrdiff_t>(start) + c,
                             letters.begin() + static_cast<std::ptrdiff_t>(start) + len);
        right_lengths.push_back(len - c);
      }
      start += static_cast<std::size_t>(len);
    }
    out.add_term(Phrase::from_parts(std::move(left_letters), std::move(left_lengths)),
                 Phrase::from_parts(std::move(right_letters), std::move(right_lengths)), 1);
    std::size_t i = 0;
    while (i < r && cut[i] == lengths[i]) cut[i++] = 0;
    if (i == r) break;
    ++cut[i];
  }
  return out;
}

Tensor2 coproduct(const Element& a) {
  Tensor2 out(a.dim());
  for (const auto& [p, c] : a.terms()) {
    const Tensor2 t = coproduct(p, a.dim());
    for (const auto& [key, e] : t.terms()) out.add_term(key.first, key.second, c * e);
  }
  return out;
}

Rational counit(const Element& a) { return a.coeff(Phrase()); }

Element multiply(const Tensor2& t) {
  Element out(t.dim());
  for (const auto& [key, c] : t.terms()) out.add_term(key.first | key.second, c);
  return out;
}

Tensor2 tensor_product(const Tensor2& s, const Tensor2& t) {
  require_same_alphabet(s.dim(), t.dim());
  Tensor2 out(s.dim());
  for (const auto& [k1, c1] : s.terms())
    for (const auto& [k2, c2] : t.terms()) out.add_term(k1.first | k2.first, k1.second | k2.second, c1 * c2);
  return out;
}

Element counit_left(const Tensor2& t) {
  Element out(t.dim());
  for (const auto& [key, c] : t.terms())
    if (key.first.is_unit()) out.add_term(key.second, c);
  return out;
}

Element counit_right(const Tensor2& t) {
  Element out(t.dim());
  for (const auto& [key, c] : t.terms())
    if (key.second.is_unit()) out.add_term(key.first, c);
  return out;
}

Element s0(const Element& a) {
  Element out(a.dim());
  for (const auto& [p, c] : a.terms()) {
    auto words = p.words();
    std::reverse(words.begin(), words.end());
    out.add_term(Phrase::from_words(words), words.size() % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

Element cut_operator(const Element& a) {
  Element out(a.dim());
  for (const auto& [p, c] : a.terms()) {
    const auto& lengths = p.lengths();
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      for (int j = 1; j < lengths[i]; ++j) {
        std::vector<int> split;
        split.reserve(lengths.size() + 1);
        split.insert(split.end(), lengths.begin(), lengths.begin() + static_cast<std::ptrdiff_t>(i));
        split.push_back(j);
        split.push_back(lengths[i] - j);
        split.insert(split.end(), lengths.begin() + static_cast<std::ptrdiff_t>(i) + 1, lengths.end());
        out.add_term(Phrase::from_parts(p.letters(), std::move(split)), c);
      }
    }
  }
  return out;
}

Element cut_operator_power(const Element& a, int r) {
  if (r < 0) throw InvalidArgument("negative power of the cut operator");
  Element out = a;
  for (int i = 0; i < r && !out.is_zero(); ++i) out = cut_operator(out);
  return out;
}

Element exp_neg_u(const Element& a) {
  Element sum = a;
  Element term = a;
  for (int r = 1; !term.is_zero(); ++r) {
    term = cut_operator(term);
    term *= Rational(-1, r);
    sum += term;
  }
  return sum;
}

namespace {

// Subset-sum antipode of a single nonempty word. Bit j of `cuts` set means
// position j+1 carries • instead of ⊗.
Element word_antipode_subset(std::span<const Letter> w, int dim) {
  const int k = static_cast<int>(w.size());
  Element out(dim);
  const std::vector<Letter> letters(w.begin(), w.end());
  const std::uint32_t limit = 1u << (k - 1);
  for (std::uint32_t cuts = 0; cuts < limit; ++cuts) {
    const int tensor_positions = (k - 1) - std::popcount(cuts);
    std::vector<int> lengths;
    int run = 1;
    for (int j = 0; j < k - 1; ++j) {
      if (cuts & (1u << j)) {
        lengths.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    lengths.push_back(run);
    const Rational sign = (k + tensor_positions) % 2 == 0 ? 1 : -1;
    out.add_term(Phrase::from_parts(letters, std::move(lengths)), sign);
  }
  return out;
}

}  // namespace

Element antipode_subset(const Element& a) {
  Element out(a.dim());
  for (const auto& [p, c] : a.terms()) {
    Element img = Element::unit(a.dim(), c);
    // S(w1|...|wr) = S(wr)|...|S(w1)
    for (std::size_t i = 0; i < p.word_count(); ++i) img = product(word_antipode_subset(p.word_at(i), a.dim()), img);
    out += img;
  }
  return out;
}

Element antipode_exp(const Element& a) { return exp_neg_u(s0(a)); }

Tensor2 map_tensor(const EndoMap& f, const EndoMap& g, const Tensor2& t) {
  Tensor2 out(t.dim());
  for (const auto& [key, c] : t.terms()) {
    const Element fl = f(Element(t.dim(), key.first));
    if (fl.is_zero()) continue;
    const Element gr = g(Element(t.dim(), key.second));
    for (const auto& [l, cl] : fl.terms())
      for (const auto& [r, cr] : gr.terms()) out.add_term(l, r, c * cl * cr);
  }
  return out;
}

Element convolve(const EndoMap& f, const EndoMap& g, const Element& a) {
  return multiply(map_tensor(f, g, coproduct(a)));
}

EndoMap identity_map() {
  return [](const Element& a) { return a; };
}

EndoMap unit_counit_map() {
  return [](const Element& a) { return Element::unit(a.dim(), counit(a)); };
}

EndoMap difference(EndoMap f, EndoMap g) {
  return [f = std::move(f), g = std::move(g)](const Element& a) { return f(a) - g(a); };
}

EndoMap convolution_power(EndoMap f, int k) {
  if (k < 0) throw InvalidArgument("negative convolution power");
  EndoMap acc = unit_counit_map();
  for (int i = 0; i < k; ++i)
    acc = [f, prev = std::move(acc)](const Element& a) { return convolve(f, prev, a); };
  return acc;
}

LinearMapTable LinearMapTable::identity(int d) {
  LinearMapTable t{d, d, {}};
  for (int i = 1; i <= d; ++i) t.columns.push_back(Element::letter(d, i));
  return t;
}

void LinearMapTable::validate() const {
  if (d_in < 1 || d_out < 1) throw InvalidArgument("linear map dimensions must be positive");
  if (columns.size() != static_cast<std::size_t>(d_in)) throw InvalidArgument("need one column per input letter");
  for (const auto& col : columns) {
    if (col.dim() != d_out) throw AlphabetMismatch("column over the wrong output alphabet");
    for (const auto& [p, c] : col.terms())
      if (p.degree() != 1) throw InvalidArgument("columns must be combinations of single letters");
  }
}

Element induced_morphism(const LinearMapTable& f, const Element& a) {
  f.validate();
  require_same_alphabet(a.dim(), f.d_in);
  Element out(f.d_out);
  for (const auto& [p, c] : a.terms()) {
    Element img = Element::unit(f.d_out, c);
    for (std::size_t i = 0; i < p.word_count(); ++i) {
      Element w = Element::unit(f.d_out);
      for (Letter x : p.word_at(i)) w = tensor_word(w, f.columns[static_cast<std::size_t>(x - 1)]);
      img = product(img, w);
    }
    out += img;
  }
  return out;
}

LinearMapTable compose(const LinearMapTable& g, const LinearMapTable& f) {
  require_same_alphabet(f.d_out, g.d_in);
  LinearMapTable out{f.d_in, g.d_out, {}};
  for (const auto& col : f.columns) out.columns.push_back(induced_morphism(g, col));
  return out;
}

}  // namespace bitensor
