#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "bitensor/errors.hpp"
#include "bitensor/hopf.hpp"
#include "support.hpp"

using namespace bitensor;
using test::el;
using test::ph;

namespace {

Tensor2 t2(int d, std::initializer_list<std::tuple<Rational, Phrase, Phrase>> terms) {
  Tensor2 t(d);
  for (const auto& [c, l, r] : terms) t.add_term(l, r, c);
  return t;
}

// Antipode from the recursion S(w) = -w - Σ_{0<i<k} S(w[..i]) | w[i..] on
// words, extended as an antimorphism.
std::map<Word, Element> word_cache;

Element oracle_on_word(const Word& w, int d) {
  if (w.empty()) return Element::unit(d);
  if (auto it = word_cache.find(w); it != word_cache.end() && it->second.dim() == d) return it->second;
  Element out = -Element(d, Phrase::word(w));
  for (std::size_t i = 1; i < w.size(); ++i) {
    const Element left = oracle_on_word(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), d);
    const Phrase right = Phrase::word(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()));
    for (const auto& [p, c] : left.terms()) out.add_term(p | right, -c);
  }
  word_cache.insert_or_assign(w, out);
  return out;
}

Element oracle_antipode(const Phrase& p, int d) {
  Element acc = Element::unit(d);
  for (const auto& w : p.words()) {
    // S(a | b) = S(b) | S(a): prepend each new word's image.
    const Element s = oracle_on_word(w, d);
    Element next(d);
    for (const auto& [q, c] : s.terms())
      for (const auto& [r, e] : acc.terms()) next.add_term(q | r, c * e);
    acc = next;
  }
  return acc;
}

std::vector<Letter> sorted_letters(const Phrase& p) {
  auto v = p.letters();
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Phrase> upto(int n, int d) {
  std::vector<Phrase> out;
  for (int k = 0; k <= n; ++k) {
    auto b = basis_phrases(k, d);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

}  // namespace

TEST_CASE("product") {
  const int d = 3;
  const Element v = Element::word(d, {1, 2});
  CHECK(product(Element::unit(d), v) == v);
  CHECK(product(v, Element::letter(d, 3)) == Element(d, ph({{1, 2}, {3}})));
  CHECK(product(Element::letter(d, 1) + Element::letter(d, 2), Element::letter(d, 1)) ==
        el(d, {{1, ph({{1}, {1}})}, {1, ph({{2}, {1}})}}));
  CHECK_THROWS_AS(product(Element::letter(2, 1), Element::letter(3, 1)), AlphabetMismatch);
}

TEST_CASE("tensor_word") {
  const int d = 3;
  CHECK(tensor_word(Element::letter(d, 1), Element::letter(d, 2)) == Element::word(d, {1, 2}));
  CHECK(tensor_word(Element::unit(d), Element::word(d, {1, 2})) == Element::word(d, {1, 2}));
  CHECK_THROWS_AS(tensor_word(Element(d, ph({{1}, {2}})), Element::letter(d, 3)), NotWordSupported);
  CHECK(tensor_power(Element::letter(d, 2), 3) == Element::word(d, {2, 2, 2}));
  CHECK(tensor_power(Element::letter(d, 2), 0) == Element::unit(d));
}

TEST_CASE("coproduct") {
  const int d = 2;
  const Phrase one;
  CHECK(coproduct(Element::unit(d)) == t2(d, {{1, one, one}}));
  const Phrase x = ph({{1}});
  CHECK(coproduct(Element(d, x)) == t2(d, {{1, one, x}, {1, x, one}}));
  const Phrase x1x2 = ph({{1}, {2}});
  CHECK(coproduct(Element(d, x1x2)) ==
        t2(d, {{1, one, x1x2}, {1, ph({{1}}), ph({{2}})}, {1, ph({{2}}), ph({{1}})}, {1, x1x2, one}}));
  // Deconcatenation on a word.
  CHECK(coproduct(Element::word(d, {1, 2})) ==
        t2(d, {{1, one, ph({{1, 2}})}, {1, ph({{1}}), ph({{2}})}, {1, ph({{1, 2}}), one}}));
}

TEST_CASE("coproduct term count") {
  // Π (k_i + 1) terms before collecting; for distinct letters nothing collects.
  const Phrase p = ph({{1, 2, 3}, {4, 5}});
  CHECK(coproduct(p, 5).terms().size() == 12);
}

TEST_CASE("counit") {
  const int d = 2;
  CHECK(counit(Element::unit(d)) == 1);
  CHECK(counit(Element::word(d, {1, 2})) == 0);
  CHECK(counit(Element::unit(d, 3) + Element(d, ph({{1}, {1}}), 2)) == 3);
}

TEST_CASE("s0") {
  const int d = 3;
  CHECK(s0(Element::unit(d)) == Element::unit(d));
  CHECK(s0(Element::word(d, {1, 2})) == -Element::word(d, {1, 2}));
  CHECK(s0(Element(d, ph({{1}, {2, 3}}))) == Element(d, ph({{2, 3}, {1}})));
}

TEST_CASE("cut_operator") {
  const int d = 3;
  CHECK(cut_operator(Element::letter(d, 1)).is_zero());
  CHECK(cut_operator(Element::word(d, {1, 2})) == Element(d, ph({{1}, {2}})));
  CHECK(cut_operator(Element::word(d, {1, 2, 3})) == el(d, {{1, ph({{1}, {2, 3}})}, {1, ph({{1, 2}, {3}})}}));
  CHECK(cut_operator_power(Element::word(d, {1, 2, 3}), 2) == Element(d, ph({{1}, {2}, {3}}), 2));
  CHECK(cut_operator_power(Element::word(d, {1, 2, 3}), 3).is_zero());
}

TEST_CASE("cut operator preserves the letters of each phrase") {
  for (const auto& p : upto(5, 2)) {
    const Element u = cut_operator(Element(2, p));
    for (const auto& [q, c] : u.terms()) {
      CHECK(sorted_letters(q) == sorted_letters(p));
      CHECK(q.word_count() == p.word_count() + 1);
      CHECK(q.letters() == p.letters());
    }
  }
}

TEST_CASE("exp_neg_u") {
  const int d = 3;
  CHECK(exp_neg_u(Element::letter(d, 1)) == Element::letter(d, 1));
  CHECK(exp_neg_u(Element::word(d, {1, 2})) == el(d, {{1, ph({{1, 2}})}, {-1, ph({{1}, {2}})}}));
  CHECK(exp_neg_u(Element::word(d, {1, 2, 3})) ==
        el(d, {{1, ph({{1, 2, 3}})}, {-1, ph({{1}, {2, 3}})}, {-1, ph({{1, 2}, {3}})}, {1, ph({{1}, {2}, {3}})}}));
}

TEST_CASE("antipode_subset") {
  const int d = 3;
  CHECK(antipode_subset(Element::letter(d, 1)) == -Element::letter(d, 1));
  CHECK(antipode_subset(Element::word(d, {1, 2})) == el(d, {{1, ph({{1}, {2}})}, {-1, ph({{1, 2}})}}));
  CHECK(antipode_subset(Element::word(d, {1, 2, 3})) ==
        el(d, {{-1, ph({{1, 2, 3}})}, {1, ph({{1}, {2, 3}})}, {1, ph({{1, 2}, {3}})}, {-1, ph({{1}, {2}, {3}})}}));
}

TEST_CASE("antipode_exp") {
  const int d = 2;
  CHECK(antipode_exp(Element::unit(d)) == Element::unit(d));
  CHECK(antipode_exp(Element::word(d, {1, 2})) == el(d, {{1, ph({{1}, {2}})}, {-1, ph({{1, 2}})}}));
  CHECK(antipode_exp(Element(d, ph({{1}, {2}}))) == Element(d, ph({{2}, {1}})));
}

TEST_CASE("both antipodes match the recursive oracle") {
  for (int d = 1; d <= 2; ++d)
    for (const auto& p : upto(d == 1 ? 6 : 5, d)) {
      CAPTURE(p.letters());
      const Element want = oracle_antipode(p, d);
      CHECK(antipode_subset(Element(d, p)) == want);
      CHECK(antipode_exp(Element(d, p)) == want);
    }
}

TEST_CASE("even powers of the antipode") {
  const int d = 2;
  Element x = Element::word(d, {1, 2});
  for (int p = 1; p <= 10; ++p) {
    x = antipode(antipode(x));
    CHECK(x == el(d, {{1, ph({{1, 2}})}, {-p, ph({{1}, {2}})}, {p, ph({{2}, {1}})}}));
  }
}

TEST_CASE("convolve") {
  const int d = 3;
  const Element v = Element::word(d, {1, 2, 3});
  CHECK(convolve(unit_counit_map(), identity_map(), v) == v);
  CHECK(convolve([](const Element& a) { return antipode(a); }, identity_map(), Element::word(d, {1, 2})).is_zero());
  const EndoMap f = difference(unit_counit_map(), identity_map());
  CHECK(convolution_power(f, 2)(v) == el(d, {{1, ph({{1}, {2, 3}})}, {1, ph({{1, 2}, {3}})}}));
  CHECK(convolution_power(f, 1)(v) == -v);
  CHECK(convolution_power(f, 0)(v).is_zero());
}

TEST_CASE("random elements satisfy the bialgebra laws") {
  std::mt19937 rng(test::kSeed);
  for (int trial = 0; trial < 100; ++trial) {
    const Element a = test::random_element(rng, 2, 3, 4);
    const Element b = test::random_element(rng, 2, 3, 4);
    CHECK(coproduct(product(a, b)) == tensor_product(coproduct(a), coproduct(b)));
    CHECK(antipode(product(a, b)) == product(antipode(b), antipode(a)));
    CHECK(multiply(map_tensor([](const Element& e) { return antipode(e); }, identity_map(), coproduct(a))) ==
          Element::unit(2, counit(a)));
    CHECK(counit_left(coproduct(a)) == a);
    CHECK(counit_right(coproduct(a)) == a);
  }
}

TEST_CASE("induced morphisms") {
  const LinearMapTable id = LinearMapTable::identity(2);
  const Element sample = Element(2, ph({{1, 2}, {2}})) + Element::unit(2, 3);
  CHECK(induced_morphism(id, sample) == sample);

  const LinearMapTable sum{1, 2, {Element::letter(2, 1) + Element::letter(2, 2)}};
  CHECK(induced_morphism(sum, Element::word(1, {1, 1})) ==
        el(2, {{1, ph({{1, 1}})}, {1, ph({{1, 2}})}, {1, ph({{2, 1}})}, {1, ph({{2, 2}})}}));

  CHECK_THROWS_AS(induced_morphism(sum, Element::letter(2, 1)), AlphabetMismatch);
  CHECK_THROWS_AS((LinearMapTable{1, 2, {Element::word(2, {1, 1})}}.validate()), InvalidArgument);
}

TEST_CASE("induced morphisms are functorial and commute with the structure maps") {
  std::mt19937 rng(test::kSeed);
  auto random_table = [&](int d_in, int d_out) {
    LinearMapTable t{d_in, d_out, {}};
    std::uniform_int_distribution<int> c(-2, 2);
    for (int i = 0; i < d_in; ++i) {
      Element col(d_out);
      for (Letter y = 1; y <= d_out; ++y) col.add_term(ph({{y}}), c(rng));
      t.columns.push_back(col);
    }
    return t;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const LinearMapTable f = random_table(2, 3);
    const LinearMapTable g = random_table(3, 2);
    for (const auto& p : basis_phrases(3, 2)) {
      const Element a(2, p);
      const Element fa = induced_morphism(f, a);
      CHECK(induced_morphism(g, fa) == induced_morphism(compose(g, f), a));
      CHECK(antipode(fa) == induced_morphism(f, antipode(a)));
      CHECK(cut_operator(fa) == induced_morphism(f, cut_operator(a)));
      Tensor2 mapped(3);
      const Tensor2 delta = coproduct(a);
      for (const auto& [key, c] : delta.terms()) {
        const Tensor2 piece = tensor(induced_morphism(f, Element(2, key.first)), induced_morphism(f, Element(2, key.second)));
        for (const auto& [k2, c2] : piece.terms()) mapped.add_term(k2.first, k2.second, c * c2);
      }
      CHECK(coproduct(fa) == mapped);
    }
  }
}
