#ifndef BITENSOR_HOPF_HPP
#define BITENSOR_HOPF_HPP

#include <functional>
#include <vector>

#include "bitensor/element.hpp"

namespace bitensor {

/// Outer product (•), bilinear extension of phrase concatenation.
Element product(const Element& a, const Element& b);

/// Inner product (⊗) of word-supported elements. Throws NotWordSupported if
/// either argument has a phrase of two or more words in its support.
Element tensor_word(const Element& a, const Element& b);

/// a^{⊗k}, with a^{⊗0} the unit.
Element tensor_power(const Element& a, int k);

/// Deconcatenation on words, extended multiplicatively to phrases.
Tensor2 coproduct(const Element& a);
Tensor2 coproduct(const Phrase& p, int dim);

/// Coefficient of the unit phrase.
Rational counit(const Element& a);

/// m : A ⊗̃ A -> A.
Element multiply(const Tensor2& t);

/// Componentwise product in A ⊗̃ A: (a ⊗̃ b)(c ⊗̃ d) = (a•c) ⊗̃ (b•d).
Tensor2 tensor_product(const Tensor2& s, const Tensor2& t);

/// (ε ⊗̃ id) t and (id ⊗̃ ε) t.
Element counit_left(const Tensor2& t);
Element counit_right(const Tensor2& t);

/// Algebra antimorphism with -I + 2uε on T(V):
/// w1|...|wr  ->  (-1)^r wr|...|w1.
Element s0(const Element& a);

/// The cut operator U: a derivation cutting one word into two nonempty words.
Element cut_operator(const Element& a);
Element cut_operator_power(const Element& a, int r);

/// Σ_r (-1)^r U^r / r!, summed until U^r vanishes (r <= degree).
Element exp_neg_u(const Element& a);

/// Antipode from the signed subset sum over the positions of a word that keep
/// ⊗, extended as an algebra antimorphism.
Element antipode_subset(const Element& a);

/// Antipode as exp(-U) ∘ S0. This is the production path.
Element antipode_exp(const Element& a);

inline Element antipode(const Element& a) { return antipode_exp(a); }

using EndoMap = std::function<Element(const Element&)>;

/// (f ⊗̃ g) t.
Tensor2 map_tensor(const EndoMap& f, const EndoMap& g, const Tensor2& t);

/// m ∘ (f ⊗̃ g) ∘ Δ applied to a.
Element convolve(const EndoMap& f, const EndoMap& g, const Element& a);

EndoMap identity_map();
/// u ∘ ε.
EndoMap unit_counit_map();
/// Pointwise f - g.
EndoMap difference(EndoMap f, EndoMap g);
/// f^{*k} by repeated convolution; f^{*0} is uε.
EndoMap convolution_power(EndoMap f, int k);

/// A linear map V -> W given on the basis letters of V.
struct LinearMapTable {
  int d_in;
  int d_out;
  /// columns[i] is the image of letter i+1: a combination of single letters over W.
  std::vector<Element> columns;

  static LinearMapTable identity(int d);
  /// Throws InvalidArgument unless every column is a degree-1 element over d_out.
  void validate() const;
};

/// A_f: letterwise substitution, expanded multilinearly inside each word.
Element induced_morphism(const LinearMapTable& f, const Element& a);

/// The table of g ∘ f.
LinearMapTable compose(const LinearMapTable& g, const LinearMapTable& f);

}  // namespace bitensor

#endif  // BITENSOR_HOPF_HPP
