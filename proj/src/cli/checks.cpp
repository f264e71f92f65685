#include "bitensor/checks.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "bitensor/basis.hpp"
#include "bitensor/cli/format.hpp"
#include "bitensor/cut_polynomials.hpp"
#include "bitensor/errors.hpp"
#include "bitensor/pairing.hpp"
#include "bitensor/primitives.hpp"

namespace bitensor::checks {

namespace {

std::vector<Phrase> basis_upto(int max_degree, int d) {
  std::vector<Phrase> out;
  for (int n = 0; n <= max_degree; ++n) {
    auto b = basis_phrases(n, d);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

std::string dims(int d) { return " [d=" + std::to_string(d) + "]"; }

// Records a failure once; later failures only bump the case count.
void fail(CheckResult& r, const std::string& detail) {
  if (r.passed) r.detail = detail;
  r.passed = false;
}

std::string show(const Phrase& p) { return cli::phrase_plain(p); }
std::string show(const Element& e) { return cli::element_plain(e); }

using Triple = std::tuple<Phrase, Phrase, Phrase>;
using Tensor3 = std::map<Triple, Rational>;

void add3(Tensor3& t, Triple key, const Rational& c) {
  auto [it, inserted] = t.try_emplace(std::move(key), c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) t.erase(it);
}

Element apply(const EndoMap& f, const Phrase& p, int d) { return f(Element(d, p)); }

}  // namespace

CheckResult coassociativity(int max_degree, int d) {
  CheckResult r = named("coassociativity" + dims(d));
  for (const auto& p : basis_upto(max_degree, d)) {
    ++r.cases;
    Tensor3 left, right;
    const Tensor2 t = coproduct(p, d);
    for (const auto& [k, c] : t.terms()) {
      const Tensor2 tl = coproduct(k.first, d);
      const Tensor2 tr = coproduct(k.second, d);
      for (const auto& [k2, c2] : tl.terms()) add3(left, {k2.first, k2.second, k.second}, c * c2);
      for (const auto& [k2, c2] : tr.terms()) add3(right, {k.first, k2.first, k2.second}, c * c2);
    }
    if (left != right) fail(r, "fails on " + show(p));
  }
  return r;
}

CheckResult counit_laws(int max_degree, int d) {
  CheckResult r = named("counit laws" + dims(d));
  for (const auto& p : basis_upto(max_degree, d)) {
    ++r.cases;
    const Tensor2 t = coproduct(p, d);
    const Element e(d, p);
    if (counit_left(t) != e || counit_right(t) != e) fail(r, "fails on " + show(p));
  }
  return r;
}

CheckResult bialgebra_compatibility(int max_degree, int d) {
  CheckResult r = named("bialgebra compatibility" + dims(d));
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j)
      for (const auto& a : basis_phrases(i, d)) {
        const Tensor2 da = coproduct(a, d);
        for (const auto& b : basis_phrases(j, d)) {
          ++r.cases;
          const Element ab = product(Element(d, a), Element(d, b));
          if (coproduct(ab) != tensor_product(da, coproduct(b, d)) ||
              counit(ab) != counit(Element(d, a)) * counit(Element(d, b)))
            fail(r, "fails on " + show(a) + " , " + show(b));
        }
      }
  return r;
}

CheckResult antipode_axiom(int max_degree, int d, const HopfMaps& maps) {
  CheckResult r = named("antipode axiom m(S⊗I)Δ = uε = m(I⊗S)Δ" + dims(d));
  const EndoMap id = identity_map();
  for (const auto& p : basis_upto(max_degree, d)) {
    ++r.cases;
    const Tensor2 t = coproduct(p, d);
    const Element expected = Element::unit(d, p.is_unit() ? 1 : 0);
    if (multiply(map_tensor(maps.antipode, id, t)) != expected ||
        multiply(map_tensor(id, maps.antipode, t)) != expected)
      fail(r, "fails on " + show(p));
  }
  return r;
}

CheckResult antipode_agreement(int max_degree, int d, const HopfMaps& maps) {
  CheckResult r = named("subset-sum antipode = exp(-U) S0" + dims(d));
  for (const auto& p : basis_upto(max_degree, d)) {
    ++r.cases;
    const Element a = apply(maps.antipode, p, d);
    const Element b = apply(maps.antipode_oracle, p, d);
    if (a != b) fail(r, "differ on " + show(p) + ": " + show(a) + " vs " + show(b));
  }
  return r;
}

CheckResult antipode_closed_forms(int max_p, const HopfMaps& maps) {
  CheckResult r = named("antipode closed forms");
  const int d = 3;
  auto ph = [](std::vector<Word> ws) { return Phrase::from_words(ws); };
  auto el = [&](std::initializer_list<std::pair<Rational, Phrase>> terms) {
    Element e(d);
    for (const auto& [c, p] : terms) e.add_term(p, c);
    return e;
  };
  auto expect = [&](const std::string& what, const Element& got, const Element& want) {
    ++r.cases;
    if (got != want) fail(r, what + ": got " + show(got) + ", expected " + show(want));
  };
  const Element x = Element::letter(d, 1);
  const Element xy = Element::word(d, {1, 2});
  expect("S(x)", maps.antipode(x), -x);
  expect("S(x*y)", maps.antipode(xy), el({{1, ph({{1}, {2}})}, {-1, ph({{1, 2}})}}));
  expect("S(x*y*z)", maps.antipode(Element::word(d, {1, 2, 3})),
         el({{-1, ph({{1, 2, 3}})}, {1, ph({{1}, {2, 3}})}, {1, ph({{1, 2}, {3}})}, {-1, ph({{1}, {2}, {3}})}}));
  Element power = xy;
  for (int p = 1; p <= max_p; ++p) {
    power = maps.antipode(maps.antipode(power));
    const Element want = el({{1, ph({{1, 2}})}, {-p, ph({{1}, {2}})}, {p, ph({{2}, {1}})}});
    expect("S^" + std::to_string(2 * p) + "(x*y)", power, want);
  }
  return r;
}

CheckResult s0_involution(int max_degree, int d) {
  CheckResult r = named("S0 involution" + dims(d));
  for (const auto& p : basis_upto(max_degree, d)) {
    ++r.cases;
    if (s0(s0(Element(d, p))) != Element(d, p)) fail(r, "fails on " + show(p));
  }
  return r;
}

namespace {

template <class F>
void for_pairs(int max_degree, int d, F&& f) {
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j)
      for (const auto& a : basis_phrases(i, d))
        for (const auto& b : basis_phrases(j, d)) f(a, b);
}

}  // namespace

CheckResult exp_neg_u_multiplicative(int max_degree, int d) {
  CheckResult r = named("exp(-U) multiplicative" + dims(d));
  for_pairs(max_degree, d, [&](const Phrase& a, const Phrase& b) {
    ++r.cases;
    const Element ea(d, a), eb(d, b);
    if (exp_neg_u(product(ea, eb)) != product(exp_neg_u(ea), exp_neg_u(eb)))
      fail(r, "fails on " + show(a) + " , " + show(b));
  });
  return r;
}

CheckResult cut_derivation(int max_degree, int d) {
  CheckResult r = named("U derivation" + dims(d));
  for_pairs(max_degree, d, [&](const Phrase& a, const Phrase& b) {
    ++r.cases;
    const Element ea(d, a), eb(d, b);
    if (cut_operator(product(ea, eb)) != product(cut_operator(ea), eb) + product(ea, cut_operator(eb)))
      fail(r, "fails on " + show(a) + " , " + show(b));
  });
  return r;
}

CheckResult cut_power_formula(int max_length, int d) {
  CheckResult r = named("U^r on words" + dims(d));
  for (int k = 1; k <= max_length; ++k)
    for (const auto& w : words_of_length(k, d))
      for (int rr = 0; rr <= k; ++rr) {
        ++r.cases;
        Element want(d);
        if (rr < k) {
          // r! times the sum over r-subsets of the k-1 cut positions.
          for (unsigned cuts = 0; cuts < (1u << (k - 1)); ++cuts) {
            if (std::popcount(cuts) != rr) continue;
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
            want.add_term(Phrase::from_parts(w, lengths), Rational(factorial(static_cast<unsigned long>(rr))));
          }
        }
        const Element got = cut_operator_power(Element(d, Phrase::word(w)), rr);
        if (got != want) fail(r, "U^" + std::to_string(rr) + " fails on " + show(Phrase::word(w)));
      }
  return r;
}

CheckResult convolution_identity(int max_length, int max_k, int d, const HopfMaps& maps) {
  CheckResult r = named("(uε - I)^{*k} = (-1)^k U^{k-1}/(k-1)! and S = 2uε - exp(-U) on words" + dims(d));
  const EndoMap f = difference(unit_counit_map(), identity_map());
  std::vector<EndoMap> powers;
  for (int k = 0; k <= max_k; ++k) powers.push_back(convolution_power(f, k));
  for (int len = 0; len <= max_length; ++len)
    for (const auto& w : words_of_length(len, d)) {
      const Element v(d, Phrase::word(w));
      Element u_power = cut_operator(v);  // U^{k-1} v / (k-1)! for k = 2
      for (int k = 2; k <= max_k; ++k) {
        ++r.cases;
        const Element want = Rational(k % 2 == 0 ? 1 : -1) * u_power;
        if (powers[static_cast<std::size_t>(k)](v) != want)
          fail(r, "k=" + std::to_string(k) + " fails on " + show(v));
        u_power = Rational(1, k) * cut_operator(u_power);
      }
      ++r.cases;
      if (maps.antipode(v) != Element::unit(d, 2 * counit(v)) - exp_neg_u(v))
        fail(r, "S = 2uε - exp(-U) fails on " + show(v));
    }
  return r;
}

CheckResult symmetric_primitives_are_primitive(int max_length, int d) {
  CheckResult r = named("φ(U) of symmetrized words is primitive" + dims(d));
  for (int k = 1; k <= max_length; ++k)
    for (const auto& w : words_of_length(k, d)) {
      ++r.cases;
      if (!is_primitive(phi_u(symmetrize(w, d).carrier()))) fail(r, "fails on " + show(Phrase::word(w)));
    }
  return r;
}

CheckResult log_coefficients(int max_n, int d) {
  CheckResult r = named("log g_x coefficients = φ(U) x^{⊗n}" + dims(d));
  for (Letter x = 1; x <= d; ++x)
    for (int n = 1; n <= max_n; ++n) {
      ++r.cases;
      if (grouplike_log_coefficient(x, n, d) != phi_u(tensor_power(Element::letter(d, x), n)))
        fail(r, "fails for x" + std::to_string(x) + ", n=" + std::to_string(n));
    }
  return r;
}

CheckResult grouplike_truncation(int order, int d) {
  CheckResult r = named("g_x grouplike to order " + std::to_string(order) + dims(d));
  for (Letter x = 1; x <= d; ++x) {
    ++r.cases;
    if (!truncated_grouplike_check(x, order, d)) fail(r, "fails for x" + std::to_string(x));
  }
  return r;
}

CheckResult inclusion_exclusion(int max_n, int max_k) {
  CheckResult r = named("inclusion-exclusion expansion");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Letter> letters;
    for (int i = 1; i <= n; ++i) letters.push_back(i);
    for (int k = 1; k <= max_k; ++k) {
      ++r.cases;
      if (!inclusion_exclusion_check(letters, k, n))
        fail(r, "fails for n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
  }
  return r;
}

CheckResult primitive_antipode(int max_degree, int d, const HopfMaps& maps) {
  CheckResult r = named("S(v) = -v on Prim" + dims(d));
  for (int n = 1; n <= max_degree; ++n)
    for (const auto& v : prim_basis(n, d)) {
      ++r.cases;
      if (!is_primitive(v)) fail(r, "basis element not primitive: " + show(v));
      if (maps.antipode(v) != -v) fail(r, "fails on " + show(v));
    }
  return r;
}

CheckResult lie_span_within_prim(int max_degree, int d) {
  CheckResult r = named("Lie span of P inside Prim" + dims(d));
  const auto bases = lie_span_bases(max_degree, d);
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    for (const auto& e : bases[i]) {
      ++r.cases;
      if (!is_primitive(e)) fail(r, "non-primitive Lie element " + show(e));
    }
    ++r.cases;
    const std::size_t prim = prim_basis(n, d).size();
    if (bases[i].size() > prim)
      fail(r, "degree " + std::to_string(n) + ": Lie span " + std::to_string(bases[i].size()) + " > Prim " +
                  std::to_string(prim));
  }
  return r;
}

CheckResult pairing_matches_oracle(int max_degree, int d) {
  CheckResult r = named("good-bijection pairing = coproduct oracle" + dims(d));
  PairingTable table;
  for (int n = 0; n <= max_degree; ++n) {
    const auto basis = basis_phrases(n, d);
    const auto lower = n > 0 ? basis_phrases(n - 1, d) : std::vector<Phrase>{};
    for (const auto& v : basis) {
      for (const auto& a : basis) {
        ++r.cases;
        const Rational lhs = table.pair_phrases(v, a);
        const Rational rhs = pair_oracle(Element(d, v), Element(d, a));
        if (lhs != rhs)
          fail(r, "<" + show(v) + ", " + show(a) + ">: " + to_string(lhs) + " vs oracle " + to_string(rhs));
      }
      // Degree orthogonality against one degree lower.
      for (const auto& a : lower) {
        ++r.cases;
        if (table.pair_phrases(v, a) != 0 || pair_oracle(Element(d, v), Element(d, a)) != 0)
          fail(r, "nonzero across degrees: " + show(v) + ", " + show(a));
      }
    }
  }
  return r;
}

CheckResult pairing_dual_sum(int max_degree, int d) {
  CheckResult r = named("σ_JK sum = σ_KJ sum" + dims(d));
  PairingTable table;
  for (int n = 0; n <= max_degree; ++n) {
    const auto basis = basis_phrases(n, d);
    for (const auto& v : basis)
      for (const auto& a : basis) {
        ++r.cases;
        if (table.pair_phrases(v, a) != table.pair_phrases_dual(v, a)) fail(r, "fails on " + show(v) + ", " + show(a));
      }
  }
  return r;
}

CheckResult hopf_pairing_law(int max_degree, int d) {
  CheckResult r = named("Hopf pairing law on both sides" + dims(d));
  PairingTable table;
  std::map<Phrase, Tensor2> deltas;
  auto delta = [&](const Phrase& p) -> const Tensor2& {
    auto it = deltas.find(p);
    if (it == deltas.end()) it = deltas.emplace(p, coproduct(p, d)).first;
    return it->second;
  };
  for (int n = 0; n <= max_degree; ++n) {
    const auto top = basis_phrases(n, d);
    for (int i = 0; i <= n; ++i) {
      const auto first = basis_phrases(i, d);
      const auto second = basis_phrases(n - i, d);
      for (const auto& p1 : first)
        for (const auto& p2 : second) {
          const Phrase joined = p1 | p2;
          for (const auto& q : top) {
            // <p1|p2, q> = <p1 ⊗̃ p2, Δq>
            ++r.cases;
            Rational rhs = 0;
            for (const auto& [k, c] : delta(q).terms()) {
              if (k.first.degree() != p1.degree()) continue;
              const Rational a = table.pair_phrases(p1, k.first);
              if (a != 0) rhs += c * a * table.pair_phrases(p2, k.second);
            }
            if (table.pair_phrases(joined, q) != rhs)
              fail(r, "<" + show(p1) + " | " + show(p2) + ", " + show(q) + "> differs from <⊗̃, Δ>");
            // <q, p1|p2> = <Δq, p1 ⊗̃ p2>
            ++r.cases;
            Rational rhs_dual = 0;
            for (const auto& [k, c] : delta(q).terms()) {
              if (k.first.degree() != p1.degree()) continue;
              const Rational a = table.pair_phrases(k.first, p1);
              if (a != 0) rhs_dual += c * a * table.pair_phrases(k.second, p2);
            }
            if (table.pair_phrases(q, joined) != rhs_dual)
              fail(r, "<" + show(q) + ", " + show(p1) + " | " + show(p2) + "> differs from <Δ, ⊗̃>");
          }
        }
    }
  }
  return r;
}

CheckResult bijection_duality(int max_cells) {
  CheckResult r = named("good bijection inverses and horizontality");
  for (int n = 1; n <= max_cells; ++n) {
    const auto comps = compositions(n);
    for (const auto& jp : comps)
      for (const auto& kp : comps) {
        const CompositionType j(jp), k(kp);
        const auto forward = good_bijections(j, k);
        const auto backward = good_bijections(k, j);
        ++r.cases;
        if (forward.size() != backward.size()) fail(r, "|σ_JK| != |σ_KJ| for some types of size " + std::to_string(n));
        for (const auto& phi : forward) {
          ++r.cases;
          const GoodBijection inv = inverse(phi);
          if (!is_good_bijection(j, k, phi)) fail(r, "enumerated map is not a good bijection");
          if (!std::binary_search(backward.begin(), backward.end(), inv)) fail(r, "inverse missing from σ_KJ");
          if (horizontality(j, k, phi) != horizontality(k, j, inv)) fail(r, "h_φ != h_φ^{-1}");
        }
      }
  }
  return r;
}

CheckResult good_cuts_match_coproduct(int max_degree, int d) {
  CheckResult r = named("good cuts reproduce Δ" + dims(d));
  for (int n = 1; n <= max_degree; ++n)
    for (const auto& p : basis_phrases(n, d)) {
      ++r.cases;
      Tensor2 t(d);
      for (const auto& cut : good_cuts(type_of(p)))
        t.add_term(extract_subphrase(p, cut.kept), extract_subphrase(p, cut.rest), 1);
      if (t != coproduct(p, d)) fail(r, "fails on " + show(p));
    }
  return r;
}

CheckResult antipodes_adjoint(int max_degree, int d, const HopfMaps& maps) {
  CheckResult r = named("<Sv, α> = <v, Sα>" + dims(d));
  for (int n = 1; n <= max_degree; ++n) {
    ++r.cases;
    if (!adjoint_antipode_check(n, d, maps.antipode)) fail(r, "fails in degree " + std::to_string(n));
  }
  return r;
}

CheckResult gram_degree_two() {
  CheckResult r = named("degree-2 Gram matrix [d=1]");
  ++r.cases;
  const Matrix g = gram_matrix(2, 1);
  const Matrix want{{Rational(1, 2), 1}, {1, 2}};
  if (g != want) fail(r, "unexpected entries");
  ++r.cases;
  if (rank(g) != 1) fail(r, "rank is not 1");
  ++r.cases;
  const auto rad = radical_basis(2, 1);
  const Element prim = phi_u(Element::word(1, {1, 1}));
  if (rad.size() != 1) {
    fail(r, "radical is not one-dimensional");
  } else {
    // Proportional: rad = c * prim for the ratio of leading coefficients.
    const Phrase lead = prim.terms().begin()->first;
    const Rational c = rad[0].coeff(lead) / prim.coeff(lead);
    if (rad[0] != c * prim) fail(r, "radical not spanned by φ(U)(x*x): " + show(rad[0]));
  }
  return r;
}

CheckResult phi_u_orthogonal_to_words(int max_length, int d) {
  CheckResult r = named("<φ(U) w, α> = 0 for words" + dims(d));
  PairingTable table;
  for (int k = 2; k <= max_length; ++k) {
    const auto words = words_of_length(k, d);
    for (const auto& w : words) {
      const Element e = phi_u(Element(d, Phrase::word(w)));
      for (const auto& a : words) {
        ++r.cases;
        const Phrase alpha = Phrase::word(a);
        Rational s = 0;
        for (const auto& [p, c] : e.terms()) s += c * table.pair_phrases(p, alpha);
        if (s != 0) fail(r, "fails on " + show(Phrase::word(w)) + ", " + show(alpha));
      }
    }
  }
  return r;
}

CheckResult ideal_in_radical(int max_degree, int d) {
  CheckResult r = named("ideal J inside the radical" + dims(d));
  for (int n = 2; n <= max_degree; ++n) {
    ++r.cases;
    if (!ideal_in_kernel_check(n, d)) fail(r, "fails in degree " + std::to_string(n));
  }
  return r;
}

CheckResult radical_is_ideal(int max_degree, int d) {
  CheckResult r = named("radical stable under letter multiplication" + dims(d));
  for (int n = 1; n < max_degree; ++n) {
    ++r.cases;
    if (!radical_ideal_check(n, d)) fail(r, "fails in degree " + std::to_string(n));
  }
  return r;
}

CheckResult pn_coefficients(int max_n) {
  CheckResult r = named("P_n coefficients = A_{n,k}");
  for (int n = 1; n <= max_n; ++n) {
    const Polynomial p = pn_polynomial(n);
    ++r.cases;
    if (p.coefficients().size() != static_cast<std::size_t>(n)) fail(r, "degree of P_" + std::to_string(n));
    for (int k = 0; k < n; ++k) {
      ++r.cases;
      if (p.coeff(static_cast<std::size_t>(k)) != Rational(a_nk(n, k)))
        fail(r, "coefficient t^" + std::to_string(k) + " of P_" + std::to_string(n));
    }
  }
  return r;
}

CheckResult pn_integrals(int max_n) {
  CheckResult r = named("∫_{-1}^0 P_n = [n = 1]");
  for (int n = 0; n <= max_n; ++n) {
    ++r.cases;
    const Rational want = n == 1 ? 1 : 0;
    if (pn_integral(n) != want) fail(r, "n=" + std::to_string(n) + " gives " + to_string(pn_integral(n)));
  }
  return r;
}

CheckResult generating_function(int max_n) {
  CheckResult r = named("generating function of P_n");
  ++r.cases;
  if (!gf_coefficient_check(max_n)) fail(r, "mismatch up to n=" + std::to_string(max_n));
  return r;
}

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "hopf") return Suite::Hopf;
  if (name == "pairing") return Suite::Pairing;
  if (name == "primitives") return Suite::Primitives;
  if (name == "lemma27" || name == "radical") return Suite::Radical;
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

std::vector<CheckResult> run_suite(Suite suite, const HopfMaps& maps, int max_degree) {
  auto cap = [max_degree](int bound) { return max_degree > 0 ? std::min(bound, max_degree) : bound; };
  // Degree bounds per alphabet size: index 0 for d = 1, index 1 for d = 2.
  auto per_d = [&](int d, int one, int two) { return cap(d == 1 ? one : two); };
  std::vector<CheckResult> out;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Hopf) {
    for (int d = 1; d <= 2; ++d) {
      out.push_back(coassociativity(cap(5), d));
      out.push_back(counit_laws(cap(5), d));
      out.push_back(bialgebra_compatibility(cap(4), d));
      out.push_back(antipode_axiom(cap(5), d, maps));
      out.push_back(antipode_agreement(cap(6), d, maps));
      out.push_back(s0_involution(cap(5), d));
      out.push_back(exp_neg_u_multiplicative(cap(4), d));
      out.push_back(cut_derivation(cap(4), d));
      out.push_back(cut_power_formula(cap(6), d));
      out.push_back(convolution_identity(cap(6), 6, d, maps));
    }
    out.push_back(antipode_closed_forms(10, maps));
  }
  if (all || suite == Suite::Primitives) {
    for (int d = 1; d <= 2; ++d) {
      out.push_back(symmetric_primitives_are_primitive(cap(6), d));
      out.push_back(log_coefficients(cap(6), d));
      out.push_back(grouplike_truncation(cap(6), d));
      out.push_back(primitive_antipode(per_d(d, 5, 4), d, maps));
      out.push_back(lie_span_within_prim(per_d(d, 5, 4), d));
    }
    out.push_back(inclusion_exclusion(cap(4), cap(4)));
  }
  if (all || suite == Suite::Pairing) {
    for (int d = 1; d <= 2; ++d) {
      out.push_back(pairing_matches_oracle(cap(5), d));
      out.push_back(pairing_dual_sum(cap(5), d));
      out.push_back(hopf_pairing_law(per_d(d, 5, 4), d));
      out.push_back(good_cuts_match_coproduct(per_d(d, 5, 4), d));
      out.push_back(antipodes_adjoint(per_d(d, 5, 4), d, maps));
    }
    out.push_back(bijection_duality(cap(6)));
    out.push_back(gram_degree_two());
  }
  if (all || suite == Suite::Radical) {
    for (int d = 1; d <= 2; ++d) {
      out.push_back(phi_u_orthogonal_to_words(cap(6), d));
      out.push_back(ideal_in_radical(cap(5), d));
      out.push_back(radical_is_ideal(per_d(d, 5, 4), d));
    }
    out.push_back(pn_coefficients(10));
    out.push_back(pn_integrals(12));
    out.push_back(generating_function(10));
  }
  return out;
}

}  // namespace bitensor::checks
