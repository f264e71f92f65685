#ifndef BITENSOR_CHECKS_HPP
#define BITENSOR_CHECKS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bitensor/hopf.hpp"

namespace bitensor::checks {

/// Outcome of one invariant over its whole range.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample on failure
};

/// The antipodes under test. Replacing one of them lets the harness itself be
/// tested against a deliberately broken map.
struct HopfMaps {
  EndoMap antipode = [](const Element& a) { return antipode_exp(a); };
  EndoMap antipode_oracle = [](const Element& a) { return antipode_subset(a); };
};

// hopf
CheckResult coassociativity(int max_degree, int d);
CheckResult counit_laws(int max_degree, int d);
/// Δ(a|b) = Δ(a)Δ(b) and ε(a|b) = ε(a)ε(b) over basis pairs of total degree <= max_degree.
CheckResult bialgebra_compatibility(int max_degree, int d);
CheckResult antipode_axiom(int max_degree, int d, const HopfMaps& maps = {});
CheckResult antipode_agreement(int max_degree, int d, const HopfMaps& maps = {});
/// S(x), S(x*y), S(x*y*z) and S^{2p}(x*y) for p = 1..max_p, over x = x1, y = x2, z = x3.
CheckResult antipode_closed_forms(int max_p, const HopfMaps& maps = {});
CheckResult s0_involution(int max_degree, int d);
CheckResult exp_neg_u_multiplicative(int max_degree, int d);
CheckResult cut_derivation(int max_degree, int d);
/// U^r w = r! Σ over r-subsets of cut positions, and 0 for r >= |w|.
CheckResult cut_power_formula(int max_length, int d);
/// (uε - I)^{*k} w = (-1)^k U^{k-1} w / (k-1)! and S(w) = 2uε(w) - exp(-U) w.
CheckResult convolution_identity(int max_length, int max_k, int d, const HopfMaps& maps = {});

// primitives
CheckResult symmetric_primitives_are_primitive(int max_length, int d);
CheckResult log_coefficients(int max_n, int d);
CheckResult grouplike_truncation(int order, int d);
CheckResult inclusion_exclusion(int max_n, int max_k);
CheckResult primitive_antipode(int max_degree, int d, const HopfMaps& maps = {});
CheckResult lie_span_within_prim(int max_degree, int d);

// pairing
CheckResult pairing_matches_oracle(int max_degree, int d);
CheckResult pairing_dual_sum(int max_degree, int d);
/// <v1|v2, α> = <v1 ⊗̃ v2, Δα> and <v, α1|α2> = <Δv, α1 ⊗̃ α2>.
CheckResult hopf_pairing_law(int max_degree, int d);
/// Inverses of good bijections are good with equal horizontality and
/// |σ_JK| = |σ_KJ|, for all types with at most max_cells cells.
CheckResult bijection_duality(int max_cells);
CheckResult good_cuts_match_coproduct(int max_degree, int d);
CheckResult antipodes_adjoint(int max_degree, int d, const HopfMaps& maps = {});
CheckResult gram_degree_two();

// pairing radical and cut polynomials
/// <φ(U) w, α> = 0 for words w, α of equal length 2..max_length.
CheckResult phi_u_orthogonal_to_words(int max_length, int d);
CheckResult ideal_in_radical(int max_degree, int d);
CheckResult radical_is_ideal(int max_degree, int d);
CheckResult pn_coefficients(int max_n);
CheckResult pn_integrals(int max_n);
CheckResult generating_function(int max_n);

enum class Suite { All, Hopf, Pairing, Primitives, Radical };

/// Throws InvalidArgument for an unknown name.
Suite parse_suite(std::string_view name);

/// Runs a suite at its default ranges. A positive max_degree caps every
/// degree bound in the suite.
std::vector<CheckResult> run_suite(Suite suite, const HopfMaps& maps = {}, int max_degree = 0);

}  // namespace bitensor::checks

#endif  // BITENSOR_CHECKS_HPP
