#ifndef BITENSOR_PAIRING_HPP
#define BITENSOR_PAIRING_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bitensor/element.hpp"
#include "bitensor/hopf.hpp"
#include "bitensor/linalg.hpp"

namespace bitensor {

/// A cell (row, col) of a left-justified diagram, 1-based. The defaulted
/// comparison is the strict lexicographic order.
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Same row, strictly smaller column.
inline bool precedes_in_row(const Cell& a, const Cell& b) { return a.row == b.row && a.col < b.col; }

/// The word-length sequence of a nonempty phrase, viewed as the diagram
/// {(q, j) : 1 <= j <= parts[q-1]}.
class CompositionType {
 public:
  explicit CompositionType(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t rows() const noexcept { return parts_.size(); }
  /// Total number of cells.
  std::size_t size() const noexcept { return size_; }
  /// Cells in lexicographic order; position i corresponds to the i-th letter.
  std::vector<Cell> cells() const;

  friend bool operator==(const CompositionType&, const CompositionType&) = default;
  friend auto operator<=>(const CompositionType&, const CompositionType&) = default;

 private:
  std::vector<int> parts_;
  std::size_t size_ = 0;
};

/// Throws EmptyPhrase for the unit.
CompositionType type_of(const Phrase& p);

/// Compacts each row of a cell set to an initial segment and drops empty rows.
CompositionType left_justify(const std::vector<Cell>& cells);

/// The phrase of type left_justify(cells) whose letters are those of p at
/// `cells`, in lexicographic order. An empty selection gives the unit.
Phrase extract_subphrase(const Phrase& p, const std::vector<Cell>& cells);

/// image[i] is the lexicographic index in K of the image of the i-th cell of J.
struct GoodBijection {
  std::vector<std::size_t> image;
  friend bool operator==(const GoodBijection&, const GoodBijection&) = default;
  friend auto operator<=>(const GoodBijection&, const GoodBijection&) = default;
};

/// Direct test of the two defining implications:
///   φ(a) ≺ φ(b)  =>  a < b,      a ≺ b  =>  φ(a) < φ(b).
bool is_good_bijection(const CompositionType& j, const CompositionType& k, const GoodBijection& phi);

/// All good bijections J -> K. J's cells are assigned in lexicographic order
/// and candidate K cells are tried in lexicographic order, so the output is
/// sorted. Throws CardinalMismatch when |J| != |K|.
std::vector<GoodBijection> good_bijections(const CompositionType& j, const CompositionType& k);

GoodBijection inverse(const GoodBijection& phi);

/// Π_{p,q} card(φ(J_p) ∩ K_q)!.
Integer horizontality(const CompositionType& j, const CompositionType& k, const GoodBijection& phi);

/// Partitions (K', K'') of K's cells where K' is a prefix of every row.
struct GoodCut {
  std::vector<Cell> kept;
  std::vector<Cell> rest;
};

/// All Π(k_q + 1) good cuts; the prefix length of the last row varies fastest.
std::vector<GoodCut> good_cuts(const CompositionType& k);

/// Good bijections of one pair of types with their weights 1/h_φ, enumerated
/// on first use. A table is a local working object; do not share one across
/// threads.
class PairingTable {
 public:
  struct Weighted {
    GoodBijection phi;
    Rational weight;
  };

  const std::vector<Weighted>& bijections(const CompositionType& j, const CompositionType& k) const;

  /// Σ_{φ ∈ σ_JK} (1/h_φ) Π_{q∈J} <x_q, ξ_φ(q)>.
  Rational pair_phrases(const Phrase& v, const Phrase& alpha) const;
  /// The same value summed over σ_KJ instead.
  Rational pair_phrases_dual(const Phrase& v, const Phrase& alpha) const;

 private:
  mutable std::map<std::pair<CompositionType, CompositionType>, std::vector<Weighted>> cache_;
};

/// The Hopf pairing between A_V (first argument) and A_{V*} (second), with
/// <x_i, ξ_j> the Kronecker delta. Throws AlphabetMismatch when the alphabet
/// sizes differ.
Rational pair(const Element& v, const Element& alpha);

/// pair() computed through the σ_KJ sum.
Rational pair_dual_side(const Element& v, const Element& alpha);

/// Independent route: peels the first word off v using
/// <v1 | v2, α> = <v1 ⊗̃ v2, Δα>, with word-versus-phrase base case
/// <w, α1|...|αs> = Π δ / (k1! ... ks!).
Rational pair_oracle(const Element& v, const Element& alpha);

/// Entry (i, j) = <basis_i over V, basis_j over V*> on the degree-n bases.
Matrix gram_matrix(int n, int d);

/// Left kernel of gram_matrix(n, d) as elements of A_V.
std::vector<Element> radical_basis(int n, int d);

/// Spanning set of the degree-n part of the ideal generated by the symmetric
/// primitives of degree >= 2: all a | g | b with a, b basis phrases.
std::vector<Element> ideal_spanning_set(int n, int d);
std::size_t ideal_dimension(int n, int d);

/// Every product a | g | b of degree n, with g = φ(U) of a symmetrized word of
/// degree 2..n and a, b basis phrases, pairs to zero with the whole degree-n
/// dual basis.
bool ideal_in_kernel_check(int n, int d);

/// <x | r, β> = <r | x, β> = 0 for every radical element r of degree n, every
/// letter x and every degree-(n+1) dual phrase β.
bool radical_ideal_check(int n, int d);

/// <S v, α> = <v, S α> over all pairs of degree-n basis phrases.
bool adjoint_antipode_check(int n, int d);
bool adjoint_antipode_check(int n, int d, const EndoMap& s);

}  // namespace bitensor

#endif  // BITENSOR_PAIRING_HPP
