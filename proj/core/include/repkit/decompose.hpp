#pragma once

#include <optional>
#include <vector>

#include "repkit/group_algebra.hpp"
#include "repkit/rep.hpp"

namespace repkit {

/// True exactly when |G| * 1 = 0 in the field, i.e. positive characteristic
/// dividing the group order. Averaging (and hence decomposition) is refused
/// there.
bool modular_obstruction(const Representation& rho);

struct InvarianceCheck {
  bool invariant = false;
  /// Element index moving the subspace out of itself, on failure.
  std::optional<std::size_t> witness;
};
InvarianceCheck is_invariant(const Representation& rho, const Subspace& subspace);

/// Averaged projection (1/|G|) sum rho_x P0 rho_x^{-1} onto an invariant
/// subspace: idempotent, image L, commutes with every rho_x. P0 defaults to
/// the coordinate projection onto L along the completed basis; a supplied
/// P0 must itself be a projection with image L.
Matrix average_projection(const Representation& rho, const Subspace& invariant,
                          const std::optional<Matrix>& start = std::nullopt);

/// Kernel of the averaged projection: the invariant complement.
Subspace invariant_complement(const Representation& rho, const Subspace& invariant);

/// Basis of {A : A rho_x = rho_x A for all x}; always contains I in its
/// span. Dimension 1 certifies absolute irreducibility away from the
/// modular case.
std::vector<Matrix> commutant(const Representation& rho);

struct SplitOutcome {
  enum class Kind {
    subspace,         ///< found a proper nonzero invariant subspace
    irreducible,      ///< commutant has dimension 1 (non-modular case)
    needs_extension,  ///< splits only after extending to the suggested conductor
    inconclusive      ///< modular case, no split found
  };
  Kind kind = Kind::inconclusive;
  std::optional<Subspace> subspace;
  unsigned suggested_conductor = 0;
};

/// One splitting step through the commutant: pick a non-scalar commuting
/// operator, find an eigenvalue via its minimal polynomial, and return the
/// eigenspace (invariant because the operator commutes with the
/// representation).
SplitOutcome split_once(const Representation& rho);

enum class IrreducibilityKind {
  absolutely_irreducible,
  reducible,
  irreducible_over_field,
  modular_inconclusive,
};

struct IrreducibilityVerdict {
  IrreducibilityKind kind;
  /// Proper nonzero invariant subspace, present on `reducible`.
  std::optional<Subspace> witness;
};

IrreducibilityVerdict irreducibility_test(const Representation& rho);

enum class BlockCertificate { absolutely_irreducible, irreducible_over_field };

/// Certified decomposition: base_change * rho_x * base_change^{-1} is block
/// diagonal with the listed blocks, block characters sum to the character,
/// and each block carries its irreducibility certificate. iso_classes
/// partitions block indices by pairwise isomorphism.
struct DecompositionResult {
  Matrix base_change;
  std::vector<Representation> blocks;
  std::vector<BlockCertificate> certificates;
  std::vector<std::vector<std::size_t>> iso_classes;
  Field field_used;

  std::vector<std::size_t> block_degrees() const;
};

/// Full recursive decomposition into irreducibles. With allow_extension the
/// base field may be extended once to Q(zeta_exponent(G)) (the splitting
/// conductor) and the decomposition restarts there. Refuses the modular
/// case.
DecompositionResult decompose(const Representation& rho, bool allow_extension);

/// Invariant positive Hermitian form: H = sum (rho_x)* rho_x, starting from
/// the standard form. Characteristic 0 only.
struct GramForm {
  Matrix gram;
};
GramForm invariant_hermitian_form(const Representation& rho);

/// {v : <v, w>_H = 0 for all w in L} with <v, w> = w* H v.
Subspace orthogonal_complement(const Subspace& subspace, const GramForm& form);

/// Spectral data of a single representation matrix over the cyclotomic
/// extension Q(zeta_lcm(n, order(x))): eigenvalues are order(x)-th roots of
/// unity, eigenspace dimensions sum to the degree, the eigenvalue sum is
/// the character value (an algebraic integer), and the character at the
/// inverse element is its conjugate. All identities are verified exactly
/// during construction.
struct SpectralCertificate {
  Field extension;
  std::vector<std::pair<FieldElement, std::size_t>> eigenvalues;  // (value, eigenspace dim)
  FieldElement character_value;
  FieldElement character_value_at_inverse;
};
SpectralCertificate spectral_certificates(const Representation& rho, std::size_t element);

/// Degree bound from an abelian subgroup A: every irreducible block of the
/// decomposition has degree at most |G| / |A|.
struct AbelianBoundReport {
  std::size_t bound = 0;
  std::vector<std::size_t> block_degrees;
  std::vector<std::size_t> transversal;  // coset representatives of A in G
  bool all_within_bound = false;
  DecompositionResult decomposition;
};
AbelianBoundReport abelian_structure(const Representation& rho,
                                     const std::vector<std::size_t>& abelian_subgroup,
                                     bool allow_extension = false);

/// Conjugate transpose (entry-wise conjugation plus transpose).
Matrix conjugate_transpose(const Matrix& a);

}  // namespace repkit
