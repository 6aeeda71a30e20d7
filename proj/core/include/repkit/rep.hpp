#pragma once

#include <optional>
#include <vector>

#include "repkit/group.hpp"
#include "repkit/matrix.hpp"

namespace repkit {

/// Representation of a finite group: one invertible d x d matrix per
/// element over a fixed field. Construction verifies the homomorphism
/// property (identity at e and the full product table); invertibility
/// follows. Immutable afterwards.
class Representation {
 public:
  static Representation create(FiniteGroup group, Field field, std::vector<Matrix> matrices);

  /// Unit representation (every element acts as I_degree).
  static Representation trivial(const FiniteGroup& g, const Field& field, std::size_t degree = 1);
  static Representation left_regular(const FiniteGroup& g, const Field& field);
  static Representation right_regular(const FiniteGroup& g, const Field& field);
  /// Permutation matrices in the delta basis: column a carries a 1 in row
  /// pi_x(a).
  static Representation permutation(const GroupAction& action, const Field& field);

  const FiniteGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  std::size_t degree() const { return degree_; }
  const Matrix& matrix(std::size_t element) const { return matrices_[element]; }
  const Matrix& operator[](std::size_t element) const { return matrices_[element]; }

 private:
  Representation(FiniteGroup group, Field field, std::size_t degree, std::vector<Matrix> matrices)
      : group_(std::move(group)), field_(std::move(field)), degree_(degree),
        matrices_(std::move(matrices)) {}
  FiniteGroup group_;
  Field field_;
  std::size_t degree_;
  std::vector<Matrix> matrices_;
};

/// Character of a representation: the per-element traces. Always a class
/// function for characters coming from representations; arithmetic results
/// keep the per-element values.
class Character {
 public:
  explicit Character(const Representation& rep);
  Character(FiniteGroup group, Field field, std::vector<FieldElement> values);

  const FiniteGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  const FieldElement& value(std::size_t element) const { return values_[element]; }
  const std::vector<FieldElement>& values() const { return values_; }

  bool is_class_function() const;
  /// One value per conjugacy class (at its least element), in class order.
  std::vector<FieldElement> class_values() const;

  Character operator+(const Character& rhs) const;
  Character operator*(const Character& rhs) const;
  bool operator==(const Character& rhs) const;
  bool operator!=(const Character& rhs) const { return !(*this == rhs); }

 private:
  FiniteGroup group_;
  Field field_;
  std::vector<FieldElement> values_;
};

Representation direct_sum(const Representation& rho, const Representation& sigma);
Representation tensor_product(const Representation& rho, const Representation& sigma);
/// x -> transpose(rho(x^-1)); the character becomes x -> chi(x^-1).
Representation dual(const Representation& rho);
/// Same matrices, indexed by the subgroup.
Representation restrict_to(const Representation& rho, const SubgroupView& subgroup);

/// Result of cutting along an invariant subspace L: base_change * rho_x *
/// base_change^{-1} is block upper triangular with diagonal blocks `sub`
/// (on L) and `quotient` (on V/L).
struct SplitResult {
  Representation sub;
  Representation quotient;
  Matrix base_change;
};
SplitResult split_along_invariant(const Representation& rho, const Subspace& invariant);

/// Basis of Hom_G(rho, sigma) = {A : sigma_x A = A rho_x for all x}, found
/// by solving the stacked commutation system; deterministic order.
std::vector<Matrix> intertwiner_space(const Representation& rho, const Representation& sigma);

enum class IsoVerdict { yes, no, inconclusive };

struct IsomorphismResult {
  IsoVerdict verdict = IsoVerdict::inconclusive;
  /// Present exactly on `yes`: invertible S with S rho_x = sigma_x S.
  std::optional<Matrix> intertwiner;
};

/// Decides isomorphism: degree and character comparison first, then a
/// search for an invertible element of the intertwiner space. Over
/// characteristic 0 the integer grid of side degree+1 is exhaustive for the
/// span, so "no" is a proof; over small finite fields full enumeration is
/// used; oversized searches report `inconclusive`.
IsomorphismResult is_isomorphic(const Representation& rho, const Representation& sigma);

/// Entry-wise embedding along Q -> Q(zeta_n) or Q(zeta_m) -> Q(zeta_n) with
/// m | n. The character values embed verbatim.
Representation extend_field(const Representation& rho, const Field& target);
/// View a cyclotomic representation as a rational one: every entry becomes
/// the phi(n) x phi(n) matrix of multiplication by it in the power basis,
/// multiplying the degree by phi(n).
Representation restrict_scalars(const Representation& rho);
/// Reduce a rational representation modulo p; every denominator must be
/// coprime to p.
Representation reduce_mod(const Representation& rho, std::uint64_t p);

}  // namespace repkit
