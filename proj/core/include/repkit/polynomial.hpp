#pragma once

#include <utility>
#include <vector>

#include "repkit/field.hpp"

namespace repkit {

/// Univariate polynomial over a Field, stored densely with the constant
/// term first and no trailing zero coefficient. The zero polynomial has an
/// empty coefficient list and degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<FieldElement> coefficients);

  static Polynomial zero(const Field& field) { return Polynomial(field); }
  static Polynomial constant(const FieldElement& value);
  /// The monomial t.
  static Polynomial variable(const Field& field);
  /// Convenience: coefficients given as integers, constant term first.
  static Polynomial from_integers(const Field& field, const std::vector<long>& coefficients);

  const Field& field() const { return field_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<FieldElement>& coefficients() const { return coeffs_; }
  /// Coefficient of t^i (zero beyond the degree).
  FieldElement coefficient(std::size_t i) const;
  const FieldElement& leading_coefficient() const;  // nonzero polynomials only

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const FieldElement& scalar) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// Evaluation at a point (Horner); a ring homomorphism for each point.
  FieldElement operator()(const FieldElement& point) const;

  Polynomial monic() const;  // nonzero polynomials only

  /// Quotient and remainder; the divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// Factor out a known root: returns q with *this == (t - a) * q.
  /// Throws ValidationError when a is not a root.
  Polynomial divide_by_root(const FieldElement& a) const;

  /// Monic greatest common divisor (Euclid).
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);
  /// Monic least common multiple.
  static Polynomial lcm(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  Field field_;
  std::vector<FieldElement> coeffs_;
};

/// Result of the root search: every entry is a verified root (evaluates to
/// zero exactly), listed in the canonical element order. `complete` reports
/// whether the search provably found every root in the field: true over
/// GF(p) (exhaustive scan) and over Q (rational root theorem), false over
/// cyclotomic fields, where only rational candidates and rational multiples
/// of roots of unity are tried.
struct RootSearch {
  std::vector<FieldElement> roots;
  bool complete = false;
};

RootSearch candidate_roots(const Polynomial& p);

}  // namespace repkit
