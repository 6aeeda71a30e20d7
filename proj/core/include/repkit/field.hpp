#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "repkit/error.hpp"

namespace repkit {

class FieldElement;

namespace detail {
struct CyclotomicTable;
}

/// Largest conductor accepted by Field::cyclotomic. Defaults to 64, which
/// covers the exponent of every desk-scale group; raise it if you need more.
unsigned conductor_limit();
void set_conductor_limit(unsigned limit);

/// Descriptor of an exact coefficient field: the rationals, a prime field
/// GF(p), or a cyclotomic extension Q(zeta_n) represented modulo the n-th
/// cyclotomic polynomial. Descriptors are cheap values; two descriptors
/// compare equal exactly when they denote the same construction.
class Field {
 public:
  enum class Kind { rational, prime, cyclotomic };

  static Field rationals();
  static Field prime(std::uint64_t p);           // p must be prime
  static Field cyclotomic(unsigned conductor);   // 1 <= conductor <= conductor_limit()

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::rational; }
  bool is_prime() const { return kind_ == Kind::prime; }
  bool is_cyclotomic() const { return kind_ == Kind::cyclotomic; }

  /// 0 for the characteristic-zero kinds, p for GF(p).
  std::uint64_t characteristic() const;
  std::uint64_t prime_modulus() const;  // prime kind only
  unsigned conductor() const;           // cyclotomic kind only

  /// Dimension over the prime field: phi(n) for Q(zeta_n), 1 otherwise.
  unsigned extension_degree() const;

  /// Coefficients of the n-th cyclotomic polynomial, constant term first,
  /// monic with integer entries. Cyclotomic kind only.
  const std::vector<mpq_class>& cyclotomic_polynomial() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement integer(long value) const;
  /// Image of a rational number. In GF(p) the denominator must be coprime
  /// to p; otherwise a ValidationError is thrown.
  FieldElement from_rational(const mpq_class& value) const;
  /// zeta_n^j (j taken mod n). Cyclotomic kind only.
  FieldElement root_of_unity(long j) const;
  /// Element with the given power-basis coordinates (size phi(n)).
  FieldElement from_coordinates(std::vector<mpq_class> coords) const;

  /// All residues in ascending order. Prime kind only.
  std::vector<FieldElement> elements() const;

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }

  std::string to_string() const;  // "Q", "GF(7)", "Q(zeta_4)"

 private:
  friend class FieldElement;
  Field(Kind kind, std::uint64_t p, std::shared_ptr<const detail::CyclotomicTable> table)
      : kind_(kind), p_(p), table_(std::move(table)) {}

  Kind kind_;
  std::uint64_t p_ = 0;
  std::shared_ptr<const detail::CyclotomicTable> table_;
};

/// Immutable element of a Field. Arithmetic requires both operands to come
/// from the same field and always produces canonical values: reduced
/// rationals with positive denominator, residues in [0, p), cyclotomic
/// coordinate vectors of length phi(n).
class FieldElement {
 public:
  /// Default-constructs rational zero (so containers are usable).
  FieldElement();

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;  // throws on rhs == 0
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement inverse() const;  // throws on zero
  FieldElement pow(long exponent) const;

  /// The conjugation automorphism: identity on Q and GF(p); on Q(zeta_n)
  /// the map zeta -> zeta^(n-1) = zeta^(-1).
  FieldElement conjugate() const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  /// True when the value lies in the prime field (for cyclotomic elements:
  /// all coordinates past the constant one vanish).
  bool is_rational_value() const;
  /// The rational value of a characteristic-zero element; requires
  /// is_rational_value().
  mpq_class as_rational() const;

  const mpq_class& rational_value() const;           // rational kind only
  std::uint64_t residue() const;                      // prime kind only
  const std::vector<mpq_class>& coordinates() const;  // cyclotomic kind only

  /// Text form: "a/b" or "a" for rationals, the decimal residue for GF(p),
  /// and a readable bracketed coordinate list for cyclotomic elements.
  std::string to_string() const;

  /// Total order used for deterministic enumeration (value order on Q and
  /// GF(p), lexicographic coordinate order on cyclotomic fields). Operands
  /// must share a field.
  static int compare(const FieldElement& a, const FieldElement& b);

 private:
  friend class Field;
  using Coords = std::vector<mpq_class>;
  FieldElement(Field field, std::variant<mpq_class, std::uint64_t, Coords> value)
      : field_(std::move(field)), value_(std::move(value)) {}

  Field field_;
  std::variant<mpq_class, std::uint64_t, Coords> value_;
};

/// Throws ValidationError unless both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);
void require_same_field(const Field& a, const Field& b);

/// Parses "a/b" or "a" into an exact rational; throws ParseError on
/// malformed input or zero denominator.
mpq_class parse_rational(const std::string& text);

/// Renders a rational in the canonical "a/b" / "a" text form.
std::string rational_to_string(const mpq_class& value);

}  // namespace repkit
