#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "repkit/field.hpp"
#include "repkit/polynomial.hpp"

namespace repkit {

/// Dense matrix over a single exact field, row-major. All operations are
/// pure and exact; dimension or field mismatches throw ValidationError.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<std::vector<FieldElement>>& rows);
  /// Test/fixture convenience: integer entries mapped into the field.
  static Matrix from_integers(const Field& field, const std::vector<std::vector<long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const FieldElement& at(std::size_t i, std::size_t j) const;
  FieldElement& at(std::size_t i, std::size_t j);

  std::vector<FieldElement> column(std::size_t j) const;
  std::vector<FieldElement> row(std::size_t i) const;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator*(const FieldElement& scalar) const;
  Matrix operator-() const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  /// Matrix of the dual map in the dual bases, i.e. the transpose.
  Matrix transpose() const;

  FieldElement trace() const;  // square only

  bool is_zero() const;
  bool is_identity() const;
  /// True when the matrix is a scalar multiple of the identity.
  bool is_scalar() const;

  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  Matrix kronecker(const Matrix& rhs) const;
  Matrix submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix block_diagonal(const std::vector<Matrix>& blocks);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

FieldElement determinant(const Matrix& a);

/// Cramer data: a.adjugate satisfies A*adj = adj*A = det(A)*I for every
/// square matrix; the inverse is present exactly when det(A) != 0.
struct AdjugateResult {
  std::optional<Matrix> inverse;
  Matrix adjugate;
};
AdjugateResult inverse_and_adjugate(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

/// Reduced row echelon factorization R = E*A with E invertible, plus the
/// pivot columns. Pivoting picks the first nonzero entry in scan order, so
/// the output is deterministic.
class RowReduction {
 public:
  explicit RowReduction(const Matrix& a);

  const Matrix& rref() const { return rref_; }
  const Matrix& transform() const { return transform_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
  std::size_t rank() const { return pivots_.size(); }

  /// Coordinates x with A x = b (free coordinates set to zero), or nullopt
  /// when b is outside the column space.
  std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;

 private:
  Matrix rref_;
  Matrix transform_;
  std::vector<std::size_t> pivots_;
};

/// Linear subspace of a coordinate space, carried by a basis matrix whose
/// columns are independent (zero columns count: the trivial subspace has an
/// ambient x 0 basis). Equality is equality of column spaces.
class Subspace {
 public:
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace full(const Field& field, std::size_t ambient);
  /// Basis columns must be linearly independent; throws otherwise.
  static Subspace from_basis(Matrix basis);
  /// Reduces an arbitrary spanning set of columns to a basis (the pivot
  /// columns of the input, in order).
  static Subspace span(const Matrix& vectors);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dimension() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dimension(); }

  bool contains(const std::vector<FieldElement>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  /// Coordinates of v in this basis; nullopt when v is not a member.
  std::optional<std::vector<FieldElement>> coordinates(const std::vector<FieldElement>& v) const;

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}
  Matrix basis_;
};

Subspace kernel(const Matrix& a);
Subspace image(const Matrix& a);

/// det(A - t I) as written: degree n with leading coefficient (-1)^n,
/// computed by the division-free Berkowitz scheme (works uniformly in any
/// characteristic).
Polynomial char_poly(const Matrix& a);

/// Monic annihilator of least degree (Krylov chains on the standard basis,
/// combined by lcm).
Polynomial min_poly(const Matrix& a);

/// p(A) = c_l A^l + ... + c_0 I.
Matrix eval_poly(const Polynomial& p, const Matrix& a);

/// E(A, alpha) = ker(A - alpha I).
Subspace eigenspace(const Matrix& a, const FieldElement& alpha);

/// Extends the columns of `basis` (assumed independent) to a basis of the
/// full space by appending standard basis vectors, scanned in index order.
Matrix complete_basis(const Matrix& basis);

}  // namespace repkit
