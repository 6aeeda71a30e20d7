#include "repkit/matrix.hpp"

#include <sstream>

namespace repkit {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ValidationError("matrix entry count does not match its shape");
  }
  for (const auto& e : entries_) require_same_field(e.field(), field_);
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<std::vector<FieldElement>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  std::vector<FieldElement> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ValidationError("ragged matrix rows");
    for (const auto& e : row) entries.push_back(e);
  }
  return Matrix(field, r, c, std::move(entries));
}

Matrix Matrix::from_integers(const Field& field, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<FieldElement>> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<FieldElement> out;
    out.reserve(row.size());
    for (long v : row) out.push_back(field.integer(v));
    converted.push_back(std::move(out));
  }
  return from_rows(field, converted);
}

const FieldElement& Matrix::at(std::size_t i, std::size_t j) const {
  return entries_[i * cols_ + j];
}

FieldElement& Matrix::at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

std::vector<FieldElement> Matrix::column(std::size_t j) const {
  std::vector<FieldElement> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

std::vector<FieldElement> Matrix::row(std::size_t i) const {
  std::vector<FieldElement> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ValidationError("matrix shape mismatch in +");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.rows_) throw ValidationError("matrix shape mismatch in *");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator*(const FieldElement& scalar) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * scalar;
  return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

FieldElement Matrix::trace() const {
  if (!is_square()) throw ValidationError("trace of a non-square matrix");
  FieldElement acc = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) acc += at(i, i);
  return acc;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  return *this == identity(field_, rows_);
}

bool Matrix::is_scalar() const {
  if (!is_square() || rows_ == 0) return false;
  const FieldElement& d = at(0, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i == j ? (at(i, j) != d) : !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw ValidationError("vector length does not match matrix columns");
  std::vector<FieldElement> out(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    }
  }
  return out;
}

Matrix Matrix::kronecker(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  Matrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < rhs.rows_; ++k) {
        for (std::size_t l = 0; l < rhs.cols_; ++l) {
          out.at(i * rhs.rows_ + k, j * rhs.cols_ + l) = at(i, j) * rhs.at(k, l);
        }
      }
    }
  }
  return out;
}

Matrix Matrix::submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw Error("submatrix out of range");
  Matrix out(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = at(row0 + i, col0 + j);
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_) throw ValidationError("hstack: row count mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
  }
  return out;
}

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw Error("block_diagonal of an empty list");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    require_same_field(b.field(), blocks[0].field());
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(blocks[0].field(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(r0 + i, c0 + j) = b.at(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j).to_string();
    }
  }
  out << ']';
  return out.str();
}

// -- elimination ---------------------------------------------------------------

FieldElement determinant(const Matrix& a) {
  if (!a.is_square()) throw ValidationError("determinant of a non-square matrix");
  const Field& field = a.field();
  std::size_t n = a.rows();
  Matrix m = a;
  FieldElement det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return field.zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    FieldElement inv = m.at(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      FieldElement factor = m.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

RowReduction::RowReduction(const Matrix& a)
    : rref_(a), transform_(Matrix::identity(a.field(), a.rows())) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && rref_.at(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(rref_.at(pivot, j), rref_.at(row, j));
      for (std::size_t j = 0; j < a.rows(); ++j) std::swap(transform_.at(pivot, j), transform_.at(row, j));
    }
    FieldElement inv = rref_.at(row, col).inverse();
    for (std::size_t j = 0; j < a.cols(); ++j) rref_.at(row, j) *= inv;
    for (std::size_t j = 0; j < a.rows(); ++j) transform_.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || rref_.at(i, col).is_zero()) continue;
      FieldElement factor = rref_.at(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) rref_.at(i, j) -= factor * rref_.at(row, j);
      for (std::size_t j = 0; j < a.rows(); ++j) transform_.at(i, j) -= factor * transform_.at(row, j);
    }
    pivots_.push_back(col);
    ++row;
  }
}

std::optional<std::vector<FieldElement>> RowReduction::solve(const std::vector<FieldElement>& b) const {
  const Field& field = rref_.field();
  std::vector<FieldElement> y = transform_.apply(b);
  std::vector<FieldElement> x(rref_.cols(), field.zero());
  for (std::size_t i = 0; i < pivots_.size(); ++i) x[pivots_[i]] = y[i];
  for (std::size_t i = pivots_.size(); i < y.size(); ++i) {
    if (!y[i].is_zero()) return std::nullopt;
  }
  return x;
}

AdjugateResult inverse_and_adjugate(const Matrix& a) {
  if (!a.is_square()) throw ValidationError("adjugate of a non-square matrix");
  const Field& field = a.field();
  std::size_t n = a.rows();
  FieldElement det = determinant(a);
  std::optional<Matrix> inv;
  if (!det.is_zero()) {
    RowReduction reduction(a);
    inv = reduction.transform();  // rref of an invertible matrix is I, so E = A^{-1}
  }
  if (n == 0) return {inv, Matrix(field, 0, 0)};
  if (inv && n > 5) {
    return {inv, *inv * det};
  }
  // Cofactor expansion; exact for singular matrices of any size.
  Matrix adj(field, n, n);
  if (n == 1) {
    adj.at(0, 0) = field.one();
    return {inv, adj};
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix minor(field, n - 1, n - 1);
      for (std::size_t r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(mr, mc) = a.at(r, c);
          ++mc;
        }
        ++mr;
      }
      FieldElement cof = determinant(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(j, i) = cof;
    }
  }
  return {inv, adj};
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) throw ValidationError("inverse of a non-square matrix");
  RowReduction reduction(a);
  if (reduction.rank() != a.rows()) return std::nullopt;
  return reduction.transform();
}

// -- subspaces -----------------------------------------------------------------

Subspace Subspace::zero(const Field& field, std::size_t ambient) {
  return Subspace(Matrix(field, ambient, 0));
}

Subspace Subspace::full(const Field& field, std::size_t ambient) {
  return Subspace(Matrix::identity(field, ambient));
}

Subspace Subspace::from_basis(Matrix basis) {
  RowReduction reduction(basis);
  if (reduction.rank() != basis.cols()) {
    throw ValidationError("subspace basis columns are linearly dependent");
  }
  return Subspace(std::move(basis));
}

Subspace Subspace::span(const Matrix& vectors) {
  RowReduction reduction(vectors);
  Matrix basis(vectors.field(), vectors.rows(), reduction.rank());
  std::size_t k = 0;
  for (std::size_t col : reduction.pivot_columns()) {
    for (std::size_t i = 0; i < vectors.rows(); ++i) basis.at(i, k) = vectors.at(i, col);
    ++k;
  }
  return Subspace(std::move(basis));
}

bool Subspace::contains(const std::vector<FieldElement>& v) const {
  return coordinates(v).has_value();
}

std::optional<std::vector<FieldElement>> Subspace::coordinates(const std::vector<FieldElement>& v) const {
  RowReduction reduction(basis_);
  return reduction.solve(v);
}

bool Subspace::contains(const Subspace& other) const {
  RowReduction reduction(basis_);
  for (std::size_t j = 0; j < other.dim(); ++j) {
    if (!reduction.solve(other.basis_.column(j))) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  if (field() != other.field() || ambient_dimension() != other.ambient_dimension()) return false;
  return dim() == other.dim() && contains(other) && other.contains(*this);
}

Subspace kernel(const Matrix& a) {
  RowReduction reduction(a);
  const Field& field = a.field();
  std::vector<std::size_t> free_cols;
  {
    std::size_t p = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (p < reduction.pivot_columns().size() && reduction.pivot_columns()[p] == c) {
        ++p;
      } else {
        free_cols.push_back(c);
      }
    }
  }
  Matrix basis(field, a.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis.at(f, k) = field.one();
    for (std::size_t i = 0; i < reduction.pivot_columns().size(); ++i) {
      basis.at(reduction.pivot_columns()[i], k) = -reduction.rref().at(i, f);
    }
  }
  return Subspace::from_basis(std::move(basis));
}

Subspace image(const Matrix& a) { return Subspace::span(a); }

// -- polynomial invariants -------------------------------------------------------

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) throw ValidationError("char_poly of a non-square matrix");
  const Field& field = a.field();
  std::size_t n = a.rows();
  if (n == 0) return Polynomial::constant(field.one());

  // Samuelson-Berkowitz: iterate over leading principal submatrices,
  // multiplying coefficient vectors by lower-triangular Toeplitz matrices
  // whose first column is [1, -d, -(R S), -(R M S), -(R M^2 S), ...].
  std::vector<FieldElement> coeffs{field.one(), -a.at(0, 0)};  // char poly of the 1x1 corner, leading first
  for (std::size_t r = 2; r <= n; ++r) {
    Matrix m = a.submatrix(0, 0, r - 1, r - 1);
    std::vector<FieldElement> s(r - 1, field.zero());
    std::vector<FieldElement> row(r - 1, field.zero());
    for (std::size_t i = 0; i < r - 1; ++i) {
      s[i] = a.at(i, r - 1);
      row[i] = a.at(r - 1, i);
    }
    std::vector<FieldElement> first_col;
    first_col.reserve(r + 1);
    first_col.push_back(field.one());
    first_col.push_back(-a.at(r - 1, r - 1));
    std::vector<FieldElement> power = s;  // M^k S
    for (std::size_t k = 2; k <= r; ++k) {
      FieldElement dot = field.zero();
      for (std::size_t i = 0; i < r - 1; ++i) dot += row[i] * power[i];
      first_col.push_back(-dot);
      if (k < r) power = m.apply(power);
    }
    std::vector<FieldElement> next(r + 1, field.zero());
    for (std::size_t i = 0; i <= r; ++i) {
      for (std::size_t j = 0; j < coeffs.size() && j <= i; ++j) {
        // Toeplitz entry T[i][j] = first_col[i - j]
        next[i] += first_col[i - j] * coeffs[j];
      }
    }
    coeffs = std::move(next);
  }

  // coeffs holds det(tI - A) leading-first; flip to constant-first and apply
  // the (-1)^n sign to land on det(A - tI).
  std::vector<FieldElement> constant_first(coeffs.rbegin(), coeffs.rend());
  if (n % 2 == 1) {
    for (auto& c : constant_first) c = -c;
  }
  return Polynomial(field, std::move(constant_first));
}

Matrix eval_poly(const Polynomial& p, const Matrix& a) {
  if (!a.is_square()) throw ValidationError("eval_poly on a non-square matrix");
  require_same_field(p.field(), a.field());
  const Field& field = a.field();
  std::size_t n = a.rows();
  Matrix acc(field, n, n);
  const auto& coeffs = p.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += coeffs[i];
  }
  return acc;
}

Polynomial min_poly(const Matrix& a) {
  if (!a.is_square()) throw ValidationError("min_poly of a non-square matrix");
  const Field& field = a.field();
  std::size_t n = a.rows();
  Polynomial result = Polynomial::constant(field.one());
  for (std::size_t start = 0; start < n; ++start) {
    if (static_cast<std::size_t>(result.degree()) == n) break;
    // Krylov chain from e_start until the new power becomes dependent.
    std::vector<FieldElement> v(n, field.zero());
    v[start] = field.one();
    std::vector<std::vector<FieldElement>> chain{v};
    for (;;) {
      std::vector<FieldElement> next = a.apply(chain.back());
      Matrix k(field, n, chain.size());
      for (std::size_t j = 0; j < chain.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) k.at(i, j) = chain[j][i];
      }
      RowReduction reduction(k);
      if (auto coords = reduction.solve(next)) {
        // A^m e = sum c_j A^j e  gives the monic annihilator t^m - sum c_j t^j.
        std::vector<FieldElement> coeffs(chain.size() + 1, field.zero());
        for (std::size_t j = 0; j < coords->size(); ++j) coeffs[j] = -(*coords)[j];
        coeffs.back() = field.one();
        result = Polynomial::lcm(result, Polynomial(field, std::move(coeffs)));
        break;
      }
      chain.push_back(std::move(next));
    }
  }
  return result.monic();
}

Subspace eigenspace(const Matrix& a, const FieldElement& alpha) {
  if (!a.is_square()) throw ValidationError("eigenspace of a non-square matrix");
  require_same_field(a.field(), alpha.field());
  Matrix shifted = a;
  for (std::size_t i = 0; i < a.rows(); ++i) shifted.at(i, i) -= alpha;
  return kernel(shifted);
}

Matrix complete_basis(const Matrix& basis) {
  const Field& field = basis.field();
  std::size_t n = basis.rows();
  Matrix current = basis;
  for (std::size_t j = 0; j < n && current.cols() < n; ++j) {
    Matrix candidate(field, n, 1);
    candidate.at(j, 0) = field.one();
    Matrix extended = Matrix::hstack(current, candidate);
    if (RowReduction(extended).rank() == extended.cols()) current = std::move(extended);
  }
  if (current.cols() != n) throw Error("complete_basis: could not extend to a full basis");
  return current;
}

}  // namespace repkit
