#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repkit/matrix.hpp"
#include "support/poly_fraction.hpp"
#include "support/random_values.hpp"

using namespace repkit;
using repkit::testing::Rng;

namespace {

// Independent determinant oracle: recursive cofactor expansion along the
// first row.
FieldElement det_cofactor_oracle(const Matrix& a) {
  const Field& field = a.field();
  std::size_t n = a.rows();
  if (n == 0) return field.one();
  if (n == 1) return a.at(0, 0);
  FieldElement acc = field.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (a.at(0, j).is_zero()) continue;
    Matrix minor(field, n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, mc = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, mc++) = a.at(r, c);
      }
    }
    FieldElement term = a.at(0, j) * det_cofactor_oracle(minor);
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

std::vector<Field> test_fields() {
  return {Field::rationals(), Field::prime(7), Field::cyclotomic(3)};
}

}  // namespace

TEST_CASE("matrix product: identity, a worked example, associativity") {
  Field Q = Field::rationals();
  Rng rng(11);
  Matrix a = rng.matrix(Q, 4, 4);
  CHECK(a * Matrix::identity(Q, 4) == a);
  CHECK(Matrix::identity(Q, 4) * a == a);

  Matrix m = Matrix::from_integers(Q, {{1, 2}, {3, 4}});
  Matrix swap = Matrix::from_integers(Q, {{0, 1}, {1, 0}});
  CHECK(m * swap == Matrix::from_integers(Q, {{2, 1}, {4, 3}}));

  for (int i = 0; i < 100; ++i) {
    Matrix x = rng.matrix(Q, 3, 3), y = rng.matrix(Q, 3, 3), z = rng.matrix(Q, 3, 3);
    CHECK((x * y) * z == x * (y * z));
  }
}

TEST_CASE("shape and field mismatches are rejected") {
  Field Q = Field::rationals();
  Matrix a(Q, 2, 3);
  Matrix b(Q, 2, 3);
  CHECK_THROWS_AS(a * b, ValidationError);
  CHECK_THROWS_AS(a + Matrix(Q, 3, 2), ValidationError);
  CHECK_THROWS_AS(a + Matrix(Field::prime(5), 2, 3), ValidationError);
  CHECK_THROWS_AS(Matrix(Q, 2, 3).trace(), ValidationError);
}

TEST_CASE("trace: identity sums ones, swap has zero trace, tr(AB) = tr(BA)") {
  for (const Field& F : test_fields()) {
    CHECK(Matrix::identity(F, 5).trace() == F.integer(5));
  }
  Field Q = Field::rationals();
  CHECK(Matrix::from_integers(Q, {{0, 1}, {1, 0}}).trace() == Q.zero());

  Rng rng(22);
  for (const Field& F : test_fields()) {
    for (int i = 0; i < 34; ++i) {
      Matrix a = rng.matrix(F, 4, 4), b = rng.matrix(F, 4, 4);
      CHECK((a * b).trace() == (b * a).trace());
    }
  }
}

TEST_CASE("determinant: identity, scalar cube, cofactor oracle, multiplicativity") {
  Field Q = Field::rationals();
  CHECK(determinant(Matrix::identity(Q, 4)) == Q.one());

  FieldElement a = Q.from_rational(mpq_class(-7, 3));
  CHECK(determinant(Matrix::identity(Q, 3) * a) == a * a * a);

  Matrix m = Matrix::from_integers(Q, {{1, 2}, {3, 4}});
  CHECK(det_cofactor_oracle(m) == Q.integer(-2));
  CHECK(determinant(m) == Q.integer(-2));

  Rng rng(33);
  for (const Field& F : test_fields()) {
    for (int i = 0; i < 25; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.pick(1, 4));
      Matrix x = rng.matrix(F, n, n);
      CHECK(determinant(x) == det_cofactor_oracle(x));
      Matrix y = rng.matrix(F, n, n);
      CHECK(determinant(x * y) == determinant(x) * determinant(y));
    }
  }
}

TEST_CASE("inverse and adjugate obey Cramer's identity") {
  Field Q = Field::rationals();
  auto id = inverse_and_adjugate(Matrix::identity(Q, 3));
  CHECK(id.adjugate == Matrix::identity(Q, 3));
  REQUIRE(id.inverse.has_value());

  Matrix m = Matrix::from_integers(Q, {{1, 2}, {3, 4}});
  auto r = inverse_and_adjugate(m);
  REQUIRE(r.inverse.has_value());
  Matrix expected = Matrix::from_rows(
      Q, {{Q.integer(-2), Q.one()},
          {Q.from_rational(mpq_class(3, 2)), Q.from_rational(mpq_class(-1, 2))}});
  CHECK(*r.inverse == expected);
  CHECK(m * *r.inverse == Matrix::identity(Q, 2));

  Matrix s = Matrix::from_integers(Q, {{1, 1}, {1, 1}});
  auto rs = inverse_and_adjugate(s);
  CHECK_FALSE(rs.inverse.has_value());
  CHECK(rs.adjugate == Matrix::from_integers(Q, {{1, -1}, {-1, 1}}));
  CHECK((s * rs.adjugate).is_zero());

  Rng rng(44);
  for (const Field& F : test_fields()) {
    for (int i = 0; i < 20; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.pick(1, 4));
      Matrix x = (i % 2 == 0) ? rng.matrix(F, n, n) : rng.singular_matrix(F, n);
      auto res = inverse_and_adjugate(x);
      FieldElement d = determinant(x);
      CHECK(x * res.adjugate == Matrix::identity(F, n) * d);
      CHECK(res.adjugate * x == Matrix::identity(F, n) * d);
      CHECK(res.inverse.has_value() == !d.is_zero());
      if (res.inverse) CHECK(x * *res.inverse == Matrix::identity(F, n));
    }
  }

  // Large-size paths: 6x6 invertible (det * inverse) and singular (cofactors).
  Matrix big = Matrix::identity(Q, 6) * Q.integer(2);
  auto rb = inverse_and_adjugate(big);
  CHECK(big * rb.adjugate == Matrix::identity(Q, 6) * determinant(big));
  Matrix sing(Q, 6, 6);
  auto rsg = inverse_and_adjugate(sing);
  CHECK_FALSE(rsg.inverse.has_value());
  CHECK((sing * rsg.adjugate).is_zero());
}

TEST_CASE("row reduction: rank, kernel, image, and the coordinate solver") {
  Field Q = Field::rationals();

  Matrix z(Q, 3, 3);
  RowReduction rz(z);
  CHECK(rz.rank() == 0);
  CHECK(kernel(z) == Subspace::full(Q, 3));

  Matrix ones = Matrix::from_integers(Q, {{1, 1}, {1, 1}});
  RowReduction ro(ones);
  CHECK(ro.rank() == 1);
  Matrix k(Q, 2, 1);
  k.at(0, 0) = Q.one();
  k.at(1, 0) = Q.integer(-1);
  CHECK(kernel(ones) == Subspace::from_basis(k));

  CHECK(kernel(Matrix::identity(Q, 4)).is_zero());
  CHECK(image(Matrix::identity(Q, 4)).is_full());

  // Solver realizes dual-basis coordinates and reports non-membership.
  Matrix basis = Matrix::from_integers(Q, {{1, 0}, {0, 1}, {1, 1}});
  RowReduction rb(basis);
  auto coords = rb.solve({Q.integer(2), Q.integer(3), Q.integer(5)});
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == Q.integer(2));
  CHECK((*coords)[1] == Q.integer(3));
  CHECK_FALSE(rb.solve({Q.integer(1), Q.integer(0), Q.integer(0)}).has_value());
}

TEST_CASE("rank-nullity holds for random matrices over each field kind") {
  Rng rng(55);
  for (const Field& F : test_fields()) {
    for (int i = 0; i < 200; ++i) {
      std::size_t r = static_cast<std::size_t>(rng.pick(1, 6));
      std::size_t c = static_cast<std::size_t>(rng.pick(1, 6));
      Matrix a = rng.matrix(F, r, c);
      RowReduction red(a);
      CHECK(red.rank() + kernel(a).dim() == c);
      CHECK(image(a).dim() == red.rank());
    }
  }
}

TEST_CASE("a one-sided inverse is two-sided") {
  Rng rng(66);
  for (const Field& F : test_fields()) {
    for (int i = 0; i < 20; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.pick(1, 4));
      Matrix a = rng.invertible_matrix(F, n);
      RowReduction red(a);
      const Matrix& b = red.transform();  // B A = rref(A) = I
      CHECK(b * a == Matrix::identity(F, n));
      CHECK(a * b == Matrix::identity(F, n));
    }
  }
}

TEST_CASE("det != 0, invertibility, and trivial kernel coincide") {
  Rng rng(77);
  for (const Field& F : test_fields()) {
    for (int i = 0; i < 67; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.pick(1, 5));
      Matrix a = (i % 3 == 0) ? rng.singular_matrix(F, n) : rng.matrix(F, n, n);
      bool det_nonzero = !determinant(a).is_zero();
      bool invertible = inverse(a).has_value();
      bool trivial_kernel = kernel(a).is_zero();
      CHECK(det_nonzero == invertible);
      CHECK(invertible == trivial_kernel);
    }
  }
}

TEST_CASE("char_poly worked examples, sign convention det(A - tI)") {
  Field Q = Field::rationals();
  CHECK(char_poly(Matrix::identity(Q, 2)) == Polynomial::from_integers(Q, {1, -2, 1}));
  CHECK(char_poly(Matrix::from_integers(Q, {{0, 1}, {1, 0}})) ==
        Polynomial::from_integers(Q, {-1, 0, 1}));
  CHECK(char_poly(Matrix::from_integers(Q, {{0, -1}, {1, -1}})) ==
        Polynomial::from_integers(Q, {1, 1, 1}));
  // Odd size: leading coefficient is (-1)^3.
  CHECK(char_poly(Matrix::identity(Q, 3)).leading_coefficient() == Q.integer(-1));
}

TEST_CASE("Berkowitz agrees with elimination over the rational-function field") {
  Rng rng(88);
  for (const Field& F : test_fields()) {
    for (int i = 0; i < 12; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.pick(1, 4));
      Matrix a = rng.matrix(F, n, n);
      CHECK(char_poly(a) == repkit::testing::char_poly_by_elimination(a));
    }
  }
}

TEST_CASE("Cayley-Hamilton: the characteristic polynomial annihilates the matrix") {
  Rng rng(99);
  Field Q = Field::rationals();
  for (int i = 0; i < 10; ++i) {
    Matrix a = rng.matrix(Q, 3, 3);
    CHECK(eval_poly(char_poly(a), a).is_zero());
  }
}

TEST_CASE("polynomial functional calculus is a ring homomorphism") {
  Field Q = Field::rationals();
  Rng rng(111);
  Matrix a = rng.matrix(Q, 3, 3);
  CHECK(eval_poly(Polynomial::variable(Q), a) == a);

  for (int i = 0; i < 50; ++i) {
    std::vector<FieldElement> c1, c2;
    for (int d = 0; d <= 3; ++d) c1.push_back(rng.element(Q));
    for (int d = 0; d <= 2; ++d) c2.push_back(rng.element(Q));
    Polynomial p1(Q, c1), p2(Q, c2);
    Matrix m = rng.matrix(Q, 3, 3);
    CHECK(eval_poly(p1 + p2, m) == eval_poly(p1, m) + eval_poly(p2, m));
    CHECK(eval_poly(p1 * p2, m) == eval_poly(p1, m) * eval_poly(p2, m));
  }

  // p(aI) = p(a) I
  FieldElement a5 = Q.from_rational(mpq_class(5, 3));
  Polynomial p = Polynomial::from_integers(Q, {2, 0, 1});
  CHECK(eval_poly(p, Matrix::identity(Q, 3) * a5) == Matrix::identity(Q, 3) * p(a5));
}

TEST_CASE("min_poly: worked examples, annihilation, divides char_poly") {
  Field Q = Field::rationals();
  CHECK(min_poly(Matrix::identity(Q, 3)) == Polynomial::from_integers(Q, {-1, 1}));
  CHECK(min_poly(Matrix::from_integers(Q, {{0, 1}, {1, 0}})) ==
        Polynomial::from_integers(Q, {-1, 0, 1}));
  CHECK(min_poly(Matrix::from_integers(Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})) ==
        Polynomial::from_integers(Q, {2, -3, 1}));

  Rng rng(122);
  for (const Field& F : test_fields()) {
    for (int i = 0; i < 15; ++i) {
      std::size_t n = static_cast<std::size_t>(rng.pick(1, 4));
      Matrix a = rng.matrix(F, n, n);
      Polynomial m = min_poly(a);
      CHECK(eval_poly(m, a).is_zero());
      auto [q, r] = char_poly(a).divmod(m);
      CHECK(r.is_zero());
    }
  }
}

TEST_CASE("eigenspaces are kernels of A - alpha I") {
  Field Q = Field::rationals();
  CHECK(eigenspace(Matrix::identity(Q, 3), Q.one()) == Subspace::full(Q, 3));

  Matrix swap = Matrix::from_integers(Q, {{0, 1}, {1, 0}});
  Subspace e1 = eigenspace(swap, Q.one());
  Matrix expect(Q, 2, 1);
  expect.at(0, 0) = Q.one();
  expect.at(1, 0) = Q.one();
  CHECK(e1 == Subspace::from_basis(expect));
  CHECK(eigenspace(swap, Q.integer(2)).is_zero());

  // Every basis column is a genuine eigenvector.
  Rng rng(133);
  for (int i = 0; i < 20; ++i) {
    Matrix a = rng.matrix(Q, 3, 3);
    for (const auto& alpha : candidate_roots(char_poly(a)).roots) {
      Subspace e = eigenspace(a, alpha);
      CHECK(e.dim() > 0);
      for (std::size_t j = 0; j < e.dim(); ++j) {
        auto v = e.basis().column(j);
        auto av = a.apply(v);
        for (std::size_t t = 0; t < v.size(); ++t) CHECK(av[t] == alpha * v[t]);
      }
    }
  }
}

TEST_CASE("transpose realizes the dual map") {
  Field Q = Field::rationals();
  Rng rng(144);
  for (int i = 0; i < 100; ++i) {
    Matrix a = rng.matrix(Q, 3, 3), b = rng.matrix(Q, 3, 3);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
  }
  Matrix a = rng.matrix(Q, 4, 3);
  CHECK(a.transpose().transpose() == a);
  Matrix s = rng.matrix(Q, 4, 4);
  CHECK(s.transpose().trace() == s.trace());
}

TEST_CASE("subspace equality is equality of column spaces") {
  Field Q = Field::rationals();
  Matrix b1 = Matrix::from_integers(Q, {{1, 0}, {0, 1}, {0, 0}});
  Matrix b2 = Matrix::from_integers(Q, {{1, 1}, {1, -1}, {0, 0}});
  CHECK(Subspace::from_basis(b1) == Subspace::from_basis(b2));
  Matrix b3 = Matrix::from_integers(Q, {{1, 0}, {0, 0}, {0, 1}});
  CHECK(Subspace::from_basis(b1) != Subspace::from_basis(b3));
  CHECK_THROWS_AS(Subspace::from_basis(Matrix::from_integers(Q, {{1, 2}, {2, 4}})),
                  ValidationError);
  CHECK(Subspace::span(Matrix::from_integers(Q, {{1, 2}, {2, 4}})).dim() == 1);
}

TEST_CASE("complete_basis extends independent columns deterministically") {
  Field Q = Field::rationals();
  Matrix b(Q, 3, 1);
  b.at(0, 0) = Q.one();
  b.at(1, 0) = Q.one();
  b.at(2, 0) = Q.one();
  Matrix full = complete_basis(b);
  CHECK(full.cols() == 3);
  CHECK(!determinant(full).is_zero());
  // First appended vector is e_1 (the earliest standard vector that keeps
  // the columns independent).
  CHECK(full.at(0, 1) == Q.one());
}
