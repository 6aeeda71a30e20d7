#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repkit/field.hpp"
#include "repkit/polynomial.hpp"
#include "support/random_values.hpp"

#include <numeric>
#include <thread>

using namespace repkit;
using repkit::testing::Rng;

namespace {

// Tiny independent fraction type: the oracle for rational arithmetic.
struct Frac {
  long num;
  long den;
  Frac(long n, long d) : num(n), den(d) {
    long g = std::gcd(n < 0 ? -n : n, d);
    if (g != 0) {
      num = n / g;
      den = d / g;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
};

// GF(7) multiplication table built by repeated addition only.
int gf7_mul_oracle(int a, int b) {
  int acc = 0;
  for (int i = 0; i < b; ++i) acc = (acc + a) % 7;
  return acc;
}

FieldElement q(const Field& f, long num, long den = 1) {
  return f.from_rational(mpq_class(num, den));
}

}  // namespace

TEST_CASE("rational arithmetic matches the fraction oracle") {
  Field Q = Field::rationals();
  Frac oracle = Frac(1, 3) + Frac(1, 6);
  CHECK(oracle.num == 1);
  CHECK(oracle.den == 2);
  CHECK(q(Q, 1, 3) + q(Q, 1, 6) == q(Q, 1, 2));

  Rng rng(101);
  for (int i = 0; i < 100; ++i) {
    long an = rng.pick(-20, 20), ad = rng.pick(1, 12);
    long bn = rng.pick(-20, 20), bd = rng.pick(1, 12);
    Frac sum = Frac(an, ad) + Frac(bn, bd);
    Frac prod = Frac(an, ad) * Frac(bn, bd);
    CHECK(q(Q, an, ad) + q(Q, bn, bd) == q(Q, sum.num, sum.den));
    CHECK(q(Q, an, ad) * q(Q, bn, bd) == q(Q, prod.num, prod.den));
  }
}

TEST_CASE("GF(7) products agree with the repeated-addition table") {
  Field F7 = Field::prime(7);
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 7; ++b) {
      CHECK(F7.integer(a) * F7.integer(b) == F7.integer(gf7_mul_oracle(a, b)));
    }
  }
  CHECK(F7.integer(3) * F7.integer(5) == F7.one());
  CHECK(F7.one() / F7.integer(3) == F7.integer(5));
}

TEST_CASE("Q(zeta_4): zeta * zeta reduces to -1 modulo t^2 + 1") {
  Field F = Field::cyclotomic(4);
  FieldElement zeta = F.root_of_unity(1);
  CHECK(zeta * zeta == F.integer(-1));
  CHECK(F.cyclotomic_polynomial() == std::vector<mpq_class>{1, 0, 1});
}

TEST_CASE("division requires a nonzero divisor and a shared field") {
  Field Q = Field::rationals();
  CHECK_THROWS_AS(Q.one() / Q.zero(), ValidationError);
  CHECK_THROWS_AS(Q.one() + Field::prime(7).one(), ValidationError);
  CHECK_THROWS_AS(Field::cyclotomic(3).one() * Field::cyclotomic(4).one(), ValidationError);
}

TEST_CASE("conjugation: identity away from cyclotomic fields, zeta -> zeta^-1") {
  Field Q = Field::rationals();
  CHECK(q(Q, 3, 4).conjugate() == q(Q, 3, 4));

  Field F4 = Field::cyclotomic(4);
  FieldElement zeta = F4.root_of_unity(1);
  CHECK(zeta.conjugate() == -zeta);  // zeta^3 reduced mod t^2 + 1

  Rng rng(202);
  Field F12 = Field::cyclotomic(12);
  for (int i = 0; i < 100; ++i) {
    FieldElement a = rng.element(F12);
    CHECK(a.conjugate().conjugate() == a);
  }
}

TEST_CASE("conjugation is a field automorphism") {
  Rng rng(303);
  for (unsigned n : {3u, 4u, 5u, 8u, 12u}) {
    Field F = Field::cyclotomic(n);
    for (int i = 0; i < 20; ++i) {
      FieldElement a = rng.element(F);
      FieldElement b = rng.element(F);
      CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
      CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    }
  }
}

TEST_CASE("roots of unity in the power basis") {
  Field F3 = Field::cyclotomic(3);
  CHECK(F3.root_of_unity(0) == F3.one());
  // zeta_3^2 = -1 - zeta_3 after reduction mod t^2 + t + 1
  CHECK(F3.root_of_unity(2).coordinates() == std::vector<mpq_class>{-1, -1});
  Field F4 = Field::cyclotomic(4);
  CHECK(F4.root_of_unity(2) == F4.integer(-1));
  CHECK_THROWS_AS(Field::rationals().root_of_unity(1), ValidationError);

  for (unsigned n = 1; n <= 24; ++n) {
    Field F = Field::cyclotomic(n);
    CHECK(F.root_of_unity(1).pow(n) == F.one());
  }
}

TEST_CASE("the cyclotomic polynomial vanishes at its root, for all supported n") {
  // Independent totient: count the units mod n.
  auto totient = [](unsigned n) {
    unsigned count = 0;
    for (unsigned k = 1; k <= n; ++k) {
      if (std::gcd(k, n) == 1) ++count;
    }
    return count;
  };
  for (unsigned n = 1; n <= conductor_limit(); ++n) {
    Field F = Field::cyclotomic(n);
    CHECK(F.extension_degree() == totient(n));
    for (const auto& c : F.cyclotomic_polynomial()) CHECK(c.get_den() == 1);  // integer, monic
    CHECK(F.cyclotomic_polynomial().back() == 1);
    std::vector<FieldElement> coeffs;
    for (const auto& c : F.cyclotomic_polynomial()) coeffs.push_back(F.from_rational(c));
    Polynomial phi(F, coeffs);
    CHECK(phi(F.root_of_unity(1)).is_zero());
  }
}

TEST_CASE("field axioms hold exactly on random triples") {
  std::vector<Field> fields{Field::rationals(), Field::prime(7), Field::cyclotomic(3)};
  Rng rng(404);
  for (const Field& F : fields) {
    for (int i = 0; i < 200; ++i) {
      FieldElement a = rng.element(F), b = rng.element(F), c = rng.element(F);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      FieldElement x = rng.nonzero_element(F);
      CHECK(x * x.inverse() == F.one());
    }
  }
}

TEST_CASE("polynomial product matches hand convolution") {
  Field Q = Field::rationals();
  Polynomial tm1 = Polynomial::from_integers(Q, {-1, 1});
  Polynomial tp1 = Polynomial::from_integers(Q, {1, 1});
  // (t - 1)(t + 1): constant -1*1, linear -1*1 + 1*1 = 0, quadratic 1
  CHECK(tm1 * tp1 == Polynomial::from_integers(Q, {-1, 0, 1}));
}

TEST_CASE("evaluation is a ring homomorphism at every point") {
  Rng rng(505);
  Field Q = Field::rationals();
  for (int i = 0; i < 50; ++i) {
    std::vector<FieldElement> ac, bc;
    for (int d = 0; d <= 4; ++d) ac.push_back(rng.element(Q));
    for (int d = 0; d <= 3; ++d) bc.push_back(rng.element(Q));
    Polynomial a(Q, ac), b(Q, bc);
    FieldElement point = rng.element(Q);
    CHECK((a + b)(point) == a(point) + b(point));
    CHECK((a * b)(point) == a(point) * b(point));
  }
}

TEST_CASE("t^3 - t vanishes everywhere on GF(3) yet is nonzero") {
  Field F3 = Field::prime(3);
  Polynomial p = Polynomial::from_integers(F3, {0, -1, 0, 1});
  CHECK_FALSE(p.is_zero());
  for (const auto& x : F3.elements()) CHECK(p(x).is_zero());
}

TEST_CASE("evaluating the zero polynomial gives zero") {
  Field Q = Field::rationals();
  Polynomial z = Polynomial::zero(Q);
  Rng rng(606);
  for (int i = 0; i < 10; ++i) CHECK(z(rng.element(Q)).is_zero());
}

TEST_CASE("divide_by_root factors verified roots and rejects non-roots") {
  Field Q = Field::rationals();
  Polynomial p = Polynomial::from_integers(Q, {-1, 0, 1});  // t^2 - 1
  CHECK(p.divide_by_root(Q.one()) == Polynomial::from_integers(Q, {1, 1}));

  Polynomial t2p1 = Polynomial::from_integers(Q, {1, 0, 1});
  CHECK_THROWS_AS(t2p1.divide_by_root(Q.one()), ValidationError);

  Field F4 = Field::cyclotomic(4);
  Polynomial c = Polynomial::from_integers(F4, {1, 0, 1});
  FieldElement zeta = F4.root_of_unity(1);
  Polynomial quotient = c.divide_by_root(zeta);
  CHECK(quotient == Polynomial(F4, {zeta, F4.one()}));  // t + zeta
}

TEST_CASE("divide_by_root multiplies back exactly") {
  Rng rng(707);
  for (const Field& F : {Field::rationals(), Field::prime(11), Field::cyclotomic(3)}) {
    for (int i = 0; i < 40; ++i) {
      // Build a polynomial with a planted root.
      FieldElement root = rng.element(F);
      std::vector<FieldElement> rest;
      for (int d = 0; d <= 3; ++d) rest.push_back(rng.element(F));
      rest.push_back(F.one());
      Polynomial q(F, rest);
      Polynomial linear(F, {-root, F.one()});
      Polynomial p = linear * q;
      CHECK(p.divide_by_root(root) * linear == p);
    }
  }
}

TEST_CASE("candidate_roots over Q is the rational root theorem") {
  Field Q = Field::rationals();
  auto r = candidate_roots(Polynomial::from_integers(Q, {-1, 0, 1}));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == Q.integer(-1));
  CHECK(r.roots[1] == Q.one());
  CHECK(r.complete);

  auto none = candidate_roots(Polynomial::from_integers(Q, {1, 0, 1}));
  CHECK(none.roots.empty());
  CHECK(none.complete);
}

TEST_CASE("candidate_roots over GF(5) scans the whole field") {
  Field F5 = Field::prime(5);
  auto r = candidate_roots(Polynomial::from_integers(F5, {1, 0, 1}));
  REQUIRE(r.roots.size() == 2);
  CHECK(r.roots[0] == F5.integer(2));
  CHECK(r.roots[1] == F5.integer(3));
  CHECK(r.complete);
}

TEST_CASE("candidate_roots over a cyclotomic field finds root-of-unity multiples") {
  Field F4 = Field::cyclotomic(4);
  auto r = candidate_roots(Polynomial::from_integers(F4, {1, 0, 1}));  // t^2 + 1
  REQUIRE(r.roots.size() == 2);
  CHECK_FALSE(r.complete);
  FieldElement zeta = F4.root_of_unity(1);
  bool saw_plus = false, saw_minus = false;
  for (const auto& root : r.roots) {
    if (root == zeta) saw_plus = true;
    if (root == -zeta) saw_minus = true;
  }
  CHECK(saw_plus);
  CHECK(saw_minus);
}

TEST_CASE("a nonzero polynomial over GF(p) has at most degree-many roots") {
  Rng rng(808);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 13ull}) {
    Field F = Field::prime(p);
    for (int trial = 0; trial < 60; ++trial) {
      int degree = static_cast<int>(rng.pick(1, 6));
      std::vector<FieldElement> coeffs;
      for (int d = 0; d < degree; ++d) coeffs.push_back(rng.element(F));
      coeffs.push_back(rng.nonzero_element(F));
      Polynomial poly(F, coeffs);
      int roots = 0;
      for (const auto& x : F.elements()) {
        if (poly(x).is_zero()) ++roots;
      }
      CHECK(roots <= degree);
    }
  }
}

TEST_CASE("rational text encoding round-trips") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK(parse_rational("17") == mpq_class(17));
  CHECK(rational_to_string(mpq_class(-3, 2)) == "-3/2");
  CHECK(rational_to_string(mpq_class(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("prime fields reject composite and oversized moduli") {
  CHECK_THROWS_AS(Field::prime(6), ValidationError);
  CHECK_THROWS_AS(Field::prime(1), ValidationError);
  CHECK_THROWS_AS(Field::cyclotomic(0), ValidationError);
  CHECK_THROWS_AS(Field::cyclotomic(conductor_limit() + 1), ValidationError);
}

TEST_CASE("the conductor limit is adjustable") {
  unsigned original = conductor_limit();
  set_conductor_limit(70);
  CHECK(Field::cyclotomic(66).extension_degree() == 20);
  set_conductor_limit(original);
  CHECK_THROWS_AS(Field::cyclotomic(66), ValidationError);
}

TEST_CASE("powers with negative exponents invert") {
  Rng rng(909);
  for (const Field& F : {Field::rationals(), Field::prime(11), Field::cyclotomic(5)}) {
    for (int i = 0; i < 20; ++i) {
      FieldElement a = rng.nonzero_element(F);
      CHECK(a.pow(-3) == a.inverse().pow(3));
      CHECK(a.pow(4) * a.pow(-4) == F.one());
      CHECK(a.pow(0) == F.one());
    }
  }
}

TEST_CASE("field values are safe to build and use from many threads") {
  // The cyclotomic table registry is the only shared state; hammer it.
  std::vector<std::thread> workers;
  std::vector<std::string> results(8);
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([t, &results] {
      std::string acc;
      for (unsigned n = 1; n <= 24; ++n) {
        Field F = Field::cyclotomic(n);
        FieldElement z = F.root_of_unity(1);
        FieldElement v = (z + F.integer(t % 3)) * z.conjugate();
        acc += v.to_string();
        acc += '|';
      }
      results[static_cast<std::size_t>(t)] = acc;
    });
  }
  for (auto& w : workers) w.join();
  CHECK(results[0] == results[3]);
  CHECK(results[1] == results[4]);
  CHECK(results[2] == results[5]);
}
