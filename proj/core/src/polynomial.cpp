#include "repkit/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace repkit {

Polynomial::Polynomial(Field field, std::vector<FieldElement> coefficients)
    : field_(std::move(field)), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) require_same_field(c.field(), field_);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& value) {
  return Polynomial(value.field(), {value});
}

Polynomial Polynomial::variable(const Field& field) {
  return Polynomial(field, {field.zero(), field.one()});
}

Polynomial Polynomial::from_integers(const Field& field, const std::vector<long>& coefficients) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(coefficients.size());
  for (long c : coefficients) coeffs.push_back(field.integer(c));
  return Polynomial(field, std::move(coeffs));
}

FieldElement Polynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

const FieldElement& Polynomial::leading_coefficient() const {
  if (coeffs_.empty()) throw Error("leading_coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_same_field(field_, rhs.field_);
  std::vector<FieldElement> out(std::max(coeffs_.size(), rhs.coeffs_.size()), field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(-c);
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_field(field_, rhs.field_);
  if (coeffs_.empty() || rhs.coeffs_.empty()) return Polynomial(field_);
  std::vector<FieldElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::operator*(const FieldElement& scalar) const {
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * scalar);
  return Polynomial(field_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

FieldElement Polynomial::operator()(const FieldElement& point) const {
  require_same_field(point.field(), field_);
  FieldElement acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
  return acc;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) throw Error("monic: zero polynomial");
  return *this * leading_coefficient().inverse();
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  require_same_field(field_, divisor.field_);
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  if (coeffs_.size() < divisor.coeffs_.size()) return {Polynomial(field_), *this};
  std::vector<FieldElement> rem = coeffs_;
  std::vector<FieldElement> quot(coeffs_.size() - divisor.coeffs_.size() + 1, field_.zero());
  const FieldElement lead_inv = divisor.leading_coefficient().inverse();
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    FieldElement c = rem[shift + divisor.coeffs_.size() - 1] * lead_inv;
    if (!c.is_zero()) {
      quot[shift] = c;
      for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
        rem[shift + j] -= c * divisor.coeffs_[j];
      }
    }
  }
  rem.resize(divisor.coeffs_.size() - 1);
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

Polynomial Polynomial::divide_by_root(const FieldElement& a) const {
  if (is_zero()) throw Error("divide_by_root: zero polynomial");
  if (!(*this)(a).is_zero()) {
    throw ValidationError(a.to_string() + " is not a root of " + to_string());
  }
  Polynomial linear(field_, {-a, field_.one()});
  auto [quot, rem] = divmod(linear);
  if (!rem.is_zero()) throw Error("divide_by_root: nonzero remainder after verified root");
  return quot;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field_, b.field_);
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r = r0.divmod(r1).second;
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  if (r0.is_zero()) return r0;
  return r0.monic();
}

Polynomial Polynomial::lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  Polynomial g = gcd(a, b);
  return (a * b).divmod(g).first.monic();
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[i].to_string() << ")";
    if (i == 1) out << "*t";
    if (i > 1) out << "*t^" << i;
  }
  return out.str();
}

// -- root search --------------------------------------------------------------

namespace {

// All positive divisors of |z| from its trial-division factorization. The
// bool is false when the factorization ran out of budget (then the divisor
// list still contains everything built from the factored part plus the
// unfactored cofactor, keeping the search sound but not complete).
std::pair<std::vector<mpz_class>, bool> positive_divisors(mpz_class z) {
  z = abs(z);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  bool complete = true;
  if (z == 0) return {{}, true};
  mpz_class d(2);
  long budget = 2'000'000;
  while (z > 1) {
    if (d * d > z) {
      factors.emplace_back(z, 1);
      break;
    }
    if (budget-- <= 0) {
      factors.emplace_back(z, 1);  // unfactored cofactor
      complete = false;
      break;
    }
    if (z % d == 0) {
      unsigned e = 0;
      while (z % d == 0) {
        z /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  std::vector<mpz_class> divisors{mpz_class(1)};
  for (const auto& [prime, mult] : factors) {
    std::size_t base = divisors.size();
    mpz_class power(1);
    for (unsigned e = 1; e <= mult; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  return {std::move(divisors), complete};
}

// Rational-root-theorem candidates of a rational-coefficient polynomial
// (roots at zero handled by the caller).
std::pair<std::vector<mpq_class>, bool> rational_candidates(const Polynomial& p) {
  mpz_class scale(1);
  for (const auto& c : p.coefficients()) scale = lcm(scale, c.as_rational().get_den());
  mpz_class constant = mpz_class(p.coefficient(0).as_rational() * scale);
  mpz_class leading = mpz_class(p.leading_coefficient().as_rational() * scale);
  auto [nums, nums_complete] = positive_divisors(constant);
  auto [dens, dens_complete] = positive_divisors(leading);
  std::vector<mpq_class> out;
  for (const auto& n : nums) {
    for (const auto& d : dens) {
      mpq_class q(n, d);
      q.canonicalize();
      out.push_back(q);
      out.push_back(-q);
    }
  }
  return {std::move(out), nums_complete && dens_complete};
}

void append_verified(const Polynomial& p, const FieldElement& candidate,
                     std::vector<FieldElement>& roots) {
  if (!p(candidate).is_zero()) return;
  for (const auto& r : roots) {
    if (r == candidate) return;
  }
  roots.push_back(candidate);
}

// Coefficient-wise Galois twist zeta -> zeta^k.
Polynomial galois_twist(const Polynomial& p, unsigned k) {
  const Field& field = p.field();
  unsigned n = field.conductor();
  std::vector<FieldElement> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    const auto& coords = c.coordinates();
    FieldElement acc = field.zero();
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == 0) continue;
      acc += field.root_of_unity(static_cast<long>((i * k) % n)) * field.from_rational(coords[i]);
    }
    coeffs.push_back(acc);
  }
  return Polynomial(field, std::move(coeffs));
}

}  // namespace

RootSearch candidate_roots(const Polynomial& input) {
  if (input.is_zero()) throw Error("candidate_roots: zero polynomial");
  const Field& field = input.field();
  RootSearch result;

  // Strip roots at zero first.
  Polynomial p = input;
  bool zero_root = false;
  while (!p.is_zero() && p.coefficient(0).is_zero()) {
    zero_root = true;
    auto coeffs = p.coefficients();
    coeffs.erase(coeffs.begin());
    p = Polynomial(field, std::move(coeffs));
  }
  if (zero_root) result.roots.push_back(field.zero());

  switch (field.kind()) {
    case Field::Kind::prime: {
      for (const auto& x : field.elements()) append_verified(p, x, result.roots);
      result.complete = true;
      break;
    }
    case Field::Kind::rational: {
      if (p.degree() >= 1) {
        auto [candidates, complete] = rational_candidates(p);
        for (const auto& q : candidates) append_verified(p, field.from_rational(q), result.roots);
        result.complete = complete;
      } else {
        result.complete = true;
      }
      break;
    }
    case Field::Kind::cyclotomic: {
      if (p.degree() >= 1) {
        unsigned n = field.conductor();
        // Norm-scaled companion: the product of all Galois twists has
        // rational coefficients and inherits every rational root of p.
        Polynomial norm = Polynomial::constant(field.one());
        for (unsigned k = 1; k <= n; ++k) {
          if (std::gcd(k, n) != 1) continue;
          norm = norm * galois_twist(p, k);
        }
        Field rational = Field::rationals();
        std::vector<FieldElement> norm_coeffs;
        for (const auto& c : norm.coefficients()) {
          if (!c.is_rational_value()) {
            throw Error("Galois-orbit product has an irrational coefficient");
          }
          norm_coeffs.push_back(rational.from_rational(c.as_rational()));
        }
        auto [candidates, complete] = rational_candidates(Polynomial(rational, norm_coeffs));
        (void)complete;  // cyclotomic search is declared incomplete regardless
        for (const auto& q : candidates) {
          FieldElement r = field.from_rational(q);
          for (unsigned j = 0; j < n; ++j) {
            append_verified(p, r * field.root_of_unity(j), result.roots);
          }
        }
      }
      result.complete = false;
      break;
    }
  }

  std::sort(result.roots.begin(), result.roots.end(), [](const FieldElement& a, const FieldElement& b) {
    return FieldElement::compare(a, b) < 0;
  });
  return result;
}

}  // namespace repkit
