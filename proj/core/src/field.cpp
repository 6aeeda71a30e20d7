#include "repkit/field.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>

namespace repkit {
namespace {

std::atomic<unsigned> g_conductor_limit{64};

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      result -= result / d;
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// -- rational-coefficient polynomial helpers (constant term first) ----------

using QPoly = std::vector<mpq_class>;

void q_normalize(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  q_normalize(out);
  return out;
}

// Schoolbook division with remainder; divisor must be nonzero.
std::pair<QPoly, QPoly> q_divmod(QPoly num, const QPoly& den) {
  if (den.empty()) throw Error("polynomial division by zero");
  q_normalize(num);
  if (num.size() < den.size()) return {QPoly{}, std::move(num)};
  QPoly quot(num.size() - den.size() + 1, mpq_class(0));
  const mpq_class& lead = den.back();
  for (std::size_t shift = quot.size(); shift-- > 0;) {
    mpq_class c = num[shift + den.size() - 1] / lead;
    if (c != 0) {
      quot[shift] = c;
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
  }
  num.resize(den.size() - 1);
  q_normalize(num);
  return {std::move(quot), std::move(num)};
}

// x^n - 1 divided by the product of all lower cyclotomic polynomials.
QPoly cyclotomic_poly_coeffs(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, QPoly> cache;
  std::lock_guard<std::mutex> lock(mutex);

  auto compute = [](auto&& self, unsigned m) -> const QPoly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    QPoly xm1(m + 1, mpq_class(0));
    xm1[0] = -1;
    xm1[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      auto [q, r] = q_divmod(xm1, self(self, d));
      if (!r.empty()) throw Error("cyclotomic polynomial division left a remainder");
      xm1 = std::move(q);
    }
    return cache.emplace(m, std::move(xm1)).first->second;
  };
  return compute(compute, n);
}

}  // namespace

namespace detail {

struct CyclotomicTable {
  unsigned n = 0;
  unsigned degree = 0;
  std::vector<mpq_class> phi;                  // size degree + 1, monic
  std::vector<std::vector<mpq_class>> powers;  // zeta^k in the power basis
};

namespace {

std::shared_ptr<const CyclotomicTable> make_table(unsigned n) {
  auto table = std::make_shared<CyclotomicTable>();
  table->n = n;
  table->phi = cyclotomic_poly_coeffs(n);
  table->degree = static_cast<unsigned>(table->phi.size() - 1);
  const unsigned deg = table->degree;
  const std::size_t count = std::max<std::size_t>(n, std::size_t{2} * deg);
  table->powers.reserve(count);
  std::vector<mpq_class> cur(deg, mpq_class(0));
  cur[0] = 1;
  table->powers.push_back(cur);
  for (std::size_t k = 1; k < count; ++k) {
    std::vector<mpq_class> next(deg, mpq_class(0));
    mpq_class overflow = cur.empty() ? mpq_class(0) : cur[deg - 1];
    for (unsigned i = deg; i-- > 1;) next[i] = cur[i - 1];
    if (overflow != 0) {
      // zeta^deg = -(phi_{deg-1} zeta^{deg-1} + ... + phi_0)
      for (unsigned i = 0; i < deg; ++i) next[i] -= overflow * table->phi[i];
    }
    table->powers.push_back(next);
    cur = table->powers.back();
  }
  return table;
}

std::shared_ptr<const CyclotomicTable> table_for(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CyclotomicTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto table = make_table(n);
  cache.emplace(n, table);
  return table;
}

}  // namespace
}  // namespace detail

unsigned conductor_limit() { return g_conductor_limit.load(); }

void set_conductor_limit(unsigned limit) { g_conductor_limit.store(limit); }

// -- Field -------------------------------------------------------------------

Field Field::rationals() { return Field(Kind::rational, 0, nullptr); }

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62)) throw ValidationError("prime modulus too large");
  if (!is_prime_u64(p)) throw ValidationError("modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::prime, p, nullptr);
}

Field Field::cyclotomic(unsigned conductor) {
  if (conductor == 0) throw ValidationError("cyclotomic conductor must be positive");
  if (conductor > conductor_limit()) {
    throw ValidationError("cyclotomic conductor " + std::to_string(conductor) +
                          " exceeds the configured limit " + std::to_string(conductor_limit()));
  }
  return Field(Kind::cyclotomic, 0, detail::table_for(conductor));
}

std::uint64_t Field::characteristic() const { return kind_ == Kind::prime ? p_ : 0; }

std::uint64_t Field::prime_modulus() const {
  if (kind_ != Kind::prime) throw Error("prime_modulus: not a prime field");
  return p_;
}

unsigned Field::conductor() const {
  if (kind_ != Kind::cyclotomic) throw Error("conductor: not a cyclotomic field");
  return table_->n;
}

unsigned Field::extension_degree() const {
  return kind_ == Kind::cyclotomic ? table_->degree : 1;
}

const std::vector<mpq_class>& Field::cyclotomic_polynomial() const {
  if (kind_ != Kind::cyclotomic) throw Error("cyclotomic_polynomial: not a cyclotomic field");
  return table_->phi;
}

FieldElement Field::zero() const { return integer(0); }

FieldElement Field::one() const { return integer(1); }

FieldElement Field::integer(long value) const {
  switch (kind_) {
    case Kind::rational:
      return FieldElement(*this, mpq_class(value));
    case Kind::prime: {
      long r = value % static_cast<long>(p_);
      if (r < 0) r += static_cast<long>(p_);
      return FieldElement(*this, static_cast<std::uint64_t>(r));
    }
    case Kind::cyclotomic: {
      FieldElement::Coords coords(table_->degree, mpq_class(0));
      coords[0] = value;
      return FieldElement(*this, std::move(coords));
    }
  }
  throw Error("unreachable field kind");
}

FieldElement Field::from_rational(const mpq_class& value) const {
  mpq_class canonical = value;
  canonical.canonicalize();
  switch (kind_) {
    case Kind::rational:
      return FieldElement(*this, std::move(canonical));
    case Kind::prime: {
      mpz_class den = canonical.get_den();
      if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p_))) {
        throw ValidationError("denominator of " + rational_to_string(canonical) +
                              " is divisible by the characteristic " + std::to_string(p_));
      }
      mpz_class pz(static_cast<unsigned long>(p_));
      mpz_class nm = ((canonical.get_num() % pz) + pz) % pz;
      mpz_class dm = den % pz;
      std::uint64_t n = nm.get_ui();
      std::uint64_t d = dm.get_ui();
      return FieldElement(*this, mul_mod(n, pow_mod(d, p_ - 2, p_), p_));
    }
    case Kind::cyclotomic: {
      FieldElement::Coords coords(table_->degree, mpq_class(0));
      coords[0] = std::move(canonical);
      return FieldElement(*this, std::move(coords));
    }
  }
  throw Error("unreachable field kind");
}

FieldElement Field::root_of_unity(long j) const {
  if (kind_ != Kind::cyclotomic) throw ValidationError("root_of_unity requires a cyclotomic field");
  long n = static_cast<long>(table_->n);
  long k = j % n;
  if (k < 0) k += n;
  return FieldElement(*this, FieldElement::Coords(table_->powers[static_cast<std::size_t>(k)]));
}

FieldElement Field::from_coordinates(std::vector<mpq_class> coords) const {
  if (kind_ != Kind::cyclotomic) throw ValidationError("from_coordinates requires a cyclotomic field");
  if (coords.size() != table_->degree) {
    throw ValidationError("expected " + std::to_string(table_->degree) +
                          " power-basis coordinates, got " + std::to_string(coords.size()));
  }
  for (auto& c : coords) c.canonicalize();
  return FieldElement(*this, std::move(coords));
}

std::vector<FieldElement> Field::elements() const {
  if (kind_ != Kind::prime) throw Error("elements(): only finite prime fields are enumerable");
  std::vector<FieldElement> out;
  out.reserve(p_);
  for (std::uint64_t r = 0; r < p_; ++r) out.push_back(FieldElement(*this, r));
  return out;
}

bool Field::operator==(const Field& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::rational:
      return true;
    case Kind::prime:
      return p_ == other.p_;
    case Kind::cyclotomic:
      return table_->n == other.table_->n;
  }
  return false;
}

std::string Field::to_string() const {
  switch (kind_) {
    case Kind::rational:
      return "Q";
    case Kind::prime:
      return "GF(" + std::to_string(p_) + ")";
    case Kind::cyclotomic:
      return "Q(zeta_" + std::to_string(table_->n) + ")";
  }
  return "?";
}

// -- FieldElement ------------------------------------------------------------

FieldElement::FieldElement() : field_(Field::rationals()), value_(mpq_class(0)) {}

void require_same_field(const Field& a, const Field& b) {
  if (a != b) {
    throw ValidationError("mixed-field operands: " + a.to_string() + " vs " + b.to_string());
  }
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.field(), b.field());
}

bool FieldElement::is_zero() const {
  switch (field_.kind()) {
    case Field::Kind::rational:
      return std::get<mpq_class>(value_) == 0;
    case Field::Kind::prime:
      return std::get<std::uint64_t>(value_) == 0;
    case Field::Kind::cyclotomic: {
      const auto& c = std::get<Coords>(value_);
      return std::all_of(c.begin(), c.end(), [](const mpq_class& q) { return q == 0; });
    }
  }
  return false;
}

bool FieldElement::is_one() const { return *this == field_.one(); }

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  switch (field_.kind()) {
    case Field::Kind::rational:
      return FieldElement(field_, mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(rhs.value_)));
    case Field::Kind::prime: {
      std::uint64_t p = field_.prime_modulus();
      std::uint64_t s = std::get<std::uint64_t>(value_) + std::get<std::uint64_t>(rhs.value_);
      if (s >= p) s -= p;
      return FieldElement(field_, s);
    }
    case Field::Kind::cyclotomic: {
      Coords out = std::get<Coords>(value_);
      const Coords& b = std::get<Coords>(rhs.value_);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
      return FieldElement(field_, std::move(out));
    }
  }
  throw Error("unreachable field kind");
}

FieldElement FieldElement::operator-() const {
  switch (field_.kind()) {
    case Field::Kind::rational:
      return FieldElement(field_, mpq_class(-std::get<mpq_class>(value_)));
    case Field::Kind::prime: {
      std::uint64_t r = std::get<std::uint64_t>(value_);
      return FieldElement(field_, r == 0 ? 0 : field_.prime_modulus() - r);
    }
    case Field::Kind::cyclotomic: {
      Coords out = std::get<Coords>(value_);
      for (auto& q : out) q = -q;
      return FieldElement(field_, std::move(out));
    }
  }
  throw Error("unreachable field kind");
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  switch (field_.kind()) {
    case Field::Kind::rational:
      return FieldElement(field_, mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(rhs.value_)));
    case Field::Kind::prime:
      return FieldElement(field_, mul_mod(std::get<std::uint64_t>(value_),
                                          std::get<std::uint64_t>(rhs.value_),
                                          field_.prime_modulus()));
    case Field::Kind::cyclotomic: {
      const Coords& a = std::get<Coords>(value_);
      const Coords& b = std::get<Coords>(rhs.value_);
      const auto& table = *field_.table_;
      const unsigned deg = table.degree;
      // Convolve, then fold powers >= deg back through the precomputed ladder.
      std::vector<mpq_class> prod(2 * deg - 1, mpq_class(0));
      for (unsigned i = 0; i < deg; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < deg; ++j) prod[i + j] += a[i] * b[j];
      }
      Coords out(deg, mpq_class(0));
      for (unsigned i = 0; i < deg; ++i) out[i] = prod[i];
      for (unsigned k = deg; k < 2 * deg - 1; ++k) {
        if (prod[k] == 0) continue;
        const auto& pw = table.powers[k];
        for (unsigned i = 0; i < deg; ++i) out[i] += prod[k] * pw[i];
      }
      return FieldElement(field_, std::move(out));
    }
  }
  throw Error("unreachable field kind");
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw ValidationError("division by zero in " + field_.to_string());
  switch (field_.kind()) {
    case Field::Kind::rational:
      return FieldElement(field_, mpq_class(1 / std::get<mpq_class>(value_)));
    case Field::Kind::prime: {
      std::uint64_t p = field_.prime_modulus();
      return FieldElement(field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
    }
    case Field::Kind::cyclotomic: {
      // Extended Euclid in Q[t] against the (irreducible) cyclotomic modulus.
      const auto& table = *field_.table_;
      QPoly a(std::get<Coords>(value_).begin(), std::get<Coords>(value_).end());
      q_normalize(a);
      QPoly r0 = table.phi, r1 = a;
      QPoly s0{}, s1{mpq_class(1)};
      while (!r1.empty() && r1.size() > 1) {
        auto [q, r] = q_divmod(r0, r1);
        QPoly s2 = s0;
        QPoly qs1 = q_mul(q, s1);
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), mpq_class(0));
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        q_normalize(s2);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
      }
      if (r1.empty()) throw Error("cyclotomic modulus is not coprime to the element");
      // r1 is a nonzero constant c with s1 * a = c (mod phi); scale it away.
      mpq_class c = r1[0];
      Coords out(table.degree, mpq_class(0));
      for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / c;
      return FieldElement(field_, std::move(out));
    }
  }
  throw Error("unreachable field kind");
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const { return *this * rhs.inverse(); }

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement acc = field_.one();
  FieldElement base = *this;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElement FieldElement::conjugate() const {
  if (field_.kind() != Field::Kind::cyclotomic) return *this;
  const auto& table = *field_.table_;
  const Coords& a = std::get<Coords>(value_);
  Coords out(table.degree, mpq_class(0));
  for (unsigned i = 0; i < table.degree; ++i) {
    if (a[i] == 0) continue;
    // zeta^i -> zeta^(n-i), with zeta^0 fixed
    const auto& pw = table.powers[i == 0 ? 0 : table.n - i];
    for (unsigned j = 0; j < table.degree; ++j) out[j] += a[i] * pw[j];
  }
  return FieldElement(field_, std::move(out));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  if (field_ != rhs.field_) return false;
  return value_ == rhs.value_;
}

bool FieldElement::is_rational_value() const {
  if (field_.kind() != Field::Kind::cyclotomic) return true;
  const Coords& c = std::get<Coords>(value_);
  return std::all_of(c.begin() + 1, c.end(), [](const mpq_class& q) { return q == 0; });
}

mpq_class FieldElement::as_rational() const {
  switch (field_.kind()) {
    case Field::Kind::rational:
      return std::get<mpq_class>(value_);
    case Field::Kind::cyclotomic:
      if (!is_rational_value()) {
        throw Error("element " + to_string() + " does not lie in the prime field");
      }
      return std::get<Coords>(value_)[0];
    case Field::Kind::prime:
      throw Error("as_rational: element of positive characteristic");
  }
  throw Error("unreachable field kind");
}

const mpq_class& FieldElement::rational_value() const {
  if (field_.kind() != Field::Kind::rational) throw Error("rational_value: wrong field kind");
  return std::get<mpq_class>(value_);
}

std::uint64_t FieldElement::residue() const {
  if (field_.kind() != Field::Kind::prime) throw Error("residue: wrong field kind");
  return std::get<std::uint64_t>(value_);
}

const std::vector<mpq_class>& FieldElement::coordinates() const {
  if (field_.kind() != Field::Kind::cyclotomic) throw Error("coordinates: wrong field kind");
  return std::get<Coords>(value_);
}

std::string FieldElement::to_string() const {
  switch (field_.kind()) {
    case Field::Kind::rational:
      return rational_to_string(std::get<mpq_class>(value_));
    case Field::Kind::prime:
      return std::to_string(std::get<std::uint64_t>(value_));
    case Field::Kind::cyclotomic: {
      std::ostringstream out;
      const Coords& c = std::get<Coords>(value_);
      out << '[';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out << ", ";
        out << rational_to_string(c[i]);
      }
      out << ']';
      return out.str();
    }
  }
  return "?";
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  switch (a.field().kind()) {
    case Field::Kind::rational:
      return cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
    case Field::Kind::prime: {
      std::uint64_t x = std::get<std::uint64_t>(a.value_);
      std::uint64_t y = std::get<std::uint64_t>(b.value_);
      return x < y ? -1 : (x == y ? 0 : 1);
    }
    case Field::Kind::cyclotomic: {
      const Coords& x = std::get<Coords>(a.value_);
      const Coords& y = std::get<Coords>(b.value_);
      for (std::size_t i = 0; i < x.size(); ++i) {
        int c = cmp(x[i], y[i]);
        if (c != 0) return c;
      }
      return 0;
    }
  }
  return 0;
}

// -- text encoding -----------------------------------------------------------

mpq_class parse_rational(const std::string& text) {
  auto fail = [&]() -> mpq_class {
    throw ParseError("malformed rational '" + text + "'");
  };
  if (text.empty()) return fail();
  std::size_t slash = text.find('/');
  auto check_int = [&](std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    std::size_t i = begin;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i >= end) return false;
    for (; i < end; ++i) {
      if (text[i] < '0' || text[i] > '9') return false;
    }
    return true;
  };
  if (!check_int(0, slash == std::string::npos ? text.size() : slash)) return fail();
  mpz_class num(text.substr(0, slash == std::string::npos ? text.size() : slash));
  mpz_class den(1);
  if (slash != std::string::npos) {
    if (!check_int(slash + 1, text.size())) return fail();
    den = mpz_class(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const mpq_class& value) { return value.get_str(); }

}  // namespace repkit
