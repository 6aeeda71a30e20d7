#include "repkit/rep.hpp"

#include <algorithm>

namespace repkit {

Representation Representation::create(FiniteGroup group, Field field, std::vector<Matrix> matrices) {
  const std::size_t n = group.order();
  if (matrices.size() != n) throw ValidationError("need one matrix per group element");
  const std::size_t d = matrices[0].rows();
  if (d == 0) throw ValidationError("representation degree must be positive");
  for (std::size_t x = 0; x < n; ++x) {
    if (matrices[x].rows() != d || matrices[x].cols() != d) {
      throw ValidationError("matrix for '" + group.label(x) + "' is not " + std::to_string(d) +
                            "x" + std::to_string(d));
    }
    require_same_field(matrices[x].field(), field);
  }
  if (!matrices[group.identity()].is_identity()) {
    throw ValidationError("matrix at the identity element is not the identity matrix");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (matrices[group.multiply(x, y)] != matrices[x] * matrices[y]) {
        throw ValidationError("product law fails at ('" + group.label(x) + "', '" +
                              group.label(y) + "')");
      }
    }
  }
  return Representation(std::move(group), std::move(field), d, std::move(matrices));
}

Representation Representation::trivial(const FiniteGroup& g, const Field& field, std::size_t degree) {
  std::vector<Matrix> mats(g.order(), Matrix::identity(field, degree));
  return create(g, field, std::move(mats));
}

Representation Representation::permutation(const GroupAction& action, const Field& field) {
  std::vector<Matrix> mats;
  mats.reserve(action.group().order());
  for (std::size_t x = 0; x < action.group().order(); ++x) {
    Matrix m(field, action.set_size(), action.set_size());
    for (std::size_t a = 0; a < action.set_size(); ++a) m.at(action.apply(x, a), a) = field.one();
    mats.push_back(std::move(m));
  }
  return create(action.group(), field, std::move(mats));
}

Representation Representation::left_regular(const FiniteGroup& g, const Field& field) {
  return permutation(GroupAction::left_translation(g), field);
}

Representation Representation::right_regular(const FiniteGroup& g, const Field& field) {
  return permutation(GroupAction::right_inverse_translation(g), field);
}

// -- characters -----------------------------------------------------------------

Character::Character(const Representation& rep)
    : group_(rep.group()), field_(rep.field()) {
  values_.reserve(group_.order());
  for (std::size_t x = 0; x < group_.order(); ++x) values_.push_back(rep[x].trace());
}

Character::Character(FiniteGroup group, Field field, std::vector<FieldElement> values)
    : group_(std::move(group)), field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != group_.order()) throw ValidationError("character needs one value per element");
  for (const auto& v : values_) require_same_field(v.field(), field_);
}

bool Character::is_class_function() const {
  for (const auto& cls : group_.conjugacy_classes()) {
    for (std::size_t x : cls) {
      if (values_[x] != values_[cls[0]]) return false;
    }
  }
  return true;
}

std::vector<FieldElement> Character::class_values() const {
  std::vector<FieldElement> out;
  for (const auto& cls : group_.conjugacy_classes()) out.push_back(values_[cls[0]]);
  return out;
}

Character Character::operator+(const Character& rhs) const {
  if (group_ != rhs.group_) throw ValidationError("characters over different groups");
  require_same_field(field_, rhs.field_);
  std::vector<FieldElement> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] + rhs.values_[i]);
  return Character(group_, field_, std::move(out));
}

Character Character::operator*(const Character& rhs) const {
  if (group_ != rhs.group_) throw ValidationError("characters over different groups");
  require_same_field(field_, rhs.field_);
  std::vector<FieldElement> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] * rhs.values_[i]);
  return Character(group_, field_, std::move(out));
}

bool Character::operator==(const Character& rhs) const {
  return group_ == rhs.group_ && field_ == rhs.field_ && values_ == rhs.values_;
}

// -- structural operations --------------------------------------------------------

namespace {

void require_compatible(const Representation& rho, const Representation& sigma) {
  if (rho.group() != sigma.group()) throw ValidationError("representations over different groups");
  require_same_field(rho.field(), sigma.field());
}

}  // namespace

Representation direct_sum(const Representation& rho, const Representation& sigma) {
  require_compatible(rho, sigma);
  std::vector<Matrix> mats;
  mats.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    mats.push_back(Matrix::block_diagonal({rho[x], sigma[x]}));
  }
  return Representation::create(rho.group(), rho.field(), std::move(mats));
}

Representation tensor_product(const Representation& rho, const Representation& sigma) {
  require_compatible(rho, sigma);
  std::vector<Matrix> mats;
  mats.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    mats.push_back(rho[x].kronecker(sigma[x]));
  }
  return Representation::create(rho.group(), rho.field(), std::move(mats));
}

Representation dual(const Representation& rho) {
  std::vector<Matrix> mats;
  mats.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    mats.push_back(rho[rho.group().inverse(x)].transpose());
  }
  return Representation::create(rho.group(), rho.field(), std::move(mats));
}

Representation restrict_to(const Representation& rho, const SubgroupView& subgroup) {
  std::vector<Matrix> mats;
  mats.reserve(subgroup.embedding.size());
  for (std::size_t parent : subgroup.embedding) mats.push_back(rho[parent]);
  return Representation::create(subgroup.group, rho.field(), std::move(mats));
}

SplitResult split_along_invariant(const Representation& rho, const Subspace& invariant) {
  const Field& field = rho.field();
  const std::size_t d = rho.degree();
  const std::size_t k = invariant.dim();
  if (invariant.ambient_dimension() != d) throw ValidationError("subspace lives in the wrong space");
  if (k == 0 || k == d) throw ValidationError("need a proper nonzero invariant subspace");
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    for (std::size_t j = 0; j < k; ++j) {
      if (!invariant.contains(rho[x].apply(invariant.basis().column(j)))) {
        throw ValidationError("subspace is not invariant under '" + rho.group().label(x) + "'");
      }
    }
  }
  Matrix basis = complete_basis(invariant.basis());
  Matrix change = *inverse(basis);  // basis is invertible by construction
  std::vector<Matrix> sub, quot;
  sub.reserve(rho.group().order());
  quot.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    Matrix conj = change * rho[x] * basis;
    sub.push_back(conj.submatrix(0, 0, k, k));
    quot.push_back(conj.submatrix(k, k, d - k, d - k));
  }
  return SplitResult{Representation::create(rho.group(), field, std::move(sub)),
                     Representation::create(rho.group(), field, std::move(quot)),
                     std::move(change)};
}

std::vector<Matrix> intertwiner_space(const Representation& rho, const Representation& sigma) {
  require_compatible(rho, sigma);
  const Field& field = rho.field();
  const FiniteGroup& g = rho.group();
  const std::size_t dr = rho.degree();
  const std::size_t ds = sigma.degree();
  // Unknown A is ds x dr, vectorized column-major; the constraint
  // sigma_x A - A rho_x = 0 becomes (I (x) sigma_x - rho_x^T (x) I) vec(A) = 0.
  // Constraints for a generating set suffice: intertwining is preserved
  // under products and inverses.
  std::vector<std::size_t> generators = g.generating_set();
  Matrix system(field, generators.size() * dr * ds, dr * ds);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    std::size_t x = generators[k];
    Matrix block = Matrix::identity(field, dr).kronecker(sigma[x]) -
                   rho[x].transpose().kronecker(Matrix::identity(field, ds));
    for (std::size_t i = 0; i < dr * ds; ++i) {
      for (std::size_t j = 0; j < dr * ds; ++j) {
        system.at(k * dr * ds + i, j) = block.at(i, j);
      }
    }
  }
  Subspace null = kernel(system);
  std::vector<Matrix> basis;
  basis.reserve(null.dim());
  for (std::size_t b = 0; b < null.dim(); ++b) {
    Matrix a(field, ds, dr);
    for (std::size_t col = 0; col < dr; ++col) {
      for (std::size_t row = 0; row < ds; ++row) {
        a.at(row, col) = null.basis().at(col * ds + row, b);
      }
    }
    basis.push_back(std::move(a));
  }
  return basis;
}

namespace {

bool check_intertwines(const Representation& rho, const Representation& sigma, const Matrix& s) {
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    if (sigma[x] * s != s * rho[x]) return false;
  }
  return true;
}

}  // namespace

IsomorphismResult is_isomorphic(const Representation& rho, const Representation& sigma) {
  require_compatible(rho, sigma);
  if (rho.degree() != sigma.degree()) return {IsoVerdict::no, std::nullopt};
  if (Character(rho) != Character(sigma)) return {IsoVerdict::no, std::nullopt};

  std::vector<Matrix> basis = intertwiner_space(rho, sigma);
  if (basis.empty()) return {IsoVerdict::no, std::nullopt};
  const Field& field = rho.field();
  const std::size_t d = rho.degree();
  const std::size_t k = basis.size();

  auto accept = [&](const Matrix& candidate) -> std::optional<IsomorphismResult> {
    if (determinant(candidate).is_zero()) return std::nullopt;
    return IsomorphismResult{IsoVerdict::yes, candidate};
  };

  // Cheap candidates first: basis elements and their running sums.
  Matrix sum(field, d, d);
  for (const Matrix& b : basis) {
    if (auto hit = accept(b)) return *hit;
    sum = sum + b;
    if (auto hit = accept(sum)) return *hit;
  }

  // Grid search over coefficient tuples. det(sum c_i B_i) has degree <= d
  // in each c_i, so a full grid with d+1 values per coordinate decides
  // existence exactly (characteristic 0, or p > d). Over small prime
  // fields, sweep the whole coefficient space instead.
  std::vector<FieldElement> grid_values;
  bool exhaustive = false;
  const double budget = 300000.0;
  if (field.characteristic() == 0) {
    for (std::size_t v = 0; v <= d; ++v) grid_values.push_back(field.integer(static_cast<long>(v)));
  } else {
    std::uint64_t p = field.prime_modulus();
    double full = 1.0;
    for (std::size_t i = 0; i < k; ++i) full *= static_cast<double>(p);
    if (full <= budget) {
      for (const auto& v : field.elements()) grid_values.push_back(v);
      exhaustive = true;
    } else if (p > d) {
      for (std::size_t v = 0; v <= d; ++v) grid_values.push_back(field.integer(static_cast<long>(v)));
    } else {
      return {IsoVerdict::inconclusive, std::nullopt};
    }
  }
  double total = 1.0;
  for (std::size_t i = 0; i < k; ++i) total *= static_cast<double>(grid_values.size());
  if (total > budget) return {IsoVerdict::inconclusive, std::nullopt};
  (void)exhaustive;

  std::vector<std::size_t> index(k, 0);
  for (;;) {
    Matrix candidate(field, d, d);
    bool all_zero = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (index[i] != 0) all_zero = false;
      if (!grid_values[index[i]].is_zero()) candidate = candidate + basis[i] * grid_values[index[i]];
    }
    if (!all_zero) {
      if (auto hit = accept(candidate)) return *hit;
    }
    std::size_t pos = 0;
    while (pos < k && ++index[pos] == grid_values.size()) {
      index[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return {IsoVerdict::no, std::nullopt};
}

// -- change of field -----------------------------------------------------------------

namespace {

FieldElement embed_element(const FieldElement& a, const Field& target) {
  const Field& source = a.field();
  if (source == target) return a;
  if (source.is_rational()) return target.from_rational(a.as_rational());
  // zeta_m -> zeta_n^(n/m)
  unsigned m = source.conductor();
  unsigned n = target.conductor();
  unsigned step = n / m;
  FieldElement acc = target.zero();
  const auto& coords = a.coordinates();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    acc += target.root_of_unity(static_cast<long>(i * step)) * target.from_rational(coords[i]);
  }
  return acc;
}

}  // namespace

Representation extend_field(const Representation& rho, const Field& target) {
  const Field& source = rho.field();
  if (source == target) return rho;
  bool legal = false;
  if (source.is_rational() && (target.is_rational() || target.is_cyclotomic())) legal = true;
  if (source.is_cyclotomic() && target.is_cyclotomic() &&
      target.conductor() % source.conductor() == 0) {
    legal = true;
  }
  if (!legal) {
    throw ValidationError("unsupported field extension " + source.to_string() + " -> " +
                          target.to_string());
  }
  std::vector<Matrix> mats;
  mats.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    Matrix m(target, rho.degree(), rho.degree());
    for (std::size_t i = 0; i < rho.degree(); ++i) {
      for (std::size_t j = 0; j < rho.degree(); ++j) m.at(i, j) = embed_element(rho[x].at(i, j), target);
    }
    mats.push_back(std::move(m));
  }
  return Representation::create(rho.group(), target, std::move(mats));
}

Representation restrict_scalars(const Representation& rho) {
  const Field& source = rho.field();
  if (!source.is_cyclotomic()) {
    throw ValidationError("restrict_scalars needs a cyclotomic representation");
  }
  Field target = Field::rationals();
  const unsigned phi = source.extension_degree();
  auto mult_matrix = [&](const FieldElement& a) {
    Matrix m(target, phi, phi);
    for (unsigned c = 0; c < phi; ++c) {
      FieldElement prod = a * source.root_of_unity(c);
      const auto& coords = prod.coordinates();
      for (unsigned r = 0; r < phi; ++r) m.at(r, c) = target.from_rational(coords[r]);
    }
    return m;
  };
  std::vector<Matrix> mats;
  mats.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    Matrix big(target, rho.degree() * phi, rho.degree() * phi);
    for (std::size_t i = 0; i < rho.degree(); ++i) {
      for (std::size_t j = 0; j < rho.degree(); ++j) {
        if (rho[x].at(i, j).is_zero()) continue;
        Matrix block = mult_matrix(rho[x].at(i, j));
        for (unsigned r = 0; r < phi; ++r) {
          for (unsigned c = 0; c < phi; ++c) big.at(i * phi + r, j * phi + c) = block.at(r, c);
        }
      }
    }
    mats.push_back(std::move(big));
  }
  return Representation::create(rho.group(), target, std::move(mats));
}

Representation reduce_mod(const Representation& rho, std::uint64_t p) {
  if (!rho.field().is_rational()) {
    throw ValidationError("reduce_mod starts from a rational representation");
  }
  Field target = Field::prime(p);
  std::vector<Matrix> mats;
  mats.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    Matrix m(target, rho.degree(), rho.degree());
    for (std::size_t i = 0; i < rho.degree(); ++i) {
      for (std::size_t j = 0; j < rho.degree(); ++j) {
        m.at(i, j) = target.from_rational(rho[x].at(i, j).rational_value());
      }
    }
    mats.push_back(std::move(m));
  }
  return Representation::create(rho.group(), target, std::move(mats));
}

}  // namespace repkit
