#include "repkit/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace repkit {

bool modular_obstruction(const Representation& rho) {
  std::uint64_t p = rho.field().characteristic();
  return p != 0 && rho.group().order() % p == 0;
}

InvarianceCheck is_invariant(const Representation& rho, const Subspace& subspace) {
  if (subspace.ambient_dimension() != rho.degree()) {
    throw ValidationError("subspace lives in the wrong space");
  }
  if (subspace.is_zero() || subspace.is_full()) return {true, std::nullopt};
  RowReduction reduction(subspace.basis());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    for (std::size_t j = 0; j < subspace.dim(); ++j) {
      if (!reduction.solve(rho[x].apply(subspace.basis().column(j)))) {
        return {false, x};
      }
    }
  }
  return {true, std::nullopt};
}

namespace {

void require_averaging_possible(const Representation& rho) {
  if (modular_obstruction(rho)) {
    throw ValidationError("cannot average over the group: its order " +
                          std::to_string(rho.group().order()) + " is zero in " +
                          rho.field().to_string());
  }
}

Matrix coordinate_projection(const Field& field, const Subspace& subspace) {
  const std::size_t d = subspace.ambient_dimension();
  const std::size_t k = subspace.dim();
  Matrix basis = complete_basis(subspace.basis());
  Matrix selector(field, d, d);
  for (std::size_t i = 0; i < k; ++i) selector.at(i, i) = field.one();
  return basis * selector * *inverse(basis);
}

}  // namespace

Matrix average_projection(const Representation& rho, const Subspace& invariant,
                          const std::optional<Matrix>& start) {
  require_averaging_possible(rho);
  const Field& field = rho.field();
  auto check = is_invariant(rho, invariant);
  if (!check.invariant) {
    throw ValidationError("subspace is not invariant under '" +
                          rho.group().label(*check.witness) + "'");
  }
  Matrix p0 = start ? *start : coordinate_projection(field, invariant);
  if (start) {
    if (p0.rows() != rho.degree() || p0.cols() != rho.degree()) {
      throw ValidationError("starting projection has the wrong shape");
    }
    if (p0 * p0 != p0) throw ValidationError("starting operator is not a projection");
    if (image(p0) != Subspace::span(invariant.basis())) {
      throw ValidationError("starting projection does not have image L");
    }
  }
  Matrix sum(field, rho.degree(), rho.degree());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    sum = sum + rho[x] * p0 * rho[rho.group().inverse(x)];
  }
  return sum * field.integer(static_cast<long>(rho.group().order())).inverse();
}

Subspace invariant_complement(const Representation& rho, const Subspace& invariant) {
  return kernel(average_projection(rho, invariant));
}

std::vector<Matrix> commutant(const Representation& rho) { return intertwiner_space(rho, rho); }

// -- splitting ------------------------------------------------------------------

namespace {

// Trace-normalized variant A - (trace/degree) I, when the degree is
// invertible in the field; nullopt when the result collapses to a scalar.
std::optional<Matrix> trace_normalized(const Matrix& a) {
  const Field& field = a.field();
  FieldElement d = field.integer(static_cast<long>(a.rows()));
  if (d.is_zero()) return std::nullopt;
  Matrix candidate = a;
  FieldElement shift = a.trace() / d;
  for (std::size_t i = 0; i < a.rows(); ++i) candidate.at(i, i) -= shift;
  if (candidate.is_scalar() || candidate.is_zero()) return std::nullopt;
  return candidate;
}

std::vector<std::size_t> group_center(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < g.order(); ++y) {
    bool central = true;
    for (std::size_t x = 0; x < g.order() && central; ++x) {
      central = g.multiply(x, y) == g.multiply(y, x);
    }
    if (central) out.push_back(y);
  }
  return out;
}

// Candidate commuting operators for the eigenvalue search, deterministic
// order: commutant basis elements, central translations, then pairwise
// products of basis elements. Each operator is tried as-is and in the
// trace-normalized variant (the raw form keeps root-of-unity eigenvalues
// findable; the shifted form guarantees a non-scalar candidate).
std::vector<Matrix> split_candidates(const Representation& rho, const std::vector<Matrix>& basis) {
  std::vector<Matrix> out;
  auto append = [&](Matrix m) {
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  };
  auto push = [&](const Matrix& m) {
    if (!m.is_scalar() && !m.is_zero()) append(m);
    if (auto shifted = trace_normalized(m)) append(std::move(*shifted));
  };
  for (const Matrix& b : basis) push(b);
  for (std::size_t y : group_center(rho.group())) {
    if (y != rho.group().identity()) push(rho[y]);
  }
  std::size_t extra = 0;
  for (std::size_t i = 0; i < basis.size() && extra < 24; ++i) {
    for (std::size_t j = 0; j < basis.size() && extra < 24; ++j) {
      if (i == j) continue;
      push(basis[i] * basis[j]);
      ++extra;
    }
  }
  return out;
}

}  // namespace

SplitOutcome split_once(const Representation& rho) {
  const Field& field = rho.field();
  std::vector<Matrix> basis = commutant(rho);
  bool modular = modular_obstruction(rho);
  if (basis.size() == 1) {
    if (modular) return {SplitOutcome::Kind::inconclusive, std::nullopt, 0};
    return {SplitOutcome::Kind::irreducible, std::nullopt, 0};
  }

  for (const Matrix& a : split_candidates(rho, basis)) {
    for (const FieldElement& root : candidate_roots(min_poly(a)).roots) {
      Subspace space = eigenspace(a, root);
      if (space.dim() > 0 && space.dim() < rho.degree()) {
        return {SplitOutcome::Kind::subspace, std::move(space), 0};
      }
    }
  }

  if (modular) return {SplitOutcome::Kind::inconclusive, std::nullopt, 0};
  // The suggested conductor is only meaningful in characteristic 0; for
  // prime fields needs_extension just reports "did not split here".
  unsigned target = 0;
  if (field.characteristic() == 0) {
    unsigned current = field.is_cyclotomic() ? field.conductor() : 1;
    target = std::lcm(current, rho.group().exponent());
  }
  return {SplitOutcome::Kind::needs_extension, std::nullopt, target};
}

IrreducibilityVerdict irreducibility_test(const Representation& rho) {
  const std::size_t d = rho.degree();
  if (d == 1) return {IrreducibilityKind::absolutely_irreducible, std::nullopt};

  // Cyclic-span necessary check: the orbit span of any nonzero vector is
  // invariant, so a proper one is an immediate witness.
  const Field& field = rho.field();
  for (std::size_t seed = 0; seed < d; ++seed) {
    Matrix orbit(field, d, rho.group().order());
    for (std::size_t x = 0; x < rho.group().order(); ++x) {
      for (std::size_t i = 0; i < d; ++i) orbit.at(i, x) = rho[x].at(i, seed);
    }
    Subspace span = Subspace::span(orbit);
    if (span.dim() < d) {
      return {IrreducibilityKind::reducible, std::move(span)};
    }
  }

  SplitOutcome outcome = split_once(rho);
  switch (outcome.kind) {
    case SplitOutcome::Kind::irreducible:
      return {IrreducibilityKind::absolutely_irreducible, std::nullopt};
    case SplitOutcome::Kind::subspace:
      return {IrreducibilityKind::reducible, std::move(outcome.subspace)};
    case SplitOutcome::Kind::needs_extension:
      return {IrreducibilityKind::irreducible_over_field, std::nullopt};
    case SplitOutcome::Kind::inconclusive:
      break;
  }
  return {IrreducibilityKind::modular_inconclusive, std::nullopt};
}

// -- full decomposition ------------------------------------------------------------

std::vector<std::size_t> DecompositionResult::block_degrees() const {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.degree());
  return out;
}

namespace {

struct RecursiveSplit {
  std::vector<Representation> blocks;
  std::vector<BlockCertificate> certificates;
  Matrix change;
  bool needs_extension = false;
};

RecursiveSplit decompose_recursive(const Representation& rho) {
  const Field& field = rho.field();
  SplitOutcome outcome = split_once(rho);
  if (outcome.kind == SplitOutcome::Kind::irreducible) {
    return {{rho}, {BlockCertificate::absolutely_irreducible},
            Matrix::identity(field, rho.degree()), false};
  }
  if (outcome.kind == SplitOutcome::Kind::needs_extension) {
    return {{rho}, {BlockCertificate::irreducible_over_field},
            Matrix::identity(field, rho.degree()), true};
  }
  if (outcome.kind == SplitOutcome::Kind::inconclusive) {
    throw Error("splitting became inconclusive outside the modular case");
  }

  const Subspace& sub = *outcome.subspace;
  Subspace comp = invariant_complement(rho, sub);
  Matrix basis = Matrix::hstack(sub.basis(), comp.basis());
  Matrix change = *inverse(basis);
  std::vector<Matrix> top, bottom;
  top.reserve(rho.group().order());
  bottom.reserve(rho.group().order());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    Matrix conj = change * rho[x] * basis;
    top.push_back(conj.submatrix(0, 0, sub.dim(), sub.dim()));
    bottom.push_back(conj.submatrix(sub.dim(), sub.dim(), comp.dim(), comp.dim()));
  }
  Representation sub_rep = Representation::create(rho.group(), field, std::move(top));
  Representation comp_rep = Representation::create(rho.group(), field, std::move(bottom));

  RecursiveSplit left = decompose_recursive(sub_rep);
  RecursiveSplit right = decompose_recursive(comp_rep);

  RecursiveSplit out{std::move(left.blocks),
                     std::move(left.certificates),
                     Matrix::block_diagonal({left.change, right.change}) * change,
                     left.needs_extension || right.needs_extension};
  out.blocks.insert(out.blocks.end(), right.blocks.begin(), right.blocks.end());
  out.certificates.insert(out.certificates.end(), right.certificates.begin(),
                          right.certificates.end());
  return out;
}

}  // namespace

DecompositionResult decompose(const Representation& rho, bool allow_extension) {
  require_averaging_possible(rho);

  Representation current = rho;
  RecursiveSplit split = decompose_recursive(current);
  if (split.needs_extension && allow_extension) {
    if (rho.field().characteristic() != 0) {
      throw ValidationError("cannot extend " + rho.field().to_string() +
                            ": finite-field extensions are unsupported");
    }
    unsigned base = rho.field().is_cyclotomic() ? rho.field().conductor() : 1;
    unsigned target = std::lcm(base, rho.group().exponent());
    if (rho.field().is_cyclotomic() && target == rho.field().conductor()) {
      throw Error("splitting stalled: already over the splitting conductor " +
                  std::to_string(target));
    }
    current = extend_field(rho, Field::cyclotomic(target));
    split = decompose_recursive(current);
    if (split.needs_extension) {
      throw Error("splitting stalled over the splitting field Q(zeta_" + std::to_string(target) +
                  ")");
    }
  }

  DecompositionResult result{std::move(split.change), std::move(split.blocks),
                             std::move(split.certificates), {}, current.field()};

  // Reassembly certificate: the base change block-diagonalizes every matrix
  // exactly, and block characters sum to the original character.
  Matrix back = *inverse(result.base_change);
  for (std::size_t x = 0; x < current.group().order(); ++x) {
    std::vector<Matrix> diag;
    diag.reserve(result.blocks.size());
    for (const auto& b : result.blocks) diag.push_back(b[x]);
    if (result.base_change * current[x] * back != Matrix::block_diagonal(diag)) {
      throw Error("decomposition certificate failed: base change does not block-diagonalize");
    }
  }

  // Group blocks by pairwise isomorphism, greedily in block order.
  for (std::size_t i = 0; i < result.blocks.size(); ++i) {
    bool placed = false;
    for (auto& cls : result.iso_classes) {
      if (is_isomorphic(result.blocks[cls[0]], result.blocks[i]).verdict == IsoVerdict::yes) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) result.iso_classes.push_back({i});
  }
  return result;
}

// -- Hermitian forms ------------------------------------------------------------------

Matrix conjugate_transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j).conjugate();
  }
  return out;
}

GramForm invariant_hermitian_form(const Representation& rho) {
  const Field& field = rho.field();
  if (field.characteristic() != 0) {
    throw ValidationError("no positivity notion in characteristic " +
                          std::to_string(field.characteristic()) +
                          "; Hermitian averaging needs characteristic 0");
  }
  Matrix h(field, rho.degree(), rho.degree());
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    h = h + conjugate_transpose(rho[x]) * rho[x];
  }
  if (conjugate_transpose(h) != h) throw Error("averaged Gram form is not conjugate-symmetric");
  for (std::size_t x = 0; x < rho.group().order(); ++x) {
    if (conjugate_transpose(rho[x]) * h * rho[x] != h) {
      throw Error("averaged Gram form is not invariant");
    }
  }
  // Positivity: the form is a sum of conjugate squares by construction; for
  // rational forms also pin it down by leading principal minors.
  bool rational_entries = true;
  for (std::size_t i = 0; i < h.rows() && rational_entries; ++i) {
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (!h.at(i, j).is_rational_value()) {
        rational_entries = false;
        break;
      }
    }
  }
  if (rational_entries) {
    for (std::size_t k = 1; k <= h.rows(); ++k) {
      FieldElement minor = determinant(h.submatrix(0, 0, k, k));
      if (!(minor.as_rational() > 0)) {
        throw Error("averaged Gram form has a non-positive leading minor");
      }
    }
  }
  return GramForm{std::move(h)};
}

Subspace orthogonal_complement(const Subspace& subspace, const GramForm& form) {
  const Matrix& h = form.gram;
  require_same_field(subspace.field(), h.field());
  if (subspace.ambient_dimension() != h.rows()) {
    throw ValidationError("subspace and form live in different spaces");
  }
  if (subspace.is_zero()) return Subspace::full(h.field(), h.rows());
  Matrix constraints = conjugate_transpose(subspace.basis()) * h;
  Subspace complement = kernel(constraints);
  if (complement.dim() + subspace.dim() != subspace.ambient_dimension()) {
    throw ValidationError("degenerate pairing on the subspace");
  }
  return complement;
}

// -- spectral certificates ---------------------------------------------------------------

SpectralCertificate spectral_certificates(const Representation& rho, std::size_t element) {
  const Field& field = rho.field();
  if (field.is_prime()) {
    throw ValidationError("spectral certificates need a characteristic-0 field");
  }
  unsigned order = rho.group().element_order(element);
  unsigned base = field.is_cyclotomic() ? field.conductor() : 1;
  unsigned target = std::lcm(base, order);
  Field extension = Field::cyclotomic(target);
  Representation ext = extend_field(rho, extension);

  const Matrix& m = ext[element];
  SpectralCertificate cert{extension, {}, m.trace(),
                           ext[rho.group().inverse(element)].trace()};
  std::size_t total = 0;
  for (unsigned j = 0; j < order; ++j) {
    FieldElement value = extension.root_of_unity(static_cast<long>(j) *
                                                 static_cast<long>(target / order));
    Subspace space = eigenspace(m, value);
    if (space.dim() == 0) continue;
    total += space.dim();
    cert.eigenvalues.emplace_back(value, space.dim());
  }
  if (total != rho.degree()) {
    throw Error("eigenspace dimensions do not sum to the degree");
  }
  FieldElement sum = extension.zero();
  for (const auto& [value, dim] : cert.eigenvalues) {
    sum += value * extension.integer(static_cast<long>(dim));
    if (!value.pow(order).is_one()) throw Error("reported eigenvalue is not a root of unity");
  }
  if (sum != cert.character_value) throw Error("eigenvalue sum differs from the character value");
  if (cert.character_value_at_inverse != cert.character_value.conjugate()) {
    throw Error("character at the inverse is not the conjugate value");
  }
  // Algebraic-integer certificate: integer coordinates in the power basis.
  if (extension.is_cyclotomic()) {
    for (const auto& coord : cert.character_value.coordinates()) {
      if (coord.get_den() != 1) throw Error("character coordinate is not a rational integer");
    }
  }
  return cert;
}

// -- abelian degree bound ---------------------------------------------------------------

AbelianBoundReport abelian_structure(const Representation& rho,
                                     const std::vector<std::size_t>& abelian_subgroup,
                                     bool allow_extension) {
  const FiniteGroup& g = rho.group();
  require_subgroup(g, abelian_subgroup);
  for (std::size_t a : abelian_subgroup) {
    for (std::size_t b : abelian_subgroup) {
      if (g.multiply(a, b) != g.multiply(b, a)) {
        throw ValidationError("subgroup is not abelian: '" + g.label(a) + "' and '" +
                              g.label(b) + "' do not commute");
      }
    }
  }
  CosetDecomposition cosets = left_cosets(g, abelian_subgroup);
  DecompositionResult dec = decompose(rho, allow_extension);
  AbelianBoundReport report{g.order() / abelian_subgroup.size(),
                            dec.block_degrees(),
                            cosets.transversal,
                            true,
                            std::move(dec)};
  for (std::size_t d : report.block_degrees) {
    if (d > report.bound) report.all_within_bound = false;
  }
  return report;
}

}  // namespace repkit
