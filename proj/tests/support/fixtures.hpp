#pragma once

// Shared group and representation fixtures. S3 uses lexicographic one-line
// labels (012, 021, 102, 120, 201, 210); transpositions sit at indices
// {1, 2, 5} and the 3-cycles at {3, 4}.

#include <vector>

#include "repkit/group.hpp"
#include "repkit/rep.hpp"

namespace repkit::testing {

inline FiniteGroup s3() { return FiniteGroup::symmetric(3); }
inline FiniteGroup z(unsigned n) { return FiniteGroup::cyclic(n); }
inline FiniteGroup v4() {
  return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
}

inline bool s3_is_odd(std::size_t index) { return index == 1 || index == 2 || index == 5; }

/// Sign representation of S3: +1 on even permutations, -1 on odd ones.
inline Representation s3_sign(const Field& field) {
  FiniteGroup g = s3();
  std::vector<Matrix> mats;
  for (std::size_t x = 0; x < 6; ++x) {
    Matrix m(field, 1, 1);
    m.at(0, 0) = field.integer(s3_is_odd(x) ? -1 : 1);
    mats.push_back(std::move(m));
  }
  return Representation::create(g, field, std::move(mats));
}

/// Degree-2 representation of S3 on the zero-sum plane, written in the
/// basis {e0 - e1, e1 - e2}.
inline Representation s3_standard(const Field& field) {
  FiniteGroup g = s3();
  std::vector<std::vector<std::vector<long>>> tables = {
      {{1, 0}, {0, 1}},    // 012
      {{1, 0}, {1, -1}},   // 021
      {{-1, 1}, {0, 1}},   // 102
      {{0, -1}, {1, -1}},  // 120
      {{-1, 1}, {-1, 0}},  // 201
      {{0, -1}, {-1, 0}},  // 210
  };
  std::vector<Matrix> mats;
  for (const auto& t : tables) mats.push_back(Matrix::from_integers(field, t));
  return Representation::create(g, field, std::move(mats));
}

/// Degree-1 representation of Z_n sending the generator to zeta_n^power.
inline Representation zn_eigenrep(unsigned n, long power) {
  Field field = Field::cyclotomic(n);
  FiniteGroup g = FiniteGroup::cyclic(n);
  std::vector<Matrix> mats;
  for (unsigned i = 0; i < n; ++i) {
    Matrix m(field, 1, 1);
    m.at(0, 0) = field.root_of_unity(power * static_cast<long>(i));
    mats.push_back(std::move(m));
  }
  return Representation::create(g, field, std::move(mats));
}

/// Closure of a set of permutations under composition, as a Cayley-table
/// group with one-line-notation labels.
inline FiniteGroup permutation_group(std::vector<std::vector<std::size_t>> generators,
                                     std::string name = "") {
  std::size_t points = generators.at(0).size();
  std::vector<std::size_t> id(points);
  for (std::size_t i = 0; i < points; ++i) id[i] = i;
  std::vector<std::vector<std::size_t>> elements{id};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& gen : generators) {
      std::vector<std::size_t> next(points);
      for (std::size_t p = 0; p < points; ++p) next[p] = gen[elements[i][p]];
      if (std::find(elements.begin(), elements.end(), next) == elements.end()) {
        elements.push_back(std::move(next));
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  auto find = [&](const std::vector<std::size_t>& p) {
    return static_cast<std::size_t>(
        std::find(elements.begin(), elements.end(), p) - elements.begin());
  };
  std::vector<std::string> labels;
  for (const auto& e : elements) {
    std::string label;
    for (std::size_t v : e) label += static_cast<char>('0' + v);
    labels.push_back(label);
  }
  std::vector<std::vector<std::size_t>> table(elements.size(),
                                              std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) {
      std::vector<std::size_t> compose(points);
      for (std::size_t p = 0; p < points; ++p) compose[p] = elements[a][elements[b][p]];
      table[a][b] = find(compose);
    }
  }
  return FiniteGroup::create(std::move(labels), std::move(table), find(id), std::move(name));
}

/// Dihedral group of the square: rotation (0123) and the reflection fixing
/// the 0-2 diagonal.
inline FiniteGroup dihedral4() {
  return permutation_group({{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4");
}

/// Quaternion group {±1, ±i, ±j, ±k}.
inline FiniteGroup quaternion8() {
  // Encode elements as sign * basis with basis 0..3 = 1, i, j, k.
  const int mul_basis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int mul_sign[4][4] = {{+1, +1, +1, +1},
                              {+1, -1, +1, -1},
                              {+1, -1, -1, +1},
                              {+1, +1, -1, -1}};
  // index = 2*basis + (sign < 0)
  std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int basis_a = a / 2, basis_b = b / 2;
      int sign = ((a % 2) ? -1 : 1) * ((b % 2) ? -1 : 1) * mul_sign[basis_a][basis_b];
      int basis = mul_basis[basis_a][basis_b];
      table[a][b] = static_cast<std::size_t>(2 * basis + (sign < 0 ? 1 : 0));
    }
  }
  return FiniteGroup::create(std::move(labels), std::move(table), 0, "Q8");
}

}  // namespace repkit::testing
