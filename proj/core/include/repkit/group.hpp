#pragma once

#include <optional>
#include <string>
#include <vector>

#include "repkit/error.hpp"

namespace repkit {

/// Finite group stored as a full Cayley table over labelled elements.
/// Construction validates every axiom (identity, Latin rows and columns,
/// two-sided inverses, associativity by full triple scan) and names the
/// first failure with witness elements. Immutable afterwards.
class FiniteGroup {
 public:
  static FiniteGroup create(std::vector<std::string> labels,
                            std::vector<std::vector<std::size_t>> table,
                            std::size_t identity,
                            std::string name = "");

  /// Z_n with elements g0 (identity), g1, ..., g{n-1}.
  static FiniteGroup cyclic(unsigned n);
  /// S_n, elements in lexicographic one-line notation ("012", "021", ...).
  /// Limited to n <= 5.
  static FiniteGroup symmetric(unsigned n);
  /// Componentwise product with labels "(a,b)".
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  std::size_t order() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverses_[a]; }
  std::size_t conjugate(std::size_t w, std::size_t x) const;  // w x w^-1

  bool is_abelian() const;
  /// Least l >= 1 with x^l = e.
  unsigned element_order(std::size_t x) const;
  /// lcm of all element orders; the conductor used for splitting fields.
  unsigned exponent() const;

  /// Partition of element indices into conjugacy classes, each class sorted
  /// ascending, classes ordered by least element. The identity class comes
  /// first.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

  /// Small generating set, chosen greedily in element order (empty for the
  /// trivial group).
  std::vector<std::size_t> generating_set() const;

  bool operator==(const FiniteGroup& other) const;
  bool operator!=(const FiniteGroup& other) const { return !(*this == other); }

 private:
  FiniteGroup() = default;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverses_;
};

/// Action of a group on {0, ..., set_size-1}: one permutation per element,
/// validated to be a homomorphism into the symmetric group.
class GroupAction {
 public:
  GroupAction(FiniteGroup group, std::size_t set_size,
              std::vector<std::vector<std::size_t>> permutations);

  static GroupAction left_translation(const FiniteGroup& g);
  /// a -> a x^{-1}; together with left translation these realize the two
  /// regular actions.
  static GroupAction right_inverse_translation(const FiniteGroup& g);

  const FiniteGroup& group() const { return group_; }
  std::size_t set_size() const { return set_size_; }
  std::size_t apply(std::size_t element, std::size_t point) const {
    return permutations_[element][point];
  }
  const std::vector<std::size_t>& permutation(std::size_t element) const {
    return permutations_[element];
  }

 private:
  FiniteGroup group_;
  std::size_t set_size_;
  std::vector<std::vector<std::size_t>> permutations_;
};

/// Validated group homomorphism given by the image index of each source
/// element.
class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<std::size_t> map);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  std::size_t apply(std::size_t x) const { return map_[x]; }

  std::vector<std::size_t> kernel() const;  // sorted element indices
  std::vector<std::size_t> image() const;   // sorted element indices
  bool is_injective() const;

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<std::size_t> map_;
};

struct SubgroupClosure {
  std::vector<std::size_t> elements;  // sorted
  bool normal = false;
};

/// Least subgroup containing the generators, plus a full conjugation scan
/// for normality.
SubgroupClosure subgroup_closure(const FiniteGroup& g, const std::vector<std::size_t>& generators);

/// Throws ValidationError unless the sorted element set is a subgroup.
void require_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& elements);

struct CosetDecomposition {
  std::vector<std::vector<std::size_t>> cosets;  // partition; each coset sorted, ordered by least element
  std::vector<std::size_t> transversal;          // least element of each coset
  GroupAction action;                            // left multiplication on cosets
};

/// Left cosets of a verified subgroup and the induced action on them.
CosetDecomposition left_cosets(const FiniteGroup& g, const std::vector<std::size_t>& subgroup);

struct QuotientGroup {
  FiniteGroup group;
  GroupHom projection;  // onto the quotient; kernel is exactly the subgroup
};

/// Quotient by a normal subgroup; ValidationError when it is not normal.
QuotientGroup quotient(const FiniteGroup& g, const std::vector<std::size_t>& normal_subgroup);

struct SubgroupView {
  FiniteGroup group;                   // the subgroup as a group of its own
  std::vector<std::size_t> embedding;  // subgroup index -> parent index
};

/// Reifies a verified subgroup as a standalone FiniteGroup, keeping parent
/// labels.
SubgroupView subgroup_as_group(const FiniteGroup& g, const std::vector<std::size_t>& elements);

}  // namespace repkit
