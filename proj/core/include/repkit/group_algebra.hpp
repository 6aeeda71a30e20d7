#pragma once

#include <vector>

#include "repkit/group.hpp"
#include "repkit/rep.hpp"

namespace repkit {

/// Element of the convolution algebra F(G, k): one field value per group
/// element.
class GroupFunction {
 public:
  GroupFunction(FiniteGroup group, Field field, std::vector<FieldElement> values);

  static GroupFunction zero(const FiniteGroup& g, const Field& field);
  /// Delta function: 1 at x, 0 elsewhere.
  static GroupFunction delta(const FiniteGroup& g, const Field& field, std::size_t x);

  const FiniteGroup& group() const { return group_; }
  const Field& field() const { return field_; }
  const FieldElement& value(std::size_t x) const { return values_[x]; }
  const std::vector<FieldElement>& values() const { return values_; }

  GroupFunction operator+(const GroupFunction& rhs) const;
  GroupFunction operator-(const GroupFunction& rhs) const;
  GroupFunction operator*(const FieldElement& scalar) const;
  bool operator==(const GroupFunction& rhs) const;
  bool operator!=(const GroupFunction& rhs) const { return !(*this == rhs); }

 private:
  FiniteGroup group_;
  Field field_;
  std::vector<FieldElement> values_;
};

/// (f1 * f2)(z) = sum over xy = z of f1(x) f2(y).
GroupFunction convolve(const GroupFunction& f1, const GroupFunction& f2);

/// Constant on conjugacy classes?
bool is_class_function(const GroupFunction& f);

/// Center membership, tested against the delta basis: delta_x * f = f *
/// delta_x for every x. Agrees with is_class_function on every input.
bool is_central(const GroupFunction& f);

/// Class-indicator basis of the space of class functions, one per
/// conjugacy class in class order.
std::vector<GroupFunction> class_function_basis(const FiniteGroup& g, const Field& field);

/// T_f = sum f(x) rho_x; an algebra homomorphism from (F(G,k), *) into
/// matrices.
Matrix rep_operator(const GroupFunction& f, const Representation& rho);

}  // namespace repkit
