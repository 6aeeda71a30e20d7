#include "repkit/group_algebra.hpp"

namespace repkit {

GroupFunction::GroupFunction(FiniteGroup group, Field field, std::vector<FieldElement> values)
    : group_(std::move(group)), field_(std::move(field)), values_(std::move(values)) {
  if (values_.size() != group_.order()) {
    throw ValidationError("group function needs one value per element");
  }
  for (const auto& v : values_) require_same_field(v.field(), field_);
}

GroupFunction GroupFunction::zero(const FiniteGroup& g, const Field& field) {
  return GroupFunction(g, field, std::vector<FieldElement>(g.order(), field.zero()));
}

GroupFunction GroupFunction::delta(const FiniteGroup& g, const Field& field, std::size_t x) {
  if (x >= g.order()) throw ValidationError("delta index out of range");
  std::vector<FieldElement> values(g.order(), field.zero());
  values[x] = field.one();
  return GroupFunction(g, field, std::move(values));
}

GroupFunction GroupFunction::operator+(const GroupFunction& rhs) const {
  if (group_ != rhs.group_) throw ValidationError("group functions over different groups");
  require_same_field(field_, rhs.field_);
  std::vector<FieldElement> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(values_[i] + rhs.values_[i]);
  return GroupFunction(group_, field_, std::move(out));
}

GroupFunction GroupFunction::operator-(const GroupFunction& rhs) const {
  return *this + rhs * field_.integer(-1);
}

GroupFunction GroupFunction::operator*(const FieldElement& scalar) const {
  std::vector<FieldElement> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v * scalar);
  return GroupFunction(group_, field_, std::move(out));
}

bool GroupFunction::operator==(const GroupFunction& rhs) const {
  return group_ == rhs.group_ && field_ == rhs.field_ && values_ == rhs.values_;
}

GroupFunction convolve(const GroupFunction& f1, const GroupFunction& f2) {
  if (f1.group() != f2.group()) throw ValidationError("convolution over different groups");
  require_same_field(f1.field(), f2.field());
  const FiniteGroup& g = f1.group();
  const Field& field = f1.field();
  std::vector<FieldElement> out(g.order(), field.zero());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (f1.value(x).is_zero()) continue;
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (f2.value(y).is_zero()) continue;
      out[g.multiply(x, y)] += f1.value(x) * f2.value(y);
    }
  }
  return GroupFunction(g, field, std::move(out));
}

bool is_class_function(const GroupFunction& f) {
  for (const auto& cls : f.group().conjugacy_classes()) {
    for (std::size_t x : cls) {
      if (f.value(x) != f.value(cls[0])) return false;
    }
  }
  return true;
}

bool is_central(const GroupFunction& f) {
  const FiniteGroup& g = f.group();
  for (std::size_t x = 0; x < g.order(); ++x) {
    GroupFunction d = GroupFunction::delta(g, f.field(), x);
    if (convolve(d, f) != convolve(f, d)) return false;
  }
  return true;
}

std::vector<GroupFunction> class_function_basis(const FiniteGroup& g, const Field& field) {
  std::vector<GroupFunction> basis;
  for (const auto& cls : g.conjugacy_classes()) {
    std::vector<FieldElement> values(g.order(), field.zero());
    for (std::size_t x : cls) values[x] = field.one();
    basis.emplace_back(g, field, std::move(values));
  }
  return basis;
}

Matrix rep_operator(const GroupFunction& f, const Representation& rho) {
  if (f.group() != rho.group()) throw ValidationError("function and representation group mismatch");
  require_same_field(f.field(), rho.field());
  Matrix acc(rho.field(), rho.degree(), rho.degree());
  for (std::size_t x = 0; x < f.group().order(); ++x) {
    if (f.value(x).is_zero()) continue;
    acc = acc + rho[x] * f.value(x);
  }
  return acc;
}

}  // namespace repkit
