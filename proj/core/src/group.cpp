#include "repkit/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace repkit {

namespace {

std::string witness(const FiniteGroup& g, std::size_t i) { return "'" + g.label(i) + "'"; }

}  // namespace

FiniteGroup FiniteGroup::create(std::vector<std::string> labels,
                                std::vector<std::vector<std::size_t>> table,
                                std::size_t identity,
                                std::string name) {
  const std::size_t n = labels.size();
  if (n == 0) throw ValidationError("group must have at least one element");
  {
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n) throw ValidationError("element labels are not distinct");
  }
  if (identity >= n) throw ValidationError("identity index out of range");
  if (table.size() != n) throw ValidationError("Cayley table must have one row per element");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw ValidationError("Cayley table row '" + labels[i] + "' has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) throw ValidationError("Cayley table entry out of range");
    }
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.table_ = std::move(table);
  g.identity_ = identity;

  // Identity is two-sided neutral.
  for (std::size_t x = 0; x < n; ++x) {
    if (g.table_[identity][x] != x) {
      throw ValidationError("identity failure: e*" + witness(g, x) + " = " +
                            witness(g, g.table_[identity][x]));
    }
    if (g.table_[x][identity] != x) {
      throw ValidationError("identity failure: " + witness(g, x) + "*e = " +
                            witness(g, g.table_[x][identity]));
    }
  }

  // Every row and column is a permutation.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[g.table_[i][j]]) {
        throw ValidationError("row of " + witness(g, i) + " is not a permutation (duplicate " +
                              witness(g, g.table_[i][j]) + ")");
      }
      seen[g.table_[i][j]] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[g.table_[i][j]]) {
        throw ValidationError("column of " + witness(g, j) + " is not a permutation (duplicate " +
                              witness(g, g.table_[i][j]) + ")");
      }
      seen[g.table_[i][j]] = true;
    }
  }

  // Two-sided inverses.
  g.inverses_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t right = n;
    for (std::size_t b = 0; b < n; ++b) {
      if (g.table_[x][b] == identity) {
        right = b;
        break;
      }
    }
    if (right == n || g.table_[right][x] != identity) {
      throw ValidationError("missing two-sided inverse for " + witness(g, x));
    }
    g.inverses_[x] = right;
  }

  // Associativity, full triple scan.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]]) {
          throw ValidationError("associativity violation at (" + g.label(a) + ", " + g.label(b) +
                                ", " + g.label(c) + ")");
        }
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(unsigned n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (unsigned i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return create(std::move(labels), std::move(table), 0, "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(unsigned n) {
  if (n == 0 || n > 5) throw ValidationError("symmetric(n) supports 1 <= n <= 5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> base(n);
  std::iota(base.begin(), base.end(), 0);
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));

  auto label_of = [](const std::vector<std::size_t>& p) {
    std::string s;
    for (std::size_t v : p) s += static_cast<char>('0' + v);
    return s;
  };
  std::vector<std::string> labels;
  labels.reserve(perms.size());
  for (const auto& p : perms) labels.push_back(label_of(p));

  auto find = [&](const std::vector<std::size_t>& p) {
    return static_cast<std::size_t>(
        std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::size_t order = perms.size();
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      std::vector<std::size_t> compose(n);
      for (unsigned k = 0; k < n; ++k) compose[k] = perms[i][perms[j][k]];
      table[i][j] = find(compose);
    }
  }
  return create(std::move(labels), std::move(table), 0, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  std::size_t n = g.order(), m = h.order();
  std::vector<std::string> labels;
  labels.reserve(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");
  }
  std::vector<std::vector<std::size_t>> table(n * m, std::vector<std::size_t>(n * m));
  for (std::size_t a = 0; a < n * m; ++a) {
    for (std::size_t b = 0; b < n * m; ++b) {
      std::size_t gi = g.multiply(a / m, b / m);
      std::size_t hj = h.multiply(a % m, b % m);
      table[a][b] = gi * m + hj;
    }
  }
  std::string name = (g.name().empty() || h.name().empty()) ? "" : g.name() + "x" + h.name();
  return create(std::move(labels), std::move(table), g.identity() * m + h.identity(),
                std::move(name));
}

std::optional<std::size_t> FiniteGroup::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::size_t FiniteGroup::conjugate(std::size_t w, std::size_t x) const {
  return multiply(multiply(w, x), inverse(w));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = a + 1; b < order(); ++b) {
      if (table_[a][b] != table_[b][a]) return false;
    }
  }
  return true;
}

unsigned FiniteGroup::element_order(std::size_t x) const {
  unsigned l = 1;
  std::size_t acc = x;
  while (acc != identity_) {
    acc = multiply(acc, x);
    ++l;
  }
  return l;
}

unsigned FiniteGroup::exponent() const {
  unsigned result = 1;
  for (std::size_t x = 0; x < order(); ++x) result = std::lcm(result, element_order(x));
  return result;
}

std::vector<std::vector<std::size_t>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(order(), false);
  for (std::size_t x = 0; x < order(); ++x) {
    if (assigned[x]) continue;
    std::set<std::size_t> cls;
    for (std::size_t w = 0; w < order(); ++w) cls.insert(conjugate(w, x));
    std::vector<std::size_t> sorted(cls.begin(), cls.end());
    for (std::size_t y : sorted) assigned[y] = true;
    classes.push_back(std::move(sorted));
  }
  return classes;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return labels_ == other.labels_ && table_ == other.table_ && identity_ == other.identity_;
}

std::vector<std::size_t> FiniteGroup::generating_set() const {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> reached{identity_};
  for (std::size_t x = 0; x < order() && reached.size() < order(); ++x) {
    if (std::find(reached.begin(), reached.end(), x) != reached.end()) continue;
    gens.push_back(x);
    reached = subgroup_closure(*this, gens).elements;
  }
  return gens;
}

// -- actions -------------------------------------------------------------------

GroupAction::GroupAction(FiniteGroup group, std::size_t set_size,
                         std::vector<std::vector<std::size_t>> permutations)
    : group_(std::move(group)), set_size_(set_size), permutations_(std::move(permutations)) {
  const std::size_t n = group_.order();
  if (permutations_.size() != n) throw ValidationError("action needs one permutation per element");
  for (const auto& p : permutations_) {
    if (p.size() != set_size_) throw ValidationError("action permutation has wrong length");
    std::vector<bool> seen(set_size_, false);
    for (std::size_t v : p) {
      if (v >= set_size_ || seen[v]) throw ValidationError("action image is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t a = 0; a < set_size_; ++a) {
    if (permutations_[group_.identity()][a] != a) {
      throw ValidationError("identity does not act as the identity permutation");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t xy = group_.multiply(x, y);
      for (std::size_t a = 0; a < set_size_; ++a) {
        if (permutations_[xy][a] != permutations_[x][permutations_[y][a]]) {
          throw ValidationError("action is not a homomorphism at (" + group_.label(x) + ", " +
                                group_.label(y) + ")");
        }
      }
    }
  }
}

GroupAction GroupAction::left_translation(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> perms(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t a = 0; a < g.order(); ++a) perms[x][a] = g.multiply(x, a);
  }
  return GroupAction(g, g.order(), std::move(perms));
}

GroupAction GroupAction::right_inverse_translation(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> perms(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t a = 0; a < g.order(); ++a) perms[x][a] = g.multiply(a, g.inverse(x));
  }
  return GroupAction(g, g.order(), std::move(perms));
}

// -- homomorphisms ---------------------------------------------------------------

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.order()) throw ValidationError("homomorphism map has wrong length");
  for (std::size_t v : map_) {
    if (v >= target_.order()) throw ValidationError("homomorphism image out of range");
  }
  if (map_[source_.identity()] != target_.identity()) {
    throw ValidationError("homomorphism does not preserve the identity");
  }
  for (std::size_t x = 0; x < source_.order(); ++x) {
    for (std::size_t y = 0; y < source_.order(); ++y) {
      if (map_[source_.multiply(x, y)] != target_.multiply(map_[x], map_[y])) {
        throw ValidationError("homomorphism law fails at (" + source_.label(x) + ", " +
                              source_.label(y) + ")");
      }
    }
  }
}

std::vector<std::size_t> GroupHom::kernel() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < source_.order(); ++x) {
    if (map_[x] == target_.identity()) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> GroupHom::image() const {
  std::set<std::size_t> seen(map_.begin(), map_.end());
  return {seen.begin(), seen.end()};
}

bool GroupHom::is_injective() const { return kernel().size() == 1; }

// -- subgroups, cosets, quotients -------------------------------------------------

SubgroupClosure subgroup_closure(const FiniteGroup& g, const std::vector<std::size_t>& generators) {
  std::set<std::size_t> elements{g.identity()};
  std::vector<std::size_t> frontier{g.identity()};
  for (std::size_t x : generators) {
    if (x >= g.order()) throw ValidationError("generator index out of range");
    if (elements.insert(x).second) frontier.push_back(x);
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t x : frontier) {
      std::vector<std::size_t> snapshot(elements.begin(), elements.end());
      for (std::size_t y : snapshot) {
        for (std::size_t z : {g.multiply(x, y), g.multiply(y, x), g.inverse(x)}) {
          if (elements.insert(z).second) next.push_back(z);
        }
      }
    }
    frontier = std::move(next);
  }
  SubgroupClosure out;
  out.elements.assign(elements.begin(), elements.end());
  out.normal = true;
  for (std::size_t x = 0; x < g.order() && out.normal; ++x) {
    for (std::size_t h : out.elements) {
      if (!elements.count(g.conjugate(x, h))) {
        out.normal = false;
        break;
      }
    }
  }
  return out;
}

void require_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  std::set<std::size_t> set(elements.begin(), elements.end());
  if (set.size() != elements.size()) throw ValidationError("subgroup set has duplicates");
  if (!set.count(g.identity())) throw ValidationError("subgroup does not contain the identity");
  for (std::size_t a : elements) {
    if (a >= g.order()) throw ValidationError("subgroup element out of range");
    if (!set.count(g.inverse(a))) {
      throw ValidationError("subgroup not closed under inverse at '" + g.label(a) + "'");
    }
    for (std::size_t b : elements) {
      if (!set.count(g.multiply(a, b))) {
        throw ValidationError("subgroup not closed under product at ('" + g.label(a) + "', '" +
                              g.label(b) + "')");
      }
    }
  }
}

CosetDecomposition left_cosets(const FiniteGroup& g, const std::vector<std::size_t>& subgroup) {
  require_subgroup(g, subgroup);
  std::vector<std::size_t> coset_of(g.order(), g.order());
  std::vector<std::vector<std::size_t>> cosets;
  std::vector<std::size_t> transversal;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != g.order()) continue;
    std::set<std::size_t> members;
    for (std::size_t h : subgroup) members.insert(g.multiply(x, h));
    std::size_t index = cosets.size();
    for (std::size_t m : members) coset_of[m] = index;
    cosets.emplace_back(members.begin(), members.end());
    transversal.push_back(*members.begin());
  }
  const std::size_t count = cosets.size();
  std::vector<std::vector<std::size_t>> perms(g.order(), std::vector<std::size_t>(count));
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t c = 0; c < count; ++c) {
      perms[x][c] = coset_of[g.multiply(x, cosets[c][0])];
    }
  }
  GroupAction action(g, count, std::move(perms));
  return CosetDecomposition{std::move(cosets), std::move(transversal), std::move(action)};
}

QuotientGroup quotient(const FiniteGroup& g, const std::vector<std::size_t>& normal_subgroup) {
  require_subgroup(g, normal_subgroup);
  std::set<std::size_t> set(normal_subgroup.begin(), normal_subgroup.end());
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t h : normal_subgroup) {
      if (!set.count(g.conjugate(x, h))) {
        throw ValidationError("subgroup is not normal: '" + g.label(x) + "' conjugates '" +
                              g.label(h) + "' outside it");
      }
    }
  }
  CosetDecomposition dec = left_cosets(g, normal_subgroup);
  std::size_t m = dec.cosets.size();
  std::vector<std::size_t> coset_of(g.order());
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t x : dec.cosets[c]) coset_of[x] = c;
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t c = 0; c < m; ++c) labels.push_back(g.label(dec.transversal[c]));
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      table[a][b] = coset_of[g.multiply(dec.transversal[a], dec.transversal[b])];
    }
  }
  FiniteGroup q = FiniteGroup::create(std::move(labels), std::move(table),
                                      coset_of[g.identity()],
                                      g.name().empty() ? "" : g.name() + "/N");
  GroupHom projection(g, q, std::move(coset_of));
  return QuotientGroup{std::move(q), std::move(projection)};
}

SubgroupView subgroup_as_group(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  require_subgroup(g, elements);
  std::vector<std::size_t> embedding(elements.begin(), elements.end());
  std::sort(embedding.begin(), embedding.end());
  std::vector<std::size_t> position(g.order(), g.order());
  for (std::size_t i = 0; i < embedding.size(); ++i) position[embedding[i]] = i;
  std::vector<std::string> labels;
  labels.reserve(embedding.size());
  for (std::size_t x : embedding) labels.push_back(g.label(x));
  std::vector<std::vector<std::size_t>> table(embedding.size(),
                                              std::vector<std::size_t>(embedding.size()));
  for (std::size_t a = 0; a < embedding.size(); ++a) {
    for (std::size_t b = 0; b < embedding.size(); ++b) {
      table[a][b] = position[g.multiply(embedding[a], embedding[b])];
    }
  }
  std::size_t identity = position[g.identity()];
  FiniteGroup sub = FiniteGroup::create(std::move(labels), std::move(table), identity);
  return SubgroupView{std::move(sub), std::move(embedding)};
}

}  // namespace repkit
