#pragma once
// Finite groups as explicit Cayley tables, plus the subgroup-level queries
// (conjugacy classes, centralizers, normalizers, double cosets) that every
// canonical form downstream depends on.

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mackey {

/// Group element id. Element 0 is always the identity.
using Elt = int;

inline constexpr int kDefaultOrderCap = 10080;

/// A finite group stored as a full multiplication table. Immutable after
/// construction.
class FiniteGroup {
 public:
  /// Closure of permutation generators on {1..degree}, given as one-line
  /// images (1-indexed). Element ids follow breadth-first closure order from
  /// the identity, so id 0 is the identity. Throws std::invalid_argument on
  /// malformed generators and std::runtime_error when the closure exceeds
  /// order_cap.
  static FiniteGroup from_generators(int degree,
                                     const std::vector<std::vector<int>>& generators,
                                     std::string name = "",
                                     int order_cap = kDefaultOrderCap);

  /// Named presentations: Cn (cyclic), Dn (dihedral, order 2n), Sn, An,
  /// V4, Q8.
  static FiniteGroup builtin(const std::string& name);

  int order() const { return order_; }
  Elt mul(Elt a, Elt b) const { return cayley_[a][b]; }
  Elt inv(Elt a) const { return inverse_[a]; }
  /// ^g x = g x g^{-1}.
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
  const std::string& name() const { return name_; }

 private:
  FiniteGroup() = default;
  int order_ = 0;
  std::vector<std::vector<Elt>> cayley_;
  std::vector<Elt> inverse_;
  std::string name_;
};

/// Identity, inverses and associativity by full enumeration. Cubic in the
/// order; intended for small groups and test harnesses.
bool check_group_axioms(const FiniteGroup& G);

/// A subgroup as a sorted element list. class_id is the conjugacy class in
/// the canonical enumeration, or -1 when unset.
struct Subgroup {
  std::vector<Elt> elements;
  int class_id = -1;

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(Elt g) const;
  bool operator==(const Subgroup& o) const { return elements == o.elements; }
  bool operator<(const Subgroup& o) const {
    if (elements.size() != o.elements.size())
      return elements.size() < o.elements.size();
    return elements < o.elements;
  }
};

struct SubgroupClass {
  Subgroup rep;                   // least member element list
  std::vector<Subgroup> members;  // sorted, includes rep
};

/// Smallest subgroup containing the given elements.
Subgroup subgroup_closure(const FiniteGroup& G, const std::vector<Elt>& gens);
/// Every subgroup, sorted by (order, element list).
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);
/// Conjugacy classes of subgroups, sorted by (order, representative); the
/// trivial subgroup is class 0 and the full group is the last class.
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup& G);

Subgroup centralizer(const FiniteGroup& G, const Subgroup& S);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& S);
Subgroup conjugate_subgroup(const FiniteGroup& G, Elt g, const Subgroup& S);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
/// One representative (the least element) per H x L orbit on G under
/// (h, l) . g = h g l^{-1}, in increasing order.
std::vector<Elt> double_cosets(const FiniteGroup& G, const Subgroup& H, const Subgroup& L);

/// One group plus cached subgroup classification: the canonical class list
/// and per-class conjugators, centralizers and normalizers.
class GroupCtx {
 public:
  explicit GroupCtx(FiniteGroup g);

  const FiniteGroup& group() const { return G_; }
  int order() const { return G_.order(); }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const Subgroup& rep(int cls) const { return classes_[cls].rep; }
  int trivial_class() const { return 0; }
  int full_class() const { return num_classes() - 1; }
  const std::vector<Subgroup>& subgroups() const { return all_; }

  int class_of(const std::vector<Elt>& sorted_elements) const;
  /// Some a with a S a^{-1} = rep(class_of(S)); the least such a.
  Elt conjugator_to_rep(const std::vector<Elt>& sorted_elements) const;
  const Subgroup& centralizer_of_rep(int cls) const { return centralizers_[cls]; }
  const Subgroup& normalizer_of_rep(int cls) const { return normalizers_[cls]; }
  Subgroup centralizer(const Subgroup& S) const { return mackey::centralizer(G_, S); }

 private:
  FiniteGroup G_;
  std::vector<SubgroupClass> classes_;
  std::vector<Subgroup> all_;
  std::map<std::vector<Elt>, std::pair<int, Elt>> lookup_;
  std::vector<Subgroup> centralizers_;
  std::vector<Subgroup> normalizers_;
};

}  // namespace mackey
