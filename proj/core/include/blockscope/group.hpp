#pragma once

#include <string>
#include <vector>

namespace blockscope {

/// Finite group given by its Cayley table. Elements are 0..order-1.
class GroupTable {
 public:
  GroupTable() = default;
  /// Validates the group law; throws PreconditionError naming the first
  /// offending triple or element.
  GroupTable(int order, std::vector<int> table, std::vector<std::string> labels = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_[a]; }

  int element_order(int a) const;
  bool is_abelian() const;
  bool is_p_group(int p) const;
  std::vector<int> center() const;
  std::vector<std::vector<int>> conjugacy_classes() const;

  /// Closure of a generating set (sorted element list).
  std::vector<int> generated(const std::vector<int>& gens) const;
  bool is_subgroup(const std::vector<int>& s) const;
  bool is_normal(const std::vector<int>& s) const;
  bool is_abelian_subset(const std::vector<int>& s) const;
  /// All subgroups, sorted by (order, elements).
  std::vector<std::vector<int>> subgroups() const;
  std::vector<std::vector<int>> normal_subgroups() const;

  /// Quotient by a normal subgroup; `projection[g]` is the coset index of g.
  struct Quotient;
  Quotient quotient(const std::vector<int>& normal) const;

  /// Subgroup as a group in its own right (elements re-indexed in order).
  GroupTable subgroup_table(const std::vector<int>& s) const;

  // Corpus constructors.
  static GroupTable trivial();
  static GroupTable cyclic(int n);
  static GroupTable dihedral(int n);  // order 2n: r^i s^j at index i + n*j
  static GroupTable quaternion();     // Q8
  static GroupTable symmetric3();     // permutations of {0,1,2} in lexicographic order
  static GroupTable direct_product(const GroupTable& a, const GroupTable& b);

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
};

struct GroupTable::Quotient {
  GroupTable group;
  std::vector<int> projection;
};

}  // namespace blockscope
