#pragma once

#include <vector>

namespace moncentre {

/// A finite group given by its multiplication table on elements 0..n-1.
class Group {
 public:
  /// Throws std::invalid_argument unless the table is a group.
  explicit Group(std::vector<std::vector<int>> table);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  int exponent() const;
  bool is_abelian() const;
  /// x⁻¹ g x
  int conjugate(int g, int x) const { return mul(inverse(x), mul(g, x)); }

  std::vector<std::vector<int>> table() const;
  std::vector<std::vector<int>> conjugacy_classes() const;
  std::vector<int> centralizer(int g) const;
  std::vector<int> centre() const;
  /// Subgroups of the subgroup `within` (all subgroups when empty), sorted by decreasing order.
  std::vector<std::vector<int>> subgroups(const std::vector<int>& within = {}) const;
  std::vector<int> generated(const std::vector<int>& gens) const;

 private:
  int n_ = 0;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

Group cyclic_group(int n);
/// S3 with 0 = e, 1 = (12), 2 = (13), 3 = (23), 4 = (123), 5 = (132).
Group symmetric_group_3();

}  // namespace moncentre
