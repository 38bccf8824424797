#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vtcrit {

// Finite group given by its full multiplication table over element
// indices 0..order-1. Construction validates the group axioms, so a
// GroupTable is a group, not just a table.
class GroupTable {
 public:
  static GroupTable from_table(std::vector<std::vector<int>> rows);
  static GroupTable load(std::istream& in);
  static GroupTable load_file(const std::string& path);
  static GroupTable cyclic(int n);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int at(int a, int b) const { return mul_[a * order_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  bool is_involution(int a) const { return a != identity_ && inv_[a] == a; }

  // Representatives of the {x, x^-1} classes over non-identity elements,
  // ordered by their smallest member. Used to enumerate inverse-closed
  // connection sets.
  std::vector<std::vector<int>> inverse_classes() const;

 private:
  GroupTable() = default;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
};

}  // namespace vtcrit
