#pragma once

#include <compare>
#include <string>
#include <vector>

#include "klv/rational.hpp"

namespace klv::core {

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const { return size_; }                 // |mu|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;                             // 1-indexed; 0 beyond length
  int conj_part(int j) const;                        // mu'_j, 1-indexed
  Partition conjugate() const;
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

  std::string str() const;  // "[3,1,1]", "[]"

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// z(mu) = prod_k k^{m_k} m_k!  (order of the centralizer of a permutation of
// cycle type mu).
Rat z_factor(const Partition& mu);

// Arm and leg lengths of the 1-indexed box (i,j) = (row, column) relative to
// mu; the box need not lie inside mu, so both may be negative.
int arm(const Partition& mu, int i, int j);
int leg(const Partition& mu, int i, int j);

// Partitions of n in descending lexicographic order: [n], [n-1,1], ..., [1^n].
std::vector<Partition> enumerate_partitions(int n);

// Partitions of 0, 1, ..., d, ordered by size then descending lex.
std::vector<Partition> enumerate_partitions_up_to(int d);

using PartitionTuple = std::vector<Partition>;

int tuple_size(const PartitionTuple& t);
std::string tuple_str(const PartitionTuple& t);

// r-tuples with total size n. Size compositions are enumerated in descending
// lexicographic order; within a composition each slot runs over
// enumerate_partitions of its size, rightmost slot varying fastest.
std::vector<PartitionTuple> enumerate_tuples(int r, int n);

}  // namespace klv::core
