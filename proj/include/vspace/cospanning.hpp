#pragma once

#include <cstdint>
#include <vector>

#include "vspace/operator_table.hpp"

namespace vspace {

/// Interval [lo, hi] = {C : lo ⊆ C ⊆ hi}.
struct Interval {
  SubsetMask lo;
  SubsetMask hi;

  bool contains(SubsetMask c) const { return lo.is_subset_of(c) && c.is_subset_of(hi); }
  std::size_t cardinality() const { return std::size_t{1} << (hi - lo).size(); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Partition of 2^E. Class ids are ordered by least member mask; members of each
/// class are ascending.
class CospanningPartition {
 public:
  /// Throws MalformedDocument if `classes` is not a partition of 2^E.
  CospanningPartition(GroundSet ground, std::vector<std::vector<SubsetMask>> classes);

  const GroundSet& ground() const { return ground_; }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<SubsetMask>>& classes() const { return classes_; }
  std::uint32_t class_of(SubsetMask x) const { return class_of_[x.index()]; }
  const std::vector<SubsetMask>& members(SubsetMask x) const { return classes_[class_of(x)]; }
  bool related(SubsetMask x, SubsetMask y) const { return class_of(x) == class_of(y); }

  friend bool operator==(const CospanningPartition&, const CospanningPartition&) = default;

 private:
  GroundSet ground_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<SubsetMask>> classes_;
};

/// X ~ Y iff map[X] = map[Y]. Works for any kind.
CospanningPartition cospanning_partition(const OperatorTable& table);

/// R1 (union-closed), R2 (convex), R3 (intersection-closed), in that order.
std::vector<AxiomReport> verify_relation_axioms(const CospanningPartition& p);

enum class SynthesisMode { violator, coviolator };

/// Violator: X -> union of [X]. Co-violator: X -> intersection of [X].
/// Throws AxiomsNotSatisfied when R1∧R2 (resp. R3∧R2) fail.
OperatorTable synthesize_from_relation(const CospanningPartition& p, SynthesisMode mode);

/// Holds iff every class is the interval [∩class, ∪class]; witness is the least
/// member of the first class that is not.
AxiomReport is_hypercube_partition(const CospanningPartition& p);

/// [ex(X), phi(X)]. Throws NotUniquelyGenerated.
Interval class_interval(const OperatorTable& phi, SubsetMask x);

/// Partition of 2^n into subcubes by random recursive coordinate splitting.
/// Deterministic per seed. Only decision-tree partitions are produced.
CospanningPartition random_hypercube_partition(unsigned n, std::uint64_t seed);

}  // namespace vspace
