#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "vspace/operator_table.hpp"

namespace vspace {

inline constexpr unsigned kCensusMaxN = 3;

/// Every extensive phi-table on "1".."n", in lexicographic order of the
/// concatenated entries map[0], map[1], ...
void for_each_extensive_table(unsigned n, const std::function<void(const OperatorTable&)>& fn);

/// Extensive tables that also satisfy V2, same order.
void for_each_violator_space(unsigned n, const std::function<void(const OperatorTable&)>& fn);
std::vector<OperatorTable> enumerate_violator_spaces(unsigned n);

/// Partitions of 2^n into intervals, enumerated directly.
std::uint64_t count_hypercube_partitions(unsigned n);

struct CensusRecord {
  unsigned n = 0;
  std::uint64_t extensive_count = 0;
  std::uint64_t violator_count = 0;
  std::uint64_t uniquely_generated_count = 0;
  std::uint64_t hypercube_partition_count = 0;
  std::chrono::duration<double> elapsed{};
};

CensusRecord census_report(unsigned n);

/// Number of census tables contradicting each characterization. All zero when the
/// theory and the implementation agree.
struct CensusAudit {
  unsigned n = 0;
  std::uint64_t tables_checked = 0;
  std::uint64_t outcast_equivalence = 0;   // UG <=> X5 <=> X6 <=> X7
  std::uint64_t intersection_criterion = 0;  // UG <=> phi(X)=phi(Y) => phi(X∩Y)=phi(X)
  std::uint64_t extremes_generate = 0;     // UG <=> phi(ex(X))=phi(X)
  std::uint64_t dual_correspondence = 0;   // violator <=> dual is co-violator
  std::uint64_t dual_involution = 0;       // dualize(dualize(t)) = t
  std::uint64_t class_correspondence = 0;  // A in [X]_phi <=> E-A in [E-X]_c
  std::uint64_t extreme_point_laws = 0;    // ex = generator core, ex(phi(X)) ⊆ ex(X)
  std::uint64_t relation_necessity = 0;    // partitions satisfy R1, R2
  std::uint64_t synthesis_round_trip = 0;
  std::uint64_t hypercube_equivalence = 0;  // UG <=> R3 <=> interval partition
  std::uint64_t class_intervals = 0;       // UG => [X] = [ex(X), phi(X)]

  std::uint64_t total_violations() const;
};

CensusAudit census_audit(unsigned n);

}  // namespace vspace
