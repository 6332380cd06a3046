#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vspace/subset.hpp"

namespace vspace {

/// Declared intent of a table. Axioms are verified, never assumed.
enum class OperatorKind { phi, nu, choice };

std::string_view to_string(OperatorKind kind);
OperatorKind parse_kind(std::string_view text);

/// Total map 2^E -> 2^E stored densely, indexed by mask value.
class OperatorTable {
 public:
  OperatorTable(GroundSet ground, OperatorKind kind, std::vector<SubsetMask> map);

  /// The identity operator X -> X.
  static OperatorTable identity(GroundSet ground, OperatorKind kind = OperatorKind::phi);

  const GroundSet& ground() const { return ground_; }
  OperatorKind kind() const { return kind_; }
  unsigned n() const { return ground_.size(); }
  SubsetMask full() const { return ground_.full(); }
  std::size_t size() const { return map_.size(); }
  std::span<const SubsetMask> entries() const { return map_; }

  SubsetMask operator()(SubsetMask x) const { return map_[x.index()]; }

  /// Same map under a different declared kind.
  OperatorTable with_kind(OperatorKind kind) const { return OperatorTable(ground_, kind, map_); }

  friend bool operator==(const OperatorTable&, const OperatorTable&) = default;

 private:
  GroundSet ground_;
  OperatorKind kind_;
  std::vector<SubsetMask> map_;
};

/// Throws WrongKind unless `t.kind()` is one of `allowed`.
void require_kind(const OperatorTable& t, std::initializer_list<OperatorKind> allowed,
                  std::string_view operation);

/// Outcome of checking one axiom over a whole table.
struct AxiomReport {
  std::string axiom;
  bool holds = true;
  /// Least failing tuple by mask value; empty iff holds.
  std::vector<SubsetMask> witness;

  static AxiomReport pass(std::string axiom) { return {std::move(axiom), true, {}}; }
  static AxiomReport fail(std::string axiom, std::vector<SubsetMask> witness) {
    return {std::move(axiom), false, std::move(witness)};
  }

  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

bool all_hold(std::span<const AxiomReport> reports);
const AxiomReport& find_report(std::span<const AxiomReport> reports, std::string_view axiom);

/// Whole-space sweeps that scan every subset per subset are limited to this n.
inline constexpr unsigned kSweepCap = 12;

/// Throws GroundSetTooLarge when n exceeds `kSweepCap` and `allow_large` is false.
void require_sweep_size(const OperatorTable& t, bool allow_large, std::string_view operation);

}  // namespace vspace
