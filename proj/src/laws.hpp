#pragma once

// Whole-table checks of the closure laws shared by phi, c and ex. Each operator
// is given as its value table indexed by mask; every check returns the least
// failing tuple by mask value.

#include <span>
#include <string>
#include <vector>

#include "vspace/operator_table.hpp"

namespace vspace::laws {

using Values = std::span<const SubsetMask>;

/// Members of each class keyed by operator value: result[v] lists every X with op(X)=v.
std::vector<std::vector<SubsetMask>> fibres(Values op);

/// op(op(X)) = op(X).
AxiomReport idempotence(std::string id, Values op);

/// op(X) = op(Y) => op(X ∪ Y) = op(X).
AxiomReport union_closed(std::string id, Values op, const std::vector<std::vector<SubsetMask>>& fib);

/// op(X) = op(Y) => op(X ∩ Y) = op(X).
AxiomReport intersection_closed(std::string id, Values op,
                                const std::vector<std::vector<SubsetMask>>& fib);

/// X ⊆ Y ⊆ Z and op(X) = op(Z) => op(Y) = op(X). Witness (X, Y, Z), taken from
/// the greatest Z that tops a failing chain.
AxiomReport convex(std::string id, Values op, const std::vector<std::vector<SubsetMask>>& fib);

/// op(X) ⊆ Y ⊆ X => op(Y) = op(X). Witness (X, Y).
AxiomReport outcast(std::string id, Values op);

}  // namespace vspace::laws
