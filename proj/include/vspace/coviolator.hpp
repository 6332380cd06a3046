#pragma once

#include <vector>

#include "vspace/operator_table.hpp"

namespace vspace {

/// CV1 (contracting) and CV2 (outcast). Throws WrongKind unless kind=choice.
std::vector<AxiomReport> verify_coviolator(const OperatorTable& c);

bool is_coviolator_space(const OperatorTable& c);

/// Idempotence, Intersection and Co-Convexity. Failures throw InternalInconsistency;
/// a table failing CV1/CV2 throws NotACoviolatorSpace.
std::vector<AxiomReport> check_co_laws(const OperatorTable& c);

/// c(X) = E - phi(E - X), and back. Kind flips phi <-> choice; nu throws WrongKind.
OperatorTable dualize(const OperatorTable& table);

/// Whether c(X) is nonempty for every nonempty X. Reported, not required.
bool is_nonempty_choice(const OperatorTable& c);

}  // namespace vspace
