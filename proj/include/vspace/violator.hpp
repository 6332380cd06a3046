#pragma once

#include <optional>
#include <vector>

#include "vspace/operator_table.hpp"

namespace vspace {

/// V1/V2 for kind=phi, V11/V22 for kind=nu. Throws WrongKind for choice tables.
std::vector<AxiomReport> verify_violator(const OperatorTable& table);

/// True when every axiom of `verify_violator` holds.
bool is_violator_space(const OperatorTable& table);

/// phi(X) = E - nu(X) and back; the kind flips between phi and nu.
OperatorTable nu_phi_convert(const OperatorTable& table);

/// Idempotence, Union and Convexity. These are consequences of V1/V2, so a failing
/// law throws InternalInconsistency; a table that is not a violator space throws
/// NotAViolatorSpace.
std::vector<AxiomReport> check_derived_laws(const OperatorTable& phi);

/// ex(X) = {x in X : x not in phi(X - x)}.
SubsetMask extreme_points(const OperatorTable& phi, SubsetMask x);

/// ex(X) for every X, indexed by mask.
std::vector<SubsetMask> extreme_point_table(const OperatorTable& phi);

/// Intersection of all B ⊆ X with phi(B) = phi(X). Equals ex(X) on violator spaces.
SubsetMask generator_core(const OperatorTable& phi, SubsetMask x);

/// Every Y ⊆ E with phi(Y) = phi(X), ascending. Y is not restricted to subsets of X.
std::vector<SubsetMask> generators(const OperatorTable& phi, SubsetMask x);

struct BasisList {
  SubsetMask target;
  /// Inclusion-minimal generators, ascending.
  std::vector<SubsetMask> bases;
  std::size_t generators_count = 0;
};

BasisList bases(const OperatorTable& phi, SubsetMask x);

/// Inclusion-minimal members of a family, ascending.
std::vector<SubsetMask> minimal_elements(std::vector<SubsetMask> family);

struct UGVerdict {
  bool uniquely_generated = false;
  /// Least closed set phi(X) with two or more bases, when not uniquely generated.
  std::optional<SubsetMask> witness;
  struct Criteria {
    bool single_basis = false;          // every X has exactly one basis
    bool intersection_closed = false;   // phi(X)=phi(Y) => phi(X∩Y)=phi(X)
    bool extremes_generate = false;     // phi(ex(X)) = phi(X)
  } method_agreement;
};

/// Decides unique generation by three independent criteria and cross-checks them.
/// Throws NotAViolatorSpace on invalid input and InternalInconsistency when the
/// criteria disagree.
UGVerdict is_uniquely_generated(const OperatorTable& phi, bool allow_large = false);

/// X1..X7 for the extreme-point operator, in that order.
std::vector<AxiomReport> check_ex_laws(const OperatorTable& phi, bool allow_large = false);

}  // namespace vspace
