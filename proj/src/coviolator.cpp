#include "vspace/coviolator.hpp"

#include "laws.hpp"
#include "vspace/error.hpp"

namespace vspace {

std::vector<AxiomReport> verify_coviolator(const OperatorTable& c) {
  require_kind(c, {OperatorKind::choice}, "verify_coviolator");
  AxiomReport cv1 = AxiomReport::pass("CV1");
  for (std::size_t i = 0; i < c.size(); ++i) {
    const SubsetMask x(static_cast<std::uint32_t>(i));
    if (!c(x).is_subset_of(x)) {
      cv1 = AxiomReport::fail("CV1", {x});
      break;
    }
  }
  return {cv1, laws::outcast("CV2", c.entries())};
}

bool is_coviolator_space(const OperatorTable& c) { return all_hold(verify_coviolator(c)); }

std::vector<AxiomReport> check_co_laws(const OperatorTable& c) {
  for (const auto& r : verify_coviolator(c)) {
    if (!r.holds) {
      throw Error(ErrorKind::NotACoviolatorSpace,
                  r.axiom + " fails at " + c.ground().format(r.witness.front()));
    }
  }
  const auto values = c.entries();
  const auto fib = laws::fibres(values);
  std::vector<AxiomReport> reports{
      laws::idempotence("Idempotence", values),
      laws::intersection_closed("Intersection", values, fib),
      laws::convex("Co-Convexity", values, fib),
  };
  for (const auto& r : reports) {
    if (!r.holds) {
      throw Error(ErrorKind::InternalInconsistency,
                  r.axiom + " fails on a verified co-violator space at " +
                      c.ground().format(r.witness.front()));
    }
  }
  return reports;
}

OperatorTable dualize(const OperatorTable& table) {
  require_kind(table, {OperatorKind::phi, OperatorKind::choice}, "dualize");
  const SubsetMask full = table.full();
  std::vector<SubsetMask> map(table.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const SubsetMask x(static_cast<std::uint32_t>(i));
    map[i] = full - table(full - x);
  }
  return OperatorTable(table.ground(),
                       table.kind() == OperatorKind::phi ? OperatorKind::choice : OperatorKind::phi,
                       std::move(map));
}

bool is_nonempty_choice(const OperatorTable& c) {
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c(SubsetMask(static_cast<std::uint32_t>(i))).empty()) return false;
  }
  return true;
}

}  // namespace vspace
