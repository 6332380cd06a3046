#include "vspace/violator.hpp"

#include <algorithm>

#include "laws.hpp"
#include "vspace/error.hpp"

namespace vspace {

namespace {

SubsetMask mask_at(std::size_t i) { return SubsetMask(static_cast<std::uint32_t>(i)); }

std::vector<AxiomReport> verify_phi_form(const OperatorTable& phi) {
  AxiomReport v1 = AxiomReport::pass("V1");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (!mask_at(i).is_subset_of(phi(mask_at(i)))) {
      v1 = AxiomReport::fail("V1", {mask_at(i)});
      break;
    }
  }

  AxiomReport v2 = AxiomReport::pass("V2");
  for (std::size_t i = 0; i < phi.size() && v2.holds; ++i) {
    const SubsetMask x = mask_at(i);
    const SubsetMask fx = phi(x);
    if (!x.is_subset_of(fx)) continue;  // no Y with X ⊆ Y ⊆ phi(X)
    if (auto y = find_between(x, fx, [&](SubsetMask y) { return phi(y) != fx; })) {
      v2 = AxiomReport::fail("V2", {x, *y});
    }
  }
  return {v1, v2};
}

std::vector<AxiomReport> verify_nu_form(const OperatorTable& nu) {
  AxiomReport v11 = AxiomReport::pass("V11");
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (mask_at(i).intersects(nu(mask_at(i)))) {
      v11 = AxiomReport::fail("V11", {mask_at(i)});
      break;
    }
  }

  AxiomReport v22 = AxiomReport::pass("V22");
  for (std::size_t i = 0; i < nu.size() && v22.holds; ++i) {
    const SubsetMask x = mask_at(i);
    const SubsetMask vx = nu(x);
    const SubsetMask room = nu.full() - vx;  // Y must avoid nu(X)
    if (!x.is_subset_of(room)) continue;
    if (auto y = find_between(x, room, [&](SubsetMask y) { return nu(y) != vx; })) {
      v22 = AxiomReport::fail("V22", {x, *y});
    }
  }
  return {v11, v22};
}

void require_violator(const OperatorTable& phi, std::string_view operation) {
  require_kind(phi, {OperatorKind::phi}, operation);
  auto reports = verify_violator(phi);
  for (const auto& r : reports) {
    if (!r.holds) {
      throw Error(ErrorKind::NotAViolatorSpace,
                  std::string(operation) + ": " + r.axiom + " fails at " +
                      phi.ground().format(r.witness.front()));
    }
  }
}

}  // namespace

std::vector<AxiomReport> verify_violator(const OperatorTable& table) {
  require_kind(table, {OperatorKind::phi, OperatorKind::nu}, "verify_violator");
  return table.kind() == OperatorKind::phi ? verify_phi_form(table) : verify_nu_form(table);
}

bool is_violator_space(const OperatorTable& table) { return all_hold(verify_violator(table)); }

OperatorTable nu_phi_convert(const OperatorTable& table) {
  require_kind(table, {OperatorKind::phi, OperatorKind::nu}, "nu_phi_convert");
  std::vector<SubsetMask> map;
  map.reserve(table.size());
  for (auto y : table.entries()) map.push_back(table.full() - y);
  return OperatorTable(table.ground(), table.kind() == OperatorKind::phi ? OperatorKind::nu : OperatorKind::phi,
                       std::move(map));
}

std::vector<AxiomReport> check_derived_laws(const OperatorTable& phi) {
  require_violator(phi, "check_derived_laws");
  const auto values = phi.entries();
  const auto fib = laws::fibres(values);
  std::vector<AxiomReport> reports{
      laws::idempotence("Idempotence", values),
      laws::union_closed("Union", values, fib),
      laws::convex("Convexity", values, fib),
  };
  for (const auto& r : reports) {
    if (!r.holds) {
      std::string where;
      for (auto w : r.witness) where += " " + phi.ground().format(w);
      throw Error(ErrorKind::InternalInconsistency,
                  r.axiom + " fails on a verified violator space at" + where);
    }
  }
  return reports;
}

SubsetMask extreme_points(const OperatorTable& phi, SubsetMask x) {
  SubsetMask ex;
  for (unsigned i = 0; i < phi.n(); ++i) {
    if (x.test(i) && !phi(x.without(i)).test(i)) ex = ex.with(i);
  }
  return ex;
}

std::vector<SubsetMask> extreme_point_table(const OperatorTable& phi) {
  std::vector<SubsetMask> ex(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) ex[i] = extreme_points(phi, mask_at(i));
  return ex;
}

SubsetMask generator_core(const OperatorTable& phi, SubsetMask x) {
  const SubsetMask fx = phi(x);
  SubsetMask core = x;
  for_each_submask(x, [&](SubsetMask b) {
    if (phi(b) == fx) core = core & b;
  });
  return core;
}

std::vector<SubsetMask> generators(const OperatorTable& phi, SubsetMask x) {
  const SubsetMask fx = phi(x);
  std::vector<SubsetMask> out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi(mask_at(i)) == fx) out.push_back(mask_at(i));
  }
  return out;
}

std::vector<SubsetMask> minimal_elements(std::vector<SubsetMask> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // Proper subsets have smaller mask values, so each candidate only needs to be
  // compared with the minimal elements already accepted.
  std::vector<SubsetMask> minimal;
  for (auto s : family) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                       [&](SubsetMask m) { return m.is_subset_of(s); });
    if (!dominated) minimal.push_back(s);
  }
  return minimal;
}

BasisList bases(const OperatorTable& phi, SubsetMask x) {
  auto gens = generators(phi, x);
  BasisList out{x, {}, gens.size()};
  out.bases = minimal_elements(std::move(gens));
  return out;
}

UGVerdict is_uniquely_generated(const OperatorTable& phi, bool allow_large) {
  require_sweep_size(phi, allow_large, "is_uniquely_generated");
  require_violator(phi, "is_uniquely_generated");

  const auto values = phi.entries();
  const auto fib = laws::fibres(values);
  UGVerdict verdict;

  // Criterion 1: count minimal generators class by class. The witness is the
  // least closed set phi(X) whose class has several bases.
  verdict.method_agreement.single_basis = true;
  for (std::size_t v = 0; v < fib.size(); ++v) {
    if (fib[v].empty() || minimal_elements(fib[v]).size() < 2) continue;
    verdict.method_agreement.single_basis = false;
    verdict.witness = mask_at(v);
    break;
  }

  // Criterion 2: classes closed under intersection.
  verdict.method_agreement.intersection_closed =
      laws::intersection_closed("UQ", values, fib).holds;

  // Criterion 3: extreme points generate.
  verdict.method_agreement.extremes_generate = true;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi(extreme_points(phi, mask_at(i))) != values[i]) {
      verdict.method_agreement.extremes_generate = false;
      break;
    }
  }

  const auto& m = verdict.method_agreement;
  if (m.single_basis != m.intersection_closed || m.single_basis != m.extremes_generate) {
    throw Error(ErrorKind::InternalInconsistency,
                "unique-generation criteria disagree (bases=" + std::to_string(m.single_basis) +
                    ", intersection=" + std::to_string(m.intersection_closed) +
                    ", extremes=" + std::to_string(m.extremes_generate) + ")");
  }
  verdict.uniquely_generated = m.single_basis;
  return verdict;
}

std::vector<AxiomReport> check_ex_laws(const OperatorTable& phi, bool allow_large) {
  require_sweep_size(phi, allow_large, "check_ex_laws");
  require_violator(phi, "check_ex_laws");

  const auto ex = extreme_point_table(phi);
  const auto fib = laws::fibres(ex);

  AxiomReport x6 = AxiomReport::pass("X6");
  AxiomReport x7 = AxiomReport::pass("X7");
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const SubsetMask x = mask_at(i);
    if (x6.holds && phi(ex[i]) != phi(x)) x6 = AxiomReport::fail("X6", {x});
    if (x7.holds && ex[phi(x).index()] != ex[i]) x7 = AxiomReport::fail("X7", {x});
  }

  return {
      laws::idempotence("X1", ex),
      laws::union_closed("X2", ex, fib),
      laws::convex("X3", ex, fib),
      laws::intersection_closed("X4", ex, fib),
      laws::outcast("X5", ex),
      x6,
      x7,
  };
}

}  // namespace vspace
