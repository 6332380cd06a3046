#include "vspace/census.hpp"

#include <algorithm>

#include "vspace/coviolator.hpp"
#include "vspace/cospanning.hpp"
#include "vspace/error.hpp"
#include "vspace/violator.hpp"

namespace vspace {

namespace {

void require_census_size(unsigned n) {
  if (n > kCensusMaxN) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "exhaustive enumeration supports n <= " + std::to_string(kCensusMaxN));
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "census needs n >= 1");
}

struct Odometer {
  const GroundSet& ground;
  const std::function<void(const OperatorTable&)>& fn;
  std::vector<SubsetMask> map;

  void assign(std::size_t i) {
    if (i == map.size()) {
      fn(OperatorTable(ground, OperatorKind::phi, map));
      return;
    }
    const SubsetMask x(static_cast<std::uint32_t>(i));
    for_each_between(x, ground.full(), [&](SubsetMask y) {
      map[i] = y;
      assign(i + 1);
    });
  }
};

}  // namespace

void for_each_extensive_table(unsigned n, const std::function<void(const OperatorTable&)>& fn) {
  require_census_size(n);
  const GroundSet ground = GroundSet::numbered(n);
  Odometer odo{ground, fn, std::vector<SubsetMask>(ground.subset_count())};
  odo.assign(0);
}

void for_each_violator_space(unsigned n, const std::function<void(const OperatorTable&)>& fn) {
  for_each_extensive_table(n, [&](const OperatorTable& t) {
    if (is_violator_space(t)) fn(t);
  });
}

std::vector<OperatorTable> enumerate_violator_spaces(unsigned n) {
  std::vector<OperatorTable> out;
  for_each_violator_space(n, [&](const OperatorTable& t) { out.push_back(t); });
  return out;
}

namespace {

// The least uncovered subset S must be the bottom of its interval: any lower
// end A ⊆ S has A <= S as a mask and would be uncovered too.
struct IntervalTiler {
  SubsetMask full;
  std::vector<bool> covered;
  std::uint64_t count = 0;

  void extend(std::size_t from) {
    std::size_t s = from;
    while (s < covered.size() && covered[s]) ++s;
    if (s == covered.size()) {
      ++count;
      return;
    }
    const SubsetMask lo(static_cast<std::uint32_t>(s));
    for_each_between(lo, full, [&](SubsetMask hi) {
      bool free = true;
      for_each_between(lo, hi, [&](SubsetMask c) { free = free && !covered[c.index()]; });
      if (!free) return;
      for_each_between(lo, hi, [&](SubsetMask c) { covered[c.index()] = true; });
      extend(s + 1);
      for_each_between(lo, hi, [&](SubsetMask c) { covered[c.index()] = false; });
    });
  }
};

}  // namespace

std::uint64_t count_hypercube_partitions(unsigned n) {
  require_census_size(n);
  IntervalTiler tiler{SubsetMask::full(n), std::vector<bool>(std::size_t{1} << n, false)};
  tiler.extend(0);
  return tiler.count;
}

CensusRecord census_report(unsigned n) {
  const auto start = std::chrono::steady_clock::now();
  CensusRecord rec;
  rec.n = n;
  for_each_extensive_table(n, [&](const OperatorTable& t) {
    ++rec.extensive_count;
    if (!is_violator_space(t)) return;
    ++rec.violator_count;
    if (is_uniquely_generated(t).uniquely_generated) ++rec.uniquely_generated_count;
  });
  rec.hypercube_partition_count = count_hypercube_partitions(n);
  rec.elapsed = std::chrono::steady_clock::now() - start;
  return rec;
}

std::uint64_t CensusAudit::total_violations() const {
  return outcast_equivalence + intersection_criterion + extremes_generate + dual_correspondence +
         dual_involution + class_correspondence + extreme_point_laws + relation_necessity +
         synthesis_round_trip + hypercube_equivalence + class_intervals;
}

namespace {

SubsetMask at(std::size_t i) { return SubsetMask(static_cast<std::uint32_t>(i)); }

void audit_violator(const OperatorTable& phi, CensusAudit& audit) {
  const std::size_t size = phi.size();

  // Unique generation straight from the definition, one basis query per subset.
  bool ug = true;
  for (std::size_t i = 0; i < size && ug; ++i) ug = bases(phi, at(i)).bases.size() == 1;

  bool uq = true;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (phi(at(i)) == phi(at(j)) && phi(at(i) & at(j)) != phi(at(i))) uq = false;
    }
  }
  if (uq != ug) ++audit.intersection_criterion;

  bool x6 = true;
  bool ex_laws = true;
  for (std::size_t i = 0; i < size; ++i) {
    const SubsetMask ex = extreme_points(phi, at(i));
    x6 = x6 && phi(ex) == phi(at(i));
    ex_laws = ex_laws && ex == generator_core(phi, at(i)) &&
              extreme_points(phi, phi(at(i))).is_subset_of(ex);
  }
  if (x6 != ug) ++audit.extremes_generate;
  if (!ex_laws) ++audit.extreme_point_laws;

  try {
    if (is_uniquely_generated(phi).uniquely_generated != ug) ++audit.intersection_criterion;
  } catch (const Error&) {
    ++audit.intersection_criterion;
  }

  const auto ex = check_ex_laws(phi);
  const bool x5 = find_report(ex, "X5").holds;
  const bool x7 = find_report(ex, "X7").holds;
  if (x5 != ug || find_report(ex, "X6").holds != ug || x7 != ug) ++audit.outcast_equivalence;

  const auto partition = cospanning_partition(phi);
  const auto rel = verify_relation_axioms(partition);
  if (!find_report(rel, "R1").holds || !find_report(rel, "R2").holds) ++audit.relation_necessity;
  if (find_report(rel, "R3").holds != ug || is_hypercube_partition(partition).holds != ug) {
    ++audit.hypercube_equivalence;
  }

  try {
    if (synthesize_from_relation(partition, SynthesisMode::violator) != phi) ++audit.synthesis_round_trip;
    const auto c = dualize(phi);
    if (synthesize_from_relation(cospanning_partition(c), SynthesisMode::coviolator) != c) {
      ++audit.synthesis_round_trip;
    }
  } catch (const Error&) {
    ++audit.synthesis_round_trip;
  }

  if (ug) {
    for (std::size_t i = 0; i < size; ++i) {
      const Interval iv{extreme_points(phi, at(i)), phi(at(i))};
      const auto& members = partition.members(at(i));
      const bool same = iv.lo.is_subset_of(iv.hi) && members.size() == iv.cardinality() &&
                        std::all_of(members.begin(), members.end(),
                                    [&](SubsetMask m) { return iv.contains(m); });
      if (!same) {
        ++audit.class_intervals;
        break;
      }
    }
  }

  const auto c = dualize(phi);
  const SubsetMask full = phi.full();
  for (std::size_t x = 0; x < size; ++x) {
    bool ok = true;
    for (std::size_t a = 0; a < size && ok; ++a) {
      const bool in_phi = phi(at(a)) == phi(at(x));
      const bool in_c = c(full - at(a)) == c(full - at(x));
      ok = in_phi == in_c;
    }
    if (!ok) {
      ++audit.class_correspondence;
      break;
    }
  }
}

}  // namespace

CensusAudit census_audit(unsigned n) {
  CensusAudit audit;
  audit.n = n;
  for_each_extensive_table(n, [&](const OperatorTable& t) {
    ++audit.tables_checked;
    const auto c = dualize(t);
    const bool violator = is_violator_space(t);
    if (violator != is_coviolator_space(c)) ++audit.dual_correspondence;
    if (dualize(c) != t) ++audit.dual_involution;
    if (violator) audit_violator(t, audit);
  });
  return audit;
}

}  // namespace vspace
