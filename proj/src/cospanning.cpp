#include "vspace/cospanning.hpp"

#include <algorithm>
#include <random>

#include "laws.hpp"
#include "vspace/error.hpp"
#include "vspace/violator.hpp"

namespace vspace {

CospanningPartition::CospanningPartition(GroundSet ground, std::vector<std::vector<SubsetMask>> classes)
    : ground_(std::move(ground)), class_of_(ground_.subset_count(), UINT32_MAX), classes_(std::move(classes)) {
  for (auto& cls : classes_) {
    if (cls.empty()) throw Error(ErrorKind::MalformedDocument, "empty class");
    std::sort(cls.begin(), cls.end());
  }
  std::sort(classes_.begin(), classes_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::uint32_t id = 0; id < classes_.size(); ++id) {
    for (auto x : classes_[id]) {
      if (!ground_.contains(x)) throw Error(ErrorKind::MalformedDocument, "subset outside ground set");
      auto& slot = class_of_[x.index()];
      if (slot != UINT32_MAX) throw Error(ErrorKind::DuplicateEntry, ground_.format(x) + " in two classes");
      slot = id;
    }
  }
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    if (class_of_[i] == UINT32_MAX) {
      throw Error(ErrorKind::MissingEntry,
                  ground_.format(SubsetMask(static_cast<std::uint32_t>(i))) + " is in no class");
    }
  }
}

CospanningPartition cospanning_partition(const OperatorTable& table) {
  std::vector<std::uint32_t> id_of_value(table.size(), UINT32_MAX);
  std::vector<std::vector<SubsetMask>> classes;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const SubsetMask x(static_cast<std::uint32_t>(i));
    auto& id = id_of_value[table(x).index()];
    if (id == UINT32_MAX) {
      id = static_cast<std::uint32_t>(classes.size());
      classes.emplace_back();
    }
    classes[id].push_back(x);
  }
  return CospanningPartition(table.ground(), std::move(classes));
}

namespace {

// The laws only compare operator values for equality, so a partition is checked
// as the operator X -> id of [X], with ids stored in masks.
std::vector<SubsetMask> class_id_values(const CospanningPartition& p) {
  std::vector<SubsetMask> ids(p.ground().subset_count());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ids[i] = SubsetMask(p.class_of(SubsetMask(static_cast<std::uint32_t>(i))));
  }
  return ids;
}

}  // namespace

std::vector<AxiomReport> verify_relation_axioms(const CospanningPartition& p) {
  const auto ids = class_id_values(p);
  const auto fib = laws::fibres(ids);
  return {
      laws::union_closed("R1", ids, fib),
      laws::convex("R2", ids, fib),
      laws::intersection_closed("R3", ids, fib),
  };
}

OperatorTable synthesize_from_relation(const CospanningPartition& p, SynthesisMode mode) {
  const auto reports = verify_relation_axioms(p);
  const bool violator = mode == SynthesisMode::violator;
  const auto& closure = find_report(reports, violator ? "R1" : "R3");
  const auto& convexity = find_report(reports, "R2");
  for (const auto* r : {&closure, &convexity}) {
    if (!r->holds) {
      std::string where;
      for (auto w : r->witness) where += " " + p.ground().format(w);
      throw Error(ErrorKind::AxiomsNotSatisfied, r->axiom + " fails at" + where);
    }
  }

  std::vector<SubsetMask> per_class;
  per_class.reserve(p.class_count());
  for (const auto& cls : p.classes()) {
    SubsetMask acc = violator ? SubsetMask() : p.ground().full();
    for (auto x : cls) acc = violator ? (acc | x) : (acc & x);
    per_class.push_back(acc);
  }
  std::vector<SubsetMask> map(p.ground().subset_count());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = per_class[p.class_of(SubsetMask(static_cast<std::uint32_t>(i)))];
  }
  return OperatorTable(p.ground(), violator ? OperatorKind::phi : OperatorKind::choice, std::move(map));
}

AxiomReport is_hypercube_partition(const CospanningPartition& p) {
  for (const auto& cls : p.classes()) {
    Interval hull{p.ground().full(), SubsetMask()};
    for (auto x : cls) {
      hull.lo = hull.lo & x;
      hull.hi = hull.hi | x;
    }
    // Every member lies in the hull, so equal cardinality means equality.
    if (cls.size() != hull.cardinality()) return AxiomReport::fail("Hypercube", {cls.front()});
  }
  return AxiomReport::pass("Hypercube");
}

Interval class_interval(const OperatorTable& phi, SubsetMask x) {
  if (!is_uniquely_generated(phi).uniquely_generated) {
    throw Error(ErrorKind::NotUniquelyGenerated, "class of " + phi.ground().format(x) + " need not be an interval");
  }
  return {extreme_points(phi, x), phi(x)};
}

namespace {

struct CubeSplitter {
  std::mt19937_64 rng;
  std::vector<std::vector<SubsetMask>> classes;

  // Leaf probability 3/10 keeps a mix of large and small cells at n ~ 6.
  void split(SubsetMask lo, SubsetMask free) {
    if (free.empty() || rng() % 10 < 3) {
      auto& cls = classes.emplace_back();
      for_each_between(lo, lo | free, [&](SubsetMask c) { cls.push_back(c); });
      return;
    }
    std::vector<unsigned> coords;
    for (unsigned i = 0; i < 32; ++i) {
      if (free.test(i)) coords.push_back(i);
    }
    const unsigned axis = coords[rng() % coords.size()];
    split(lo, free.without(axis));
    split(lo.with(axis), free.without(axis));
  }
};

}  // namespace

CospanningPartition random_hypercube_partition(unsigned n, std::uint64_t seed) {
  if (n < 1 || n > kSweepCap) {
    throw Error(ErrorKind::InvalidArgument, "random_hypercube_partition needs 1 <= n <= " + std::to_string(kSweepCap));
  }
  CubeSplitter splitter{std::mt19937_64(seed), {}};
  splitter.split(SubsetMask(), SubsetMask::full(n));
  return CospanningPartition(GroundSet::numbered(n), std::move(splitter.classes));
}

}  // namespace vspace
