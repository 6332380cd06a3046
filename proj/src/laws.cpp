#include "laws.hpp"

namespace vspace::laws {

std::vector<std::vector<SubsetMask>> fibres(Values op) {
  std::vector<std::vector<SubsetMask>> fib(op.size());
  for (std::size_t i = 0; i < op.size(); ++i) {
    fib[op[i].index()].push_back(SubsetMask(static_cast<std::uint32_t>(i)));
  }
  return fib;
}

AxiomReport idempotence(std::string id, Values op) {
  for (std::size_t i = 0; i < op.size(); ++i) {
    if (op[op[i].index()] != op[i]) {
      return AxiomReport::fail(std::move(id), {SubsetMask(static_cast<std::uint32_t>(i))});
    }
  }
  return AxiomReport::pass(std::move(id));
}

namespace {

template <typename Combine>
AxiomReport pair_closed(std::string id, Values op, const std::vector<std::vector<SubsetMask>>& fib,
                        Combine combine) {
  for (std::size_t i = 0; i < op.size(); ++i) {
    const SubsetMask x(static_cast<std::uint32_t>(i));
    for (auto y : fib[op[i].index()]) {
      if (op[combine(x, y).index()] != op[i]) return AxiomReport::fail(std::move(id), {x, y});
    }
  }
  return AxiomReport::pass(std::move(id));
}

}  // namespace

AxiomReport union_closed(std::string id, Values op, const std::vector<std::vector<SubsetMask>>& fib) {
  return pair_closed(std::move(id), op, fib, [](SubsetMask a, SubsetMask b) { return a | b; });
}

AxiomReport intersection_closed(std::string id, Values op,
                                const std::vector<std::vector<SubsetMask>>& fib) {
  return pair_closed(std::move(id), op, fib, [](SubsetMask a, SubsetMask b) { return a & b; });
}

AxiomReport convex(std::string id, Values op, const std::vector<std::vector<SubsetMask>>& fib) {
  // Chains are ranked by the greatest top Z first, then least X, then least Y.
  for (std::size_t k = op.size(); k-- > 0;) {
    const SubsetMask z(static_cast<std::uint32_t>(k));
    for (auto x : fib[op[k].index()]) {
      if (x == z || !x.is_subset_of(z)) continue;
      auto y = find_between(x, z, [&](SubsetMask cand) { return op[cand.index()] != op[k]; });
      if (y) return AxiomReport::fail(std::move(id), {x, *y, z});
    }
  }
  return AxiomReport::pass(std::move(id));
}

AxiomReport outcast(std::string id, Values op) {
  for (std::size_t i = 0; i < op.size(); ++i) {
    const SubsetMask x(static_cast<std::uint32_t>(i));
    const SubsetMask cx = op[i];
    if (!cx.is_subset_of(x)) continue;
    auto y = find_between(cx, x, [&](SubsetMask cand) { return op[cand.index()] != cx; });
    if (y) return AxiomReport::fail(std::move(id), {x, *y});
  }
  return AxiomReport::pass(std::move(id));
}

}  // namespace vspace::laws
