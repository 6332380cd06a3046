#pragma once

// Test helpers and brute-force oracles. The oracles restate each definition as
// nested loops over all subsets and never call the library's checkers.

#include <initializer_list>
#include <random>
#include <vector>

#include "vspace/operator_table.hpp"

namespace vspace::testing {

/// Mask from 1-based element numbers on a numbered ground set: m({1, 3}) = 0b101.
inline SubsetMask m(std::initializer_list<unsigned> elements) {
  SubsetMask x;
  for (unsigned e : elements) x = x.with(e - 1);
  return x;
}

inline SubsetMask at(std::size_t i) { return SubsetMask(static_cast<std::uint32_t>(i)); }

inline bool subset(std::size_t a, std::size_t b) { return (a & ~b) == 0; }

namespace oracle {

inline bool is_violator_phi(const OperatorTable& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!subset(x, t(at(x)).index())) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (subset(x, y) && subset(y, t(at(x)).index()) && t(at(y)) != t(at(x))) return false;
    }
  }
  return true;
}

inline bool is_violator_nu(const OperatorTable& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x) {
    if ((x & t(at(x)).index()) != 0) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (subset(x, y) && (y & t(at(x)).index()) == 0 && t(at(y)) != t(at(x))) return false;
    }
  }
  return true;
}

inline bool is_coviolator(const OperatorTable& c) {
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!subset(c(at(x)).index(), x)) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (subset(c(at(x)).index(), y) && subset(y, x) && c(at(y)) != c(at(x))) return false;
    }
  }
  return true;
}

inline std::size_t ex(const OperatorTable& phi, std::size_t x) {
  std::size_t out = 0;
  for (unsigned i = 0; i < phi.n(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    if ((x & bit) && !(phi(at(x & ~bit)).index() & bit)) out |= bit;
  }
  return out;
}

inline std::vector<std::size_t> bases(const OperatorTable& phi, std::size_t x) {
  std::vector<std::size_t> gens;
  for (std::size_t y = 0; y < phi.size(); ++y) {
    if (phi(at(y)) == phi(at(x))) gens.push_back(y);
  }
  std::vector<std::size_t> out;
  for (auto g : gens) {
    bool minimal = true;
    for (auto h : gens) minimal = minimal && !(h != g && subset(h, g));
    if (minimal) out.push_back(g);
  }
  return out;
}

inline bool uniquely_generated(const OperatorTable& phi) {
  for (std::size_t x = 0; x < phi.size(); ++x) {
    if (bases(phi, x).size() != 1) return false;
  }
  return true;
}

}  // namespace oracle

/// Uniformly random total table (any kind).
inline OperatorTable random_table(unsigned n, std::mt19937_64& rng, OperatorKind kind) {
  const GroundSet ground = GroundSet::numbered(n);
  std::vector<SubsetMask> map(ground.subset_count());
  for (auto& y : map) y = SubsetMask(static_cast<std::uint32_t>(rng() % ground.subset_count()));
  return OperatorTable(ground, kind, std::move(map));
}

/// Random extensive phi-table: each entry is a random superset of its index.
inline OperatorTable random_extensive(unsigned n, std::mt19937_64& rng) {
  const GroundSet ground = GroundSet::numbered(n);
  std::vector<SubsetMask> map(ground.subset_count());
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = at(i) | SubsetMask(static_cast<std::uint32_t>(rng() % ground.subset_count()));
  }
  return OperatorTable(ground, OperatorKind::phi, std::move(map));
}

}  // namespace vspace::testing
