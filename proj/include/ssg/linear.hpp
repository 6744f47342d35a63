#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ssg/bigint.hpp"

namespace ssg {

// Exact feasibility: some x >= 0 with A x = b, found by a two-phase simplex
// over the rationals with Bland's rule.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<Rational>>& A,
                                                    const std::vector<Rational>& b);

struct WeightedArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::vector<long> weight;
};

// A closed walk (arc indices, each arc's `to` is the next arc's `from`) whose
// total weight is >= 0 in every coordinate, if one exists.
std::optional<std::vector<std::size_t>> nonnegative_closed_walk(std::size_t num_nodes,
                                                                const std::vector<WeightedArc>& arcs);

// Strongly connected component index per node (Tarjan), components numbered
// in reverse topological order.
std::vector<std::size_t> strong_components(std::size_t num_nodes,
                                           const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

}  // namespace ssg
