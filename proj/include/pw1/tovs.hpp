#pragma once

#include <cstddef>

#include "pw1/edit_ops.hpp"
#include "pw1/solve.hpp"

namespace pw1 {

// m - n + number of components: the fewest splits that turn g into a forest.
std::size_t min_splits_to_forest(const Graph& g);

// Linear time. Feasible iff G - S is a forest; then the minimum above is exact.
SolveResult solve_tovs(const Instance& inst, const SolveOptions& opts = {});

}  // namespace pw1
