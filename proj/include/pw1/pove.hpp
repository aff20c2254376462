#pragma once

#include <cstdint>
#include <optional>

#include "pw1/edit_ops.hpp"
#include "pw1/solve.hpp"

namespace pw1 {

struct PoveBranchResult {
    bool yes = false;
    std::optional<ExplosionSet> witness;
    std::uint64_t nodes = 0;  // leaves of the search tree, at most 4^k
};

// Depth-first search over explosions of N2 vertices, then one spine explosion per
// pseudo-caterpillar component.
PoveBranchResult branch_pove(const Instance& inst);

SolveResult solve_pove(const Instance& inst, const SolveOptions& opts = {});

}  // namespace pw1
