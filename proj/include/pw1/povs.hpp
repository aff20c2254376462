#pragma once

#include <cstdint>
#include <optional>

#include "pw1/edit_ops.hpp"
#include "pw1/solve.hpp"

namespace pw1 {

struct PovsBranchResult {
    bool yes = false;
    std::optional<SplitSequence> witness;
    std::uint64_t nodes = 0;  // leaves of the search tree, at most (6k+12)^k
};

// Search over splits of at most two edges around an N2, then one spine split per
// pseudo-caterpillar component.
PovsBranchResult branch_povs(const Instance& inst);

SolveResult solve_povs(const Instance& inst, const SolveOptions& opts = {});

}  // namespace pw1
