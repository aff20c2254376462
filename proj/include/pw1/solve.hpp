#pragma once

#include <cstdint>
#include <optional>

#include "pw1/edit_ops.hpp"

namespace pw1 {

struct SolveOptions {
    bool use_kernel = true;
    bool want_witness = false;
    // Ignore the budget and search for the smallest feasible one, up to |S| explosions or
    // m splits.
    bool minimize = false;
};

struct SolveResult {
    bool yes = false;
    std::optional<Witness> witness;
    std::optional<int> minimum;   // set in minimize mode when feasible
    std::uint64_t nodes = 0;      // search-tree leaves of the deciding search
    bool kernel_rejected = false; // decided by a reduction rule before any branching
};

}  // namespace pw1
