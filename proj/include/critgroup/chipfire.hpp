#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "critgroup/matrix.hpp"
#include "critgroup/rep_data.hpp"

namespace critgroup {

/// Nonnegative chip counts, one per non-trivial simple.
using ChipConfig = std::vector<Int>;

struct FiringRecord {
    ChipConfig stable;
    std::vector<Int> firings;  // how often each site fired
};

struct StabilizeOptions {
    /// Verify avalanche-finiteness up front. Disabling it leaves only the
    /// step limit between a bad matrix and an endless run.
    bool verify_matrix = true;
    std::uint64_t step_limit = 10'000'000;
    /// Chooses which unstable site fires next; default is the lowest index.
    std::function<std::size_t(const std::vector<std::size_t>&)> pick_site;
};

/// Integer nonsingular M-matrix.
bool is_avalanche_finite(const IntMatrix& l);

/// Fire sites with c_i >= L_{i,i} by subtracting columns of L until stable.
/// Avalanche-finiteness makes the result independent of the firing order.
FiringRecord stabilize(const IntMatrix& l, const ChipConfig& c,
                       const StabilizeOptions& options = {});

/// Column of M_V at the trivial module with the trivial entry removed; a
/// burning configuration for the reduced Laplacian. Only valid over a
/// semisimple algebra (p_eps = 1); throws NotSemisimpleError otherwise.
ChipConfig burning_config(const RepDatum& rep, const ModuleClass& v);

/// Burning test: a stable configuration c is recurrent iff adding the
/// burning configuration and stabilizing returns to c.
bool is_recurrent(const IntMatrix& l, const ChipConfig& burning, const ChipConfig& candidate,
                  const StabilizeOptions& options = {});

}  // namespace critgroup
