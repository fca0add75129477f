#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgroup/matrix.hpp"
#include "critgroup/rep_data.hpp"

namespace critgroup {

/// Five equivalent finiteness/richness conditions, each decided by its own
/// independent route. They must agree; a disagreement throws.
struct Theorem4Report {
    bool nonsingular_m_matrix = false;  // reduced Laplacian inverse >= 0
    bool reduced_nonsingular = false;   // det != 0
    bool nullity_one = false;           // rank(L_V) = ell
    bool k_finite = false;              // via SNF
    bool tensor_rich = false;           // via reachability
    std::optional<std::size_t> witness_t;

    bool all_equal() const {
        return nonsingular_m_matrix == reduced_nonsingular &&
               reduced_nonsingular == nullity_one && nullity_one == k_finite &&
               k_finite == tensor_rich;
    }
};

/// L_V with the row and column of the trivial module struck out. Requires
/// at least two simples.
IntMatrix reduced_laplacian(const RepDatum& rep, const ModuleClass& v);

/// True iff Q has nonpositive off-diagonal entries, is invertible over Q,
/// and its exact inverse is entrywise nonnegative. A positive off-diagonal
/// entry yields false (with the reason, when requested) rather than an error.
bool is_nonsingular_m_matrix(const IntMatrix& q, std::string* reason = nullptr);

/// Positive rational x with Q x = 1 > 0, certifying Q as a nonsingular
/// M-matrix (Plemmons). Throws NotMMatrixError otherwise.
std::vector<Rat> plemmons_certificate(const IntMatrix& q);

struct TensorRichResult {
    bool rich = false;
    /// Eccentricity of the trivial module in the McKay digraph: the least t
    /// with sum_{k<=t} M_V^k e_eps > 0. Present only when rich.
    std::optional<std::size_t> witness_t;
};

/// Reachability of every simple from the trivial one along edges j -> i
/// whenever (M_V)_{i,j} > 0.
TensorRichResult is_tensor_rich(const RepDatum& rep, const ModuleClass& v);

/// Decide all five conditions independently; throws EquivalenceViolationError
/// if they disagree. For a single simple (ell = 0) the report is all-true by
/// convention, with witness 0.
Theorem4Report theorem4_report(const RepDatum& rep, const ModuleClass& v);

}  // namespace critgroup
