#pragma once

#include <optional>
#include <vector>

#include "critgroup/exact_linalg.hpp"
#include "critgroup/rep_data.hpp"

namespace critgroup {

struct CriticalGroupResult {
    AbelianGroupStructure group;  // K(V)
    IntMatrix laplacian;
    std::size_t nullity = 0;      // of L_V over Q
    bool finite = false;
    std::optional<Int> cardinality;
};

/// K(V) from the definition: cokernel of L_V with one free Z factor removed.
/// Always legal since s^T L_V = 0 and s has a unit coordinate.
CriticalGroupResult critical_group(const RepDatum& rep, const ModuleClass& v);

/// K(A) for the regular module: trivial when ell = 0, otherwise
/// Z/gamma + (Z/d)^(ell-1), with unit factors dropped. Requires gamma | d.
AbelianGroupStructure theorem1_closed_form(const Int& gamma, const Int& d,
                                           std::size_t ell_plus_1);

/// Full cokernel of d I - p s^T for integer vectors with a unit coordinate
/// in s and d = s^T p != 0: computed by SNF and asserted against the closed
/// form Z + Z/gamma + (Z/d)^(ell-1).
AbelianGroupStructure lemma_coker(const std::vector<Int>& s, const std::vector<Int>& p);

/// |K| = |lambda_1 ... lambda_ell / (n_left^T n_right)| for a square matrix
/// of nullity one with the given primitive integer null vectors.
Int lorenzini_cardinality(const IntMatrix& l, const std::vector<Int>& right_null,
                          const std::vector<Int>& left_null);

/// |K(V)| = |gamma/d * lambda_1 ... lambda_ell| from the characteristic
/// polynomial of L_V; never touches the eigenvalues themselves.
/// Throws KInfiniteError when K(V) is infinite.
Int theorem2_cardinality(const RepDatum& rep, const ModuleClass& v);

}  // namespace critgroup
