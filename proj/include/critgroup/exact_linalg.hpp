#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "critgroup/matrix.hpp"

namespace critgroup {

/// Smith normal form u * a * v = diag(diagonal), with u, v unimodular.
/// diagonal has length min(rows, cols); nonzero entries come first and each
/// divides the next; rank counts the nonzero entries.
struct SmithDecomposition {
    std::vector<Int> diagonal;
    IntMatrix u;
    IntMatrix v;
    std::size_t rank = 0;
};

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k,
/// invariant factors t_i >= 2 in a divisibility chain t_1 | t_2 | ...
struct AbelianGroupStructure {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool is_finite() const { return free_rank == 0; }
    /// Order of the torsion part (the group order when finite).
    Int torsion_order() const;
    std::string to_string() const;

    bool operator==(const AbelianGroupStructure&) const = default;

    /// Normalize a raw invariant-factor list: zeros count toward the free
    /// rank, units are dropped, remaining factors keep their order.
    static AbelianGroupStructure from_invariant_factors(const std::vector<Int>& factors);
};

/// Deterministic SNF: minimal-absolute-value pivot, ties by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Structure of Z^n / im(a) for square a.
AbelianGroupStructure cokernel_structure(const IntMatrix& a);

/// Coefficients of det(xI - a) in ascending order; exact, monic.
std::vector<Int> char_poly(const IntMatrix& a);

/// Rank over Q, by fraction-free elimination.
std::size_t rank(const IntMatrix& a);

/// Exact determinant (Bareiss).
Int determinant(const IntMatrix& a);

/// Exact inverse over Q; throws SingularMatrixError when det = 0.
RatMatrix rat_inverse(const IntMatrix& a);

}  // namespace critgroup
