#include "critgroup/critical.hpp"

#include <algorithm>
#include <stdexcept>

#include "critgroup/errors.hpp"

namespace critgroup {

CriticalGroupResult critical_group(const RepDatum& rep, const ModuleClass& v) {
    CriticalGroupResult result;
    result.laplacian = laplacian(rep, v);
    AbelianGroupStructure coker = cokernel_structure(result.laplacian);
    result.nullity = coker.free_rank;
    if (coker.free_rank == 0)
        throw InternalConsistencyError(
            "critical_group: cokernel has no free part; datum violates s^T L_V = 0");
    result.group = coker;
    result.group.free_rank -= 1;
    result.finite = result.group.free_rank == 0;
    if (result.finite) result.cardinality = result.group.torsion_order();
    return result;
}

AbelianGroupStructure theorem1_closed_form(const Int& gamma, const Int& d,
                                           std::size_t ell_plus_1) {
    if (gamma <= 0 || d <= 0) throw std::invalid_argument("theorem1_closed_form: gamma, d must be positive");
    if (!divides(gamma, d)) throw std::invalid_argument("theorem1_closed_form: gamma must divide d");
    if (ell_plus_1 == 0) throw std::invalid_argument("theorem1_closed_form: need at least one simple");
    if (ell_plus_1 == 1) return {};
    std::vector<Int> factors;
    factors.push_back(gamma);
    for (std::size_t i = 0; i + 2 < ell_plus_1; ++i) factors.push_back(d);
    return AbelianGroupStructure::from_invariant_factors(factors);
}

AbelianGroupStructure lemma_coker(const std::vector<Int>& s, const std::vector<Int>& p) {
    if (s.size() != p.size() || s.empty())
        throw std::invalid_argument("lemma_coker: vectors must be nonempty and of equal length");
    if (std::none_of(s.begin(), s.end(), [](const Int& x) { return x == 1; }))
        throw std::invalid_argument("lemma_coker: s needs a coordinate equal to 1");
    const Int d = dot(s, p);
    if (d == 0) throw std::invalid_argument("lemma_coker: s^T p = 0");

    const std::size_t n = s.size();
    IntMatrix l = outer_product(p, s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) l(i, j) = (i == j ? d - l(i, j) : -l(i, j));
    AbelianGroupStructure coker = cokernel_structure(l);

    AbelianGroupStructure closed;
    closed.free_rank = 1;
    if (n >= 2) {
        std::vector<Int> factors;
        factors.push_back(gcd_all(p));
        for (std::size_t i = 0; i + 2 < n; ++i) factors.push_back(abs(d));
        closed.torsion = AbelianGroupStructure::from_invariant_factors(factors).torsion;
    }
    if (coker != closed)
        throw InternalConsistencyError("lemma_coker: SNF disagrees with the closed form");
    return coker;
}

Int lorenzini_cardinality(const IntMatrix& l, const std::vector<Int>& right_null,
                          const std::vector<Int>& left_null) {
    if (!l.is_square() || l.empty())
        throw std::invalid_argument("lorenzini_cardinality: matrix must be square and nonempty");
    if (right_null.size() != l.rows() || left_null.size() != l.rows())
        throw std::invalid_argument("lorenzini_cardinality: null vector length mismatch");
    if (!is_primitive(right_null) || !is_primitive(left_null))
        throw std::invalid_argument("lorenzini_cardinality: null vectors must be primitive");
    {
        std::vector<Int> zero(l.rows());
        if (l * right_null != zero || row_times(left_null, l) != zero)
            throw std::invalid_argument("lorenzini_cardinality: vectors are not null vectors");
    }

    std::vector<Int> poly = char_poly(l);
    if (poly[0] != 0)
        throw std::invalid_argument("lorenzini_cardinality: matrix is nonsingular");
    // char poly = x q(x); q(0) is the x-coefficient.
    const Int& q0 = poly[1];
    if (q0 == 0)
        throw KInfiniteError("lorenzini_cardinality: x^2 divides the characteristic polynomial");

    Int pairing = dot(left_null, right_null);
    if (pairing == 0)
        throw std::invalid_argument("lorenzini_cardinality: null vectors pair to zero");
    if (!divides(pairing, q0))
        throw InternalConsistencyError("lorenzini_cardinality: eigenvalue product not divisible");
    return abs(exact_div(q0, pairing));
}

Int theorem2_cardinality(const RepDatum& rep, const ModuleClass& v) {
    IntMatrix l = laplacian(rep, v);
    std::vector<Int> poly = char_poly(l);
    if (poly[0] != 0)
        throw InternalConsistencyError("theorem2_cardinality: L_V nonsingular; datum corrupt");
    const Int& q0 = poly[1];
    if (q0 == 0) throw KInfiniteError("theorem2_cardinality: K(V) is infinite");

    Int gamma = rep.projective_gcd();
    Int d = rep.dimension();
    Int numerator = gamma * q0;
    if (!divides(d, numerator))
        throw InternalConsistencyError("theorem2_cardinality: gamma * q(0) not divisible by d");
    return abs(exact_div(numerator, d));
}

}  // namespace critgroup
