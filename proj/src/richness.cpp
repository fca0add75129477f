#include "critgroup/richness.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "critgroup/critical.hpp"
#include "critgroup/errors.hpp"
#include "critgroup/exact_linalg.hpp"

namespace critgroup {

IntMatrix reduced_laplacian(const RepDatum& rep, const ModuleClass& v) {
    if (rep.num_simples < 2)
        throw std::invalid_argument("reduced_laplacian: need at least two simples");
    return laplacian(rep, v).deleted(rep.trivial_index, rep.trivial_index);
}

bool is_nonsingular_m_matrix(const IntMatrix& q, std::string* reason) {
    if (!q.is_square()) {
        if (reason) *reason = "matrix is not square";
        return false;
    }
    if (!q.has_nonpositive_offdiagonal()) {
        if (reason) *reason = "positive off-diagonal entry";
        return false;
    }
    RatMatrix inv;
    try {
        inv = rat_inverse(q);
    } catch (const SingularMatrixError&) {
        if (reason) *reason = "matrix is singular";
        return false;
    }
    if (!inv.is_nonnegative()) {
        if (reason) *reason = "inverse has a negative entry";
        return false;
    }
    return true;
}

std::vector<Rat> plemmons_certificate(const IntMatrix& q) {
    std::string reason;
    if (!is_nonsingular_m_matrix(q, &reason))
        throw NotMMatrixError("plemmons_certificate: " + reason);
    RatMatrix inv = rat_inverse(q);
    std::vector<Rat> x(q.rows());
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j) x[i] += inv(i, j);
    // x = Q^{-1} 1, so Q x = 1; both sides of the Plemmons criterion.
    for (const Rat& xi : x)
        if (xi <= 0)
            throw InternalConsistencyError("plemmons_certificate: certificate not positive");
    return x;
}

TensorRichResult is_tensor_rich(const RepDatum& rep, const ModuleClass& v) {
    IntMatrix m = mckay_matrix(rep, v);
    const std::size_t n = rep.num_simples;
    // BFS from the trivial module; edge j -> i when (M_V)_{i,j} > 0.
    std::vector<std::size_t> dist(n, n + 1);
    std::queue<std::size_t> queue;
    dist[rep.trivial_index] = 0;
    queue.push(rep.trivial_index);
    std::size_t reached = 0, ecc = 0;
    while (!queue.empty()) {
        std::size_t j = queue.front();
        queue.pop();
        ++reached;
        ecc = std::max(ecc, dist[j]);
        for (std::size_t i = 0; i < n; ++i)
            if (m(i, j) > 0 && dist[i] > n) {
                dist[i] = dist[j] + 1;
                queue.push(i);
            }
    }
    if (reached < n) return {false, std::nullopt};
    return {true, ecc};
}

Theorem4Report theorem4_report(const RepDatum& rep, const ModuleClass& v) {
    Theorem4Report report;
    if (rep.num_simples == 1) {
        // Single simple: the trivial module is its only composition factor,
        // so every class is tensor-rich; reported all-true by convention.
        report.nonsingular_m_matrix = report.reduced_nonsingular = report.nullity_one =
            report.k_finite = report.tensor_rich = true;
        report.witness_t = 0;
        return report;
    }

    const std::size_t ell = rep.num_simples - 1;
    IntMatrix reduced = reduced_laplacian(rep, v);
    report.nonsingular_m_matrix = is_nonsingular_m_matrix(reduced);
    report.reduced_nonsingular = determinant(reduced) != 0;
    report.nullity_one = rank(laplacian(rep, v)) == ell;
    report.k_finite = critical_group(rep, v).finite;
    TensorRichResult rich = is_tensor_rich(rep, v);
    report.tensor_rich = rich.rich;
    report.witness_t = rich.witness_t;

    if (!report.all_equal()) {
        std::ostringstream msg;
        msg << "theorem4_report: conditions disagree (" << report.nonsingular_m_matrix << ", "
            << report.reduced_nonsingular << ", " << report.nullity_one << ", "
            << report.k_finite << ", " << report.tensor_rich << ")";
        throw EquivalenceViolationError(msg.str());
    }
    return report;
}

}  // namespace critgroup
