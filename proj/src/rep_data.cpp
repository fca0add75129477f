#include "critgroup/rep_data.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "critgroup/errors.hpp"

namespace critgroup {

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.passed; });
}

void ValidationReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

namespace {

void require_class(const RepDatum& rep, const ModuleClass& v) {
    if (v.multiplicities.size() != rep.num_simples)
        throw std::invalid_argument("module class length does not match number of simples");
}

}  // namespace

Int class_dimension(const RepDatum& rep, const ModuleClass& v) {
    require_class(rep, v);
    return dot(rep.simple_dims, v.multiplicities);
}

IntMatrix mckay_matrix(const RepDatum& rep, const ModuleClass& v) {
    require_class(rep, v);
    IntMatrix m(rep.num_simples, rep.num_simples);
    for (std::size_t t = 0; t < rep.num_simples; ++t) {
        if (v.multiplicities[t] == 0) continue;
        m = m + v.multiplicities[t] * rep.fusion[t];
    }
    return m;
}

IntMatrix laplacian(const RepDatum& rep, const ModuleClass& v) {
    Int n = class_dimension(rep, v);
    IntMatrix l = mckay_matrix(rep, v);
    for (std::size_t i = 0; i < rep.num_simples; ++i)
        for (std::size_t j = 0; j < rep.num_simples; ++j)
            l(i, j) = (i == j ? n - l(i, j) : -l(i, j));
    return l;
}

ModuleClass regular_class(const RepDatum& rep) { return {rep.projective_dims}; }

IntMatrix regular_mckay(const RepDatum& rep) {
    IntMatrix outer = outer_product(rep.projective_dims, rep.simple_dims);
    IntMatrix via_fusion = mckay_matrix(rep, regular_class(rep));
    if (via_fusion != outer)
        throw InternalConsistencyError(
            "regular_mckay: fusion route disagrees with p s^T (inconsistent datum)");
    if (rep.cartan) {
        IntMatrix via_cartan = (*rep.cartan) * outer_product(rep.simple_dims, rep.simple_dims);
        if (via_cartan != outer)
            throw InternalConsistencyError(
                "regular_mckay: C s s^T disagrees with p s^T (inconsistent datum)");
    }
    return outer;
}

ValidationReport validate(const RepDatum& rep, const std::optional<Int>& expected_dimension) {
    ValidationReport report;
    const std::size_t n = rep.num_simples;

    bool shapes_ok = rep.simple_dims.size() == n && rep.projective_dims.size() == n &&
                     rep.fusion.size() == n && rep.trivial_index < n && n > 0;
    for (const IntMatrix& f : rep.fusion)
        shapes_ok = shapes_ok && f.rows() == n && f.cols() == n;
    if (rep.cartan) shapes_ok = shapes_ok && rep.cartan->rows() == n && rep.cartan->cols() == n;
    if (!rep.dual_permutation.empty()) {
        std::vector<bool> seen(n, false);
        shapes_ok = shapes_ok && rep.dual_permutation.size() == n;
        if (shapes_ok)
            for (std::size_t i : rep.dual_permutation) {
                if (i >= n || seen[i]) {
                    shapes_ok = false;
                    break;
                }
                seen[i] = true;
            }
    }
    report.add("shapes consistent", shapes_ok);
    if (!shapes_ok) return report;  // nothing else is well posed

    bool dims_ok = rep.simple_dims[rep.trivial_index] == 1;
    for (const Int& d : rep.simple_dims) dims_ok = dims_ok && d >= 1;
    for (const Int& d : rep.projective_dims) dims_ok = dims_ok && d >= 1;
    report.add("dimension vectors positive, s_eps = 1", dims_ok);

    bool fus_nonneg = true;
    for (const IntMatrix& f : rep.fusion) fus_nonneg = fus_nonneg && f.is_nonnegative();
    report.add("fusion matrices nonnegative", fus_nonneg);

    report.add("fusion at trivial index is identity",
               rep.fusion[rep.trivial_index] == IntMatrix::identity(n));

    {
        Int d = rep.dimension();
        bool ok = true;
        std::ostringstream detail;
        detail << "s^T p = " << d.get_str();
        if (expected_dimension) {
            ok = ok && d == *expected_dimension;
            detail << ", expected " << expected_dimension->get_str();
        }
        if (rep.cartan) {
            Int via_cartan = dot(rep.simple_dims, (*rep.cartan) * rep.simple_dims);
            ok = ok && d == via_cartan;
            detail << ", s^T C s = " << via_cartan.get_str();
        }
        report.add("s^T p = dim(A)", ok, detail.str());
    }

    if (rep.cartan) {
        report.add("cartan nonnegative", rep.cartan->is_nonnegative());
        report.add("C s = p", (*rep.cartan) * rep.simple_dims == rep.projective_dims);
        report.add("p^T = s^T C", row_times(rep.simple_dims, *rep.cartan) == rep.projective_dims);
    }

    bool left_ok = true, right_ok = true;
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<Int> left = row_times(rep.simple_dims, rep.fusion[t]);
        std::vector<Int> right = rep.fusion[t] * rep.projective_dims;
        for (std::size_t j = 0; j < n; ++j) {
            left_ok = left_ok && left[j] == rep.simple_dims[t] * rep.simple_dims[j];
            right_ok = right_ok && right[j] == rep.simple_dims[t] * rep.projective_dims[j];
        }
    }
    report.add("s^T M_{S_t} = s_t s^T for all t", left_ok);
    report.add("M_{S_t} p = s_t p for all t", right_ok);

    return report;
}

}  // namespace critgroup
