#include "critgroup/chipfire.hpp"

#include <stdexcept>

#include "critgroup/errors.hpp"
#include "critgroup/richness.hpp"

namespace critgroup {

bool is_avalanche_finite(const IntMatrix& l) {
    return l.is_square() && !l.empty() && is_nonsingular_m_matrix(l);
}

FiringRecord stabilize(const IntMatrix& l, const ChipConfig& c, const StabilizeOptions& options) {
    const std::size_t n = l.rows();
    if (!l.is_square()) throw std::invalid_argument("stabilize: matrix must be square");
    if (c.size() != n) throw std::invalid_argument("stabilize: configuration length mismatch");
    for (const Int& x : c)
        if (x < 0) throw std::invalid_argument("stabilize: configuration must be nonnegative");
    if (options.verify_matrix && !is_avalanche_finite(l))
        throw NotAvalancheFiniteError("stabilize: matrix is not avalanche-finite");

    FiringRecord record;
    record.stable = c;
    record.firings.assign(n, 0);
    std::uint64_t steps = 0;
    std::vector<std::size_t> unstable;
    for (;;) {
        unstable.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (record.stable[i] >= l(i, i)) unstable.push_back(i);
        if (unstable.empty()) break;
        std::size_t site = options.pick_site ? options.pick_site(unstable) : unstable.front();
        if (site >= n || record.stable[site] < l(site, site))
            throw std::invalid_argument("stabilize: site chooser returned a stable site");
        for (std::size_t i = 0; i < n; ++i) record.stable[i] -= l(i, site);
        record.firings[site] += 1;
        if (++steps > options.step_limit)
            throw StepLimitExceededError("stabilize: step limit exceeded");
    }
    return record;
}

ChipConfig burning_config(const RepDatum& rep, const ModuleClass& v) {
    if (rep.projective_dims[rep.trivial_index] != 1)
        throw NotSemisimpleError(
            "burning_config: P_eps is not one-dimensional, algebra is not semisimple");
    std::vector<Int> column = mckay_matrix(rep, v).column(rep.trivial_index);
    ChipConfig b;
    b.reserve(column.size() - 1);
    for (std::size_t i = 0; i < column.size(); ++i)
        if (i != rep.trivial_index) b.push_back(column[i]);
    return b;
}

bool is_recurrent(const IntMatrix& l, const ChipConfig& burning, const ChipConfig& candidate,
                  const StabilizeOptions& options) {
    const std::size_t n = l.rows();
    if (burning.size() != n || candidate.size() != n)
        throw std::invalid_argument("is_recurrent: configuration length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (candidate[i] < 0 || candidate[i] >= l(i, i))
            throw std::invalid_argument("is_recurrent: candidate is not a stable configuration");
        if (burning[i] < 0) throw std::invalid_argument("is_recurrent: burning config negative");
    }
    ChipConfig start(n);
    for (std::size_t i = 0; i < n; ++i) start[i] = candidate[i] + burning[i];
    return stabilize(l, start, options).stable == candidate;
}

}  // namespace critgroup
