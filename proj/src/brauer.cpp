#include "critgroup/brauer.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "critgroup/errors.hpp"
#include "critgroup/exact_linalg.hpp"

namespace critgroup {

namespace {

void require_class(const BrauerTable& table, const ModuleClass& v) {
    if (v.multiplicities.size() != table.num_classes())
        throw std::invalid_argument("module class length does not match table size");
}

std::vector<std::size_t> dual_perm(const RepDatum& rep) {
    if (!rep.dual_permutation.empty()) return rep.dual_permutation;
    std::vector<std::size_t> id(rep.num_simples);
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    return id;
}

}  // namespace

ValidationReport validate(const BrauerTable& table) {
    ValidationReport report;
    const std::size_t n = table.num_classes();

    bool shapes_ok = n > 0 && table.chi.rows() == n && table.chi.cols() == n &&
                     table.identity_class < n;
    report.add("shapes consistent", shapes_ok);
    if (!shapes_ok) return report;

    bool dims_ok = true;
    for (const Int& d : table.dims()) dims_ok = dims_ok && d >= 1;
    report.add("identity column positive", dims_ok);

    report.add("character table invertible", determinant(table.chi) != 0);

    bool char_ok;
    std::ostringstream detail;
    if (table.characteristic == 0) {
        char_ok = table.sylow_order == 1;
        detail << "characteristic 0, sylow_order " << table.sylow_order.get_str();
    } else {
        Int p(table.characteristic);
        char_ok = is_prime(p);
        Int rem = table.sylow_order;
        while (char_ok && rem > 1 && divides(p, rem)) rem = exact_div(rem, p);
        char_ok = char_ok && rem == 1;  // sylow_order is a power of p
        char_ok = char_ok && divides(table.sylow_order, table.group_order);
        if (char_ok) {
            Int q = exact_div(table.group_order, table.sylow_order);
            char_ok = gcd(p, q) == 1;
        }
        detail << "p = " << table.characteristic << ", p^a = " << table.sylow_order.get_str();
    }
    report.add("|G| = p^a q with gcd(p, q) = 1", char_ok, detail.str());

    return report;
}

std::vector<Int> chi_of_class(const BrauerTable& table, const ModuleClass& v) {
    require_class(table, v);
    return row_times(v.multiplicities, table.chi);
}

std::vector<IntMatrix> fusion_from_brauer(const BrauerTable& table) {
    const std::size_t n = table.num_classes();
    RatMatrix solve;  // (chi^T)^{-1}
    try {
        solve = rat_inverse(table.chi.transpose());
    } catch (const SingularMatrixError&) {
        throw NonIntegralFusionError("fusion_from_brauer: character table is singular");
    }

    std::vector<IntMatrix> fusion(n, IntMatrix(n, n));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t j = 0; j < n; ++j) {
            // Solve chi^T x = chi_{S_j} . chi_{S_t} (pointwise product).
            std::vector<Rat> product(n);
            for (std::size_t g = 0; g < n; ++g)
                product[g] = Rat(table.chi(j, g) * table.chi(t, g));
            std::vector<Rat> x = solve * product;
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i].get_den() != 1) {
                    std::ostringstream msg;
                    msg << "fusion_from_brauer: [S_" << j << " (x) S_" << t << " : S_" << i
                        << "] = " << x[i].get_str() << " is not an integer";
                    throw NonIntegralFusionError(msg.str());
                }
                if (x[i] < 0) {
                    std::ostringstream msg;
                    msg << "fusion_from_brauer: [S_" << j << " (x) S_" << t << " : S_" << i
                        << "] = " << x[i].get_str() << " is negative";
                    throw NegativeMultiplicityError(msg.str());
                }
                fusion[t](i, j) = x[i].get_num();
            }
        }
    return fusion;
}

bool EigenCheckReport::all_ok() const {
    return std::all_of(classes.begin(), classes.end(),
                       [](const EigenClassCheck& c) { return c.left_ok && c.right_ok; });
}

EigenCheckReport eigen_check(const BrauerTable& table, const RepDatum& rep,
                             const ModuleClass& v) {
    const std::size_t n = table.num_classes();
    if (rep.num_simples != n)
        throw std::invalid_argument("eigen_check: datum and table sizes differ");
    if (!rep.cartan)
        throw std::invalid_argument("eigen_check: Cartan matrix required for projective characters");

    IntMatrix m = mckay_matrix(rep, v);
    std::vector<Int> chi_v = chi_of_class(table, v);
    const IntMatrix& c = *rep.cartan;
    std::vector<std::size_t> dual = dual_perm(rep);

    EigenCheckReport report;
    for (std::size_t g = 0; g < n; ++g) {
        EigenClassCheck check;
        check.class_label = table.class_labels[g];
        check.eigenvalue = chi_v[g];

        // s(g)^T M_V = chi_V(g) s(g)^T
        std::vector<Int> sg = table.chi.column(g);
        std::vector<Int> left = row_times(sg, m);
        check.left_ok = true;
        for (std::size_t j = 0; j < n; ++j)
            check.left_ok = check.left_ok && left[j] == chi_v[g] * sg[j];

        // M_V p*(g) = chi_V(g) p*(g), with p*(g)_j = chi_{P_{dual(j)}}(g)
        // and chi_{P_k} = sum_i C_{i,k} chi_{S_i}.
        std::vector<Int> pg(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) pg[j] += c(i, dual[j]) * table.chi(i, g);
        std::vector<Int> right = m * pg;
        check.right_ok = true;
        for (std::size_t j = 0; j < n; ++j)
            check.right_ok = check.right_ok && right[j] == chi_v[g] * pg[j];

        report.classes.push_back(std::move(check));
    }
    return report;
}

Int gaetz_cardinality(const BrauerTable& table, const ModuleClass& v) {
    std::vector<Int> chi_v = chi_of_class(table, v);
    const Int& n = chi_v[table.identity_class];
    Int product = 1;
    for (std::size_t g = 0; g < table.num_classes(); ++g) {
        if (g == table.identity_class) continue;
        Int factor = n - chi_v[g];
        if (factor == 0)
            throw KInfiniteError("gaetz_cardinality: chi_V(g) = n off the identity, K(V) infinite");
        product *= factor;
    }
    product *= table.sylow_order;
    if (!divides(table.group_order, product))
        throw InternalConsistencyError("gaetz_cardinality: product not divisible by |G|");
    return abs(exact_div(product, table.group_order));
}

bool brauer_tensor_rich(const BrauerTable& table, const ModuleClass& v) {
    std::vector<Int> chi_v = chi_of_class(table, v);
    const Int& n = chi_v[table.identity_class];
    for (std::size_t g = 0; g < table.num_classes(); ++g)
        if (g != table.identity_class && chi_v[g] == n) return false;
    return true;
}

bool richness_bound_check(const BrauerTable& table, const RepDatum& rep,
                          const ModuleClass& v) {
    if (!brauer_tensor_rich(table, v))
        throw std::invalid_argument("richness_bound_check: module is not tensor-rich");
    std::vector<Int> chi_v = chi_of_class(table, v);
    std::set<Int> values(chi_v.begin(), chi_v.end());
    const std::size_t t = values.size();

    // sum_{k=0}^{t-1} M_V^k e_eps must be strictly positive.
    IntMatrix m = mckay_matrix(rep, v);
    std::vector<Int> e(rep.num_simples);
    e[rep.trivial_index] = 1;
    std::vector<Int> acc = e;
    std::vector<Int> power = e;
    for (std::size_t k = 1; k < t; ++k) {
        power = m * power;
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += power[i];
    }
    return std::all_of(acc.begin(), acc.end(), [](const Int& x) { return x > 0; });
}

bool sylow_gcd_check(const BrauerTable& table, const RepDatum& rep) {
    return rep.projective_gcd() == table.sylow_order;
}

}  // namespace critgroup
