#pragma once

#include <string>
#include <vector>

#include "critgroup/matrix.hpp"
#include "critgroup/rep_data.hpp"

namespace critgroup {

/// Brauer character table of a group algebra on its p-regular classes.
/// chi(i, j) is the character value of the simple S_i on class j. Only
/// integer-valued tables are supported; tables with genuine cyclotomic
/// irrationalities are rejected at load.
struct BrauerTable {
    long characteristic = 0;  // 0 or a prime p
    Int group_order;
    Int sylow_order;          // p^a, 1 in characteristic 0
    std::vector<std::string> class_labels;
    std::size_t identity_class = 0;
    IntMatrix chi;

    std::size_t num_classes() const { return class_labels.size(); }
    /// Dimension vector read off the identity column.
    std::vector<Int> dims() const { return chi.column(identity_class); }
};

/// Structural checks on a table alone (invertibility, Sylow arithmetic).
ValidationReport validate(const BrauerTable& table);

/// chi_V on every class, for [V] = sum c_i [S_i].
std::vector<Int> chi_of_class(const BrauerTable& table, const ModuleClass& v);

/// Recover the McKay matrices of the simples from pointwise products of
/// character rows. Throws NonIntegralFusionError / NegativeMultiplicityError
/// when the solved multiplicities are not nonnegative integers.
std::vector<IntMatrix> fusion_from_brauer(const BrauerTable& table);

struct EigenClassCheck {
    std::string class_label;
    Int eigenvalue;   // chi_V(g)
    bool left_ok = false;
    bool right_ok = false;
};

struct EigenCheckReport {
    std::vector<EigenClassCheck> classes;
    bool all_ok() const;
};

/// Verify, class by class, that s(g) is a left eigenvector and p*(g) a right
/// eigenvector of M_V with eigenvalue chi_V(g). Requires the Cartan matrix
/// for the projective characters.
EigenCheckReport eigen_check(const BrauerTable& table, const RepDatum& rep,
                             const ModuleClass& v);

/// |K(V)| = (p^a / |G|) * prod_{g != e} (n - chi_V(g)), as an exact integer.
/// Throws KInfiniteError when some non-identity factor vanishes.
Int gaetz_cardinality(const BrauerTable& table, const ModuleClass& v);

/// Brauer's criterion: tensor-rich iff chi_V(g) != n off the identity class.
bool brauer_tensor_rich(const BrauerTable& table, const ModuleClass& v);

/// With t = number of distinct chi_V values, check that the direct sum of
/// tensor powers up to t-1 is already rich.
bool richness_bound_check(const BrauerTable& table, const RepDatum& rep,
                          const ModuleClass& v);

/// gcd of the projective dimensions equals the stored Sylow order.
bool sylow_gcd_check(const BrauerTable& table, const RepDatum& rep);

}  // namespace critgroup
