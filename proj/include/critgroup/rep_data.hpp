#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgroup/exact_linalg.hpp"
#include "critgroup/matrix.hpp"

namespace critgroup {

/// Class [V] = sum c_i [S_i] in the Grothendieck group, by multiplicities.
struct ModuleClass {
    std::vector<Int> multiplicities;
};

/// Representation datum of a finite-dimensional algebra: dimension vectors of
/// the simples and indecomposable projectives, the optional Cartan matrix,
/// and the McKay matrices of the simples.
///
/// fusion[t](i, j) is the multiplicity of S_i in S_j (x) S_t, so the McKay
/// matrix of any module class is a plain linear combination of the fusion
/// matrices. The trivial module may sit at any index.
struct RepDatum {
    std::string label;
    std::size_t num_simples = 0;
    std::size_t trivial_index = 0;
    std::vector<Int> simple_dims;       // s
    std::vector<Int> projective_dims;   // p
    std::optional<IntMatrix> cartan;
    std::vector<IntMatrix> fusion;
    std::vector<std::size_t> dual_permutation;  // empty means identity

    /// dim A = s^T p.
    Int dimension() const { return dot(simple_dims, projective_dims); }
    /// gamma = gcd of the projective dimensions.
    Int projective_gcd() const { return gcd_all(projective_dims); }
};

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_passed() const;
    void add(std::string name, bool passed, std::string detail = "");
};

/// n = s^T c. Throws on length mismatch.
Int class_dimension(const RepDatum& rep, const ModuleClass& v);

/// M_V = sum_t c_t fusion[t]; satisfies s^T M_V = n s^T and M_V p = n p.
IntMatrix mckay_matrix(const RepDatum& rep, const ModuleClass& v);

/// L_V = n I - M_V; s and p are left/right null vectors.
IntMatrix laplacian(const RepDatum& rep, const ModuleClass& v);

/// Class of the left-regular module: c = p.
ModuleClass regular_class(const RepDatum& rep);

/// McKay matrix of the regular module, p s^T. Cross-checked against the
/// fusion route (and against C s s^T when the Cartan matrix is present);
/// throws InternalConsistencyError on disagreement.
IntMatrix regular_mckay(const RepDatum& rep);

/// Run every structural identity on the datum and report each by name.
/// Failures are reported, never thrown. When expected_dimension is given
/// (e.g. |G| for a group algebra) it is checked against s^T p.
ValidationReport validate(const RepDatum& rep,
                          const std::optional<Int>& expected_dimension = std::nullopt);

}  // namespace critgroup
