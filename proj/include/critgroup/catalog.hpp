#pragma once

#include <string>
#include <vector>

#include "critgroup/catalog_types.hpp"
#include "critgroup/critical.hpp"

namespace critgroup {

/// Keys of the bundled group-algebra data: s4p2, s4p3, s4p0, s5p3.
/// (s4p0 covers characteristic 0 and every p >= 5, where the theory agrees.)
const std::vector<std::string>& builtin_group_keys();

/// Load a bundled group-algebra entry. The datum is validated on load and
/// its fusion matrices are cross-checked against fusion_from_brauer; any
/// failure throws Error. Unknown keys throw std::invalid_argument.
CatalogEntry group_algebra(const std::string& key);

/// Generalized Taft algebra H_{n,m} (m | n): n one-dimensional simples with
/// cyclic fusion, all projectives of dimension m. No Cartan matrix is
/// bundled; the sources do not give one.
CatalogEntry taft(std::size_t n, std::size_t m);

/// Radford's algebra A(n,m), n even: n one-dimensional simples with cyclic
/// fusion, C_{i,j} = #{J subseteq {1..m} : |J| = j-i mod n}, p = C s.
CatalogEntry radford(std::size_t n, std::size_t m);

/// Closed-form K(A) for the restricted enveloping algebra of a restricted
/// Lie algebra attached to a simple algebraic group over F_p:
/// gamma = p^N (Steinberg dimension), d = p^dim_g, ell+1 = p^rank_g.
AbelianGroupStructure restricted_env_regular(const Int& p, std::size_t num_positive_roots,
                                             std::size_t dim_g, std::size_t rank_g);

/// Resolve a display label ("D31", "S2", "P4", "regular") to a module class.
/// Throws std::invalid_argument for unknown labels.
ModuleClass module_class_by_label(const CatalogEntry& entry, const std::string& label);

/// Validation of a full entry: datum checks, Brauer-table checks, and the
/// couplings between them (identity column = s, Sylow gcd, fusion derivation).
ValidationReport validate_entry(const CatalogEntry& entry);

}  // namespace critgroup
