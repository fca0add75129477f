#include "critgroup/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "builtin_data.hpp"
#include "critgroup/errors.hpp"
#include "critgroup/json_io.hpp"

namespace critgroup {

namespace {

std::optional<Int> expected_dimension(const CatalogEntry& entry) {
    if (entry.brauer) return entry.brauer->group_order;
    return std::nullopt;
}

CatalogEntry load_entry(std::string_view text) {
    CatalogEntry entry = json::parse(text).get<CatalogEntry>();
    ValidationReport report = validate_entry(entry);
    if (!report.all_passed()) {
        std::ostringstream msg;
        msg << "catalog entry '" << entry.key << "' failed validation:";
        for (const ValidationCheck& c : report.checks)
            if (!c.passed) msg << " [" << c.name << "]";
        throw Error(msg.str());
    }
    return entry;
}

/// fusion[t] = permutation matrix of +t on Z/n: entry (i,j) = 1 iff i = j+t.
std::vector<IntMatrix> cyclic_fusion(std::size_t n) {
    std::vector<IntMatrix> fusion(n, IntMatrix(n, n));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t j = 0; j < n; ++j) fusion[t]((j + t) % n, j) = 1;
    return fusion;
}

std::vector<std::string> cyclic_labels(std::size_t n) {
    std::vector<std::string> labels(n);
    for (std::size_t k = 0; k < n; ++k) labels[k] = "S" + std::to_string(k);
    return labels;
}

void validate_or_throw(const CatalogEntry& entry) {
    ValidationReport report = validate(entry.datum, expected_dimension(entry));
    if (!report.all_passed())
        throw InternalConsistencyError("constructed datum '" + entry.key +
                                       "' failed validation");
}

}  // namespace

const std::vector<std::string>& builtin_group_keys() {
    static const std::vector<std::string> keys = {"s4p2", "s4p3", "s4p0", "s5p3"};
    return keys;
}

CatalogEntry group_algebra(const std::string& key) {
    if (key == "s4p2") return load_entry(builtin_data::s4p2);
    if (key == "s4p3") return load_entry(builtin_data::s4p3);
    if (key == "s4p0") return load_entry(builtin_data::s4p0);
    if (key == "s5p3") return load_entry(builtin_data::s5p3);
    throw std::invalid_argument("unknown catalog key '" + key + "'");
}

CatalogEntry taft(std::size_t n, std::size_t m) {
    if (n == 0 || m == 0 || n % m != 0)
        throw std::invalid_argument("taft: need positive n, m with m | n");
    CatalogEntry entry;
    entry.key = "taft(" + std::to_string(n) + "," + std::to_string(m) + ")";
    entry.provenance =
        "Generalized Taft algebra H_{n,m} (Cibils; Li-Zhang): n one-dimensional simples "
        "inflated from F[Z/nZ], projective covers all of dimension m";
    entry.simple_labels = cyclic_labels(n);
    entry.datum.label = "H_{" + std::to_string(n) + "," + std::to_string(m) + "}";
    entry.datum.num_simples = n;
    entry.datum.trivial_index = 0;
    entry.datum.simple_dims.assign(n, 1);
    entry.datum.projective_dims.assign(n, Int(static_cast<unsigned long>(m)));
    entry.datum.fusion = cyclic_fusion(n);
    validate_or_throw(entry);
    return entry;
}

CatalogEntry radford(std::size_t n, std::size_t m) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("radford: n must be even and positive");
    CatalogEntry entry;
    entry.key = "radford(" + std::to_string(n) + "," + std::to_string(m) + ")";
    entry.provenance =
        "Radford's Hopf algebra A(n,m) (Radford, Hopf Algebras, Exercise 10.5.9): "
        "C_{i,j} counts subsets J of {1..m} with |J| = j-i mod n";
    entry.simple_labels = cyclic_labels(n);
    entry.datum.label = "A(" + std::to_string(n) + "," + std::to_string(m) + ")";
    entry.datum.num_simples = n;
    entry.datum.trivial_index = 0;
    entry.datum.simple_dims.assign(n, 1);

    IntMatrix c(n, n);
    std::vector<Int> binom(m + 1);
    binom[0] = 1;
    for (std::size_t k = 1; k <= m; ++k)
        mpz_bin_uiui(binom[k].get_mpz_t(), m, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = (j + n - i) % n; k <= m; k += n) c(i, j) += binom[k];
    entry.datum.cartan = c;
    entry.datum.projective_dims = c * entry.datum.simple_dims;
    entry.datum.fusion = cyclic_fusion(n);
    validate_or_throw(entry);
    return entry;
}

AbelianGroupStructure restricted_env_regular(const Int& p, std::size_t num_positive_roots,
                                             std::size_t dim_g, std::size_t rank_g) {
    if (!is_prime(p)) throw std::invalid_argument("restricted_env_regular: p must be prime");
    if (rank_g == 0)
        throw std::invalid_argument("restricted_env_regular: need p^rank_g >= 2 simples");
    if (num_positive_roots > dim_g)
        throw std::invalid_argument("restricted_env_regular: p^N must divide p^dim_g");
    Int gamma = pow_ui(p, num_positive_roots);
    Int d = pow_ui(p, dim_g);
    Int simples = pow_ui(p, rank_g);
    if (!simples.fits_ulong_p())
        throw std::invalid_argument("restricted_env_regular: p^rank_g too large");
    return theorem1_closed_form(gamma, d, simples.get_ui());
}

ModuleClass module_class_by_label(const CatalogEntry& entry, const std::string& label) {
    const std::size_t n = entry.datum.num_simples;
    if (label == "regular") return regular_class(entry.datum);
    for (std::size_t i = 0; i < entry.simple_labels.size(); ++i)
        if (entry.simple_labels[i] == label) {
            ModuleClass v;
            v.multiplicities.assign(n, 0);
            v.multiplicities[i] = 1;
            return v;
        }
    // P<i> (1-based) = column i of the Cartan matrix.
    if (label.size() > 1 && label[0] == 'P' && entry.datum.cartan) {
        bool digits = true;
        for (std::size_t i = 1; i < label.size(); ++i)
            digits = digits && label[i] >= '0' && label[i] <= '9';
        if (digits) {
            std::size_t idx = std::stoul(label.substr(1));
            if (idx >= 1 && idx <= n) {
                ModuleClass v;
                v.multiplicities = entry.datum.cartan->column(idx - 1);
                return v;
            }
        }
    }
    throw std::invalid_argument("unknown module label '" + label + "' for entry '" +
                                entry.key + "'");
}

ValidationReport validate_entry(const CatalogEntry& entry) {
    ValidationReport report = validate(entry.datum, expected_dimension(entry));
    if (!entry.brauer) return report;

    const BrauerTable& table = *entry.brauer;
    ValidationReport table_report = validate(table);
    report.checks.insert(report.checks.end(), table_report.checks.begin(),
                         table_report.checks.end());

    report.add("table size matches datum", table.num_classes() == entry.datum.num_simples);
    if (table.num_classes() != entry.datum.num_simples) return report;

    report.add("identity column equals s", table.dims() == entry.datum.simple_dims);
    report.add("gcd(p) equals Sylow order", sylow_gcd_check(table, entry.datum));
    try {
        report.add("fusion derived from characters",
                   fusion_from_brauer(table) == entry.datum.fusion);
    } catch (const Error& e) {
        report.add("fusion derived from characters", false, e.what());
    }
    return report;
}

}  // namespace critgroup
