#include "critgroup/json_io.hpp"

#include <stdexcept>

namespace nlohmann {

void adl_serializer<critgroup::Int>::to_json(json& j, const critgroup::Int& x) {
    if (x.fits_slong_p())
        j = static_cast<std::int64_t>(x.get_si());
    else
        j = x.get_str();
}

void adl_serializer<critgroup::Int>::from_json(const json& j, critgroup::Int& x) {
    if (j.is_number_integer()) {
        x = critgroup::Int(std::to_string(j.get<std::int64_t>()));
    } else if (j.is_number_unsigned()) {
        x = critgroup::Int(std::to_string(j.get<std::uint64_t>()));
    } else if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (mpz_set_str(x.get_mpz_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("not a decimal integer: \"" + s + "\"");
    } else {
        throw std::invalid_argument("expected an integer or decimal string");
    }
}

}  // namespace nlohmann

namespace critgroup {

void to_json(json& j, const IntMatrix& m) {
    j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c));
        j.push_back(std::move(row));
    }
}

void from_json(const json& j, IntMatrix& m) {
    std::vector<std::vector<Int>> rows;
    for (const auto& jrow : j) rows.push_back(jrow.get<std::vector<Int>>());
    m = IntMatrix::from_rows(std::move(rows));
}

void to_json(json& j, const ModuleClass& v) { j = json{{"c", v.multiplicities}}; }

void from_json(const json& j, ModuleClass& v) {
    v.multiplicities = j.at("c").get<std::vector<Int>>();
}

void to_json(json& j, const RepDatum& rep) {
    j = json{{"label", rep.label},
             {"num_simples", rep.num_simples},
             {"trivial_index", rep.trivial_index},
             {"s", rep.simple_dims},
             {"p", rep.projective_dims},
             {"cartan", nullptr},
             {"fusion", rep.fusion},
             {"dual_permutation", nullptr}};
    if (rep.cartan) j["cartan"] = *rep.cartan;
    if (!rep.dual_permutation.empty()) j["dual_permutation"] = rep.dual_permutation;
}

void from_json(const json& j, RepDatum& rep) {
    rep = RepDatum{};
    rep.label = j.value("label", std::string{});
    rep.num_simples = j.at("num_simples").get<std::size_t>();
    rep.trivial_index = j.at("trivial_index").get<std::size_t>();
    rep.simple_dims = j.at("s").get<std::vector<Int>>();
    rep.projective_dims = j.at("p").get<std::vector<Int>>();
    if (j.contains("cartan") && !j.at("cartan").is_null())
        rep.cartan = j.at("cartan").get<IntMatrix>();
    rep.fusion = j.at("fusion").get<std::vector<IntMatrix>>();
    if (j.contains("dual_permutation") && !j.at("dual_permutation").is_null())
        rep.dual_permutation = j.at("dual_permutation").get<std::vector<std::size_t>>();
}

void to_json(json& j, const BrauerTable& table) {
    j = json{{"p", table.characteristic},
             {"group_order", table.group_order},
             {"sylow_order", table.sylow_order},
             {"class_labels", table.class_labels},
             {"identity_class", table.identity_class},
             {"chi_simple", table.chi}};
}

void from_json(const json& j, BrauerTable& table) {
    table = BrauerTable{};
    table.characteristic = j.at("p").get<long>();
    table.group_order = j.at("group_order").get<Int>();
    table.sylow_order = j.at("sylow_order").get<Int>();
    table.class_labels = j.at("class_labels").get<std::vector<std::string>>();
    table.identity_class = j.at("identity_class").get<std::size_t>();
    table.chi = j.at("chi_simple").get<IntMatrix>();
}

void to_json(json& j, const CatalogEntry& entry) {
    j = json{{"key", entry.key},
             {"provenance", entry.provenance},
             {"simple_labels", entry.simple_labels},
             {"datum", entry.datum},
             {"brauer", nullptr}};
    if (entry.brauer) j["brauer"] = *entry.brauer;
}

void from_json(const json& j, CatalogEntry& entry) {
    entry = CatalogEntry{};
    entry.key = j.value("key", std::string{});
    entry.provenance = j.value("provenance", std::string{});
    if (j.contains("simple_labels") && !j.at("simple_labels").is_null())
        entry.simple_labels = j.at("simple_labels").get<std::vector<std::string>>();
    entry.datum = j.at("datum").get<RepDatum>();
    if (j.contains("brauer") && !j.at("brauer").is_null())
        entry.brauer = j.at("brauer").get<BrauerTable>();
}

void to_json(json& j, const AbelianGroupStructure& g) {
    j = json{{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"display", g.to_string()}};
}

void to_json(json& j, const SmithDecomposition& snf) {
    j = json{{"diagonal", snf.diagonal}, {"rank", snf.rank}, {"u", snf.u}, {"v", snf.v}};
}

void to_json(json& j, const ValidationReport& report) {
    j = json::array();
    for (const ValidationCheck& c : report.checks)
        j.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
}

}  // namespace critgroup
