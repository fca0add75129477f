#include "critgroup/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "critgroup/catalog.hpp"
#include "critgroup/chipfire.hpp"
#include "critgroup/errors.hpp"
#include "critgroup/json_io.hpp"
#include "critgroup/richness.hpp"

namespace critgroup {

namespace {

struct ValidationFailure : Error {
    using Error::Error;
};

CatalogEntry resolve_source(const JobSpec& spec) {
    if (spec.builtin && spec.input_path)
        throw std::invalid_argument("give either --builtin or --input, not both");
    if (spec.builtin) {
        const std::string& key = *spec.builtin;
        if (key == "taft" || key == "radford") {
            if (!spec.param_n || !spec.param_m)
                throw std::invalid_argument("--builtin " + key + " needs --n and --m");
            return key == "taft" ? taft(*spec.param_n, *spec.param_m)
                                 : radford(*spec.param_n, *spec.param_m);
        }
        return group_algebra(key);
    }
    if (!spec.input_path) throw std::invalid_argument("no input: give --builtin or --input");

    std::ifstream file(*spec.input_path);
    if (!file) throw std::invalid_argument("cannot open input file '" + *spec.input_path + "'");
    json j = json::parse(file);
    CatalogEntry entry;
    if (j.contains("datum")) {
        entry = j.get<CatalogEntry>();
    } else {
        entry.datum = j.get<RepDatum>();
        entry.key = entry.datum.label.empty() ? *spec.input_path : entry.datum.label;
    }
    ValidationReport report = validate_entry(entry);
    if (!report.all_passed()) {
        std::ostringstream msg;
        msg << "input datum failed validation:";
        for (const ValidationCheck& c : report.checks)
            if (!c.passed) msg << " [" << c.name << "]";
        throw ValidationFailure(msg.str());
    }
    return entry;
}

ModuleClass resolve_module(const CatalogEntry& entry, const JobSpec& spec) {
    if (!spec.module_spec) throw std::invalid_argument("this command needs --module");
    const std::string& text = *spec.module_spec;
    if (text.empty()) throw std::invalid_argument("empty --module");
    if (std::isdigit(static_cast<unsigned char>(text[0]))) {
        ModuleClass v;
        std::istringstream in(text);
        std::string part;
        while (std::getline(in, part, ',')) {
            Int x;
            if (mpz_set_str(x.get_mpz_t(), part.c_str(), 10) != 0 || x < 0)
                throw std::invalid_argument("bad multiplicity '" + part + "' in --module");
            v.multiplicities.push_back(x);
        }
        if (v.multiplicities.size() != entry.datum.num_simples)
            throw std::invalid_argument("--module vector length does not match datum");
        return v;
    }
    return module_class_by_label(entry, text);
}

std::string vec_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

void print_header(std::ostream& out, const CatalogEntry& entry) {
    out << "datum: " << entry.datum.label;
    if (!entry.key.empty() && entry.key != entry.datum.label) out << "  [" << entry.key << "]";
    out << "\n  s = " << vec_str(entry.datum.simple_dims)
        << ", p = " << vec_str(entry.datum.projective_dims)
        << ", dim A = " << entry.datum.dimension().get_str()
        << ", gamma = " << entry.datum.projective_gcd().get_str() << "\n";
}

int run_compute(const CatalogEntry& entry, const ModuleClass& v, const JobSpec& spec,
                std::ostream& out) {
    IntMatrix m = mckay_matrix(entry.datum, v);
    IntMatrix l = laplacian(entry.datum, v);
    SmithDecomposition snf = smith_normal_form(l);
    CriticalGroupResult result = critical_group(entry.datum, v);

    std::optional<Int> card_t2, card_gaetz;
    bool consistent = true;
    if (result.finite) {
        card_t2 = theorem2_cardinality(entry.datum, v);
        consistent = consistent && *card_t2 == *result.cardinality;
        if (entry.brauer) {
            try {
                card_gaetz = gaetz_cardinality(*entry.brauer, v);
                consistent = consistent && *card_gaetz == *result.cardinality;
            } catch (const KInfiniteError&) {
                consistent = false;
            }
        }
    }

    if (spec.json_output) {
        json j{{"module_class", v},
               {"dim", class_dimension(entry.datum, v)},
               {"mckay", m},
               {"laplacian", l},
               {"smith_invariants", snf.diagonal},
               {"critical_group", result.group},
               {"finite", result.finite},
               {"consistent", consistent}};
        if (result.cardinality) j["cardinality_snf"] = *result.cardinality;
        if (card_t2) j["cardinality_theorem2"] = *card_t2;
        if (card_gaetz) j["cardinality_gaetz"] = *card_gaetz;
        out << j.dump(2) << "\n";
    } else {
        out << "module class: " << vec_str(v.multiplicities)
            << ", dim V = " << class_dimension(entry.datum, v).get_str() << "\n";
        out << "M_V:\n" << m.to_string() << "\n";
        out << "L_V = nI - M_V:\n" << l.to_string() << "\n";
        out << "Smith invariants of L_V: " << vec_str(snf.diagonal) << "\n";
        out << "K(V) = " << result.group.to_string() << "\n";
        if (result.finite) {
            out << "|K(V)| via Smith form:  " << result.cardinality->get_str() << "\n";
            out << "|K(V)| via eigenvalues: " << card_t2->get_str() << "\n";
            if (card_gaetz)
                out << "|K(V)| via characters:  " << card_gaetz->get_str() << "\n";
            out << "cross-check: " << (consistent ? "OK" : "DISAGREE") << "\n";
        } else {
            out << "K(V) is infinite; the cardinality formulas do not apply\n";
        }
    }
    return consistent ? 0 : 3;
}

int run_regular(const CatalogEntry& entry, const JobSpec& spec, std::ostream& out) {
    const RepDatum& rep = entry.datum;
    Int gamma = rep.projective_gcd();
    Int d = rep.dimension();
    AbelianGroupStructure closed = theorem1_closed_form(gamma, d, rep.num_simples);
    CriticalGroupResult snf_route = critical_group(rep, regular_class(rep));
    bool agree = closed == snf_route.group;

    if (spec.json_output) {
        json j{{"gamma", gamma},
               {"dim", d},
               {"num_simples", rep.num_simples},
               {"closed_form", closed},
               {"smith_route", snf_route.group},
               {"agree", agree}};
        out << j.dump(2) << "\n";
    } else {
        out << "regular module class: " << vec_str(rep.projective_dims) << "\n";
        out << "closed form:  K(A) = " << closed.to_string() << "\n";
        out << "Smith route:  K(A) = " << snf_route.group.to_string() << "\n";
        out << "agreement: " << (agree ? "OK" : "DISAGREE") << "\n";
    }
    return agree ? 0 : 3;
}

int run_verify(const CatalogEntry& entry, const JobSpec& spec, std::ostream& out) {
    ValidationReport report = validate_entry(entry);
    if (spec.json_output) {
        json j{{"key", entry.key}, {"checks", report}, {"all_passed", report.all_passed()}};
        out << j.dump(2) << "\n";
    } else {
        for (const ValidationCheck& c : report.checks) {
            out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) out << "  (" << c.detail << ")";
            out << "\n";
        }
        out << (report.all_passed() ? "all checks passed" : "validation FAILED") << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

int run_theorem4(const CatalogEntry& entry, const ModuleClass& v, const JobSpec& spec,
                 std::ostream& out) {
    Theorem4Report report = theorem4_report(entry.datum, v);
    std::optional<bool> brauer_route;
    if (entry.brauer) brauer_route = brauer_tensor_rich(*entry.brauer, v);

    if (spec.json_output) {
        json j{{"nonsingular_m_matrix", report.nonsingular_m_matrix},
               {"reduced_nonsingular", report.reduced_nonsingular},
               {"nullity_one", report.nullity_one},
               {"k_finite", report.k_finite},
               {"tensor_rich", report.tensor_rich}};
        if (report.witness_t) j["witness_t"] = *report.witness_t;
        if (brauer_route) j["brauer_tensor_rich"] = *brauer_route;
        out << j.dump(2) << "\n";
    } else {
        auto yn = [](bool b) { return b ? "yes" : "no"; };
        out << "(i)   reduced Laplacian is a nonsingular M-matrix: "
            << yn(report.nonsingular_m_matrix) << "\n";
        out << "(ii)  reduced Laplacian is nonsingular:            "
            << yn(report.reduced_nonsingular) << "\n";
        out << "(iii) L_V has nullity one:                         " << yn(report.nullity_one)
            << "\n";
        out << "(iv)  K(V) is finite:                              " << yn(report.k_finite)
            << "\n";
        out << "(v)   V is tensor-rich:                            " << yn(report.tensor_rich)
            << "\n";
        if (report.witness_t)
            out << "witness t (tensor powers up to t suffice): " << *report.witness_t << "\n";
        if (brauer_route)
            out << "Brauer character criterion agrees: "
                << yn(*brauer_route == report.tensor_rich) << "\n";
    }
    if (brauer_route && *brauer_route != report.tensor_rich) return 3;
    return 0;
}

int run_chipfire(const CatalogEntry& entry, const ModuleClass& v, const JobSpec& spec,
                 std::ostream& out) {
    ChipConfig burning = burning_config(entry.datum, v);  // NotSemisimple -> exit 1
    IntMatrix reduced = reduced_laplacian(entry.datum, v);
    if (!is_avalanche_finite(reduced))
        throw ValidationFailure("reduced Laplacian is not avalanche-finite (module not tensor-rich)");

    StabilizeOptions options;
    options.step_limit = spec.step_limit;
    ChipConfig start;
    if (spec.chip_config) {
        std::istringstream in(*spec.chip_config);
        std::string part;
        while (std::getline(in, part, ',')) {
            Int x;
            if (mpz_set_str(x.get_mpz_t(), part.c_str(), 10) != 0 || x < 0)
                throw std::invalid_argument("bad chip count '" + part + "' in --config");
            start.push_back(x);
        }
        if (start.size() != reduced.rows())
            throw std::invalid_argument("--config length does not match reduced Laplacian");
    } else {
        for (std::size_t i = 0; i < reduced.rows(); ++i) start.push_back(reduced(i, i));
    }

    FiringRecord record = stabilize(reduced, start, options);
    bool recurrent = is_recurrent(reduced, burning, record.stable, options);

    if (spec.json_output) {
        json j{{"reduced_laplacian", reduced},
               {"burning_config", burning},
               {"start", start},
               {"stable", record.stable},
               {"firings", record.firings},
               {"stable_is_recurrent", recurrent}};
        out << j.dump(2) << "\n";
    } else {
        out << "reduced Laplacian:\n" << reduced.to_string() << "\n";
        out << "burning configuration: " << vec_str(burning) << "\n";
        out << "start configuration:   " << vec_str(start) << "\n";
        out << "stabilized:            " << vec_str(record.stable) << "\n";
        out << "firings:               " << vec_str(record.firings) << "\n";
        out << "stabilized configuration is recurrent: " << (recurrent ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_catalog(const JobSpec& spec, std::ostream& out) {
    if (spec.catalog_key) {
        CatalogEntry entry = group_algebra(*spec.catalog_key);
        json j = entry;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (spec.json_output) {
        json j = json::array();
        for (const std::string& key : builtin_group_keys()) {
            CatalogEntry entry = group_algebra(key);
            j.push_back(json{{"key", key},
                             {"label", entry.datum.label},
                             {"num_simples", entry.datum.num_simples},
                             {"simple_labels", entry.simple_labels},
                             {"provenance", entry.provenance}});
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const std::string& key : builtin_group_keys()) {
        CatalogEntry entry = group_algebra(key);
        out << key << "  " << entry.datum.label << "  simples: ";
        for (std::size_t i = 0; i < entry.simple_labels.size(); ++i)
            out << (i ? ", " : "") << entry.simple_labels[i];
        out << "\n    " << entry.provenance << "\n";
    }
    out << "parametric: taft --n N --m M (m | n), radford --n N --m M (n even)\n";
    return 0;
}

}  // namespace

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        if (spec.command == JobSpec::Command::catalog) return run_catalog(spec, out);

        CatalogEntry entry = resolve_source(spec);
        if (spec.command == JobSpec::Command::verify) return run_verify(entry, spec, out);
        if (spec.command == JobSpec::Command::regular) {
            print_header(out, entry);
            return run_regular(entry, spec, out);
        }

        ModuleClass v = resolve_module(entry, spec);
        if (!spec.json_output) print_header(out, entry);
        switch (spec.command) {
            case JobSpec::Command::compute:
                return run_compute(entry, v, spec, out);
            case JobSpec::Command::theorem4:
                return run_theorem4(entry, v, spec, out);
            case JobSpec::Command::chipfire:
                return run_chipfire(entry, v, spec, out);
            default:
                throw std::invalid_argument("unhandled command");
        }
    } catch (const EquivalenceViolationError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalConsistencyError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationFailure& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const NotSemisimpleError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace critgroup
