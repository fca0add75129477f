#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "critgroup/cli.hpp"

using critgroup::JobSpec;

namespace {

void add_source_flags(CLI::App* cmd, JobSpec& spec) {
    auto* builtin = cmd->add_option("--builtin", spec.builtin,
                                    "builtin key (s4p2, s4p3, s4p0, s5p3, taft, radford)");
    auto* input = cmd->add_option("--input", spec.input_path, "JSON datum or catalog entry");
    builtin->excludes(input);
    cmd->add_option("--n", spec.param_n, "parameter n for taft/radford");
    cmd->add_option("--m", spec.param_m, "parameter m for taft/radford");
}

void add_format_flag(CLI::App* cmd, JobSpec& spec) {
    cmd->add_option("--format", "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->each([&spec](const std::string& v) { spec.json_output = (v == "json"); });
}

void add_module_flag(CLI::App* cmd, JobSpec& spec) {
    cmd->add_option("--module", spec.module_spec,
                    "module class: label (D31, P4, regular) or multiplicities (0,1,0,0)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"critical groups of modules over finite-dimensional Hopf algebras"};
    app.require_subcommand(1);

    JobSpec spec;
    if (const char* env = std::getenv("CRITGROUP_STEP_LIMIT")) {
        char* end = nullptr;
        unsigned long long limit = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && limit > 0) spec.step_limit = limit;
    }

    auto* compute = app.add_subcommand(
        "compute", "McKay matrix, Laplacian, Smith form and K(V) with cross-checked cardinalities");
    add_source_flags(compute, spec);
    add_module_flag(compute, spec);
    add_format_flag(compute, spec);
    compute->callback([&] { spec.command = JobSpec::Command::compute; });

    auto* regular = app.add_subcommand("regular", "K(A) of the regular module: closed form vs Smith form");
    add_source_flags(regular, spec);
    add_format_flag(regular, spec);
    regular->callback([&] { spec.command = JobSpec::Command::regular; });

    auto* verify = app.add_subcommand("verify", "run all structural identities on a datum");
    add_source_flags(verify, spec);
    add_format_flag(verify, spec);
    verify->callback([&] { spec.command = JobSpec::Command::verify; });

    auto* theorem4 = app.add_subcommand("theorem4",
                                        "five equivalent finiteness/richness conditions, decided independently");
    add_source_flags(theorem4, spec);
    add_module_flag(theorem4, spec);
    add_format_flag(theorem4, spec);
    theorem4->callback([&] { spec.command = JobSpec::Command::theorem4; });

    auto* chipfire = app.add_subcommand("chipfire", "chip-firing stabilization and recurrence test");
    add_source_flags(chipfire, spec);
    add_module_flag(chipfire, spec);
    chipfire->add_option("--config", spec.chip_config,
                         "start configuration (comma separated; default: diagonal of reduced Laplacian)");
    add_format_flag(chipfire, spec);
    chipfire->callback([&] { spec.command = JobSpec::Command::chipfire; });

    auto* catalog = app.add_subcommand("catalog", "list bundled data, or dump one entry as JSON");
    catalog->add_option("--key", spec.catalog_key, "dump this entry as JSON");
    add_format_flag(catalog, spec);
    catalog->callback([&] { spec.command = JobSpec::Command::catalog; });

    CLI11_PARSE(app, argc, argv);
    return critgroup::run(spec, std::cout, std::cerr);
}
