#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace critgroup {

/// One CLI invocation. Exactly one of builtin / input_path must be set for
/// commands that need a datum; module_spec holds a display label ("D31",
/// "P4", "regular") or a comma-separated multiplicity vector ("0,1,0,0").
struct JobSpec {
    enum class Command { compute, regular, verify, theorem4, chipfire, catalog };

    Command command = Command::catalog;
    std::optional<std::string> builtin;       // catalog key, or "taft"/"radford"
    std::optional<std::size_t> param_n;       // --n for taft/radford
    std::optional<std::size_t> param_m;       // --m
    std::optional<std::string> input_path;    // JSON file with a datum or entry
    std::optional<std::string> module_spec;
    std::optional<std::string> chip_config;   // start configuration for chipfire
    std::optional<std::string> catalog_key;   // dump one entry as JSON
    bool json_output = false;
    std::uint64_t step_limit = 10'000'000;
};

/// Exit codes: 0 success, 1 validation failure, 2 malformed input,
/// 3 internal cross-check disagreement.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace critgroup
