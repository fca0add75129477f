#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critgroup/brauer.hpp"
#include "critgroup/rep_data.hpp"

namespace critgroup {

/// A bundled, validated representation datum with its sources.
struct CatalogEntry {
    std::string key;
    std::string provenance;
    std::vector<std::string> simple_labels;  // display names for --module
    RepDatum datum;
    std::optional<BrauerTable> brauer;
};

}  // namespace critgroup
