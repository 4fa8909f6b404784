#pragma once

#include <map>
#include <string>
#include <vector>

#include "rmc/rts.hpp"

namespace rmc {

// Built-in benchmark models, keyed by the names the command line accepts.
// Each model bundles its unsafe sets; deadlock sets are computed from the
// step relation (complement of the source projection) with the length
// guards documented per model in the exported files.
[[nodiscard]] std::map<std::string, Rts> catalog();

[[nodiscard]] std::vector<std::string> catalog_names();

// Lookup by name; throws ValidationError for unknown names.
[[nodiscard]] Rts catalog_model(const std::string& name);

// Shipped two-row certificates for the cache models: wherever two cells
// meet, one of the crossed letter tests must fail, so no two cells can both
// hold an owned copy.
[[nodiscard]] Certificate berkeley_certificate();
[[nodiscard]] Certificate dragon_certificate();

}  // namespace rmc
