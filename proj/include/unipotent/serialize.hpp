#pragma once

#include "unipotent/balacarter.hpp"

#include <string>
#include <vector>

namespace unipotent {

/// {"factors": [...], "torus_rank", "cartan": rows, "positive_roots":
/// [{"coeffs", "height"}]}. Keys sorted, two-space indent.
std::string root_system_json(const RootSystem& rs);

/// Array of {"diagram", "levi_subset", "parabolic_J", "distinguished",
/// "ht", "name"?}; parabolic_J uses ambient simple-root indices.
std::string catalogue_json(const std::vector<OrbitRecord>& catalogue);

/// J of the record's parabolic, mapped back to Sigma(G).
IndexSet ambient_J(const OrbitRecord& rec);

} // namespace unipotent
