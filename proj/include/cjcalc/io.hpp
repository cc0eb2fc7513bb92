#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "cjcalc/character.hpp"
#include "cjcalc/decomp.hpp"
#include "cjcalc/pims.hpp"
#include "cjcalc/rootdata.hpp"

namespace cjcalc {

using Json = nlohmann::json;

/// Name of the environment variable holding the default data directory.
inline constexpr const char* kDataDirEnv = "CJCALC_DATA_DIR";

Json weight_to_json(const Weight& w);
/// Expects an array of `rank` integers; `what` names the field in errors.
Weight weight_from_json(const Json& j, std::size_t rank, const std::string& what);

/// {"rank": l, "entries": [{"weight": [...], "mult": n}, ...]}, sorted by weight.
Json character_to_json(const Character& chi);
Character character_from_json(const Json& j, std::size_t rank);

/// {"rank": l, "matrix": [[...]]} or {"type": "A1" | "A2" | "B2" | "G2"}.
RootSystemPtr root_system_from_json(const Json& j);

/// A path as given if it exists, otherwise looked up under `data_dir`
/// (when set) and then under $CJCALC_DATA_DIR.
std::filesystem::path resolve_data_path(const std::string& path, const std::optional<std::string>& data_dir = std::nullopt);

Json read_json_file(const std::filesystem::path& path);

/// Decomposition file: {"type", "p", "rows": [{"lambda", "factors": [{"mu", "mult"}]}]}.
/// The file's type must match `rs`.
ProviderPtr provider_from_json(const Json& j, const RootSystemPtr& rs);

/// Q-hat file: {"type", "p", "r", "entries": [{"lambda", "qhat": <character>}]}.
QrDataPtr qrdata_from_json(const Json& j, const RootSystemPtr& rs);
Json qrdata_to_json(const QrData& data);

Json table_to_json(const MultiplicityTable& table);

}  // namespace cjcalc
