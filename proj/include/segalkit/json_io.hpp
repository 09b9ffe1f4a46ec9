#pragma once

#include <filesystem>

#include "segalkit/hypermoment.hpp"

namespace segal {

json sset_to_json(const TruncSSet& S);
TruncSSet sset_from_json(const json& j);

json fincat_to_json(const FinCat& C);
FinCat fincat_from_json(const json& j);

json opcat_to_json(const UnaryOpCat& O);
UnaryOpCat opcat_from_json(const json& j);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// save(load(file)) is byte-identical for files in this form.
std::string dump_canonical(const json& j);
void save_json(const std::filesystem::path& path, const json& j);
json load_json(const std::filesystem::path& path);

}  // namespace segal
