#pragma once

// File formats:
//   instance: {"k": 2, "bins": 3, "items": ["0.137", "3/2", "4"]}
//   packing:  {"bins": [[{"item": 0, "size": "3/2"}, ...], ...]}
// Sizes are decimal or p/q strings and are parsed exactly.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "dsbp/instance.hpp"

namespace dsbp {

Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);

Packing packing_from_json(const nlohmann::json& j);
nlohmann::json packing_to_json(const Packing& pack);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

Instance load_instance(const std::filesystem::path& path);
Packing load_packing(const std::filesystem::path& path);

}  // namespace dsbp
