#include "dsbp/json_io.hpp"

#include <fstream>

#include "dsbp/errors.hpp"

namespace dsbp {

namespace {

Size size_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Size(Integer(std::to_string(j.get<long long>())));
  throw FormatError("sizes must be strings (\"0.137\" or \"3/2\") or integers, got " + j.dump());
}

std::size_t count_from_json(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("instance must be a JSON object");
  std::size_t k = count_from_json(j, "k");
  std::size_t bins = count_from_json(j, "bins");
  if (!j.contains("items") || !j.at("items").is_array()) {
    throw FormatError("field 'items' must be an array");
  }
  std::vector<Size> items;
  for (const auto& item : j.at("items")) items.push_back(size_from_json(item));
  try {
    return Instance(std::move(items), bins, k);
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

nlohmann::json instance_to_json(const Instance& inst) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& s : inst.items()) items.push_back(to_string(s));
  return {{"k", inst.k()}, {"bins", inst.bins()}, {"items", items}};
}

Packing packing_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("bins") || !j.at("bins").is_array()) {
    throw FormatError("packing must be an object with a 'bins' array");
  }
  const auto& bins = j.at("bins");
  Packing pack(bins.size());
  for (std::size_t b = 0; b < bins.size(); ++b) {
    if (!bins[b].is_array()) throw FormatError("bin " + std::to_string(b) + " must be an array");
    for (const auto& entry : bins[b]) {
      if (!entry.is_object() || !entry.contains("item") || !entry.contains("size")) {
        throw FormatError("packing entries need 'item' and 'size'");
      }
      std::size_t item = count_from_json(entry, "item");
      pack.add(b, item, size_from_json(entry.at("size")));
    }
  }
  return pack;
}

nlohmann::json packing_to_json(const Packing& pack) {
  nlohmann::json bins = nlohmann::json::array();
  for (BinId b = 0; b < pack.bins(); ++b) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& p : pack.bin(b)) {
      parts.push_back({{"item", p.item}, {"size", to_string(p.size)}});
    }
    bins.push_back(parts);
  }
  return {{"bins", bins}};
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw FormatError("write failed: " + path.string());
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

Packing load_packing(const std::filesystem::path& path) {
  return packing_from_json(read_json_file(path));
}

}  // namespace dsbp
