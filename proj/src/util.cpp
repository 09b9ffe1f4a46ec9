#include "segalkit/util.hpp"

namespace segal {

std::string encode_list(const std::vector<std::string>& parts) {
  json j = json::array();
  for (const auto& p : parts) j.push_back(p);
  return j.dump();
}

std::vector<std::string> decode_list(const std::string& id) {
  json j = json::parse(id, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw ValidationError("id is not an encoded list: " + id);
  std::vector<std::string> out;
  for (const auto& p : j) {
    if (!p.is_string()) throw ValidationError("encoded list holds a non-string: " + id);
    out.push_back(p.get<std::string>());
  }
  return out;
}

}  // namespace segal
