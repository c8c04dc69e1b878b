#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace topo {

// Key order is preserved so exported files and transcripts are byte-stable.
using Json = nlohmann::ordered_json;

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace topo
