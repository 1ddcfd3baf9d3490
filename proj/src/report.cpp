#include "forest/report.hpp"

#include <cstdio>

namespace forest {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string digest_hex(std::string_view bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

nlohmann::json envelope(const std::string& command, const std::string& input_digest,
                        nlohmann::json result) {
  return {{"command", command},
          {"input_digest", input_digest},
          {"tool_version", kToolVersion},
          {"result", std::move(result)}};
}

}  // namespace forest
