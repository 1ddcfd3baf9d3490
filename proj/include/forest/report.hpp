#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

namespace forest {

inline constexpr const char* kToolVersion = "1.0.0";

std::uint64_t fnv1a64(std::string_view bytes);
// 16 lowercase hex digits.
std::string digest_hex(std::string_view bytes);

nlohmann::json envelope(const std::string& command, const std::string& input_digest,
                        nlohmann::json result);

}  // namespace forest
