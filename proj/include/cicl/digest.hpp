#pragma once

#include <string>
#include <string_view>

namespace cicl {

// Lowercase hex SHA-256 of the input bytes. Cache keys and prompt digests
// are built on this.
std::string sha256_hex(std::string_view bytes);

}  // namespace cicl
