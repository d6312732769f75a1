#pragma once

#include <string>

namespace frameinv {

// SHA-256 of the given bytes, as a lowercase hex string.
std::string sha256_hex(const std::string& bytes);

} // namespace frameinv
