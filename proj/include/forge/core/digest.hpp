#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace forge::digest {

// Hex-encoded SHA-256 of the raw bytes.
std::string sha256_hex(std::string_view bytes);

// Digest over an ordered field sequence. Each field is length-prefixed so
// ("ab","c") and ("a","bc") never collide.
std::string sha256_fields(const std::vector<std::string_view>& fields);

// First 8 bytes of sha256_fields, little-endian. Used to fan a root seed out
// to named stages and per-task seeds.
std::uint64_t derive_seed(std::uint64_t root, std::string_view name);

std::string sha256_file(const std::string& path);

} // namespace forge::digest
