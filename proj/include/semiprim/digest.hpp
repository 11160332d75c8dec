#pragma once

#include <cstdint>
#include <string>
#include <string_view>

/**
 * @file digest.hpp
 * @brief FNV-1a content digests used to fingerprint serialized groups and
 *        tables in reports.
 */

namespace semiprim {

/// 64-bit FNV-1a digest of a byte string.
inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Digest rendered as 16 lowercase hex digits.
inline std::string fnv1a64_hex(std::string_view text) {
  static const char *digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(text);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

} // namespace semiprim
