#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace eulergraph {

// FNV-1a, 64-bit. Stable across platforms; used for basis fingerprints and
// input digests in reports, never for security.
inline uint64_t fnv1a64(std::string_view data) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
    static const char* digits = "0123456789abcdef";
    uint64_t h = fnv1a64(data);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[size_t(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return s;
}

}  // namespace eulergraph
