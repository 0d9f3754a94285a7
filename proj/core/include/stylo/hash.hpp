#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace stylo {

// FNV-1a, used for content fingerprints (word lists, corpora, configs).
// Not cryptographic; collisions only matter for accidental drift detection.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value);

}  // namespace stylo
