#pragma once

#include <cstdint>
#include <string>

namespace specdom {

/// FNV-1a, 64-bit. Used to fingerprint domains and derivation histories
/// inside certificates; collision resistance is not a goal — tampering
/// is caught by structural comparison, the digest is a fast identity
/// check and a stable cross-reference between documents.
struct Fnv1a {
    std::uint64_t state = 1469598103934665603ull;

    void bytes(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            state ^= p[i];
            state *= 1099511628211ull;
        }
    }
    void str(const std::string& s) { bytes(s.data(), s.size()); }
    std::uint64_t value() const { return state; }
};

inline std::uint64_t fnv1a(const std::string& s) {
    Fnv1a f;
    f.str(s);
    return f.value();
}

/// Canonical hex rendering used wherever a digest is serialized.
std::string digest_hex(std::uint64_t d);

/// Inverse of digest_hex; throws std::invalid_argument on malformed input.
std::uint64_t digest_parse(const std::string& s);

}  // namespace specdom
