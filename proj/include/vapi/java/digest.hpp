#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace vapi {

// 128-bit content digest. Stable across runs and platforms (no per-process
// seeding, explicit little-endian block reads).
struct Digest128 {
    uint64_t hi = 0;
    uint64_t lo = 0;

    auto operator<=>(const Digest128&) const = default;

    std::string hex() const;
    static Digest128 from_hex(const std::string& s);
};

// MurmurHash3 x64 128-bit over the given bytes, seed 0.
Digest128 digest128(std::string_view data);

} // namespace vapi
