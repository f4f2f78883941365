#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace errt {

using Rng = std::mt19937_64;

// Splitting rule for deriving independent sub-streams from one global seed:
// stream(seed, tag) seeds an mt19937_64 with splitmix64(seed XOR fnv1a64(tag)).
uint64_t fnv1a64(std::string_view s);
uint64_t splitmix64(uint64_t x);
Rng seed_stream(uint64_t seed, std::string_view tag);

}  // namespace errt
