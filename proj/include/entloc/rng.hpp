#pragma once

#include <cstdint>
#include <random>

namespace entloc {

// splitmix64: cheap, well-mixed 64-bit scrambler.  Used to derive independent
// engine seeds from (user seed, stream indices) so that parallel loops can
// give every work item its own generator and stay deterministic under any
// thread count.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return splitmix64(splitmix64(seed ^ splitmix64(a)) ^ splitmix64(~b));
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t a,
                                   std::uint64_t b = 0) {
  return std::mt19937_64(derive_seed(seed, a, b));
}

}  // namespace entloc
