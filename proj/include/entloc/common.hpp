#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace entloc {

using cplx = std::complex<double>;

// Hard ceiling on qubit counts accepted by state constructors.  Default 20;
// the ENTLOC_CAPACITY environment variable can raise or lower it, clamped to
// [2, 24].  Read once per process.
int capacity();

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

// Throws std::invalid_argument unless 1 <= n <= capacity().
void check_qubit_count(int n, const char* where);

}  // namespace entloc
