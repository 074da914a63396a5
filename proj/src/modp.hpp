#pragma once

#include "wk/curve.hpp"
#include "wk/kernel.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace wk::modp {

// Homomorphic image of the sigma walk in F_p, mirroring the canonical-form
// branches of the exact iteration. A step is taken only when the divisor it
// would canonicalize by has a nonzero residue; then the residue walk is the
// exact walk reduced mod p, so "no return to the seed within n_max" rules out
// exact closure within n_max. Residue collisions can still fabricate a
// candidate period, which callers confirm with exact arithmetic.

/// index-th prime of a fixed descending sequence of 61-bit primes with
/// p = 3 mod 4 (so square roots are a single power). Thread-safe.
std::uint64_t scan_prime(size_t index);

/// Number of primes tried before giving up on the residue fast path. A scan
/// aborts for a given prime when the seed's radicand is a non-residue or some
/// canonicalization divisor reduces to zero, so a handful of retries makes a
/// full abort essentially impossible.
inline constexpr size_t kMaxScanPrimes = 32;

struct ScanResult {
    enum class Status { Aborted, NoClosure, Candidate } status = Status::Aborted;
    long period = 0;
};

/// First return of the mirrored sigma walk to the reduced seed, scanning up
/// to n_max steps modulo the given prime.
ScanResult order_scan(const BihomKernel& k, const CurvePointQuad& seed, long n_max,
                      std::uint64_t p);

} // namespace wk::modp
