#pragma once

#include <cstdint>
#include <initializer_list>

#include "rankcrit/rat.hpp"

namespace rankcrit {

/// Deterministic 64-bit generator (splitmix64). All randomness in the
/// library flows through explicit seeds of this type, so runs are
/// reproducible across platforms and thread counts.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next();

    // Uniform in [lo, hi], inclusive, via rejection (unbiased).
    int64_t uniform_int(int64_t lo, int64_t hi);

    // Uniform integer in [-height, height] as a rational.
    Rat entry(int64_t height) { return Rat((long long)uniform_int(-height, height)); }

private:
    uint64_t state_;
};

/// Derives an independent sub-seed from a base seed and a task tag path,
/// e.g. derive_seed(seed, {ROW_TAG, row_index}). The derivation is a fixed
/// splitmix64 chain, so parallel and serial schedules see identical streams.
uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> tags);

/// Deterministic 62-bit prime derived from a seed (for modular screening).
uint64_t random_prime62(uint64_t seed);

bool is_prime_u64(uint64_t n);

}  // namespace rankcrit
