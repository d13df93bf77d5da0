#pragma once

#include <cstdint>

// Counter-based random streams (Philox 4x32-10, Salmon et al. SC'11).
// A value is addressed by (seed, index, stream, block) and never depends on
// evaluation order, so Monte Carlo loops can be partitioned across workers
// while producing identical sums for any worker count.

namespace icrf {

struct PhiloxBlock {
    std::uint32_t v[4];
};

PhiloxBlock philox4x32(std::uint64_t seed, std::uint64_t index, std::uint32_t stream,
                       std::uint32_t block);

// Stream of uniform doubles in [0,1), two per Philox block.
class UniformStream {
public:
    UniformStream(std::uint64_t seed, std::uint64_t index, std::uint32_t stream)
        : seed_(seed), index_(index), stream_(stream) {}

    double next();

private:
    std::uint64_t seed_;
    std::uint64_t index_;
    std::uint32_t stream_;
    std::uint32_t block_ = 0;
    int phase_ = 0;       // 0: need a fresh block, 1: second value pending
    double pending_ = 0;
};

}  // namespace icrf
