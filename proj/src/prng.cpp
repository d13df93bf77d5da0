#include "icrf/prng.hpp"

namespace icrf {

namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85u;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kPhiloxM4x32A, ctr[0], lo0, hi0);
    mul_hi_lo(kPhiloxM4x32B, ctr[2], lo1, hi1);
    const std::uint32_t out[4] = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    ctr[0] = out[0];
    ctr[1] = out[1];
    ctr[2] = out[2];
    ctr[3] = out[3];
}

}  // namespace

PhiloxBlock philox4x32(std::uint64_t seed, std::uint64_t index, std::uint32_t stream,
                       std::uint32_t block) {
    std::uint32_t key[2] = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    PhiloxBlock b;
    b.v[0] = static_cast<std::uint32_t>(index);
    b.v[1] = static_cast<std::uint32_t>(index >> 32);
    b.v[2] = stream;
    b.v[3] = block;
    for (int round = 0; round < 10; ++round) {
        philox_round(b.v, key);
        key[0] += kPhiloxW32A;
        key[1] += kPhiloxW32B;
    }
    return b;
}

double UniformStream::next() {
    if (phase_ == 1) {
        phase_ = 0;
        return pending_;
    }
    const PhiloxBlock b = philox4x32(seed_, index_, stream_, block_++);
    const std::uint64_t x = (static_cast<std::uint64_t>(b.v[0]) << 32) | b.v[1];
    const std::uint64_t y = (static_cast<std::uint64_t>(b.v[2]) << 32) | b.v[3];
    pending_ = static_cast<double>(y >> 11) * 0x1.0p-53;
    phase_ = 1;
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

}  // namespace icrf
