#ifndef COPQ_RNG_HPP
#define COPQ_RNG_HPP

#include <cstdint>
#include <random>

namespace copq {

// splitmix64 finalizer; used to derive independent seed streams so that
// e.g. trial k and its warm start never share generator state.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return mix_seed(base ^ mix_seed(stream));
}

// Seeded generator with hand-rolled draws. std::uniform_*_distribution is
// implementation-defined, so reports would not be reproducible across
// standard libraries; mt19937_64 itself is fully specified.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi] inclusive.
    int next_int(int lo, int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(gen_() % span);
    }

    /// +1 or -1 with equal probability.
    int next_sign() { return (gen_() & 1u) ? 1 : -1; }

private:
    std::mt19937_64 gen_;
};

} // namespace copq

#endif
