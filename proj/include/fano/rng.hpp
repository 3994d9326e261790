#ifndef FANO_RNG_HPP
#define FANO_RNG_HPP

#include <cstdint>

namespace fano {

// splitmix64; fixed algorithm so seeded runs are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo bias is irrelevant at our moduli sizes.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        Rng r(seed * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL);
        std::uint64_t mixed = r.next() ^ (trial * 0xff51afd7ed558ccdULL + 1);
        return Rng(mixed);
    }

private:
    std::uint64_t state_;
};

} // namespace fano

#endif
