#ifndef GPENG_RNG_HPP
#define GPENG_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace gpeng {

/// Seeded uniform chooser. Draws raw mt19937_64 words and reduces them by
/// rejection sampling, so the same seed yields the same choice sequence on
/// every platform (std::uniform_int_distribution does not promise that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform value in [0, n); n = 0 is treated like n = 1.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) {
            return 0;
        }
        const std::uint64_t top = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t limit = top - top % n;
        for (;;) {
            std::uint64_t x = engine_();
            if (x < limit) {
                return x % n;
            }
        }
    }

    /// Uniform value in [lo, hi], inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    bool chance(std::uint64_t num, std::uint64_t den) {
        return below(den) < num;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace gpeng

#endif // GPENG_RNG_HPP
