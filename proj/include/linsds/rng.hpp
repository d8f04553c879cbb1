#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace linsds {

// Seeded generator for reproducible instance generation. mt19937_64 has a
// standardized output sequence, and we avoid std distributions (whose
// mappings are implementation-defined), so a seed yields the same instances
// on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound). bound must be positive. Modulo bias is
    // irrelevant at the tiny bounds used here.
    std::size_t below(std::size_t bound) {
        return static_cast<std::size_t>(next() % static_cast<std::uint64_t>(bound));
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::size_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1u) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace linsds
