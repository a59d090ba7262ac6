#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace insdel {

// Every random choice in the library flows through this wrapper around
// std::mt19937_64, keyed by a single per-run seed. The raw engine output is
// fully specified by the standard; the helpers below avoid
// std::uniform_int_distribution, whose mapping is implementation-defined, so
// artifacts built from the same seed are byte-identical across platforms.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform draw from [0, n) by rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        assert(n > 0);
        const std::uint64_t min = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= min) return r % n;
        }
    }

    // Child seed for an independent sub-search.
    std::uint64_t fork() { return engine_(); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace insdel
