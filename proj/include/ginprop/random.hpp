#ifndef GINPROP_RANDOM_HPP
#define GINPROP_RANDOM_HPP

#include <cstdint>
#include <random>

namespace ginprop {

// Maps (base seed, stream index) to an independent-looking 64-bit seed
// (splitmix64 finalizer). Used to give every trial its own replayable seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(engine_);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ginprop

#endif
