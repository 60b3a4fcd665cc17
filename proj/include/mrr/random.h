#ifndef MRR_RANDOM_H_
#define MRR_RANDOM_H_

#include <cstdint>

namespace mrr {

// splitmix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Counter-based stream: every value is a pure function of
// (seed, x, y, sample, dimension), so results do not depend on the order in
// which pixels are visited.
class PixelRng {
 public:
  constexpr PixelRng(std::uint64_t seed, int x, int y)
      : key_(Mix64(Mix64(Mix64(seed) ^ static_cast<std::uint32_t>(x)) ^
                   (std::uint64_t(static_cast<std::uint32_t>(y)) << 32))) {}

  // Uniform in [0, 1).
  double Uniform(int sample, int dimension) const {
    const std::uint64_t h =
        Mix64(key_ ^ Mix64((std::uint64_t(static_cast<std::uint32_t>(sample)) << 8) |
                           static_cast<std::uint32_t>(dimension & 0xff)));
    return static_cast<double>(h >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

}  // namespace mrr

#endif  // MRR_RANDOM_H_
