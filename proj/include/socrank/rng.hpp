#pragma once

#include <cstdint>
#include <vector>

namespace socrank {

// splitmix64; deterministic across platforms, good enough for test sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

  bool coin() { return next() & 1; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

// Splittable sub-seed scheme: trial seed = mix of the master seed and the
// per-trial coordinates, so parallel and serial execution agree.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0,
                              std::uint64_t d = 0) {
  Rng r(a ^ 0x6a09e667f3bcc909ull);
  std::uint64_t h = r.next() ^ b;
  Rng r2(h);
  h = r2.next() ^ c;
  Rng r3(h);
  h = r3.next() ^ d;
  Rng r4(h);
  return r4.next();
}

}  // namespace socrank
