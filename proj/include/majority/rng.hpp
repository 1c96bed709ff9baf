#pragma once

#include <cstdint>
#include <random>

#include "majority/configuration.hpp"

namespace majority {

// SplitMix64; `split(tag)` derives an independent child seed so that every
// randomized component can be reproduced from one 64-bit root seed.
class SeedSplitter {
 public:
  explicit SeedSplitter(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  SeedSplitter split(std::uint64_t tag) const {
    SeedSplitter child(state_ ^ (tag * 0xd1b54a32d192ed03ULL));
    child.next();
    return child;
  }

  std::mt19937_64 engine() { return std::mt19937_64(next()); }

 private:
  std::uint64_t state_;
};

template <class Rng>
Configuration random_configuration(std::size_t n, Rng& rng, double p_one = 0.5) {
  std::bernoulli_distribution coin(p_one);
  Configuration x(n);
  for (std::size_t i = 0; i < n; ++i) x.set(i, coin(rng));
  return x;
}

}  // namespace majority
