// Copyright 2026 The circumlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCUMLAB_RNG_HPP_
#define CIRCUMLAB_RNG_HPP_

#include <cstdint>
#include <random>

namespace circumlab {

using Rng = std::mt19937_64;

// Purpose tags keep streams for different uses of one master seed apart.
enum class Stream : std::uint64_t {
  kGraph = 0x67726170ULL,
  kFlip = 0x666c6970ULL,
  kReveal = 0x72657665ULL,
  kBins = 0x62696e73ULL,
  kFixture = 0x66697874ULL,
  kBootstrap = 0x626f6f74ULL,
  kSample = 0x73616d70ULL,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for trial `index` of stream `tag` under `master`.
inline std::uint64_t derive_seed(std::uint64_t master, Stream tag,
                                 std::uint64_t index) {
  std::uint64_t h = splitmix64(master);
  h = splitmix64(h ^ static_cast<std::uint64_t>(tag));
  return splitmix64(h ^ (index * 0xd1342543de82ef95ULL));
}

inline Rng make_rng(std::uint64_t master, Stream tag, std::uint64_t index) {
  return Rng(derive_seed(master, tag, index));
}

// Uniform double in [0, 1) built from the top 53 bits. Unlike
// std::uniform_real_distribution this is identical on every standard library.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace circumlab

#endif  // CIRCUMLAB_RNG_HPP_
