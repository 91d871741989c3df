/* Copyright 2026 The POC Tools Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef POC_RNG_HPP
#define POC_RNG_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace poc {

// 64-bit FNV-1a. Used to fold seed components and prompt strings into
// stream keys; not cryptographic.
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

constexpr std::uint64_t fnv1a(std::string_view s,
                              std::uint64_t h = kFnvOffset) {
  for (unsigned char c : s) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

constexpr std::uint64_t fnv1a_u64(std::uint64_t v,
                                  std::uint64_t h = kFnvOffset) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic random stream. Results are identical on every platform;
// std::uniform_*_distribution is deliberately avoided because its output
// is implementation defined.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi] inclusive (hi >= lo). Lemire multiply-shift.
  std::uint64_t next_in_range(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next_u64();  // full 64-bit range
    const unsigned __int128 m =
        static_cast<unsigned __int128>(next_u64()) * span;
    return lo + static_cast<std::uint64_t>(m >> 64);
  }

  // Uniform in [lo, hi] inclusive reals.
  double next_real(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

 private:
  std::uint64_t state_;
};

// Per-sample stream factory. Every random decision in a generation run is
// keyed by (global seed, image id, augmentation index, purpose, attempt),
// so results do not depend on worker scheduling.
class SampleRng {
 public:
  SampleRng(std::uint64_t global_seed, std::string image_id, int augmentation)
      : global_seed_(global_seed),
        image_id_(std::move(image_id)),
        augmentation_(augmentation) {}

  SeedStream stream(std::string_view purpose, std::uint64_t attempt = 0) const {
    return SeedStream(key(purpose, attempt));
  }

  std::uint64_t key(std::string_view purpose, std::uint64_t attempt = 0) const {
    std::uint64_t h = fnv1a_u64(global_seed_);
    h = fnv1a(image_id_, h);
    h = fnv1a_u64(static_cast<std::uint64_t>(augmentation_), h);
    h = fnv1a(purpose, h);
    h = fnv1a_u64(attempt, h);
    // One mixing round so consecutive attempts land far apart.
    std::uint64_t s = h;
    return splitmix64(s);
  }

  std::uint64_t global_seed() const { return global_seed_; }
  const std::string& image_id() const { return image_id_; }
  int augmentation() const { return augmentation_; }

 private:
  std::uint64_t global_seed_;
  std::string image_id_;
  int augmentation_;
};

}  // namespace poc

#endif  // POC_RNG_HPP
