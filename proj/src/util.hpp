#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <thread>

namespace fuzzytopo {

// Derives an independent stream seed. splitmix64 finalizer, so nearby
// (seed, stream) pairs land far apart.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG wrapper. mt19937_64 is fully specified by the standard,
// and the [0,1) mapping avoids std::uniform_real_distribution, whose output
// is implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer on [lo, hi], inclusive.
  int uniform_int(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

// Worker count for parallel sections. FUZZYTOPO_THREADS caps it; 0 or unset
// means auto.
inline int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int autov = hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
  if (const char* env = std::getenv("FUZZYTOPO_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(v);
  }
  return autov;
}

}  // namespace fuzzytopo
