#pragma once

/**
 * Seeded pseudo-random source with a platform-independent output stream.
 *
 * The engine is std::mt19937_64, whose output sequence is fixed by the
 * standard. The derived draws (bounded integers, doubles, shuffles, subset
 * sampling) are implemented here rather than through <random>
 * distributions, which are implementation-defined. Bump kRngName whenever
 * any derivation below changes.
 */

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace cliquedec {

inline constexpr std::string_view kRngName = "mt19937_64+cliquedec-draws/v1";

// SplitMix64 finalizer, used to derive independent per-trial streams.
constexpr auto mix_seed(std::uint64_t x) -> std::uint64_t {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr auto derive_seed(std::uint64_t master, std::uint64_t stream) -> std::uint64_t {
  return mix_seed(mix_seed(master) ^ mix_seed(stream + 0x632BE59BD9B4E019ULL));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  auto next() -> std::uint64_t { return engine_(); }

  // Uniform on [0, bound), unbiased by rejection.
  auto below(std::uint64_t bound) -> std::uint64_t {
    assert(bound > 0);
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t x = next();
    while (x < threshold) x = next();
    return x % bound;
  }

  // Uniform on [0, 1) with 53 random bits.
  auto uniform01() -> double { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  auto shuffle(std::span<T> items) -> void {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Uniform k-subset of {0, ..., n-1} (Floyd's algorithm), sorted.
  auto sample_subset(int n, int k) -> std::vector<int> {
    assert(k >= 0 && k <= n);
    std::vector<int> chosen;
    chosen.reserve(k);
    for (int j = n - k; j < n; ++j) {
      const int t = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
        chosen.push_back(t);
      else
        chosen.push_back(j);
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cliquedec
