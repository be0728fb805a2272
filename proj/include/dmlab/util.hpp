#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace dmlab {

using complexd = std::complex<double>;

// Global cap on worker threads used by parallel_for (set from the CLI).
int thread_cap();
void set_thread_cap(int n);

// Runs body(i) for i in [0, count). Results must be written to
// caller-owned slots indexed by i so the outcome is independent of
// the thread count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

// Pairwise tree reduction; summation order is fixed regardless of how
// the contributions were produced.
template <typename T>
T pairwise_sum(std::vector<T> v) {
  if (v.empty()) return T{};
  std::size_t n = v.size();
  while (n > 1) {
    std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) v[i] += v[i + half];
    n = half;
  }
  return v[0];
}

// Pairwise reduction of equally sized vectors (axpy-style accumulation).
template <typename T>
std::vector<T> pairwise_sum_vectors(std::vector<std::vector<T>> vs) {
  if (vs.empty()) return {};
  std::size_t n = vs.size();
  while (n > 1) {
    std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i + half < n; ++i) {
      auto& a = vs[i];
      const auto& b = vs[i + half];
      for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
    }
    n = half;
  }
  return std::move(vs[0]);
}

// splitmix64: deterministic stream of per-sample seeds and uniforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace dmlab
