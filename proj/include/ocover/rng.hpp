#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace ocover {

// Seeded random source with hand-rolled bounded draws. std::mt19937_64 output
// is specified bit-for-bit, but the std distributions are not, so everything
// that must reproduce across toolchains is derived here from the raw stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform integer in [0, n), unbiased via rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v > limit);
    return v % n;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return unit() < p;
  }

  // Number of positions to skip until the next Bernoulli(p) hit, such that
  // visiting position `cur + gap()` per hit samples each position i.i.d.
  // with probability p. Used to avoid per-position draws in sparse sampling.
  std::uint64_t geometric_gap(double p) {
    // gap ~ Geometric: floor(log(1-u)/log(1-p)) failures before a success
    const double u = unit();
    const double g = std::floor(std::log1p(-u) / std::log1p(-p));
    if (g < 0.0) return 0;
    if (g > 1e18) return static_cast<std::uint64_t>(1e18);
    return static_cast<std::uint64_t>(g);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices from [0, n), in selection order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k && i < n; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(n - i));
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace ocover
