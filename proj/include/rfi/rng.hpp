#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>

#include <Eigen/Core>

namespace rfi {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Purpose tags keep the draws of different engine stages on disjoint
/// streams even when they share (seed, chain, iteration).
struct StreamPurpose {
  enum : std::uint64_t { Step = 0, Init = 1, Kernel = 2, Probe = 3 };
};

/// Counter-based random stream keyed by (seed, chain, iteration, purpose).
///
/// The state is a pure function of the key, so any draw can be reproduced
/// without shared generator state: chains and threads never contend, and
/// identical keys always yield identical draw sequences. Within one stream
/// the generator advances as a SplitMix64 sequence.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  StreamRng(std::uint64_t seed, std::uint64_t chain, std::uint64_t iteration,
            std::uint64_t purpose = StreamPurpose::Step) {
    std::uint64_t h = detail::mix64(seed + 0x9E3779B97F4A7C15ull);
    h = detail::mix64(h ^ detail::mix64(chain + 0xD1B54A32D192ED03ull));
    h = detail::mix64(h ^ detail::mix64(iteration + 0x8CB92BA72F3D8DD7ull));
    h = detail::mix64(h ^ detail::mix64(purpose + 0xEB44ACCAB455D165ull));
    state_ = h;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    return detail::mix64(z);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal via Box-Muller; the second variate of each pair is
  /// cached so consecutive calls consume draws at half rate.
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  Eigen::VectorXd normal_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

  /// Uniform direction on the unit sphere.
  Eigen::VectorXd unit_vector(Eigen::Index n) {
    while (true) {
      Eigen::VectorXd v = normal_vector(n);
      const double norm = v.norm();
      if (norm > 1e-300) return v / norm;
    }
  }

  /// Uniform draw from the closed ball of the given radius about 0.
  Eigen::VectorXd in_ball(Eigen::Index n, double radius) {
    const double u = uniform01();
    const double r = radius * std::pow(u, 1.0 / static_cast<double>(n));
    return r * unit_vector(n);
  }

  /// Index draw against a cumulative weight table (last entry ~ 1).
  std::size_t index_from_cdf(std::span<const double> cdf) {
    if (cdf.empty()) throw std::invalid_argument("index_from_cdf: empty table");
    const double u = uniform01();
    for (std::size_t i = 0; i + 1 < cdf.size(); ++i)
      if (u < cdf[i]) return i;
    return cdf.size() - 1;
  }

  /// Uniform integer in [0, n).
  std::size_t uniform_index(std::size_t n) {
    if (n == 0) throw std::invalid_argument("uniform_index: empty range");
    // Rejection-free scaling; bias is negligible for desk-scale n.
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n)) % n;
  }

 private:
  std::uint64_t state_ = 0;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace rfi
