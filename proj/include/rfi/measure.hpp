#pragma once

#include <utility>
#include <vector>

#include "rfi/types.hpp"

namespace rfi {

/// Finitely supported probability measure: weighted atoms in a common
/// ambient space. Weights are nonnegative and sum to 1 within 1e-12.
class EmpiricalMeasure {
 public:
  EmpiricalMeasure(std::vector<Vec> atoms, std::vector<double> weights);

  static EmpiricalMeasure dirac(Vec x);
  static EmpiricalMeasure uniform(std::vector<Vec> atoms);
  /// Divides the given weights by their sum before constructing.
  static EmpiricalMeasure from_unnormalized(std::vector<Vec> atoms,
                                            std::vector<double> weights);

  std::size_t size() const { return atoms_.size(); }
  Eigen::Index dim() const { return atoms_.front().size(); }
  const Vec& atom(std::size_t i) const { return atoms_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<Vec>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }

  Vec mean() const;

  /// Merges bit-identical atoms and sorts the support lexicographically.
  EmpiricalMeasure consolidated() const;

 private:
  std::vector<Vec> atoms_;
  std::vector<double> weights_;
};

/// p-th moment about a center: sum of w_i * ||atom_i - center||^p.
double moment(const EmpiricalMeasure& mu, double p, const Vec& center);

/// Mass inside the closed ball of each radius (radii must be ascending).
std::vector<std::pair<double, double>> tightness_profile(
    const EmpiricalMeasure& mu, const Vec& center, const std::vector<double>& radii);

}  // namespace rfi
