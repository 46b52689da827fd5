#include "rfi/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rfi {

namespace {

double kahan_sum(const std::vector<double>& xs) {
  double s = 0.0, c = 0.0;
  for (double x : xs) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

bool atom_less(const Vec& a, const Vec& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

}  // namespace

EmpiricalMeasure::EmpiricalMeasure(std::vector<Vec> atoms, std::vector<double> weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  require(!atoms_.empty(), "EmpiricalMeasure: at least one atom required");
  require(atoms_.size() == weights_.size(),
          "EmpiricalMeasure: atom/weight count mismatch");
  const Eigen::Index n = atoms_.front().size();
  require(n > 0, "EmpiricalMeasure: atoms must be nonempty vectors");
  for (const Vec& a : atoms_) {
    require(a.size() == n, "EmpiricalMeasure: atoms must share one dimension");
    require_finite(a, "EmpiricalMeasure atom");
  }
  for (double w : weights_)
    require(std::isfinite(w) && w >= 0.0, "EmpiricalMeasure: weights must be >= 0");
  const double s = kahan_sum(weights_);
  require(std::abs(s - 1.0) <= 1e-12,
          "EmpiricalMeasure: weights must sum to 1 (got " + std::to_string(s) + ")");
}

EmpiricalMeasure EmpiricalMeasure::dirac(Vec x) {
  std::vector<Vec> atoms;
  atoms.push_back(std::move(x));
  return EmpiricalMeasure(std::move(atoms), {1.0});
}

EmpiricalMeasure EmpiricalMeasure::uniform(std::vector<Vec> atoms) {
  require(!atoms.empty(), "EmpiricalMeasure::uniform: no atoms");
  std::vector<double> w(atoms.size(), 1.0 / static_cast<double>(atoms.size()));
  return from_unnormalized(std::move(atoms), std::move(w));
}

EmpiricalMeasure EmpiricalMeasure::from_unnormalized(std::vector<Vec> atoms,
                                                     std::vector<double> weights) {
  const double s = kahan_sum(weights);
  require(std::isfinite(s) && s > 0.0,
          "EmpiricalMeasure: total weight must be positive");
  for (double& w : weights) w /= s;
  return EmpiricalMeasure(std::move(atoms), std::move(weights));
}

Vec EmpiricalMeasure::mean() const {
  Vec m = Vec::Zero(dim());
  for (std::size_t i = 0; i < atoms_.size(); ++i) m += weights_[i] * atoms_[i];
  return m;
}

EmpiricalMeasure EmpiricalMeasure::consolidated() const {
  std::vector<std::size_t> order(atoms_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return atom_less(atoms_[a], atoms_[b]);
  });

  std::vector<Vec> atoms;
  std::vector<double> weights;
  for (std::size_t idx : order) {
    if (!atoms.empty() && atoms.back() == atoms_[idx]) {
      weights.back() += weights_[idx];
    } else {
      atoms.push_back(atoms_[idx]);
      weights.push_back(weights_[idx]);
    }
  }
  return from_unnormalized(std::move(atoms), std::move(weights));
}

double moment(const EmpiricalMeasure& mu, double p, const Vec& center) {
  require(p >= 1.0, "moment: p must be >= 1");
  require(center.size() == mu.dim(), "moment: center dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i)
    s += mu.weight(i) * std::pow((mu.atom(i) - center).norm(), p);
  return s;
}

std::vector<std::pair<double, double>> tightness_profile(
    const EmpiricalMeasure& mu, const Vec& center, const std::vector<double>& radii) {
  require(center.size() == mu.dim(), "tightness_profile: center dimension mismatch");
  require(std::is_sorted(radii.begin(), radii.end()),
          "tightness_profile: radii must be ascending");
  std::vector<double> dists(mu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) dists[i] = (mu.atom(i) - center).norm();

  std::vector<std::pair<double, double>> out;
  out.reserve(radii.size());
  for (double r : radii) {
    double mass = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (dists[i] <= r) mass += mu.weight(i);
    out.emplace_back(r, mass);
  }
  return out;
}

}  // namespace rfi
