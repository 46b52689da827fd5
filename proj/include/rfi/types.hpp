#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <string>

namespace rfi {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::invalid_argument(msg);
}

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

inline void require_finite(const Vec& v, const std::string& what) {
  if (!v.allFinite()) fail(what + ": entries must be finite");
}

inline void require_same_dim(const Vec& a, const Vec& b, const std::string& what) {
  if (a.size() != b.size())
    fail(what + ": dimension mismatch (" + std::to_string(a.size()) + " vs " +
         std::to_string(b.size()) + ")");
}

/// Regularity tag of a self-mapping.
///
/// Averaged carries the averaging constant alpha in (0,1);
/// ContractionInExpectation carries the factor r in [0,1). The tags are
/// ordered by strength: a contraction with factor r is also averaged with
/// constant (1+r)/2, and every averaged mapping is nonexpansive.
struct Regularity {
  enum class Kind { None, Nonexpansive, Averaged, ContractionInExpectation };

  Kind kind = Kind::None;
  double constant = 0.0;

  static Regularity none() { return {Kind::None, 0.0}; }
  static Regularity nonexpansive() { return {Kind::Nonexpansive, 0.0}; }
  static Regularity averaged(double alpha) {
    require(alpha > 0.0 && alpha < 1.0, "averaging constant must lie in (0,1)");
    return {Kind::Averaged, alpha};
  }
  static Regularity contraction(double r) {
    require(r >= 0.0 && r < 1.0, "contraction factor must lie in [0,1)");
    return {Kind::ContractionInExpectation, r};
  }

  bool at_least_nonexpansive() const { return kind != Kind::None; }

  /// Smallest averaging constant implied by the tag, if any.
  std::optional<double> averaging_constant() const {
    switch (kind) {
      case Kind::Averaged:
        return constant;
      case Kind::ContractionInExpectation:
        return 0.5 * (1.0 + constant);
      default:
        return std::nullopt;
    }
  }
};

inline const char* to_string(Regularity::Kind k) {
  switch (k) {
    case Regularity::Kind::None: return "none";
    case Regularity::Kind::Nonexpansive: return "nonexpansive";
    case Regularity::Kind::Averaged: return "averaged";
    case Regularity::Kind::ContractionInExpectation: return "contraction_in_expectation";
  }
  return "unknown";
}

}  // namespace rfi
