#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rfi/measure.hpp"
#include "rfi/types.hpp"

namespace rfi {

enum class DistanceMethod {
  Assignment,
  Sorted1D,
  NetworkSimplex,
  ProkhorovGrid,
  ProkhorovBound,
};

const char* to_string(DistanceMethod m);

/// One entry of a transport plan: mass moved from atom `from` of the first
/// measure to atom `to` of the second.
struct CouplingEntry {
  std::size_t from;
  std::size_t to;
  double mass;
};

struct DistanceReport {
  double value = 0.0;
  DistanceMethod method = DistanceMethod::Assignment;
  std::optional<std::vector<CouplingEntry>> coupling;
};

struct WassersteinOptions {
  bool want_coupling = false;
  /// Combined atom budget for the exact solvers.
  std::size_t exact_budget = 5000;
  /// Two uniform measures with lcm(sizes) at most this are solved by
  /// atom-splitting plus exact assignment; larger instances go to the
  /// transportation simplex.
  std::size_t lcm_cap = 2048;
};

/// Exact Wasserstein-p distance between finite discrete measures.
///
/// One-dimensional inputs use the sorted (quantile) coupling; equal-size
/// uniform inputs use an exact assignment solve; everything else runs a
/// dense transportation network simplex. The optional coupling attains the
/// reported value.
DistanceReport wasserstein(const EmpiricalMeasure& mu, const EmpiricalMeasure& nu,
                           double p, const WassersteinOptions& opts = {});

namespace detail {

/// Minimum-cost perfect matching on a square cost matrix; returns the
/// column assigned to each row.
std::vector<int> solve_assignment(const Mat& cost);

struct TransportSolution {
  double cost;
  std::vector<CouplingEntry> flows;
};

/// Exact balanced transportation problem (dense network simplex with a
/// northwest-corner start and stall-triggered Bland pivoting).
TransportSolution transport_simplex(const Mat& cost, std::vector<double> supply,
                                    std::vector<double> demand);

}  // namespace detail

}  // namespace rfi
