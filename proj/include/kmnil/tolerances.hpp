#pragma once

namespace kmnil {

/// Numerical thresholds used across the pipeline. gram/jacobi/scalarity are
/// relative (scaled by max(1,|E|) at the point of use), eigencluster is
/// absolute, gs_drop applies to unit candidate vectors after projection.
struct Tolerances {
  double gram = 1e-8;
  double jacobi = 1e-8;
  double scalarity = 1e-8;
  double eigencluster = 1e-6;
  double gs_drop = 1e-9;
  double leak = 1e-9;
};

}  // namespace kmnil
