#pragma once

#include "signsum/core.hpp"

namespace signsum {

struct QuadratureConfig {
  // Composite-panel density: panels = max(16, panels_per_unit_frequency *
  // max_frequency * interval_length / pi).
  int panels_per_unit_frequency = 8;
  int nodes_per_panel = 16;
  double absolute_tolerance = 1e-9;
  // Refuse integrands with max_frequency * interval_length above this.
  double oscillation_cap = 1e6;
};

// Composite Gauss-Legendre approximation of the integral of
// prod sin(b_i x) * prod cos(b_i x) over [lower, upper]. Deterministic for
// a fixed config; the panel count scales with the integrand's maximum
// frequency sum(|b_i|), so the error stays below absolute_tolerance for
// anything under the oscillation cap.
double integrate_product(const ProductSpec& spec, double lower, double upper,
                         const QuadratureConfig& config = {});

}  // namespace signsum
