#include "signsum/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace signsum {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes are the roots of the order-th Legendre polynomial, found by Newton
// iteration from the Chebyshev estimates; symmetric pairs are mirrored.
GaussRule gauss_legendre_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  const int midpoint = (order + 1) / 2;
  for (int i = 0; i < midpoint; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double derivative = 0.0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      double p_cur = 1.0;
      double p_prev = 0.0;
      for (int j = 0; j < order; ++j) {
        const double p_older = p_prev;
        p_prev = p_cur;
        p_cur = ((2.0 * j + 1.0) * z * p_prev - j * p_older) / (j + 1);
      }
      derivative = order * (z * p_cur - p_prev) / (z * z - 1.0);
      const double step = p_cur / derivative;
      z -= step;
      if (std::abs(step) < 1e-15) {
        break;
      }
    }
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(order - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
  }
  return rule;
}

void check_config(const QuadratureConfig& config) {
  if (config.panels_per_unit_frequency <= 0 || config.nodes_per_panel <= 0 ||
      config.absolute_tolerance <= 0 || config.oscillation_cap <= 0) {
    throw PreconditionError("quadrature config values must be positive");
  }
}

}  // namespace

double integrate_product(const ProductSpec& spec, double lower, double upper,
                         const QuadratureConfig& config) {
  validate_sine_cutoff(spec);
  check_config(config);
  if (!(lower <= upper)) {
    throw PreconditionError("reversed integration bounds: lower > upper");
  }
  const Instance& instance = spec.instance;
  const Int frequency_sum = weight(instance) + abs(Int(instance.target));
  const double max_frequency = frequency_sum.get_d();
  const double length = upper - lower;
  if (max_frequency * length > config.oscillation_cap) {
    throw ResourceLimitError(
        "integrand oscillation max_frequency * length = " +
        std::to_string(max_frequency * length) + " exceeds the cap " +
        std::to_string(config.oscillation_cap));
  }

  const auto integrand = [&](double x) {
    double value = spec.m >= 0
                       ? std::sin(static_cast<double>(instance.target) * x)
                       : std::cos(static_cast<double>(instance.target) * x);
    for (int i = 1; i <= instance.n(); ++i) {
      const double bx =
          static_cast<double>(instance.coeffs[static_cast<std::size_t>(i - 1)]) * x;
      value *= i <= spec.m ? std::sin(bx) : std::cos(bx);
    }
    return value;
  };

  const double wanted = config.panels_per_unit_frequency * max_frequency *
                        length / std::numbers::pi;
  const int panels = std::max(16, static_cast<int>(std::ceil(wanted)));
  const GaussRule rule = gauss_legendre_rule(config.nodes_per_panel);
  const double panel_width = length / panels;
  double total = 0.0;
  for (int panel = 0; panel < panels; ++panel) {
    const double a = lower + panel * panel_width;
    const double mid = a + 0.5 * panel_width;
    const double half = 0.5 * panel_width;
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * integrand(mid + half * rule.nodes[i]);
    }
    total += half * sum;
  }
  return total;
}

}  // namespace signsum
