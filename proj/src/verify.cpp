#include "signsum/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "signsum/integral.hpp"
#include "signsum/quadrature.hpp"
#include "signsum/rng.hpp"
#include "signsum/werner.hpp"

namespace signsum {

namespace {

std::string describe(const Instance& instance) {
  return "instance \"" + format_instance(instance) + "\"";
}

std::string describe(const ProductSpec& spec) {
  return describe(spec.instance) + " m=" + std::to_string(spec.m);
}

std::string describe(const ProductSpec& spec, const PiBounds& bounds) {
  return describe(spec) + " p=" + std::to_string(bounds.p) +
         " q=" + std::to_string(bounds.q);
}

// One failure stops the property and is reported; later trials add nothing.
class PropertyRun {
 public:
  PropertyRun(std::string name, const PropertyOptions& options,
              std::uint64_t stream)
      : result_{std::move(name), true, options.trials, "", ""},
        rng_(options.seed * 1000003 + stream) {}

  Rng& rng() { return rng_; }

  bool failed() const { return !result_.passed; }

  void fail(const std::string& counterexample) {
    if (result_.passed) {
      result_.passed = false;
      result_.counterexample = counterexample;
    }
  }

  void note(const std::string& text) { result_.note = text; }

  PropertyResult take() && { return std::move(result_); }

 private:
  PropertyResult result_;
  Rng rng_;
};

const std::vector<PiBounds> kEvenBoundsGrid = {
    {1, 1}, {2, 0}, {2, 2}, {3, 1}, {0, 0}};

PropertyResult check_engine_agreement(const PropertyOptions& options) {
  PropertyRun run("engine-agreement", options, 1);
  const int max_n = std::min(options.max_n, 12);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    const Instance instance =
        random_instance(run.rng(), max_n, options.max_coeff);
    const Count brute = brute_force_count(instance, options.enumeration_cap);
    const Count dp = dp_count(instance);
    const Count via_expansion = count_via_integral(instance);
    const Count via_integral = cosine_integral_count(instance);
    if (brute != dp || dp != via_expansion || via_expansion != via_integral) {
      run.fail(describe(instance) + ": brute=" + brute.get_str() +
               " dp=" + dp.get_str() + " expansion=" + via_expansion.get_str() +
               " integral=" + via_integral.get_str());
    } else if (brute > pow2(instance.n())) {
      run.fail(describe(instance) + ": count " + brute.get_str() +
               " exceeds 2^n");
    }
  }
  return std::move(run).take();
}

PropertyResult check_swap_invariance(const PropertyOptions& options) {
  PropertyRun run("swap-invariance", options, 2);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    const Instance instance =
        random_instance(run.rng(), options.max_n, options.max_coeff);
    const Count reference = dp_count(instance);
    for (int k = 1; k <= instance.n() && !run.failed(); ++k) {
      const Count swapped = dp_count(swap_target(instance, k));
      if (swapped != reference) {
        run.fail(describe(instance) + " k=" + std::to_string(k) + ": " +
                 swapped.get_str() + " != " + reference.get_str());
      }
    }
  }
  return std::move(run).take();
}

PropertyResult check_swap_involution(const PropertyOptions& options) {
  PropertyRun run("swap-involution", options, 3);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    const Instance instance =
        random_instance(run.rng(), options.max_n, options.max_coeff);
    for (int k = 1; k <= instance.n() && !run.failed(); ++k) {
      if (swap_target(swap_target(instance, k), k) != instance) {
        run.fail(describe(instance) + " k=" + std::to_string(k));
      }
    }
  }
  return std::move(run).take();
}

PropertyResult check_path_equivalence(const PropertyOptions& options) {
  PropertyRun run("expansion-path-equivalence", options, 4);
  const int max_n = std::min(options.max_n, 10);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    const ProductSpec spec = random_spec(run.rng(), max_n, options.max_coeff);
    const TrigPolynomial folded = expand_mixed_product(spec);
    const TrigPolynomial enumerated =
        expand_by_enumeration(spec, options.enumeration_cap);
    if (folded != enumerated) {
      run.fail(describe(spec) + ": folding and enumeration disagree");
    } else if (spec.m == -1 && folded != expand_cos_product(spec.instance)) {
      run.fail(describe(spec) + ": m=-1 differs from the cosine path");
    }
  }
  return std::move(run).take();
}

PropertyResult check_pointwise(const PropertyOptions& options) {
  PropertyRun run("expansion-pointwise", options, 5);
  const int max_n = std::min(options.max_n, 10);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    const ProductSpec spec = random_spec(run.rng(), max_n, options.max_coeff);
    const Instance& instance = spec.instance;
    const TrigPolynomial poly = expand_mixed_product(spec);
    const double tolerance = 1e-12 * (instance.n() + 1);
    for (int point = 0; point < 100 && !run.failed(); ++point) {
      const double x =
          run.rng().uniform_real(-std::numbers::pi, std::numbers::pi);
      double direct =
          spec.m >= 0 ? std::sin(static_cast<double>(instance.target) * x)
                      : std::cos(static_cast<double>(instance.target) * x);
      for (int i = 1; i <= instance.n(); ++i) {
        const double bx =
            static_cast<double>(instance.coeffs[static_cast<std::size_t>(i - 1)]) *
            x;
        direct *= i <= spec.m ? std::sin(bx) : std::cos(bx);
      }
      const double expanded = evaluate_pointwise(poly, x);
      if (std::abs(expanded - direct) > tolerance) {
        std::ostringstream detail;
        detail << describe(spec) << " x=" << x << ": |" << expanded << " - "
               << direct << "| > " << tolerance;
        run.fail(detail.str());
      }
    }
  }
  return std::move(run).take();
}

PropertyResult check_mass_and_annihilation(const PropertyOptions& options) {
  PropertyRun run("expansion-mass", options, 6);
  const int max_n = std::min(options.max_n, 10);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    ProductSpec spec = random_spec(run.rng(), max_n, options.max_coeff);
    if (expand_mixed_product(spec).coefficient_mass() > 1) {
      run.fail(describe(spec) + ": coefficient mass exceeds 1");
      break;
    }
    // Any zero frequency among the sine factors kills the whole product.
    spec.m = static_cast<int>(run.rng().uniform(0, spec.instance.n()));
    const int zeroed = static_cast<int>(run.rng().uniform(0, spec.m));
    if (zeroed == 0) {
      spec.instance.target = 0;
    } else {
      spec.instance.coeffs[static_cast<std::size_t>(zeroed - 1)] = 0;
    }
    if (!expand_mixed_product(spec).is_zero()) {
      run.fail(describe(spec) + ": zero sine factor left a nonzero expansion");
    }
  }
  return std::move(run).take();
}

PropertyResult check_closed_form(const PropertyOptions& options) {
  PropertyRun run("closed-form-integral", options, 7);
  const int max_n = std::min(options.max_n, 8);
  const int max_coeff = std::min(options.max_coeff, 7);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    ProductSpec spec = random_spec(run.rng(), max_n, max_coeff);
    spec.m = static_cast<int>(run.rng().uniform(0, spec.instance.n()));
    const PiBounds bounds = kEvenBoundsGrid[static_cast<std::size_t>(
        run.rng().uniform(0, static_cast<std::int64_t>(kEvenBoundsGrid.size()) - 1))];
    const ExactValue from_counts = integral_from_counts(spec, bounds);
    const ExactValue symbolic =
        exact_integral(expand_mixed_product(spec), bounds);
    if (!(from_counts == symbolic)) {
      run.fail(describe(spec, bounds) + ": counts give " +
               format_exact_value(from_counts) + ", expansion gives " +
               format_exact_value(symbolic));
    }
  }
  const ProductSpec worked{Instance{2, {1, 2, 3}}, 1};
  const ExactValue value = integral_from_counts(worked, PiBounds{1, 1});
  run.note("worked example " + describe(worked, PiBounds{1, 1}) +
           ": value = " + format_exact_value(value) + ", stated form = " +
           format_rational(value.pi_coefficient) +
           " (the stated form drops the factor pi)");
  return std::move(run).take();
}

PropertyResult check_even_sine_vanishing(const PropertyOptions& options) {
  PropertyRun run("even-sine-vanishing", options, 8);
  const int max_n = std::min(options.max_n, 8);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    ProductSpec spec = random_spec(run.rng(), max_n, options.max_coeff);
    spec.m = 2 * static_cast<int>(run.rng().uniform(0, spec.instance.n() / 2));
    const PiBounds bounds = kEvenBoundsGrid[static_cast<std::size_t>(
        run.rng().uniform(0, static_cast<std::int64_t>(kEvenBoundsGrid.size()) - 1))];
    const ExactValue symbolic =
        exact_integral(expand_mixed_product(spec), bounds);
    if (!(symbolic == ExactValue{})) {
      run.fail(describe(spec, bounds) + ": expected exact 0, got " +
               format_exact_value(symbolic));
    }
  }
  return std::move(run).take();
}

PropertyResult check_parity_split(const PropertyOptions& options) {
  PropertyRun run("parity-split", options, 9);
  const int max_n = std::min(options.max_n, 12);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    const Instance instance =
        random_instance(run.rng(), max_n, options.max_coeff);
    const int m = static_cast<int>(run.rng().uniform(-1, instance.n()));
    const Count even = brute_force_parity_count(ParityQuery{instance, m},
                                                options.enumeration_cap);
    const Count dp_even = dp_parity_count(ParityQuery{instance, m});
    const Count total = brute_force_count(instance, options.enumeration_cap);
    // Complemented filter: solutions with an odd number of +1 signs in the
    // prefix, enumerated independently of the library engines.
    Count odd = 0;
    const int n = instance.n();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const SignVector signs = SignVector::from_mask(mask, n);
      if (signs.applied_sum(instance) != instance.target) {
        continue;
      }
      int positives = 0;
      for (int j = 0; j < m; ++j) {
        positives += signs.signs[static_cast<std::size_t>(j)] > 0 ? 1 : 0;
      }
      if (positives % 2 != 0) {
        ++odd;
      }
    }
    if (even + odd != total || dp_even != even) {
      run.fail(describe(instance) + " m=" + std::to_string(m) + ": even=" +
               even.get_str() + " dp_even=" + dp_even.get_str() + " odd=" +
               odd.get_str() + " total=" + total.get_str());
    }
  }
  return std::move(run).take();
}

PropertyResult check_negation_symmetry(const PropertyOptions& options) {
  PropertyRun run("negation-symmetry", options, 10);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    Instance instance =
        random_instance(run.rng(), options.max_n, options.max_coeff);
    const Count direct = dp_count(instance);
    instance.target = -instance.target;
    if (dp_count(instance) != direct) {
      run.fail(describe(instance) + ": negating the target changed the count");
    }
  }
  return std::move(run).take();
}

PropertyResult check_quadrature_agreement(const PropertyOptions& options) {
  PropertyRun run("quadrature-agreement", options, 11);
  const int max_n = std::min(options.max_n, 6);
  const int max_coeff = std::min(options.max_coeff, 6);
  for (int trial = 0; trial < options.trials && !run.failed(); ++trial) {
    const ProductSpec spec = random_spec(run.rng(), max_n, max_coeff);
    PiBounds bounds;
    do {
      bounds.p = run.rng().uniform(-2, 2);
      bounds.q = run.rng().uniform(-2, 2);
    } while (bounds.p + bounds.q < 0);
    const double exact =
        exact_integral(expand_mixed_product(spec), bounds).to_double();
    const double numeric =
        integrate_product(spec, -static_cast<double>(bounds.q) * std::numbers::pi,
                          static_cast<double>(bounds.p) * std::numbers::pi);
    if (std::abs(exact - numeric) > 1e-8) {
      std::ostringstream detail;
      detail << describe(spec, bounds) << ": exact " << exact
             << " vs quadrature " << numeric;
      run.fail(detail.str());
    }
  }
  return std::move(run).take();
}

}  // namespace

std::vector<PropertyResult> run_property_battery(
    const PropertyOptions& options) {
  std::vector<PropertyResult> results;
  results.push_back(check_engine_agreement(options));
  results.push_back(check_swap_invariance(options));
  results.push_back(check_swap_involution(options));
  results.push_back(check_path_equivalence(options));
  results.push_back(check_pointwise(options));
  results.push_back(check_mass_and_annihilation(options));
  results.push_back(check_closed_form(options));
  results.push_back(check_even_sine_vanishing(options));
  results.push_back(check_parity_split(options));
  results.push_back(check_negation_symmetry(options));
  results.push_back(check_quadrature_agreement(options));
  return results;
}

}  // namespace signsum
