#pragma once
#include <array>
#include <string>

namespace cgme {

// Evaluation mode for the bath integrals.
//  - exact: frequency-domain quadrature of the thermal spectral density
//           against the coarse-graining filter functions (any temperature).
//  - highT: closed forms valid to first order in beta*omega (hot bath),
//           requiring ell <= delta_t.
//  - closed: alias of highT — the closed forms *are* the hot-bath forms;
//            kept as a separate selector for CLI ergonomics.
enum class Mode { exact, highT, closed };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

// Physical configuration of the two-atom + bath problem.
//   omega1, omega2 : atomic gap frequencies (> 0)
//   n              : common quantization axis, unit 3-vector
//   ell            : interatomic separation (>= 0; 0 only valid where the
//                    formulas stay finite — the induced coupling rejects it)
//   beta           : inverse bath temperature (> 0, +inf = vacuum)
//   lambda         : system-bath coupling (>= 0)
//   delta_t        : coarse-graining time (> 0)
//   epsilon        : switching-function smoothing parameter; accepted for
//                    forward compatibility, not used by any formula here
struct SystemConfig {
  double omega1 = 1.0;
  double omega2 = 1.0;
  std::array<double, 3> n = {0.0, 0.0, 1.0};
  double ell = 1.0;
  double beta = 1.0;
  double lambda = 0.1;
  double delta_t = 1.0;
  double epsilon = 0.0;

  // Throws config_error on violated bounds.
  void validate() const;

  // Additional preconditions for the hot-bath closed forms:
  // finite beta, beta*max(omega)/2 <= 1, ell <= delta_t.
  void require_high_t() const;

  double omega_max() const { return omega1 > omega2 ? omega1 : omega2; }
};

}  // namespace cgme
