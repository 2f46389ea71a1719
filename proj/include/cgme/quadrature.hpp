#pragma once
#include <functional>
#include <vector>

namespace cgme {

// -------------------------------------------------------------------------
// Deterministic adaptive quadrature (Gauss-Legendre 12/24 pair).
// -------------------------------------------------------------------------

struct IntegralSpec {
  std::function<double(double)> f;
  double lower = 0.0;
  double upper = 1.0;
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int initial_panels = 8;          // seed subdivision before refinement
  long max_evals = 6'000'000;      // hard budget on integrand evaluations
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;              // estimated absolute error
  bool converged = false;
  long evaluations = 0;
  int max_depth = 0;               // deepest panel bisection level reached
};

// Globally adaptive: refine the worst panel until
//   sum(panel errors) <= max(abs_tol, rel_tol*|value|, cancellation floor).
// Never aborts on slow convergence; returns converged=false with the partial
// estimate when the evaluation budget or depth cap (40) is hit.
IntegralResult integrate_oracle(const IntegralSpec& spec);

// Gauss-Legendre nodes/weights on [-1,1], computed at runtime by Newton
// iteration on the Legendre recurrence (exposed for tests).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// -------------------------------------------------------------------------
// Filter-function pair integrals over the whole real line:
//     integral dx  K(x) * sinc(x - a) * sinc(x - b)
// with K = sin(cx), cos(cx) or sin(cx)/x.  These are the building blocks of
// every coarse-grained bath coefficient after rescaling to dimensionless
// frequency x = omega * delta_t / 2.
// -------------------------------------------------------------------------

enum class PairKernel { sine, cosine, sine_over_x };

// Independent numerical evaluation: adaptive quadrature on [-X, X] plus
// analytic 1/x^2-series tail corrections (sine-integral based).  Requires
// c >= 0.  Serves as the oracle the closed forms are checked against.
IntegralResult oracle_pair(PairKernel kind, double a, double b, double c,
                           double rel_tol = 1e-9);

// Closed forms of the same three integrals (band-limited: the sine and
// cosine kernels vanish identically for c > 2, the sine_over_x one freezes).
double closed_i1(double a, double b, double c);       // K = sin(cx)
double closed_i1_slope(double a, double b);           // lim_{c->0} closed_i1/c
double closed_i2(double a, double b, double c);       // K = sin(cx)/x
double closed_j(double a, double b, double c);        // K = cos(cx)

// Cauchy principal value of integral g(z)/(z - pole) dz over [lo, hi] with
// lo < pole < hi, via singularity subtraction.
double pv_cauchy(const std::function<double(double)>& g, double pole,
                 double lo, double hi, double rel_tol = 1e-9);

}  // namespace cgme
