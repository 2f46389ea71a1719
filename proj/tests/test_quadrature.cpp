#include <cmath>
#include <numbers>
#include <vector>

#include "cgme/errors.hpp"
#include "cgme/math.hpp"
#include "cgme/quadrature.hpp"
#include "doctest.h"

using namespace cgme;

namespace {
constexpr double pi = std::numbers::pi;

double oracle(PairKernel k, double a, double b, double c) {
  return oracle_pair(k, a, b, c, 1e-10).value;
}
}  // namespace

TEST_CASE("gauss_legendre: node symmetry, weight sum, polynomial exactness") {
  for (int n : {12, 24}) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    REQUIRE(int(x.size()) == n);
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      wsum += w[i];
      CHECK(x[i] == doctest::Approx(-x[n - 1 - i]).epsilon(1e-14));
      CHECK(w[i] == doctest::Approx(w[n - 1 - i]).epsilon(1e-14));
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
    // exact for polynomials of degree <= 2n-1: check x^(2n-2)
    double quad = 0.0;
    for (int i = 0; i < n; ++i) quad += w[i] * std::pow(x[i], 2 * n - 2);
    CHECK(quad == doctest::Approx(2.0 / (2 * n - 1)).epsilon(1e-14));
  }
}

TEST_CASE("integrate_oracle: classic definite integrals") {
  IntegralSpec s;
  s.rel_tol = 1e-12;

  s.f = [](double x) { return x * x; };
  s.lower = 0.0;
  s.upper = 1.0;
  auto r = integrate_oracle(s);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(r.value - 1.0 / 3.0) <= std::max(r.error, 1e-14));

  s.f = [](double x) { return std::sin(x); };
  s.upper = pi;
  r = integrate_oracle(s);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));

  s.f = [](double x) { return std::exp(-x * x); };
  s.lower = -8.0;
  s.upper = 8.0;
  r = integrate_oracle(s);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(std::sqrt(pi)).epsilon(1e-13));

  // heavily oscillatory with exact cancellation
  s.f = [](double x) { return std::cos(x); };
  s.lower = 0.0;
  s.upper = 20.0 * pi;
  s.abs_tol = 1e-12;
  r = integrate_oracle(s);
  CHECK(r.converged);
  CHECK(std::abs(r.value) < 1e-10);
}

TEST_CASE("integrate_oracle: integrable endpoint-adjacent singularity still converges") {
  IntegralSpec s;
  s.f = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.5) + 1e-300); };
  s.lower = 0.0;
  s.upper = 1.0;
  s.rel_tol = 1e-8;
  s.max_evals = 4'000'000;
  const auto r = integrate_oracle(s);
  // int_0^1 |x-1/2|^{-1/2} dx = 4/sqrt(2)
  CHECK(r.value == doctest::Approx(4.0 / std::sqrt(2.0)).epsilon(1e-5));
}

TEST_CASE("integrate_oracle: budget exhaustion reports converged = false") {
  IntegralSpec s;
  s.f = [](double x) { return std::sin(1000.0 * x); };
  s.lower = 0.0;
  s.upper = 50.0;
  s.rel_tol = 1e-14;
  s.abs_tol = 1e-300;
  s.max_evals = 500;  // far too small for the requested tolerance
  const auto r = integrate_oracle(s);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations <= 3 * 500);  // budget honored up to one panel sweep
}

TEST_CASE("integrate_oracle: input validation") {
  IntegralSpec s;
  s.f = [](double) { return 1.0; };
  s.lower = 1.0;
  s.upper = 0.0;
  CHECK_THROWS_AS(integrate_oracle(s), config_error);

  IntegralSpec nan_spec;
  nan_spec.f = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
  nan_spec.lower = 0.0;
  nan_spec.upper = 1.0;
  CHECK_THROWS_AS(integrate_oracle(nan_spec), numerics_error);
}

TEST_CASE("pair integrals: printed spot values") {
  // sin-kernel at a=b=1, c=1:  pi sin(1)/2
  CHECK(closed_i1(1.0, 1.0, 1.0) == doctest::Approx(pi * std::sin(1.0) / 2.0).epsilon(1e-14));
  // 1/x-kernel at a=b=0, c=1:  3 pi/4
  CHECK(closed_i2(0.0, 0.0, 1.0) == doctest::Approx(3.0 * pi / 4.0).epsilon(1e-14));
  // 1/x-kernel beyond the band edge: pi sinc(a) sinc(b)
  CHECK(closed_i2(1.0, 2.0, 3.0) ==
        doctest::Approx(pi * std::sin(1.0) * std::sin(2.0) / 2.0).epsilon(1e-14));
  // cos-kernel at a=b=0, c=1:  pi/2
  CHECK(closed_j(0.0, 0.0, 1.0) == doctest::Approx(pi / 2.0).epsilon(1e-14));
}

TEST_CASE("pair integrals: closed forms vs oracle at documented single points") {
  CHECK(closed_i1(1.0, 0.5, 1.0) ==
        doctest::Approx(oracle(PairKernel::sine, 1.0, 0.5, 1.0)).epsilon(1e-6));
  CHECK(closed_j(1.0, 0.3, 0.8) ==
        doctest::Approx(oracle(PairKernel::cosine, 1.0, 0.3, 0.8)).epsilon(1e-6));
  CHECK(closed_i2(2.0, 1.0, 0.7) ==
        doctest::Approx(oracle(PairKernel::sine_over_x, 2.0, 1.0, 0.7)).epsilon(1e-6));
}

TEST_CASE("pair integrals: band limit and continuity at c = 2") {
  for (double a : {0.0, 0.7, 2.2})
    for (double b : {0.0, 1.3}) {
      // sine/cosine kernels vanish identically beyond c = 2
      CHECK(closed_i1(a, b, 2.0001) == 0.0);
      CHECK(closed_i1(a, b, 5.0) == 0.0);
      CHECK(closed_j(a, b, 2.3) == 0.0);
      // continuity across the edge (delta = 1e-6 against a 1e-4 bound)
      const double d = 1e-6;
      CHECK(std::abs(closed_i1(a, b, 2.0 - d) - closed_i1(a, b, 2.0 + d)) < 1e-4);
      CHECK(std::abs(closed_j(a, b, 2.0 - d) - closed_j(a, b, 2.0 + d)) < 1e-4);
      CHECK(std::abs(closed_i2(a, b, 2.0 - d) - closed_i2(a, b, 2.0 + d)) < 1e-4);
      // the 1/x kernel freezes at its band-edge value pi sinc(a) sinc(b)
      CHECK(closed_i2(a, b, 2.0) == doctest::Approx(pi * sinc(a) * sinc(b)).epsilon(1e-13));
      CHECK(closed_i2(a, b, 4.0) == doctest::Approx(pi * sinc(a) * sinc(b)).epsilon(1e-13));
    }
}

TEST_CASE("pair integrals: symmetry in (a, b) and printed small-argument limits") {
  for (double c : {0.3, 1.2, 1.9}) {
    CHECK(closed_i1(0.9, 1.7, c) == doctest::Approx(closed_i1(1.7, 0.9, c)).epsilon(1e-13));
    CHECK(closed_i2(0.9, 1.7, c) == doctest::Approx(closed_i2(1.7, 0.9, c)).epsilon(1e-13));
    CHECK(closed_j(0.9, 1.7, c) == doctest::Approx(closed_j(1.7, 0.9, c)).epsilon(1e-13));

    // equal-offset reduction of the sine kernel: pi sin(ac) (1 - c/2)
    for (double a : {0.4, 1.1})
      CHECK(closed_i1(a, a, c) ==
            doctest::Approx(pi * std::sin(a * c) * (1.0 - c / 2.0)).epsilon(1e-13));
    // zero-offset reductions
    CHECK(closed_i2(0.0, 0.0, c) ==
          doctest::Approx(pi * c * (1.0 - c / 4.0)).epsilon(1e-13));
    CHECK(closed_j(0.0, 0.0, c) == doctest::Approx(pi * (1.0 - c / 2.0)).epsilon(1e-13));
  }
}

TEST_CASE("pair integrals: small-c slope limits") {
  const double c = 1e-7;
  for (double a : {0.3, 1.0, 2.7})
    for (double b : {0.5, 1.3}) {
      // sine kernel: I1/c -> pi (a+b)/2 sinc(a-b), up to an O(c) correction
      CHECK(closed_i1(a, b, c) / c ==
            doctest::Approx(closed_i1_slope(a, b)).epsilon(1e-6));
      CHECK(closed_i1_slope(a, b) ==
            doctest::Approx(pi * (a + b) / 2.0 * sinc(a - b)).epsilon(1e-13));
      // 1/x kernel: I2/c -> pi sinc(a-b)
      CHECK(closed_i2(a, b, c) / c == doctest::Approx(pi * sinc(a - b)).epsilon(1e-7));
    }
  // the slope limit agrees with the oracle evaluated at small c
  const double small = 1e-4;
  CHECK(oracle(PairKernel::sine, 2.0, 1.0, small) / small ==
        doctest::Approx(closed_i1_slope(2.0, 1.0)).epsilon(1e-4));
}

TEST_CASE("pair integrals: oracle error estimate covers the true deviation") {
  for (double c : {0.6, 1.9, 2.4}) {
    const auto r = oracle_pair(PairKernel::cosine, 1.1, 0.4, c, 1e-10);
    CHECK(r.converged);
    const double truth = closed_j(1.1, 0.4, c);
    CHECK(std::abs(r.value - truth) <= std::max(10.0 * r.error, 1e-8));
  }
}

TEST_CASE("pv_cauchy: exact principal values") {
  // P int_0^2 dx/(x-1) = 0
  CHECK(std::abs(pv_cauchy([](double) { return 1.0; }, 1.0, 0.0, 2.0)) < 1e-12);
  // P int_{-1}^{2} dx/x = ln 2
  CHECK(pv_cauchy([](double) { return 1.0; }, 0.0, -1.0, 2.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));
  // P int_{-1}^{1} e^x/x dx = 2 Shi(1)
  const double shi1 = 1.0572508753757285;
  CHECK(pv_cauchy([](double x) { return std::exp(x); }, 0.0, -1.0, 1.0, 1e-12) ==
        doctest::Approx(2.0 * shi1).epsilon(1e-11));
}
