#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "cgme/errors.hpp"
#include "cgme/math.hpp"
#include "cgme/quadrature.hpp"
#include "cgme/spectral.hpp"
#include "doctest.h"

using namespace cgme;

namespace {
constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_CASE("g_fourier: removable zero-frequency limit and vacuum branch") {
  for (double beta : {0.1, 1.0, 7.0}) {
    CHECK(g_fourier(0.0, beta) == doctest::Approx(1.0 / (2.0 * pi * beta)).epsilon(1e-14));
    CHECK(g_fourier(1e-13, beta) ==
          doctest::Approx(1.0 / (2.0 * pi * beta)).epsilon(1e-9));
  }
  // explicit value: (1/2pi) * omega / (1 - e^{-beta omega})
  const double w = 1.0, beta = 0.1;
  CHECK(g_fourier(w, beta) ==
        doctest::Approx(w / (2.0 * pi * (1.0 - std::exp(-beta * w)))).epsilon(1e-13));
  // vacuum: positive frequencies only
  CHECK(g_fourier(2.5, inf) == doctest::Approx(2.5 / (2.0 * pi)).epsilon(1e-15));
  CHECK(g_fourier(-2.5, inf) == 0.0);
}

TEST_CASE("KMS detailed balance: G(-w) = e^{-beta w} G(w) to 1e-12 relative") {
  for (double beta : {0.05, 0.7, 3.0})
    for (double w : {0.2, 1.0, 2.7, 9.0}) {
      const double lhs = g_fourier(-w, beta);
      const double rhs = std::exp(-beta * w) * g_fourier(w, beta);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("even/odd combinations are consistent with g_fourier") {
  for (double beta : {0.1, 1.2})
    for (double w : {0.3, 1.0, 4.2}) {
      CHECK(g_plus(w, beta) ==
            doctest::Approx(g_fourier(w, beta) + g_fourier(-w, beta)).epsilon(1e-13));
      CHECK(g_minus(w) ==
            doctest::Approx(g_fourier(w, beta) - g_fourier(-w, beta)).epsilon(1e-12));
      // G+ - G- = 2 G(-w)
      CHECK(g_plus(w, beta) - g_minus(w) ==
            doctest::Approx(2.0 * g_fourier(-w, beta)).epsilon(1e-12));
    }
  // odd part is temperature independent and exactly w/2pi
  CHECK(g_minus(1.7) == doctest::Approx(1.7 / (2.0 * pi)).epsilon(1e-15));
  CHECK(g_minus(-1.7) == doctest::Approx(-1.7 / (2.0 * pi)).epsilon(1e-15));
}

TEST_CASE("high-temperature behaviour: g_plus -> 1/(pi beta) for small beta") {
  const double beta = 1e-3, w = 1.0;
  CHECK(g_plus(w, beta) == doctest::Approx(1.0 / (pi * beta)).epsilon(1e-6));
}

TEST_CASE("vacuum/thermal split reassembles g_plus") {
  for (double beta : {0.2, 1.0, 5.0})
    for (double w : {-3.0, -0.4, 0.4, 3.0})
      CHECK(vacuum_even(w) + thermal_even(w, beta) ==
            doctest::Approx(g_plus(w, beta)).epsilon(1e-12));
  // vacuum limit: the thermal piece dies
  CHECK(thermal_even(1.0, inf) == 0.0);
  CHECK(thermal_even(3.0, 1000.0) == 0.0);  // Bose tail underflow guard
  // small-frequency limit of |w| n_B(|w|) is the classical 1/beta
  CHECK(thermal_even(1e-13, 2.0) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-9));
  // both pieces are even
  CHECK(vacuum_even(-1.1) == vacuum_even(1.1));
  CHECK(thermal_even(-1.1, 0.7) == thermal_even(1.1, 0.7));
}

TEST_CASE("cross_filter is the off-diagonal/diagonal spectral ratio sinc(ell w)") {
  for (double ell : {0.1, 0.8})
    for (double w : {-2.0, 0.0, 0.5, 3.3})
      CHECK(cross_filter(w, ell) == doctest::Approx(sinc(ell * w)).epsilon(1e-15));
  CHECK(cross_filter(0.77, 0.0) == 1.0);  // coincident atoms: no spatial filter
}

TEST_CASE("k12_even: closed values and singular-separation rejection") {
  const double ell = 0.6;
  const std::complex<double> at0 = k12_even(0.0, ell);
  CHECK(at0.real() == 0.0);
  CHECK(at0.imag() == doctest::Approx(-1.0 / (2.0 * pi * ell)).epsilon(1e-15));
  // zero of cos at ell*w = pi/2
  const std::complex<double> node = k12_even(pi / 2.0 / ell, ell);
  CHECK(std::abs(node) < 1e-16);
  CHECK_THROWS_AS(k12_even(1.0, 0.0), config_error);
  CHECK_THROWS_AS(k12_even(1.0, -0.5), config_error);
}

// Principal-value cross-check of the coupling kernel: the even part of the
// Hilbert transform of the odd spectral density g_minus(w) sinc(ell w) is
//   (1/i pi) P int dz [sin(ell z)/(2 pi ell)] z/(z^2 - w^2)
// which must reproduce -i cos(ell w)/(2 pi ell).  The two simple poles at
// z = +-w are handled by pv_cauchy on split domains; the truncated tail is
// restored through the sine integral.
TEST_CASE("k12_even matches a principal-value quadrature of its defining transform") {
  for (double ell : {0.4, 1.1})
    for (double w : {0.7, 2.3}) {
      const double X = 400.0;
      auto upper_g = [&](double z) {
        return std::sin(ell * z) * z / (2.0 * pi * ell * (z + w));
      };
      auto lower_g = [&](double z) {
        return std::sin(ell * z) * z / (2.0 * pi * ell * (z - w));
      };
      const double principal = pv_cauchy(upper_g, w, 0.0, X, 1e-11) +
                               pv_cauchy(lower_g, -w, -X, 0.0, 1e-11);
      // integrand ~ sin(ell z)/(2 pi ell z) for |z| >> w: two half-line tails
      const double tail = (pi / 2.0 - sine_integral(ell * X)) / (pi * ell);
      const double quadrature = (principal + tail) / pi;  // the 1/(i pi) modulus
      const double closed = -k12_even(w, ell).imag();     // modulus of -i cos/2 pi ell
      CHECK(quadrature == doctest::Approx(closed).epsilon(1e-5));
    }
}
