#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "pdfsieve/realext.hpp"

using namespace pdfsieve;

TEST_CASE("interpolated counting function") {
  const InterpolatedPi ip(10000);
  CHECK(ip.n_max() == 10000);
  CHECK(ip.pi_int(10) == 4);
  CHECK(ip.pi_hat(7.0) == 4.0);
  CHECK(ip.pi_hat(4.5) == 2.5);     // halfway from pi(4)=2 to pi(5)=3
  CHECK(ip.pi_hat(10.25) == 4.25);  // a quarter of the way toward pi(11)=5
  CHECK(ip.pi_hat(2.0) == 1.0);
  CHECK_THROWS_AS(ip.pi_hat(1.9), std::invalid_argument);
  CHECK_THROWS_AS(ip.pi_hat(9999.5), std::invalid_argument);

  // at integers the interpolation collapses to the table
  for (u64 m = 2; m <= 9999; ++m) {
    if (ip.pi_hat(static_cast<double>(m)) != static_cast<double>(ip.pi_int(m))) {
      CAPTURE(m);
      REQUIRE(false);
    }
  }
  CHECK(true);
}

TEST_CASE("real-argument detector is the bit of the ceiling") {
  const InterpolatedPi ip(100);
  CHECK(ip.pdf_real(4.2) == 1);  // ceil -> 5
  CHECK(ip.pdf_real(5.0) == 1);
  CHECK(ip.pdf_real(8.5) == 0);  // ceil -> 9
  CHECK(ip.pdf_real(2.0) == 1);
  CHECK_THROWS_AS(ip.pdf_real(1.0), std::invalid_argument);
  CHECK_THROWS_AS(ip.pdf_real(100.5), std::invalid_argument);
}

TEST_CASE("left derivative of the interpolation is the detector value") {
  const InterpolatedPi ip(10000);

  auto [slope1, bit1] = ip.left_derivative_check(4.5, 0.1);
  CHECK(slope1 == 1.0);
  CHECK(bit1 == 1);

  auto [slope2, bit2] = ip.left_derivative_check(8.5, 0.1);
  CHECK(slope2 == 0.0);
  CHECK(bit2 == 0);

  auto [slope3, bit3] = ip.left_derivative_check(7.0, 0.1);  // integer: piece (6,7]
  CHECK(slope3 == 1.0);
  CHECK(bit3 == 1);

  CHECK_THROWS_AS(ip.left_derivative_check(4.5, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(ip.left_derivative_check(7.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(ip.left_derivative_check(2.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(ip.left_derivative_check(4.5, 0.0), std::invalid_argument);

  // sampled non-integer points: the slope equals the detector bit exactly
  for (u64 m = 2; m <= 9998; m += 97) {
    for (double frac : {0.125, 0.5, 0.875}) {
      const double x = static_cast<double>(m) + frac;
      const auto [slope, bit] = ip.left_derivative_check(x, frac / 2);
      if (slope != static_cast<double>(bit)) {
        CAPTURE(x);
        REQUIRE(false);
      }
    }
  }
  // and at integers the left piece slope is the bit of x itself
  for (u64 m = 3; m <= 9999; m += 97) {
    const auto [slope, bit] = ip.left_derivative_check(static_cast<double>(m), 0.5);
    CHECK(slope == static_cast<double>(bit));
  }
}

TEST_CASE("integrating the real detector recovers the interpolation") {
  const InterpolatedPi ip(10000);
  CHECK(ip.integrate_pdf_real(2.0) == 1.0);  // the unit mass at 2 alone
  CHECK(ip.integrate_pdf_real(7.5) == 4.0);
  CHECK(ip.integrate_pdf_real(3.0) == 2.0);
  CHECK_THROWS_AS(ip.integrate_pdf_real(1.5), std::invalid_argument);

  for (double x = 2.0; x <= 99.9; x += 0.1) {
    if (std::fabs(ip.integrate_pdf_real(x) - ip.pi_hat(x)) > 1e-12) {
      CAPTURE(x);
      REQUIRE(false);
    }
  }
  for (u64 m = 2; m <= 9999; m += 41) {
    for (double frac : {0.0, 0.25, 0.75}) {
      const double x = static_cast<double>(m) + frac;
      if (std::fabs(ip.integrate_pdf_real(x) - ip.pi_hat(x)) > 1e-12) {
        CAPTURE(x);
        REQUIRE(false);
      }
    }
  }
  CHECK(true);
}

TEST_CASE("spike train realizes the step counting function") {
  const SpikeTrain train = SpikeTrain::build(1000);
  CHECK(train.locations.size() == 168);
  CHECK(step_pi_from_spikes(10.7, train) == 4);
  CHECK(step_pi_from_spikes(2.0, train) == 1);
  CHECK(step_pi_from_spikes(1.5, train) == 0);
  CHECK(step_pi_from_spikes(-3.0, train) == 0);
  CHECK(step_pi_from_spikes(1000.0, train) == 168);

  for (double x = 2.0; x <= 500.0; x += 0.37) {
    if (step_pi_from_spikes(x, train) != oracle::pi(static_cast<u64>(std::floor(x)))) {
      CAPTURE(x);
      REQUIRE(false);
    }
  }
  CHECK(true);

  CHECK_NOTHROW(SpikeTrain(std::vector<u64>{2, 3, 5, 7}));
  CHECK_NOTHROW(SpikeTrain(std::vector<u64>{5, 11, 13}));  // gaps are fine, order and primality are not
  CHECK_THROWS_AS(SpikeTrain(std::vector<u64>{2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(SpikeTrain(std::vector<u64>{5, 3}), std::invalid_argument);
}

TEST_CASE("interpolation construction guards") {
  const SieveBits bits = segmented_sieve(50);
  CHECK_NOTHROW(InterpolatedPi(bits, 50));
  CHECK_THROWS_AS(InterpolatedPi(bits, 60), std::invalid_argument);
  CHECK_THROWS_AS(InterpolatedPi(bits, 2), std::invalid_argument);
}
