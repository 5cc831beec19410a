#include <doctest.h>

#include <cmath>
#include <random>

#include "llf/errors.hpp"
#include "llf/plane.hpp"
#include "llf/remap.hpp"

using namespace llf;

TEST_SUITE("remap") {

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(RemapParams(0.0, 1.0, 0.2), ValidationError);
  CHECK_THROWS_AS(RemapParams(1.0, -0.1, 0.2), ValidationError);
  CHECK_THROWS_AS(RemapParams(1.0, 1.0, 0.0), ValidationError);
  CHECK_THROWS_AS(RemapParams(1.0, 1.0, 1.5), ValidationError);
  CHECK_NOTHROW(RemapParams(0.25, 0.0, 1.0));
}

TEST_CASE("remap_pixel worked examples") {
  const RemapParams identity(1.0, 1.0, 0.3);
  CHECK(remap_pixel(0.5, 0.5, identity) == 0.5);
  for (double i : {0.0, 0.1, 0.45, 0.9, 1.0}) {
    for (double g : {0.0, 0.2, 0.5, 1.0}) {
      CHECK(remap_pixel(i, g, identity) == doctest::Approx(i).epsilon(1e-12));
    }
  }

  // Detail branch: 0.5 + 0.2 * (0.5)^2 = 0.55.
  CHECK(remap_pixel(0.6, 0.5, RemapParams(2.0, 1.0, 0.2)) == doctest::Approx(0.55).epsilon(1e-12));
  // Edge branch with beta 0: 0.5 + (0 + 0.2) = 0.7.
  CHECK(remap_pixel(0.8, 0.5, RemapParams(1.0, 0.0, 0.2)) == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("branches agree exactly at the threshold") {
  for (double alpha : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (double beta : {0.0, 0.5, 1.0, 3.0}) {
      for (double sigma : {0.1, 0.2, 0.4}) {
        const RemapParams params(alpha, beta, sigma);
        const double g = 0.5;
        // |i-g| == sigma lands on the detail branch and must equal the edge
        // branch's limit f_e(0) + sigma.
        CHECK(remap_pixel(g + sigma, g, params) == doctest::Approx(g + sigma).epsilon(1e-12));
        CHECK(remap_pixel(g - sigma, g, params) == doctest::Approx(g - sigma).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("remap_pixel is odd about the anchor") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dd(0.0, 0.5);
  for (int trial = 0; trial < 2000; ++trial) {
    const double g = 0.5;
    const double d = dd(rng);
    const RemapParams params(0.25 + dd(rng) * 4.0, dd(rng) * 2.0, 0.05 + dd(rng));
    const double up = remap_pixel(g + d, g, params) - g;
    const double down = remap_pixel(g - d, g, params) - g;
    CHECK(up == doctest::Approx(-down).epsilon(1e-12));
  }
}

TEST_CASE("remap_pixel is non-decreasing in i") {
  for (double alpha : {0.25, 1.0, 3.0}) {
    for (double beta : {0.0, 0.5, 2.0}) {
      const RemapParams params(alpha, beta, 0.25);
      const double g = 0.4;
      double prev = remap_pixel(0.0, g, params);
      for (int step = 1; step <= 200; ++step) {
        const double value = remap_pixel(step / 200.0, g, params);
        CHECK(value >= prev - 1e-12);
        prev = value;
      }
    }
  }
}

TEST_CASE("identity parameters give an identity table") {
  const RemapLut lut = build_lut(RemapParams(1.0, 1.0, 0.35));
  for (int k = 0; k < 256; ++k) {
    CHECK(lut.table[k] == static_cast<int32_t>(std::llround(k * 256.0 / 255.0)));
  }
}

TEST_CASE("table starts at zero and splits at the sigma index") {
  for (double alpha : {0.25, 1.0, 2.0}) {
    for (double beta : {0.0, 1.0, 2.0}) {
      for (double sigma : {0.1, 0.2, 0.4, 1.0}) {
        const RemapLut lut = build_lut(RemapParams(alpha, beta, sigma));
        CHECK(lut.table[0] == 0);
        CHECK(lut.sigma_index == static_cast<int>(std::lround(sigma * 255.0)));
        for (int32_t v : lut.table) CHECK(v >= 0);
      }
    }
  }

  // Boundary entry k = 51 for sigma 0.2 sits on the detail side: 0.2 * 1^2.
  const RemapLut lut = build_lut(RemapParams(2.0, 1.0, 0.2));
  CHECK(lut.sigma_index == 51);
  CHECK(lut.table[51] == static_cast<int32_t>(std::llround(0.2 * 256.0)));
}

TEST_CASE("table entries stay within one Q8 step of the continuous forms") {
  for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
    for (double beta : {0.0, 0.5, 1.0, 3.0}) {
      for (double sigma : {0.1, 0.2, 0.4}) {
        const RemapParams params(alpha, beta, sigma);
        const RemapLut lut = build_lut(params);
        for (int k = 0; k < 256; ++k) {
          const double d = k / 255.0;
          const double continuous = k <= lut.sigma_index
                                        ? sigma * std::pow(d / sigma, alpha)
                                        : beta * (d - sigma) + sigma;
          CHECK(std::abs(lut.table[k] / 256.0 - continuous) <= 1.0 / 256.0);
        }
      }
    }
  }
}

TEST_CASE("lut apply matches the anchor for equal inputs") {
  const RemapLut lut = build_lut(RemapParams(2.0, 0.5, 0.2));
  for (int g = 0; g < 256; g += 17) {
    CHECK(remap_lut_apply(g, g, lut) == q8_of_byte(g));
  }
}

TEST_CASE("identity lut apply reproduces the input within two rounding steps") {
  // Each table entry is within half a Q8 step of k/255; the anchor term adds
  // another half step, so the split into anchor plus offset costs at most
  // 2^-8 (e.g. i=254, g=127 rounds both halves down).
  const RemapLut lut = build_lut(RemapParams(1.0, 1.0, 0.4));
  for (int k = 0; k < 256; ++k) {
    CHECK(std::abs(lut.table[k] / 256.0 - k / 255.0) <= std::pow(2.0, -9));
  }
  for (int i = 0; i < 256; ++i) {
    for (int g = 0; g < 256; g += 5) {
      const double value = remap_lut_apply(i, g, lut) / 256.0;
      CHECK(std::abs(value - i / 255.0) <= std::pow(2.0, -8) + 1e-12);
    }
  }
}

TEST_CASE("exhaustive lut faithfulness against the continuous remap") {
  // Error budget: one Q8 rounding for the anchor, one for the table entry,
  // plus the branch mismatch within half an index step of sigma where the
  // table and the continuous condition can disagree.
  for (double alpha : {0.25, 0.5, 1.0, 2.0}) {
    for (double beta : {0.0, 0.5, 1.0}) {
      for (double sigma : {0.1, 0.2, 0.4}) {
        const RemapParams params(alpha, beta, sigma);
        const RemapLut lut = build_lut(params);
        // The 1e-4 slack covers the second-order curvature of the detail
        // branch inside the half-step mismatch window around sigma.
        const double bound =
            std::pow(2.0, -8) + std::max(alpha, beta) / 510.0 + 1e-4;
        double observed = 0.0;
        for (int i = 0; i < 256; ++i) {
          for (int g = 0; g < 256; ++g) {
            const double fast = remap_lut_apply(i, g, lut) / 256.0;
            const double exact = remap_pixel(i / 255.0, g / 255.0, params);
            observed = std::max(observed, std::abs(fast - exact));
          }
        }
        INFO("alpha ", alpha, " beta ", beta, " sigma ", sigma, " max deviation ", observed);
        CHECK(observed <= bound);
      }
    }
  }
}

}  // TEST_SUITE
