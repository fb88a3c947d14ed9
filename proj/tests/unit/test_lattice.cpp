#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "minilb/d2q9.hpp"
#include "minilb/error.hpp"
#include "minilb/half.hpp"
#include "minilb/kernel.hpp"
#include "minilb/lattice.hpp"
#include "minilb/state.hpp"
#include "reference_lbm.hpp"
#include "test_util.hpp"

using namespace minilb;

namespace {

// Exact rational arithmetic for the lattice tables.
struct Frac {
  std::int64_t n = 0;
  std::int64_t d = 1;
};

Frac reduce(Frac f) {
  const std::int64_t g = std::gcd(f.n, f.d);
  return g == 0 ? f : Frac{f.n / g, f.d / g};
}

Frac operator+(Frac a, Frac b) { return reduce({a.n * b.d + b.n * a.d, a.d * b.d}); }
Frac operator*(Frac a, std::int64_t k) { return reduce({a.n * k, a.d}); }
bool operator==(Frac a, Frac b) { return a.n * b.d == b.n * a.d; }

Frac weight(std::size_t i) { return {d2q9::kWeightsExact[i].num, d2q9::kWeightsExact[i].den}; }

Populations randomPopulations(std::mt19937_64& g, double rho) {
  Populations f;
  double sum = 0.0;
  for (std::size_t i = 0; i < 9; ++i) {
    f[i] = d2q9::kWeights[i] * testutil::uniform(g, 0.5, 1.5);
    sum += f[i];
  }
  for (double& v : f) {
    v *= rho / sum;
  }
  return f;
}

double relErr(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

} // namespace

TEST_CASE("weights sum to one exactly") {
  Frac sum;
  for (std::size_t i = 0; i < 9; ++i) {
    sum = sum + weight(i);
  }
  CHECK(sum == Frac{1, 1});
}

TEST_CASE("first moment of the weights vanishes") {
  Frac mx;
  Frac my;
  for (std::size_t i = 0; i < 9; ++i) {
    mx = mx + weight(i) * d2q9::kCx[i];
    my = my + weight(i) * d2q9::kCy[i];
  }
  CHECK(mx == Frac{0, 1});
  CHECK(my == Frac{0, 1});
}

TEST_CASE("second moment of the weights is cs^2 times identity") {
  const Frac cs2{d2q9::kCsSqExact.num, d2q9::kCsSqExact.den};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      Frac m;
      for (std::size_t i = 0; i < 9; ++i) {
        const int ca = a == 0 ? d2q9::kCx[i] : d2q9::kCy[i];
        const int cb = b == 0 ? d2q9::kCx[i] : d2q9::kCy[i];
        m = m + weight(i) * (ca * cb);
      }
      CHECK(m == (a == b ? cs2 : Frac{0, 1}));
    }
  }
}

TEST_CASE("opposite table is an involution that negates velocities") {
  for (std::size_t i = 0; i < 9; ++i) {
    const std::size_t o = d2q9::kOpposite[i];
    CHECK(d2q9::kOpposite[o] == i);
    CHECK(d2q9::kCx[o] == -d2q9::kCx[i]);
    CHECK(d2q9::kCy[o] == -d2q9::kCy[i]);
  }
}

TEST_CASE("floating weights match the rational table") {
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(d2q9::kWeights[i] == static_cast<double>(d2q9::kWeightsExact[i].num) / d2q9::kWeightsExact[i].den);
  }
  CHECK(d2q9::kCsSq == 1.0 / 3.0);
}

TEST_SUITE("half") {
  TEST_CASE("known bit patterns") {
    CHECK(floatToHalf(1.0f).bits == 0x3c00);
    CHECK(floatToHalf(-2.0f).bits == 0xc000);
    CHECK(floatToHalf(0.0f).bits == 0x0000);
    CHECK(floatToHalf(-0.0f).bits == 0x8000);
    CHECK(floatToHalf(65504.0f).bits == 0x7bff);
    CHECK(floatToHalf(0x1p-24f).bits == 0x0001);
    CHECK(floatToHalf(0x1p-14f).bits == 0x0400);
    CHECK(floatToHalf(std::numeric_limits<float>::infinity()).bits == 0x7c00);
    CHECK(halfToFloat(Half{0x3555}) == doctest::Approx(0.333251953125));
  }

  TEST_CASE("overflow goes to infinity past the rounding midpoint") {
    CHECK(floatToHalf(65519.0f).bits == 0x7bff);
    CHECK(floatToHalf(65520.0f).bits == 0x7c00);
    CHECK(std::isnan(halfToFloat(floatToHalf(std::numeric_limits<float>::quiet_NaN()))));
  }

  TEST_CASE("ties round to even") {
    // 1 + 2^-11 lies halfway between 1 and 1 + 2^-10.
    CHECK(floatToHalf(1.0f + 0x1p-11f).bits == 0x3c00);
    CHECK(floatToHalf(1.0f + 3 * 0x1p-11f).bits == 0x3c02);
    // Subnormal midpoint: 1.5 * 2^-24 rounds to 2 * 2^-24.
    CHECK(floatToHalf(1.5f * 0x1p-24f).bits == 0x0002);
    CHECK(floatToHalf(0.5f * 0x1p-24f).bits == 0x0000);
  }

  TEST_CASE("every finite half round-trips through float") {
    for (std::uint32_t b = 0; b < 0x10000; ++b) {
      const Half h{static_cast<std::uint16_t>(b)};
      if (((b >> 10) & 0x1f) == 0x1f) {
        continue;
      }
      REQUIRE(floatToHalf(halfToFloat(h)).bits == h.bits);
    }
  }

  TEST_CASE("conversion picks the nearest half") {
    // Oracle: sorted table of all finite non-negative halves.
    std::vector<float> table;
    for (std::uint32_t b = 0; b < 0x7c00; ++b) {
      table.push_back(halfToFloat(Half{static_cast<std::uint16_t>(b)}));
    }
    auto g = testutil::rng(7);
    for (int k = 0; k < 20000; ++k) {
      const float x = static_cast<float>(std::exp(testutil::uniform(g, std::log(1e-8), std::log(65000.0))));
      const float got = halfToFloat(floatToHalf(x));
      auto hi = std::lower_bound(table.begin(), table.end(), x);
      REQUIRE(hi != table.end());
      const float above = *hi;
      const float below = hi == table.begin() ? above : *(hi - 1);
      const double dBelow = static_cast<double>(x) - below;
      const double dAbove = static_cast<double>(above) - x;
      if (dBelow < dAbove) {
        REQUIRE(got == below);
      } else if (dAbove < dBelow) {
        REQUIRE(got == above);
      } else {
        REQUIRE((got == below || got == above));
      }
    }
  }
}

TEST_SUITE("moments") {
  TEST_CASE("rest weights give unit density at rest") {
    Populations f;
    std::copy(d2q9::kWeights.begin(), d2q9::kWeights.end(), f.begin());
    const Moments m = moments(f);
    CHECK(m.rho == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m.ux == 0.0);
    CHECK(m.uy == 0.0);
  }

  TEST_CASE("only the rest population") {
    Populations f{};
    f[0] = 1.0;
    const Moments m = moments(f);
    CHECK(m.rho == 1.0);
    CHECK(m.ux == 0.0);
    CHECK(m.uy == 0.0);
  }

  TEST_CASE("equilibrium at (1, 0.1, 0)") {
    const Moments m = moments(equilibrium(1.0, 0.1, 0.0));
    CHECK(relErr(m.rho, 1.0) <= 1e-14);
    CHECK(relErr(m.ux, 0.1) <= 1e-14);
    CHECK(std::abs(m.uy) <= 1e-15);
  }

  TEST_CASE("zero density has zero velocity") {
    Populations f{};
    f[1] = 0.5;
    f[3] = -0.5;
    const Moments m = moments(f);
    CHECK(m.rho == 0.0);
    CHECK(m.ux == 0.0);
    CHECK(m.uy == 0.0);
  }

  TEST_CASE("non-finite input is rejected") {
    Populations f{};
    f[4] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_WITH_AS(moments(f), doctest::Contains("non-finite population"), NumericalError);
    f[4] = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(moments(f), NumericalError);
  }

  TEST_CASE("moment exactness of the equilibrium over random states") {
    auto g = testutil::rng(11);
    for (const double rho : {0.5, 1.0, 2.0}) {
      for (int k = 0; k < 500; ++k) {
        const double speed = testutil::uniform(g, 0.0, 0.2);
        const double angle = testutil::uniform(g, 0.0, 2.0 * M_PI);
        const double ux = speed * std::cos(angle);
        const double uy = speed * std::sin(angle);
        const Moments m = moments(equilibrium(rho, ux, uy));
        REQUIRE(relErr(m.rho, rho) <= 1e-13);
        REQUIRE(std::abs(m.ux - ux) <= 1e-13 * std::max(speed, 1e-3));
        REQUIRE(std::abs(m.uy - uy) <= 1e-13 * std::max(speed, 1e-3));
      }
    }
  }
}

TEST_SUITE("equilibrium") {
  TEST_CASE("zero velocity gives the weights") {
    const Populations f = equilibrium(1.0, 0.0, 0.0);
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(f[i] == doctest::Approx(d2q9::kWeights[i]).epsilon(1e-15));
    }
  }

  TEST_CASE("hand evaluation for (1, 0.1, 0)") {
    const Populations f = equilibrium(1.0, 0.1, 0.0);
    CHECK(f[1] == doctest::Approx((1.0 + 0.3 + 0.045 - 0.015) / 9.0).epsilon(1e-14));
    CHECK(f[1] == doctest::Approx(0.1477777777777778).epsilon(1e-14));
  }

  TEST_CASE("linear in density at rest") {
    const Populations f = equilibrium(2.0, 0.0, 0.0);
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(f[i] == doctest::Approx(2.0 * d2q9::kWeights[i]).epsilon(1e-15));
    }
  }

  TEST_CASE("matches the textbook expression") {
    auto g = testutil::rng(3);
    for (int k = 0; k < 200; ++k) {
      const double rho = testutil::uniform(g, 0.5, 2.0);
      const double ux = testutil::uniform(g, -0.15, 0.15);
      const double uy = testutil::uniform(g, -0.15, 0.15);
      const auto expect = reference::feq(rho, ux, uy);
      const Populations got = equilibrium(rho, ux, uy);
      for (std::size_t i = 0; i < 9; ++i) {
        REQUIRE(got[i] == doctest::Approx(expect[i]).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("mirror symmetry of the lattice") {
    const Populations a = equilibrium(1.1, 0.07, -0.03);
    const Populations b = equilibrium(1.1, -0.07, 0.03);
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(a[i] == doctest::Approx(b[d2q9::kOpposite[i]]).epsilon(1e-15));
    }
  }
}

TEST_SUITE("collide") {
  TEST_CASE("equilibrium is a fixed point for any omega") {
    const Populations eq = equilibrium(1.05, 0.04, -0.02);
    for (const double omega : {0.3, 1.0, 1.7, 1.99}) {
      RelaxationParams p;
      p.omega = omega;
      const Populations out = collide(eq, p);
      for (std::size_t i = 0; i < 9; ++i) {
        CHECK(out[i] == doctest::Approx(eq[i]).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("omega one relaxes fully") {
    auto g = testutil::rng(5);
    const Populations f = randomPopulations(g, 1.0);
    RelaxationParams p;
    p.omega = 1.0;
    const Moments m = moments(f);
    const Populations eq = equilibrium(m.rho, m.ux, m.uy);
    const Populations out = collide(f, p);
    for (std::size_t i = 0; i < 9; ++i) {
      CHECK(out[i] == doctest::Approx(eq[i]).epsilon(1e-14));
    }
  }

  TEST_CASE("mass and momentum are conserved") {
    auto g = testutil::rng(13);
    for (int k = 0; k < 1000; ++k) {
      const Populations f = randomPopulations(g, k == 0 ? 1.0 : testutil::uniform(g, 0.5, 2.0));
      RelaxationParams p;
      p.omega = k == 0 ? 1.5 : testutil::uniform(g, 0.05, 1.95);
      const Populations out = collide(f, p);
      // Independent summation in a different order.
      double r0 = 0, r1 = 0, x0 = 0, x1 = 0, y0 = 0, y1 = 0;
      for (std::size_t i = 9; i-- > 0;) {
        r0 += f[i];
        r1 += out[i];
        x0 += f[i] * reference::cx[i];
        x1 += out[i] * reference::cx[i];
        y0 += f[i] * reference::cy[i];
        y1 += out[i] * reference::cy[i];
      }
      REQUIRE(relErr(r1, r0) <= 1e-13);
      REQUIRE(std::abs(x1 - x0) <= 1e-13 * r0);
      REQUIRE(std::abs(y1 - y0) <= 1e-13 * r0);
    }
  }

  TEST_CASE("source term is added after relaxation") {
    RelaxationParams p;
    p.omega = 1.0;
    p.source = std::array<double, 9>{0, 1e-3, 0, -1e-3, 0, 0, 0, 0, 0};
    const Populations eq = equilibrium(1.0, 0.0, 0.0);
    const Populations out = collide(eq, p);
    CHECK(out[1] - eq[1] == doctest::Approx(1e-3).epsilon(1e-9));
    CHECK(out[3] - eq[3] == doctest::Approx(-1e-3).epsilon(1e-9));
  }

  TEST_CASE("omega outside (0, 2) is a configuration error") {
    const Populations eq = equilibrium(1.0, 0.0, 0.0);
    for (const double omega : {0.0, -0.5, 2.0, 2.5}) {
      RelaxationParams p;
      p.omega = omega;
      CHECK_THROWS_AS(collide(eq, p), ConfigError);
    }
  }
}

TEST_SUITE("relaxation mapping") {
  TEST_CASE("Re 1000, u0 0.1, L 100") {
    const RelaxationParams p = omegaFromReynolds(1000.0, 0.1, 100.0);
    CHECK(p.nu == doctest::Approx(0.01).epsilon(1e-14));
    CHECK(p.omega == doctest::Approx(1.0 / 0.53).epsilon(1e-14));
  }

  TEST_CASE("Re 6, u0 0.1, L 10 gives omega one") {
    const RelaxationParams p = omegaFromReynolds(6.0, 0.1, 10.0);
    CHECK(p.nu == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(p.omega == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("viscosity round trip") {
    auto g = testutil::rng(17);
    for (int k = 0; k < 200; ++k) {
      const double nu = std::exp(testutil::uniform(g, std::log(1e-2), std::log(1.0)));
      const RelaxationParams p = omegaFromViscosity(nu);
      REQUIRE(p.omega > 0.0);
      REQUIRE(p.omega < 2.0);
      REQUIRE(relErr(viscosityFromOmega(p.omega), nu) <= 1e-14);
    }
  }

  TEST_CASE("round trip at small viscosity is limited by the rounding of omega") {
    // omega = 2 - 12 nu + ..., so one ulp of omega is eps / (6 nu) relative in nu.
    auto g = testutil::rng(19);
    const double eps = std::numeric_limits<double>::epsilon();
    for (int k = 0; k < 200; ++k) {
      const double nu = std::exp(testutil::uniform(g, std::log(1e-6), std::log(1e-2)));
      const double omega = omegaFromViscosity(nu).omega;
      REQUIRE(relErr(viscosityFromOmega(omega), nu) <= 4.0 * eps * (1.0 + 1.0 / (6.0 * nu)));
    }
  }

  TEST_CASE("non-positive viscosity names the offending value") {
    CHECK_THROWS_WITH_AS(omegaFromViscosity(0.0), doctest::Contains("unstable parameters"), ConfigError);
    CHECK_THROWS_WITH_AS(omegaFromViscosity(-0.25), doctest::Contains("-0.25"), ConfigError);
    CHECK_THROWS_AS(omegaFromReynolds(0.0, 0.1, 10.0), ConfigError);
    CHECK_THROWS_AS(omegaFromReynolds(100.0, 0.0, 10.0), ConfigError);
  }
}

TEST_SUITE("fused kernel") {
  namespace {
  SimState periodicState(std::size_t nx, std::size_t ny, Precision p, Layout layout = Layout::ColumnMajor) {
    SimState s(nx, ny, layout, p);
    s.params = omegaFromViscosity(0.1);
    return s;
  }

  void fillRandom(SimState& s, std::uint64_t seed) {
    auto g = testutil::rng(seed);
    for (std::size_t y = 0; y < s.ny(); ++y) {
      for (std::size_t x = 0; x < s.nx(); ++x) {
        const Populations f = equilibrium(testutil::uniform(g, 0.95, 1.05), testutil::uniform(g, -0.05, 0.05),
                                          testutil::uniform(g, -0.05, 0.05));
        for (std::size_t i = 0; i < 9; ++i) {
          s.pre.set(i, x, y, f[i] * testutil::uniform(g, 0.98, 1.02));
        }
      }
    }
  }
  } // namespace

  TEST_CASE("uniform rest field is a bitwise fixed point") {
    for (const Precision p : testutil::kAllPrecisions) {
      SimState s = periodicState(8, 6, p);
      initializeEquilibrium(s, [](std::size_t, std::size_t) { return Moments{1.0, 0.0, 0.0}; });
      const PopulationField before = s.pre;
      fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision);
      CHECK(s.post == before);
    }
  }

  TEST_CASE("uniform moving field is steady to rounding") {
    SimState s = periodicState(8, 6, Precision::Double);
    initializeEquilibrium(s, [](std::size_t, std::size_t) { return Moments{1.0, 0.08, -0.03}; });
    fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision);
    for (std::size_t y = 0; y < 6; ++y) {
      for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t i = 0; i < 9; ++i) {
          REQUIRE(std::abs(s.post.get(i, x, y) - s.pre.get(i, x, y)) <= 1e-15);
        }
      }
    }
  }

  TEST_CASE("4x4 periodic grid with one perturbed cell matches the reference") {
    for (const Layout layout : {Layout::ColumnMajor, Layout::RowMajor}) {
      SimState s = periodicState(4, 4, Precision::Double, layout);
      initializeEquilibrium(s, [](std::size_t, std::size_t) { return Moments{1.0, 0.02, 0.01}; });
      const Populations bump = equilibrium(1.1, -0.05, 0.07);
      for (std::size_t i = 0; i < 9; ++i) {
        s.pre.set(i, 1, 2, bump[i]);
      }
      reference::Grid ref = testutil::toReference(s);
      fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision);
      ref.step(s.params.omega);
      for (std::size_t y = 0; y < 4; ++y) {
        for (std::size_t x = 0; x < 4; ++x) {
          for (std::size_t i = 0; i < 9; ++i) {
            REQUIRE(s.post.get(i, x, y) == doctest::Approx(ref.at(x, y).f[i]).epsilon(1e-14));
          }
        }
      }
    }
  }

  TEST_CASE("random periodic field matches the reference over several steps") {
    SimState s = periodicState(7, 5, Precision::Double);
    fillRandom(s, 21);
    reference::Grid ref = testutil::toReference(s);
    for (int t = 0; t < 5; ++t) {
      fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision);
      s.swapPopulations();
      ref.step(s.params.omega);
    }
    for (std::size_t y = 0; y < 5; ++y) {
      for (std::size_t x = 0; x < 7; ++x) {
        for (std::size_t i = 0; i < 9; ++i) {
          REQUIRE(s.pre.get(i, x, y) == doctest::Approx(ref.at(x, y).f[i]).epsilon(1e-13));
        }
      }
    }
  }

  TEST_CASE("pure streaming permutes the stored values") {
    for (const Precision p : testutil::kAllPrecisions) {
      SimState s = periodicState(6, 5, p);
      fillRandom(s, 23);
      fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision, {}, KernelVariant::StreamOnly);
      for (std::size_t i = 0; i < 9; ++i) {
        std::vector<double> a;
        std::vector<double> b;
        for (std::size_t k = 0; k < s.pre.cells(); ++k) {
          a.push_back(s.pre.shifted(i, k));
          b.push_back(s.post.shifted(i, k));
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        REQUIRE(a == b);
      }
      // And each value moved by c_i.
      for (std::size_t y = 0; y < 5; ++y) {
        for (std::size_t x = 0; x < 6; ++x) {
          for (std::size_t i = 0; i < 9; ++i) {
            const std::size_t sx = reference::wrap(static_cast<long>(x) - reference::cx[i], 6);
            const std::size_t sy = reference::wrap(static_cast<long>(y) - reference::cy[i], 5);
            REQUIRE(s.post.get(i, x, y) == s.pre.get(i, sx, sy));
          }
        }
      }
    }
  }

  TEST_CASE("every schedule gives bitwise identical output") {
    for (const Precision p : testutil::kAllPrecisions) {
      for (const Layout layout : {Layout::ColumnMajor, Layout::RowMajor}) {
        SimState s = periodicState(13, 9, p, layout);
        fillRandom(s, 29);
        fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision, {Schedule::automatic(), 1});
        const PopulationField expect = s.post;
        const Schedule schedules[] = {Schedule::automatic(), Schedule::tiled(1, 1), Schedule::tiled(4, 4),
                                      Schedule::tiled(13, 9), Schedule::tiled(5, 2), Schedule::tiled(1, 9)};
        for (const Schedule& sch : schedules) {
          for (const int threads : {1, 3, 8}) {
            PopulationField out(13, 9, layout, storagePrecision(p));
            fusedCollideStream(s.pre, out, s.params, s.mask, s.precision, {sch, threads});
            REQUIRE(out == expect);
          }
        }
      }
    }
  }

  TEST_CASE("pre field is not modified") {
    SimState s = periodicState(5, 5, Precision::Single);
    fillRandom(s, 31);
    const PopulationField before = s.pre;
    fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision, {Schedule::tiled(2, 3), 4});
    CHECK(s.pre == before);
  }

  TEST_CASE("mass is conserved on a periodic grid") {
    SimState s = periodicState(16, 12, Precision::Double);
    fillRandom(s, 37);
    auto mass = [](const PopulationField& f) {
      reference::Kahan k;
      for (std::size_t y = 0; y < f.ny(); ++y) {
        for (std::size_t x = 0; x < f.nx(); ++x) {
          for (std::size_t i = 0; i < 9; ++i) {
            k.add(f.get(i, x, y));
          }
        }
      }
      return k.value();
    };
    const double m0 = mass(s.pre);
    for (int t = 0; t < 20; ++t) {
      fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision);
      s.swapPopulations();
    }
    CHECK(std::abs(mass(s.pre) - m0) / m0 <= 1e-12);
  }

  TEST_CASE("argument errors") {
    SimState s = periodicState(4, 4, Precision::Single);
    PopulationField wrongShape(4, 5, Layout::ColumnMajor, StoragePrecision::Single);
    CHECK_THROWS_AS(fusedCollideStream(s.pre, wrongShape, s.params, s.mask, s.precision), ConfigError);
    PopulationField wrongLayout(4, 4, Layout::RowMajor, StoragePrecision::Single);
    CHECK_THROWS_AS(fusedCollideStream(s.pre, wrongLayout, s.params, s.mask, s.precision), ConfigError);
    CHECK_THROWS_AS(fusedCollideStream(s.pre, s.pre, s.params, s.mask, s.precision), ConfigError);
    CHECK_THROWS_AS(fusedCollideStream(s.pre, s.post, s.params, s.mask, Precision::Double), ConfigError);
    CellMask smallMask(3, 4, Layout::ColumnMajor);
    CHECK_THROWS_AS(fusedCollideStream(s.pre, s.post, s.params, smallMask, s.precision), ConfigError);
    CHECK_THROWS_AS(fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision, {Schedule::tiled(0, 1), 1}),
                    ConfigError);
    CHECK_THROWS_AS(fusedCollideStream(s.pre, s.post, s.params, s.mask, s.precision, {Schedule::tiled(5, 1), 1}),
                    ConfigError);
    RelaxationParams bad;
    bad.omega = 2.0;
    CHECK_THROWS_AS(fusedCollideStream(s.pre, s.post, bad, s.mask, s.precision), ConfigError);
  }
}
