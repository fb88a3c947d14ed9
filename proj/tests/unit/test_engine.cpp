#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "minilb/cases.hpp"
#include "minilb/engine.hpp"
#include "minilb/error.hpp"
#include "minilb/precision.hpp"
#include "test_util.hpp"

using namespace minilb;

namespace {

RunConfig tgvConfig(std::size_t n, std::int64_t steps, Precision p = Precision::Double) {
  RunConfig c;
  c.caseSpec.kind = CaseKind::TGV;
  c.caseSpec.nx = n;
  c.caseSpec.ny = n;
  c.caseSpec.u0 = 0.05;
  c.caseSpec.reynolds = 100.0;
  c.steps = steps;
  c.precision = p;
  return c;
}

// Cell-by-cell equality of the physical populations, independent of layout.
bool sameValues(const SimState& a, const SimState& b) {
  if (a.nx() != b.nx() || a.ny() != b.ny()) {
    return false;
  }
  for (std::size_t y = 0; y < a.ny(); ++y) {
    for (std::size_t x = 0; x < a.nx(); ++x) {
      for (std::size_t i = 0; i < 9; ++i) {
        if (a.pre.shifted(i, a.pre.grid()(x, y)) != b.pre.shifted(i, b.pre.grid()(x, y))) {
          return false;
        }
      }
    }
  }
  return true;
}

} // namespace

TEST_CASE("step on an undriven cavity only advances the clock") {
  for (const Precision p : testutil::kAllPrecisions) {
    CaseSpec spec;
    spec.nx = 12;
    spec.ny = 10;
    spec.u0 = 0.0;
    SimState s = initLDC(spec, Layout::ColumnMajor, p);
    const PopulationField before = s.pre;
    step(s);
    CHECK(s.timestep == 1);
    CHECK(s.pre == before);
  }
}

TEST_CASE("tiled and automatic schedules agree bitwise on TGV N=16") {
  for (const Precision p : testutil::kAllPrecisions) {
    SimState a = testutil::tgvState(16, p);
    SimState b = a;
    testutil::advance(a, 10, {Schedule::automatic(), 0});
    testutil::advance(b, 10, {Schedule::tiled(4, 4), 0});
    CHECK(a.pre == b.pre);
  }
}

TEST_CASE("timestep increases by one per step and buffers stay distinct") {
  SimState s = testutil::tgvState(8, Precision::Single);
  for (std::int64_t t = 1; t <= 5; ++t) {
    step(s);
    CHECK(s.timestep == t);
    CHECK_FALSE(s.pre.sharesStorageWith(s.post));
  }
}

TEST_CASE("run configuration invariants") {
  RunConfig c = tgvConfig(16, 10);
  CHECK_NOTHROW(c.validate());

  c.steps = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.steps = 10;

  c.schedule = Schedule::tiled(0, 4);
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.schedule = Schedule::tiled(17, 4);
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.schedule = Schedule::tiled(16, 16);
  CHECK_NOTHROW(c.validate());

  c.outputEvery = -1;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c.outputEvery = 0;
  c.threads = -2;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("run fires hooks on schedule") {
  SUBCASE("output every 3 steps over 10") {
    RunConfig c = tgvConfig(8, 10);
    c.outputEvery = 3;
    SimState s = makeState(c);
    std::vector<std::int64_t> seen;
    RunHooks hooks;
    hooks.onOutput = [&](const SimState& st) { seen.push_back(st.timestep); };
    const RunStats stats = run(s, c, hooks);
    CHECK(seen == std::vector<std::int64_t>{3, 6, 9});
    CHECK(stats.steps == 10);
    CHECK(s.timestep == 10);
  }
  SUBCASE("checkpoint at half the run fires once") {
    RunConfig c = tgvConfig(8, 100);
    c.checkpointEvery = c.steps / 2;
    SimState s = makeState(c);
    std::vector<std::int64_t> seen;
    RunHooks hooks;
    hooks.onCheckpoint = [&](const SimState& st) { seen.push_back(st.timestep); };
    run(s, c, hooks);
    CHECK(seen == std::vector<std::int64_t>{50});
  }
  SUBCASE("step hook sees every timestep") {
    RunConfig c = tgvConfig(8, 7);
    SimState s = makeState(c);
    std::int64_t last = 0;
    int calls = 0;
    RunHooks hooks;
    hooks.onStep = [&](const SimState& st) {
      CHECK(st.timestep == last + 1);
      last = st.timestep;
      ++calls;
    };
    run(s, c, hooks);
    CHECK(calls == 7);
  }
}

TEST_CASE("run statistics") {
  RunConfig c = tgvConfig(16, 20, Precision::Single);
  SimState s = makeState(c);
  const RunStats stats = run(s, c);
  CHECK(stats.cellUpdates == 16u * 16u * 20u);
  CHECK(stats.kernelSeconds > 0.0);
  CHECK(stats.mlups == doctest::Approx(static_cast<double>(stats.cellUpdates) / stats.kernelSeconds / 1e6));
}

TEST_CASE("run matches stepping by hand") {
  RunConfig c = tgvConfig(16, 25, Precision::Mixed1);
  c.schedule = Schedule::tiled(8, 2);
  SimState a = makeState(c);
  SimState b = a;
  run(a, c);
  testutil::advance(b, 25);
  CHECK(a.pre == b.pre);
  CHECK(a.timestep == b.timestep);
}

TEST_CASE("divergence is reported with the step index") {
  RunConfig c = tgvConfig(8, 5);
  SimState s = makeState(c);
  s.pre.set(3, 2, 2, std::numeric_limits<double>::quiet_NaN());
  try {
    run(s, c);
    FAIL("expected a NumericalError");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()) == "divergence at step 5");
  }

  SimState quiet = makeState(c);
  quiet.pre.set(3, 2, 2, std::numeric_limits<double>::infinity());
  c.safetyCheck = false;
  CHECK_NOTHROW(run(quiet, c));
  CHECK_THROWS_WITH_AS(checkFinite(quiet), "divergence at step 5", NumericalError);
}

TEST_CASE("divergence is caught at output steps before the end") {
  RunConfig c = tgvConfig(8, 10);
  c.outputEvery = 2;
  SimState s = makeState(c);
  s.pre.set(1, 0, 0, std::numeric_limits<double>::quiet_NaN());
  int outputs = 0;
  RunHooks hooks;
  hooks.onOutput = [&](const SimState&) { ++outputs; };
  CHECK_THROWS_WITH_AS(run(s, c, hooks), "divergence at step 2", NumericalError);
  CHECK(outputs == 0);
}

TEST_CASE("determinism across tiles and thread counts") {
  // Random tiles and worker counts against a single-threaded automatic run.
  auto g = testutil::rng(21);
  for (const Precision p : testutil::kAllPrecisions) {
    CaseSpec spec = CaseSpec::vonKarman(4, 100.0, 0.05);
    SimState ref = makeState(spec, Layout::ColumnMajor, p);
    const SimState start = ref;
    testutil::advance(ref, 30, {Schedule::automatic(), 1});
    for (int trial = 0; trial < 6; ++trial) {
      const auto tx = static_cast<std::size_t>(testutil::uniform(g, 1.0, static_cast<double>(spec.nx) + 1.0));
      const auto ty = static_cast<std::size_t>(testutil::uniform(g, 1.0, static_cast<double>(spec.ny) + 1.0));
      const int threads = 1 + trial % 8;
      SimState s = start;
      testutil::advance(s, 30, {Schedule::tiled(tx, ty), threads});
      INFO("precision " << std::string(toString(p)) << " tile " << tx << "x" << ty << " threads " << threads);
      CHECK(s.pre == ref.pre);
    }
    SimState eight = start;
    testutil::advance(eight, 30, {Schedule::automatic(), 8});
    CHECK(eight.pre == ref.pre);
  }
}

TEST_CASE("row-major and column-major runs agree cell for cell") {
  std::vector<CaseSpec> specs;
  {
    CaseSpec ldc;
    ldc.nx = 20;
    ldc.ny = 14;
    ldc.u0 = 0.1;
    specs.push_back(ldc);
  }
  {
    CaseSpec tgv;
    tgv.kind = CaseKind::TGV;
    tgv.nx = 24;
    tgv.ny = 24;
    tgv.u0 = 0.05;
    specs.push_back(tgv);
  }
  specs.push_back(CaseSpec::vonKarman(5, 100.0, 0.05));

  for (const CaseSpec& spec : specs) {
    for (const Precision p : testutil::kAllPrecisions) {
      SimState col = makeState(spec, Layout::ColumnMajor, p);
      SimState row = makeState(spec, Layout::RowMajor, p);
      REQUIRE(sameValues(col, row));
      testutil::advance(col, 40);
      testutil::advance(row, 40, {Schedule::tiled(3, 5), 2});
      INFO("case " << std::string(toString(spec.kind)) << " precision " << std::string(toString(p)));
      CHECK(sameValues(col, row));
    }
  }
}

TEST_CASE("TGV error grows as precision drops") {
  // N = 32 at t = 1000 with the default vortex (u0 = 0.05, Re = 100).
  std::vector<double> errors;
  for (const Precision p : {Precision::Double, Precision::Mixed2, Precision::Single, Precision::Mixed1}) {
    SimState s = testutil::tgvState(32, p);
    testutil::advance(s, 1000);
    const double e = l2VelocityError(s, 0.05);
    REQUIRE(std::isfinite(e));
    errors.push_back(e);
  }
  INFO("double " << errors[0] << " mixed2 " << errors[1] << " single " << errors[2] << " mixed1 " << errors[3]);
  CHECK(errors[0] <= errors[1]);
  CHECK(errors[1] <= errors[2]);
  CHECK(errors[2] <= errors[3]);
}

TEST_CASE("convertPrecision") {
  using D = ConversionDirection;

  SUBCASE("single and double are identity pairs on their own values") {
    const float f = 0.1f;
    CHECK(convertPrecision(f, Precision::Single, D::Store).value == static_cast<double>(f));
    CHECK(convertPrecision(f, Precision::Single, D::Compute).value == static_cast<double>(f));
    CHECK(convertPrecision(0.1, Precision::Double, D::Store).value == 0.1);
    CHECK(convertPrecision(0.1, Precision::Double, D::Compute).value == 0.1);
  }

  SUBCASE("mixed1 stores 0.1 as the nearest binary16") {
    // 0.1 lies in [2^-4, 2^-3) where the half spacing is 2^-14;
    // 0.1 * 2^14 = 1638.4 rounds to 1638.
    const double nearest = 1638.0 / 16384.0;
    const ConvertedValue v = convertPrecision(0.1, Precision::Mixed1, D::Store);
    CHECK(v.value == nearest);
    CHECK_FALSE(v.clamped);
    CHECK(std::abs(v.value - 0.1) / 0.1 <= std::ldexp(1.0, -11));
    CHECK(convertPrecision(0.1, Precision::Mixed1, D::Compute).value == static_cast<double>(0.1f));
  }

  SUBCASE("mixed2 computes in double and stores float") {
    CHECK(convertPrecision(0.1, Precision::Mixed2, D::Compute).value == 0.1);
    const double stored = convertPrecision(0.1, Precision::Mixed2, D::Store).value;
    // 0.1 in binary32 is 13421773 * 2^-27.
    CHECK(stored == 13421773.0 / 134217728.0);
    CHECK(stored == static_cast<double>(0.1f));
  }

  SUBCASE("store, compute, store is idempotent") {
    auto g = testutil::rng(22);
    for (const Precision p : testutil::kAllPrecisions) {
      for (int k = 0; k < 2000; ++k) {
        const double x = testutil::uniform(g, -2.0, 2.0) * std::pow(10.0, testutil::uniform(g, -4.0, 4.0));
        const double s1 = convertPrecision(x, p, D::Store).value;
        const double c = convertPrecision(s1, p, D::Compute).value;
        const double s2 = convertPrecision(c, p, D::Store).value;
        REQUIRE(c == s1);
        REQUIRE(s2 == s1);
      }
    }
  }

  SUBCASE("half overflow is strict by default and clamps on request") {
    CHECK(convertPrecision(65504.0, Precision::Mixed1, D::Store).value == 65504.0);
    // Below the midpoint to 2^16 still rounds to the largest finite half.
    CHECK(convertPrecision(65519.0, Precision::Mixed1, D::Store).value == 65504.0);
    // The midpoint ties to even, which is infinity.
    CHECK_THROWS_AS(convertPrecision(65520.0, Precision::Mixed1, D::Store), NumericalError);
    CHECK_THROWS_AS(convertPrecision(1e5, Precision::Mixed1, D::Store), NumericalError);
    CHECK_NOTHROW(convertPrecision(1e5, Precision::Mixed1, D::Compute));

    const ConvertedValue c = convertPrecision(-1e5, Precision::Mixed1, D::Store, OverflowPolicy::Clamp);
    CHECK(c.clamped);
    CHECK(c.value == -65504.0);
  }

  SUBCASE("float overflow") {
    CHECK_THROWS_AS(convertPrecision(1e300, Precision::Single, D::Store), NumericalError);
    CHECK_THROWS_AS(convertPrecision(1e300, Precision::Mixed2, D::Store), NumericalError);
    CHECK_NOTHROW(convertPrecision(1e300, Precision::Mixed2, D::Compute));
    const ConvertedValue c = convertPrecision(1e300, Precision::Single, D::Compute, OverflowPolicy::Clamp);
    CHECK(c.clamped);
    CHECK(c.value == static_cast<double>(std::numeric_limits<float>::max()));
  }

  SUBCASE("non-finite input is rejected") {
    for (const Precision p : testutil::kAllPrecisions) {
      CHECK_THROWS_AS(convertPrecision(std::numeric_limits<double>::quiet_NaN(), p, D::Store), NumericalError);
      CHECK_THROWS_AS(convertPrecision(-std::numeric_limits<double>::infinity(), p, D::Compute), NumericalError);
    }
  }
}
