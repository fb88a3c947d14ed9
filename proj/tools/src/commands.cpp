#include "minilb_cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "minilb/bench_csv.hpp"
#include "minilb/checkpoint.hpp"
#include "minilb/config.hpp"
#include "minilb/engine.hpp"
#include "minilb/error.hpp"
#include "minilb/perfport.hpp"
#include "minilb/vtk.hpp"
#include "minilb_cli/studies.hpp"

namespace minilb::cli {

namespace {

constexpr const char* kUsage =
    "usage: minilb <command> [options]\n"
    "\n"
    "commands:\n"
    "  run       run a case (--case ldc|tgv|vks, --nx, --ny, --re, --u0, --steps, ...)\n"
    "  validate  physics checks (--case tgv --sizes 32,64 | --case ldc | --case vks)\n"
    "  bench     sweep precision x layout x schedule and write a CSV\n"
    "  pp        performance portability from a platform,efficiency CSV\n";

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

std::string sci(double v) {
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s.setf(std::ios::scientific);
  s.precision(6);
  s << v;
  return s.str();
}

// Runs a command body and maps exceptions onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

void parseApp(CLI::App& app, const std::vector<std::string>& args) {
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);
}

// Removes "--name value" or "--name=value" from args.
std::optional<std::string> takeOption(std::vector<std::string>& args, const std::string& name) {
  for (auto it = args.begin(); it != args.end(); ++it) {
    if (*it == name) {
      if (it + 1 == args.end()) {
        throw ConfigError(name + " needs a value");
      }
      std::string value = *(it + 1);
      args.erase(it, it + 2);
      return value;
    }
    if (it->starts_with(name + "=")) {
      std::string value = it->substr(name.size() + 1);
      args.erase(it);
      return value;
    }
  }
  return std::nullopt;
}

std::vector<std::string> splitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) {
      items.push_back(item);
    }
  }
  return items;
}

void printCheck(std::ostream& out, bool pass, const std::string& what) {
  out << (pass ? "PASS " : "FAIL ") << what << "\n";
}

int validateTgv(const std::vector<std::size_t>& sizes, double u0, double nu, Precision precision, std::ostream& out) {
  if (sizes.size() < 2) {
    throw ConfigError("--sizes needs at least two grid sizes");
  }
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      throw ConfigError("--sizes must be strictly increasing");
    }
  }
  const auto samples = tgvConvergence(sizes, u0, nu, precision);
  for (const TgvSample& s : samples) {
    out << "L2=" << sci(s.l2) << " N=" << s.n << " steps=" << s.steps << " u0=" << sci(s.u0) << "\n";
  }
  // Second order: a doubling reduces the error by 4, accept [3, 5].
  const double lo = std::log2(3.0);
  const double hi = std::log2(5.0);
  bool ok = true;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double ratio = samples[i - 1].l2 / samples[i].l2;
    const double order = observedOrder(samples[i - 1], samples[i]);
    out << "RATIO=" << fixed(ratio, 3) << " ORDER=" << fixed(order, 3) << " N=" << samples[i - 1].n << "->"
        << samples[i].n << "\n";
    const bool pass = order >= lo && order <= hi;
    printCheck(out, pass, "convergence order " + fixed(order, 2) + " in [" + fixed(lo, 2) + ", " + fixed(hi, 2) + "]");
    ok = ok && pass;
  }
  return ok ? kExitOk : kExitNumerical;
}

int validateLdc(std::size_t n, std::int64_t steps, Precision precision, std::ostream& out) {
  CaseSpec spec;
  spec.kind = CaseKind::LDC;
  spec.nx = n;
  spec.ny = n;
  spec.u0 = 0.0;
  spec.validate();
  SimState state = makeState(spec, Layout::ColumnMajor, precision);
  const PopulationField initial = state.pre;
  const double mass0 = totalMass(state);
  for (std::int64_t t = 0; t < steps; ++t) {
    step(state);
  }
  checkFinite(state);
  const bool fixedPoint = state.pre == initial;
  const double drift = std::abs(totalMass(state) - mass0) / mass0;
  printCheck(out, fixedPoint, "fixed point: cavity at rest unchanged after " + std::to_string(steps) + " steps");
  printCheck(out, drift <= 1e-12, "mass drift " + sci(drift) + " <= 1e-12");
  return fixedPoint && drift <= 1e-12 ? kExitOk : kExitNumerical;
}

int validateVks(std::size_t diameter, double re, double u0, std::int64_t steps, Precision precision, int threads,
                std::ostream& out) {
  const CaseSpec spec = CaseSpec::vonKarman(diameter, re, u0);
  spec.validate();
  const SheddingResult r = measureShedding(spec, steps, precision, threads);
  out << "CROSSINGS=" << r.crossings << " AMPLITUDE=" << sci(r.amplitude) << "\n";
  if (r.strouhal) {
    out << "ST=" << fixed(*r.strouhal, 4) << "\n";
  }
  const bool st = r.strouhal && *r.strouhal >= 0.1 && *r.strouhal <= 0.3;
  printCheck(out, r.shedding,
             "shedding detected (" + std::to_string(r.crossings) + " zero crossings, need " +
                 std::to_string(kSheddingCrossings) + ")");
  printCheck(out, st, "Strouhal number in [0.1, 0.3]");
  return r.shedding && st ? kExitOk : kExitNumerical;
}

} // namespace

int cmdRun(const std::vector<std::string>& argsIn, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::string> args = argsIn;
    const auto configFile = takeOption(args, "--config");
    const auto restore = takeOption(args, "--restore");
    RunConfig config = configFile ? parseRunConfig(args, std::filesystem::path(*configFile)) : parseRunConfig(args);

    SimState state = restore ? restoreCheckpoint(*restore, config) : makeState(config);
    if (config.outputEvery > 0 || config.checkpointEvery > 0) {
      std::filesystem::create_directories(config.outDir);
    }
    RunHooks hooks;
    hooks.onOutput = [&](const SimState& s) { writeVtk(s, config.outDir / vtkFileName("minilb", s.timestep)); };
    hooks.onCheckpoint = [&](const SimState& s) {
      char name[32];
      std::snprintf(name, sizeof name, "checkpoint_%08lld.mlb", static_cast<long long>(s.timestep));
      writeCheckpoint(s, config.outDir / name);
    };
    const RunStats stats = run(state, config, hooks);
    out << "steps=" << stats.steps << " t=" << state.timestep << " seconds=" << fixed(stats.kernelSeconds, 6)
        << "\n";
    out << "MLUPS=" << fixed(stats.mlups, 3) << "\n";
    return kExitOk;
  });
}

int cmdValidate(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::string caseName;
    std::string sizes = "32,64";
    std::string precision = "double";
    double u0 = 0.04;
    double nu = 0.05;
    double re = 150.0;
    std::size_t n = 32;
    std::size_t diameter = 10;
    std::optional<std::int64_t> steps;
    int threads = 0;

    CLI::App app{"physics validation", "minilb validate"};
    app.set_help_flag();
    app.add_option("--case", caseName)->required();
    app.add_option("--sizes", sizes, "TGV grid sizes, comma separated");
    app.add_option("--precision", precision);
    app.add_option("--u0", u0)->check(CLI::PositiveNumber);
    app.add_option("--nu", nu)->check(CLI::PositiveNumber);
    app.add_option("--re", re)->check(CLI::PositiveNumber);
    app.add_option("--n", n, "LDC grid size")->check(CLI::Range(3, 1 << 16));
    app.add_option("--diameter", diameter, "VKS cylinder diameter")->check(CLI::PositiveNumber);
    app.add_option("--steps", steps)->check(CLI::PositiveNumber);
    app.add_option("--threads", threads)->check(CLI::NonNegativeNumber);
    parseApp(app, args);

    const Precision p = parsePrecision(precision);
    if (caseName == "tgv") {
      std::vector<std::size_t> ns;
      for (const std::string& s : splitList(sizes)) {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(s, &pos);
        if (pos != s.size() || v < 3) {
          throw ConfigError("bad grid size '" + s + "'");
        }
        ns.push_back(v);
      }
      return validateTgv(ns, u0, nu, p, out);
    }
    if (caseName == "ldc") {
      return validateLdc(n, steps.value_or(200), p, out);
    }
    if (caseName == "vks") {
      return validateVks(diameter, re, app.count("--u0") ? u0 : 0.1, steps.value_or(30000), p, threads, out);
    }
    throw ConfigError("unknown case '" + caseName + "' (expected tgv, ldc or vks)");
  });
}

int cmdBench(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<std::string> axes;
    std::string caseName = "tgv";
    std::size_t nx = 128;
    std::optional<std::size_t> ny;
    std::int64_t steps = 100;
    std::size_t tileX = 16;
    std::size_t tileY = 16;
    int threads = 0;
    int reps = 3;
    std::string outPath;

    CLI::App app{"benchmark sweep", "minilb bench"};
    app.set_help_flag();
    app.add_option("--axes", axes, "axis=value,value ... for precision, layout, schedule")->expected(1, 3);
    app.add_option("--case", caseName)->check(CLI::IsMember({"ldc", "tgv", "vks"}));
    app.add_option("--nx", nx)->check(CLI::PositiveNumber);
    app.add_option("--ny", ny)->check(CLI::PositiveNumber);
    app.add_option("--steps", steps)->check(CLI::PositiveNumber);
    app.add_option("--tile-x", tileX)->check(CLI::PositiveNumber);
    app.add_option("--tile-y", tileY)->check(CLI::PositiveNumber);
    app.add_option("--threads", threads)->check(CLI::NonNegativeNumber);
    app.add_option("--reps", reps)->check(CLI::PositiveNumber);
    app.add_option("--out", outPath)->required();
    parseApp(app, args);

    std::map<std::string, std::vector<std::string>> axis{
        {"precision", {"single"}}, {"layout", {"col"}}, {"schedule", {"auto"}}};
    for (const std::string& a : axes) {
      const auto eq = a.find('=');
      const std::string key = a.substr(0, eq);
      if (eq == std::string::npos || !axis.contains(key)) {
        throw ConfigError("bad axis '" + a + "' (expected precision=, layout= or schedule=)");
      }
      axis[key] = splitList(a.substr(eq + 1));
      if (axis[key].empty()) {
        throw ConfigError("axis '" + key + "' has no values");
      }
    }
    if (reps == 1) {
      err << "warning: --reps 1 keeps a single timing sample\n";
    }

    RunConfig base;
    base.caseSpec.kind = parseCaseKind(caseName);
    base.caseSpec.nx = nx;
    base.caseSpec.ny = ny.value_or(nx);
    if (base.caseSpec.kind == CaseKind::VKS) {
      base.caseSpec.diameter = static_cast<double>(base.caseSpec.ny / 8);
    }
    base.steps = steps;
    base.threads = threads;
    base.safetyCheck = false;

    std::vector<RunConfig> matrix;
    for (const std::string& prec : axis["precision"]) {
      for (const std::string& layout : axis["layout"]) {
        for (const std::string& schedule : axis["schedule"]) {
          RunConfig c = base;
          c.precision = parsePrecision(prec);
          c.layout = parseLayout(layout);
          if (schedule == "auto") {
            c.schedule = Schedule::automatic();
          } else if (schedule == "tiled") {
            // Tiles larger than the grid are left for the sweep to report.
            c.schedule = Schedule::tiled(tileX, tileY);
          } else {
            throw ConfigError("unknown schedule '" + schedule + "'");
          }
          matrix.push_back(c);
        }
      }
    }

    const auto records = benchSweep(matrix, reps);
    writeBenchCsv(records, std::filesystem::path(outPath));
    for (const PerfRecord& r : records) {
      out << "MLUPS=" << (r.ok() ? fixed(r.mlups, 3) : "NA") << " precision=" << r.precision
          << " layout=" << r.layout << " schedule=" << r.schedule;
      if (!r.ok()) {
        out << " status=" << r.status;
      }
      out << "\n";
    }
    out << "wrote " << records.size() << " records to " << outPath << "\n";
    return kExitOk;
  });
}

int cmdPp(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::string inPath;
    CLI::App app{"performance portability", "minilb pp"};
    app.set_help_flag();
    app.add_option("--in", inPath)->required();
    parseApp(app, args);

    const auto entries = readPpCsv(inPath);
    if (entries.empty()) {
      throw ConfigError(inPath + " has no platforms");
    }
    out << formatPp(entries) << "\n";
    return kExitOk;
  });
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << kUsage;
    return kExitUsage;
  }
  const std::string& command = args.front();
  const std::vector<std::string> rest(args.begin() + 1, args.end());
  if (command == "run") {
    return cmdRun(rest, out, err);
  }
  if (command == "validate") {
    return cmdValidate(rest, out, err);
  }
  if (command == "bench") {
    return cmdBench(rest, out, err);
  }
  if (command == "pp") {
    return cmdPp(rest, out, err);
  }
  if (command == "help" || command == "--help" || command == "-h") {
    out << kUsage;
    return kExitOk;
  }
  err << "unknown command '" << command << "'\n" << kUsage;
  return kExitUsage;
}

} // namespace minilb::cli
