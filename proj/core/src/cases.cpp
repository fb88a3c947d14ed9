#include "minilb/cases.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "minilb/error.hpp"

namespace minilb {

namespace {

// Largest lattice velocity accepted by the low-Mach configuration rule (0.3 c_s).
const double kMaxVelocity = 0.3 * std::sqrt(d2q9::kCsSq);

std::string str(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

} // namespace

std::string_view toString(CaseKind kind) noexcept {
  switch (kind) {
  case CaseKind::LDC: return "ldc";
  case CaseKind::TGV: return "tgv";
  case CaseKind::VKS: break;
  }
  return "vks";
}

CaseKind parseCaseKind(std::string_view text) {
  if (text == "ldc") return CaseKind::LDC;
  if (text == "tgv") return CaseKind::TGV;
  if (text == "vks") return CaseKind::VKS;
  throw ConfigError("unknown case '" + std::string(text) + "' (expected ldc, tgv or vks)");
}

CaseSpec CaseSpec::vonKarman(std::size_t diameter, double reynolds, double u0) {
  CaseSpec spec;
  spec.kind = CaseKind::VKS;
  spec.diameter = static_cast<double>(diameter);
  spec.nx = 24 * diameter;
  spec.ny = 8 * diameter;
  spec.reynolds = reynolds;
  spec.u0 = u0;
  return spec;
}

double CaseSpec::characteristicLength() const {
  switch (kind) {
  case CaseKind::LDC: return static_cast<double>(ny);
  case CaseKind::TGV: return static_cast<double>(nx);
  case CaseKind::VKS: break;
  }
  return diameter;
}

double CaseSpec::cylinderX() const {
  return centerX.value_or(6.0 * diameter);
}

double CaseSpec::cylinderY() const {
  if (centerY) {
    return *centerY;
  }
  const double mid = static_cast<double>(ny) / 2.0;
  return symmetric ? mid : mid + 0.5;
}

void CaseSpec::validate() const {
  if (nx < 3 || ny < 3) {
    throw ConfigError("grid must be at least 3x3 (got " + std::to_string(nx) + "x" + std::to_string(ny) + ")");
  }
  if (!(reynolds > 0.0) || !std::isfinite(reynolds)) {
    throw ConfigError("Reynolds number must be positive (got " + str(reynolds) + ")");
  }
  if (!std::isfinite(u0) || u0 < 0.0 || u0 > kMaxVelocity) {
    throw ConfigError("u0=" + str(u0) + " outside [0, 0.3 c_s] = [0, " + str(kMaxVelocity) + "]");
  }
  if (u0 == 0.0 && kind != CaseKind::LDC) {
    throw ConfigError("u0 must be positive for " + std::string(toString(kind)));
  }
  if (viscosity && !(*viscosity > 0.0)) {
    throw ConfigError("viscosity must be positive (got " + str(*viscosity) + ")");
  }
  if (kind == CaseKind::TGV && nx != ny) {
    throw ConfigError("Taylor-Green vortex needs a square grid (got " + std::to_string(nx) + "x" +
                      std::to_string(ny) + ")");
  }
  if (kind == CaseKind::VKS) {
    if (!(diameter > 0.0)) {
      throw ConfigError("cylinder diameter must be positive");
    }
    const double r = diameter / 2.0;
    const double cx = cylinderX();
    const double cy = cylinderY();
    const double width = static_cast<double>(nx);
    const double height = static_cast<double>(ny);
    // Walls occupy the first and last row, the inlet the first column.
    if (cy - r <= 1.0 || cy + r >= height - 1.0 || cx - r <= 1.0) {
      throw ConfigError("cylinder (centre " + str(cx) + ", " + str(cy) + ", D=" + str(diameter) +
                        ") touches the channel boundary");
    }
    if (width - (cx + r) < 4.0 * diameter) {
      throw ConfigError("cylinder needs at least 4D of channel downstream");
    }
  }
}

RelaxationParams CaseSpec::relaxation() const {
  if (viscosity) {
    return omegaFromViscosity(*viscosity);
  }
  if (u0 == 0.0) {
    return omegaFromViscosity(1.0 / 6.0);
  }
  return omegaFromReynolds(reynolds, u0, characteristicLength());
}

SimState initLDC(const CaseSpec& spec, Layout layout, Precision precision) {
  if (spec.kind != CaseKind::LDC) {
    throw ConfigError("initLDC called with a " + std::string(toString(spec.kind)) + " case");
  }
  spec.validate();
  SimState state(spec.nx, spec.ny, layout, precision);
  state.params = spec.relaxation();
  const std::size_t top = spec.ny - 1;
  for (std::size_t y = 0; y < spec.ny; ++y) {
    state.mask.setSolid(0, y);
    state.mask.setSolid(spec.nx - 1, y);
  }
  for (std::size_t x = 1; x + 1 < spec.nx; ++x) {
    state.mask.setSolid(x, 0);
    state.mask.setMovingWall(x, top, {spec.u0, 0.0});
  }
  initializeEquilibrium(state, [](std::size_t, std::size_t) { return Moments{1.0, 0.0, 0.0}; });
  return state;
}

Moments tgvAnalytic(double x, double y, double t, double nu, double u0, std::size_t n) {
  const double k = 2.0 * std::numbers::pi / static_cast<double>(n);
  const double decay = std::exp(-2.0 * nu * k * k * t);
  const double ux = -u0 * std::cos(k * x) * std::sin(k * y) * decay;
  const double uy = u0 * std::sin(k * x) * std::cos(k * y) * decay;
  const double rho = 1.0 - 0.75 * u0 * u0 * (std::cos(2.0 * k * x) + std::cos(2.0 * k * y)) * decay * decay;
  return {rho, ux, uy};
}

SimState initTGV(const CaseSpec& spec, Layout layout, Precision precision) {
  if (spec.kind != CaseKind::TGV) {
    throw ConfigError("initTGV called with a " + std::string(toString(spec.kind)) + " case");
  }
  spec.validate();
  SimState state(spec.nx, spec.ny, layout, precision);
  state.params = spec.relaxation();
  const double nu = state.params.nu;
  const double u0 = spec.u0;
  const std::size_t n = spec.nx;
  const double k = 2.0 * std::numbers::pi / static_cast<double>(n);
  // Starting from the bare equilibrium leaves out the viscous stress, which
  // then rings at the odd-even mode with factor (1 - omega) per step and makes
  // the kinetic energy oscillate for omega > 1.
  initializeNonEquilibrium(
      state,
      [=](std::size_t x, std::size_t y) {
        return tgvAnalytic(static_cast<double>(x), static_cast<double>(y), 0.0, nu, u0, n);
      },
      [=](std::size_t x, std::size_t y) {
        const double kx = k * static_cast<double>(x);
        const double ky = k * static_cast<double>(y);
        const double shear = u0 * k * std::cos(kx) * std::cos(ky);
        const double normal = u0 * k * std::sin(kx) * std::sin(ky);
        return VelocityGradient{normal, -shear, shear, -normal};
      });
  return state;
}

SimState initVKS(const CaseSpec& spec, Layout layout, Precision precision) {
  if (spec.kind != CaseKind::VKS) {
    throw ConfigError("initVKS called with a " + std::string(toString(spec.kind)) + " case");
  }
  spec.validate();
  SimState state(spec.nx, spec.ny, layout, precision);
  state.params = spec.relaxation();

  const double r2 = spec.diameter * spec.diameter / 4.0;
  const double cx = spec.cylinderX();
  const double cy = spec.cylinderY();
  for (std::size_t y = 0; y < spec.ny; ++y) {
    for (std::size_t x = 0; x < spec.nx; ++x) {
      const double dx = static_cast<double>(x) + 0.5 - cx;
      const double dy = static_cast<double>(y) + 0.5 - cy;
      if (y == 0 || y + 1 == spec.ny || dx * dx + dy * dy < r2) {
        state.mask.setSolid(x, y);
      } else if (x == 0) {
        state.mask.setInlet(x, y, {spec.u0, 0.0});
      } else if (x + 1 == spec.nx) {
        state.mask.setOutlet(x, y);
      }
    }
  }

  const double height = static_cast<double>(spec.ny);
  const double kick = spec.symmetric ? 0.0 : 0.01 * spec.u0;
  initializeEquilibrium(state, [&](std::size_t x, std::size_t y) {
    switch (state.mask.type(x, y)) {
    case CellType::Solid: return Moments{1.0, 0.0, 0.0};
    case CellType::Inlet: return Moments{1.0, spec.u0, 0.0};
    default: break;
    }
    // Same sign across the channel, so it has no mirror image about the centreline.
    const double uy = kick * std::sin(std::numbers::pi * (static_cast<double>(y) + 0.5) / height);
    return Moments{1.0, spec.u0, uy};
  });
  return state;
}

SimState makeState(const CaseSpec& spec, Layout layout, Precision precision) {
  switch (spec.kind) {
  case CaseKind::LDC: return initLDC(spec, layout, precision);
  case CaseKind::TGV: return initTGV(spec, layout, precision);
  case CaseKind::VKS: break;
  }
  return initVKS(spec, layout, precision);
}

double l2VelocityError(const MacroFields& fields, double t, double nu, double u0) {
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t y = 0; y < fields.ny; ++y) {
    for (std::size_t x = 0; x < fields.nx; ++x) {
      const Moments exact = tgvAnalytic(static_cast<double>(x), static_cast<double>(y), t, nu, u0, fields.nx);
      const std::size_t k = fields.index(x, y);
      const double ex = fields.ux[k] - exact.ux;
      const double ey = fields.uy[k] - exact.uy;
      diff += ex * ex + ey * ey;
      ref += exact.ux * exact.ux + exact.uy * exact.uy;
    }
  }
  if (ref == 0.0) {
    throw NumericalError("reference velocity field is identically zero");
  }
  return std::sqrt(diff) / std::sqrt(ref);
}

double l2VelocityError(const SimState& state, double u0) {
  if (state.nx() != state.ny()) {
    throw ConfigError("TGV error needs a square grid");
  }
  return l2VelocityError(macroFields(state), static_cast<double>(state.timestep), state.params.nu, u0);
}

void ProbeSeries::push(std::int64_t time, double value) {
  if (!times_.empty() && time <= times_.back()) {
    throw ConfigError("probe sample times must be strictly increasing");
  }
  times_.push_back(time);
  values_.push_back(value);
}

ProbeSeries ProbeSeries::since(std::int64_t from) const {
  ProbeSeries out;
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (times_[i] >= from) {
      out.push(times_[i], values_[i]);
    }
  }
  return out;
}

ProbeCell vksProbe(const CaseSpec& spec) {
  const double px = spec.cylinderX() + 3.0 * spec.diameter;
  const double py = spec.cylinderY() + spec.diameter;
  return {static_cast<std::size_t>(std::floor(px)), static_cast<std::size_t>(std::floor(py))};
}

std::vector<double> zeroCrossings(const ProbeSeries& series) {
  const auto& t = series.times();
  const auto& v = series.values();
  const std::size_t n = t.size();
  std::vector<double> crossings;
  if (n < 2) {
    return crossings;
  }

  // Least-squares line through the samples.
  double meanT = 0.0;
  double meanV = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    meanT += static_cast<double>(t[i]);
    meanV += v[i];
  }
  meanT /= static_cast<double>(n);
  meanV /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dt = static_cast<double>(t[i]) - meanT;
    sxx += dt * dt;
    sxy += dt * (v[i] - meanV);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;

  auto detrended = [&](std::size_t i) { return v[i] - (meanV + slope * (static_cast<double>(t[i]) - meanT)); };

  double prev = detrended(0);
  for (std::size_t i = 1; i < n; ++i) {
    const double cur = detrended(i);
    if ((prev < 0.0 && cur >= 0.0) || (prev >= 0.0 && cur < 0.0)) {
      const double t0 = static_cast<double>(t[i - 1]);
      const double t1 = static_cast<double>(t[i]);
      crossings.push_back(t0 + (t1 - t0) * prev / (prev - cur));
    }
    prev = cur;
  }
  return crossings;
}

double strouhal(const ProbeSeries& series, double diameter, double u0) {
  if (!(diameter > 0.0) || !(u0 > 0.0)) {
    throw ConfigError("Strouhal number needs positive diameter and velocity");
  }
  const std::vector<double> crossings = zeroCrossings(series);
  if (crossings.size() < 4) {
    throw NumericalError("no shedding detected (" + std::to_string(crossings.size()) + " zero crossings)");
  }
  const double span = crossings.back() - crossings.front();
  const double halfPeriod = span / static_cast<double>(crossings.size() - 1);
  const double frequency = 1.0 / (2.0 * halfPeriod);
  return frequency * diameter / u0;
}

} // namespace minilb
