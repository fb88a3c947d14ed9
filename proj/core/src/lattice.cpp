#include "minilb/lattice.hpp"

#include <cmath>
#include <sstream>

#include "minilb/error.hpp"

namespace minilb {

void RelaxationParams::validate() const {
  if (!(omega > 0.0 && omega < 2.0)) {
    std::ostringstream msg;
    msg << "relaxation rate omega=" << omega << " outside (0, 2)";
    throw ConfigError(msg.str());
  }
}

namespace {

void requireFinite(const Populations& f) {
  for (double v : f) {
    if (!std::isfinite(v)) {
      throw NumericalError("non-finite population");
    }
  }
}

Populations shift(const Populations& f) {
  Populations d;
  for (std::size_t i = 0; i < d2q9::kQ; ++i) {
    d[i] = f[i] - d2q9::kWeights[i];
  }
  return d;
}

Populations unshift(const Populations& d) {
  Populations f;
  for (std::size_t i = 0; i < d2q9::kQ; ++i) {
    f[i] = d2q9::kWeights[i] + d[i];
  }
  return f;
}

} // namespace

Moments moments(const Populations& f) {
  requireFinite(f);
  const Populations d = shift(f);
  const auto m = detail::shiftedMoments(d.data());
  return {m.rho, m.ux, m.uy};
}

Populations equilibrium(double rho, double ux, double uy) {
  if (!std::isfinite(rho) || !std::isfinite(ux) || !std::isfinite(uy)) {
    throw NumericalError("non-finite equilibrium input");
  }
  Populations eq;
  detail::shiftedEquilibrium(rho - 1.0, rho, ux, uy, eq.data());
  return unshift(eq);
}

Populations collide(const Populations& f, const RelaxationParams& params) {
  params.validate();
  requireFinite(f);
  Populations d = shift(f);
  detail::relaxShifted(d.data(), params.omega, 1.0 - params.omega);
  if (params.source) {
    for (std::size_t i = 0; i < d2q9::kQ; ++i) {
      d[i] += (*params.source)[i];
    }
  }
  return unshift(d);
}

double viscosityFromOmega(double omega) {
  // c_s^2 (1/omega - 1/2) rearranged so the subtraction 2 - omega is exact.
  return (2.0 - omega) / (6.0 * omega);
}

RelaxationParams omegaFromViscosity(double nu) {
  if (!(nu > 0.0) || !std::isfinite(nu)) {
    std::ostringstream msg;
    msg << "unstable parameters: viscosity nu=" << nu << " must be positive";
    throw ConfigError(msg.str());
  }
  const double omega = 1.0 / (3.0 * nu + 0.5);
  if (!(omega > 0.0 && omega < 2.0)) {
    std::ostringstream msg;
    msg << "unstable parameters: nu=" << nu << " gives omega=" << omega;
    throw ConfigError(msg.str());
  }
  return RelaxationParams{omega, nu, std::nullopt};
}

RelaxationParams omegaFromReynolds(double re, double u0, double length) {
  if (!(re > 0.0) || !(u0 > 0.0) || !(length > 0.0)) {
    std::ostringstream msg;
    msg << "Reynolds mapping needs re, u0, L > 0 (got re=" << re << ", u0=" << u0 << ", L=" << length << ")";
    throw ConfigError(msg.str());
  }
  return omegaFromViscosity(u0 * length / re);
}

} // namespace minilb
