#include "qeraser/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qeraser {

void SlitGeometry::validate() const {
  if (!(wavelength > 0.0) || !(slit_separation > 0.0) || !(slit_width > 0.0) ||
      !(screen_distance > 0.0) || !(scan_halfwidth > 0.0)) {
    throw std::domain_error("slit geometry: all lengths must be positive");
  }
  if (!(slit_width < slit_separation)) {
    throw std::domain_error("slit geometry: slit_width must be < slit_separation");
  }
  if (!(scan_halfwidth > fringe_period())) {
    throw std::domain_error(
        "slit geometry: scan_halfwidth must exceed one fringe period");
  }
}

double sinc(double u) {
  if (std::abs(u) < 1e-8) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

namespace {

// 1/sqrt of the envelope power integral over the scan window. Memoized on the
// last geometry seen; one geometry per run is the common case.
double envelope_norm(const SlitGeometry& g) {
  thread_local SlitGeometry cached_geom;
  thread_local double cached_norm = 0.0;
  thread_local bool cached = false;
  if (cached && cached_geom == g) return cached_norm;

  const double c = std::numbers::pi * g.slit_width /
                   (g.wavelength * g.screen_distance);
  const double integral = simpson(
      [c](double x) {
        const double s = sinc(c * x);
        return s * s;
      },
      -g.scan_halfwidth, g.scan_halfwidth, 1 << 14);

  cached_geom = g;
  cached_norm = 1.0 / std::sqrt(integral);
  cached = true;
  return cached_norm;
}

}  // namespace

ComplexAmp signal_amplitude(SlitLabel slit, double x, const SlitGeometry& geom) {
  geom.validate();
  if (std::abs(x) > geom.scan_halfwidth) {
    throw std::domain_error("signal_amplitude: x outside the scan window");
  }
  const double inv_lambda_L = 1.0 / (geom.wavelength * geom.screen_distance);
  const double envelope_arg = std::numbers::pi * geom.slit_width * x * inv_lambda_L;
  const double half_phase = std::numbers::pi * geom.slit_separation * x *
                            inv_lambda_L * (slit == SlitLabel::A ? 1.0 : -1.0);
  const double magnitude = envelope_norm(geom) * sinc(envelope_arg);
  return {magnitude * std::cos(half_phase), magnitude * std::sin(half_phase)};
}

ComplexAmp superpose(std::span<const ComplexAmp> amps) {
  if (amps.empty()) {
    throw std::domain_error("superpose: empty amplitude list");
  }
  ComplexAmp sum{0.0, 0.0};
  for (const auto& a : amps) sum += a;
  return sum;
}

double born_probability(ComplexAmp amp) { return std::norm(amp); }

ComplexAmp beamsplitter_transfer(BsPort input, BsPort output, double reflectivity) {
  if (!(reflectivity >= 0.0) || !(reflectivity <= 1.0)) {
    throw std::domain_error("beamsplitter_transfer: reflectivity outside [0, 1]");
  }
  if (input == output) {
    return {std::sqrt(1.0 - reflectivity), 0.0};  // transmission
  }
  return {0.0, std::sqrt(reflectivity)};  // reflection, phase i
}

}  // namespace qeraser
