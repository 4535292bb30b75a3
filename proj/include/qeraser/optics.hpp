#pragma once

#include <complex>
#include <span>

namespace qeraser {

// Complex probability amplitude. Dimensionless; every operation that returns
// one guarantees finite components.
using ComplexAmp = std::complex<double>;

constexpr double speed_of_light = 299792458.0;  // m/s, exact

enum class SlitLabel { A, B };

enum class BsPort { one, two };

// Double-slit geometry, all lengths in meters. The screen coordinate x runs
// along the detector scan axis, x = 0 on the optical axis.
struct SlitGeometry {
  double wavelength = 702.2e-9;       // degenerate SPDC daughters of 351.1 nm
  double slit_separation = 0.3e-3;    // center-to-center
  double slit_width = 0.1e-3;
  double screen_distance = 1.0;
  double scan_halfwidth = 7.0e-3;

  bool operator==(const SlitGeometry&) const = default;

  // Fringe period of the two-slit pattern at the screen.
  double fringe_period() const {
    return wavelength * screen_distance / slit_separation;
  }

  // Throws std::domain_error unless all lengths are positive, the slits are
  // narrower than their separation, and the scan window spans at least one
  // fringe period.
  void validate() const;
};

// Far-field single-slit amplitude at screen position x for one slit of the
// pair, normalized so that the integral of |psi|^2 over the scan window is 1.
// The two slits differ only by the sign of the linear phase.
ComplexAmp signal_amplitude(SlitLabel slit, double x, const SlitGeometry& geom);

// Component-wise complex sum. Throws std::domain_error on an empty list.
ComplexAmp superpose(std::span<const ComplexAmp> amps);

// |amp|^2, always >= 0.
double born_probability(ComplexAmp amp);

// Transfer coefficient of a lossless beam splitter with power reflectivity R,
// symmetric convention: transmission sqrt(1-R) real, reflection i*sqrt(R).
ComplexAmp beamsplitter_transfer(BsPort input, BsPort output, double reflectivity);

// sin(u)/u with the removable singularity filled in.
double sinc(double u);

// Composite-Simpson integral of f over [a, b] with n subintervals (n made
// even internally). Used for amplitude normalization; tests carry their own
// quadrature so the normalization is cross-checked independently.
template <typename F>
double simpson(F&& f, double a, double b, int n) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < n; i += 2) odd += f(a + i * h);
  for (int i = 2; i < n; i += 2) even += f(a + i * h);
  return (h / 3.0) * (f(a) + 4.0 * odd + 2.0 * even + f(b));
}

}  // namespace qeraser
