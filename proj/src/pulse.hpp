#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "types.hpp"

namespace spinprep {

/// Frequency-modulation profile f(t) = f0 (1 + A0 + sum_k 2 Re[A_k exp(i 2 pi k t / T)]).
/// Storing only k = 1..n_f with the negative-k side implied by conjugate
/// symmetry keeps f(t) real for any coefficients.
struct CrabPulse {
  double f0 = 0.0;        // carrier, rad/s
  double duration = 0.0;  // T, seconds
  double a0 = 0.0;        // optional real k = 0 term
  std::vector<cplx> coefficients;  // A_1..A_nf

  int n_f() const { return static_cast<int>(coefficients.size()); }
};

struct FrequencyBand {
  double omega_min = 0.0;  // rad/s
  double omega_max = 0.0;  // rad/s
};

/// f(t); throws std::domain_error outside [0, T] (up to a small rounding slack).
double eval_f(const CrabPulse& pulse, double t);

/// omega(t) = (1/t) * integral_0^t f(s) ds, evaluated in closed form;
/// omega(0) = f(0).
double omega_from_f(const CrabPulse& pulse, double t);

/// Largest distance of omega(t) outside [omega_min, omega_max] over a uniform
/// n_samples grid on [0, T]; zero iff in band at every sampled point.
double band_violation(const CrabPulse& pulse, const FrequencyBand& band, int n_samples);

/// f at times j * dt, j = 0..n inclusive. Same values as eval_f on that grid;
/// uses phase recurrences per harmonic so sampling a 100 us pulse at the
/// integrator half-step stays cheap.
std::vector<double> sample_f(const CrabPulse& pulse, double dt, int n);

std::string serialize_pulse(const CrabPulse& pulse);
CrabPulse parse_pulse(const std::string& text);

/// Tabulated (t_us, f_khz, omega_khz) trace as CSV, n_rows uniform samples.
void write_pulse_trace(std::ostream& os, const CrabPulse& pulse, int n_rows);

}  // namespace spinprep
