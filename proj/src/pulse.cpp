#include "pulse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "units.hpp"

namespace spinprep {

namespace {

void check_pulse(const CrabPulse& pulse) {
  if (!(pulse.duration > 0.0)) throw std::domain_error("pulse duration must be > 0");
}

double domain_checked(const CrabPulse& pulse, double t) {
  const double slack = 1e-9 * pulse.duration + 1e-15;
  if (t < -slack || t > pulse.duration + slack)
    throw std::domain_error("time outside pulse support [0, T]");
  return std::clamp(t, 0.0, pulse.duration);
}

// (exp(i theta) - 1) / (i theta), the per-harmonic averaging kernel of the
// running integral; series branch avoids cancellation near theta = 0
cplx phase_average_kernel(double theta) {
  if (std::abs(theta) < 1e-3) {
    const cplx it(0.0, theta);
    return 1.0 + it / 2.0 + it * it / 6.0 + it * it * it / 24.0;
  }
  const cplx num = std::polar(1.0, theta) - 1.0;
  return num / cplx(0.0, theta);
}

}  // namespace

double eval_f(const CrabPulse& pulse, double t) {
  check_pulse(pulse);
  t = domain_checked(pulse, t);
  double mod = pulse.a0;
  for (int k = 1; k <= pulse.n_f(); ++k) {
    const double phase = two_pi * k * t / pulse.duration;
    const cplx a = pulse.coefficients[k - 1];
    mod += 2.0 * (a.real() * std::cos(phase) - a.imag() * std::sin(phase));
  }
  return pulse.f0 * (1.0 + mod);
}

double omega_from_f(const CrabPulse& pulse, double t) {
  check_pulse(pulse);
  t = domain_checked(pulse, t);
  if (t == 0.0) return eval_f(pulse, 0.0);
  double mod = pulse.a0;
  for (int k = 1; k <= pulse.n_f(); ++k) {
    const double theta = two_pi * k * t / pulse.duration;
    const cplx avg = pulse.coefficients[k - 1] * phase_average_kernel(theta);
    mod += 2.0 * avg.real();
  }
  return pulse.f0 * (1.0 + mod);
}

double band_violation(const CrabPulse& pulse, const FrequencyBand& band, int n_samples) {
  check_pulse(pulse);
  if (band.omega_min >= band.omega_max) throw std::domain_error("empty frequency band");
  if (n_samples < 2) throw std::domain_error("band_violation needs n_samples >= 2");
  double worst = 0.0;
  for (int j = 0; j < n_samples; ++j) {
    const double t = pulse.duration * j / (n_samples - 1);
    const double w = omega_from_f(pulse, t);
    worst = std::max({worst, w - band.omega_max, band.omega_min - w});
  }
  return worst;
}

std::vector<double> sample_f(const CrabPulse& pulse, double dt, int n) {
  check_pulse(pulse);
  if (n < 0 || dt < 0.0) throw std::domain_error("bad sampling grid");
  std::vector<double> out(static_cast<size_t>(n) + 1);

  const int nf = pulse.n_f();
  std::vector<cplx> rot(nf), cur(nf);
  for (int k = 1; k <= nf; ++k) {
    rot[k - 1] = std::polar(1.0, two_pi * k * dt / pulse.duration);
    cur[k - 1] = 1.0;
  }
  constexpr int kRefreshEvery = 4096;  // keeps recurrence drift ~1e-13
  for (int j = 0; j <= n; ++j) {
    if (j % kRefreshEvery == 0 && j > 0) {
      for (int k = 1; k <= nf; ++k)
        cur[k - 1] = std::polar(1.0, two_pi * k * (static_cast<double>(j) * dt) / pulse.duration);
    }
    double mod = pulse.a0;
    for (int k = 0; k < nf; ++k) {
      const cplx a = pulse.coefficients[k];
      mod += 2.0 * (a.real() * cur[k].real() - a.imag() * cur[k].imag());
    }
    out[j] = pulse.f0 * (1.0 + mod);
    for (int k = 0; k < nf; ++k) cur[k] *= rot[k];
  }
  return out;
}

std::string serialize_pulse(const CrabPulse& pulse) {
  nlohmann::json j;
  j["f0_khz"] = rad_to_khz(pulse.f0);
  j["T_us"] = s_to_us(pulse.duration);
  j["n_f"] = pulse.n_f();
  if (pulse.a0 != 0.0) j["a0"] = pulse.a0;
  auto coeffs = nlohmann::json::array();
  for (const auto& a : pulse.coefficients) coeffs.push_back({a.real(), a.imag()});
  j["coeffs"] = coeffs;
  return j.dump(2);
}

CrabPulse parse_pulse(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), "pulse");
  }
  CrabPulse p;
  try {
    p.f0 = khz_to_rad(j.at("f0_khz").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), "pulse.f0_khz");
  }
  try {
    p.duration = us_to_s(j.at("T_us").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), "pulse.T_us");
  }
  if (!(p.duration > 0.0)) throw ParseError("must be > 0", "pulse.T_us");
  p.a0 = j.value("a0", 0.0);
  int n_f = 0;
  try {
    n_f = j.at("n_f").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), "pulse.n_f");
  }
  if (n_f < 0) throw ParseError("must be >= 0", "pulse.n_f");
  try {
    for (const auto& pair : j.at("coeffs")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("expected [re, im]", "pulse.coeffs");
      p.coefficients.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), "pulse.coeffs");
  }
  if (static_cast<int>(p.coefficients.size()) != n_f)
    throw ParseError("length disagrees with n_f", "pulse.coeffs");
  return p;
}

void write_pulse_trace(std::ostream& os, const CrabPulse& pulse, int n_rows) {
  check_pulse(pulse);
  if (n_rows < 2) throw std::domain_error("trace needs at least 2 rows");
  os << "t_us,f_khz,omega_khz\n";
  char line[128];
  for (int j = 0; j < n_rows; ++j) {
    const double t = pulse.duration * j / (n_rows - 1);
    std::snprintf(line, sizeof line, "%.16e,%.16e,%.16e\n", s_to_us(t),
                  rad_to_khz(eval_f(pulse, t)), rad_to_khz(omega_from_f(pulse, t)));
    os << line;
  }
}

}  // namespace spinprep
