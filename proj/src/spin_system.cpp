#include "spin_system.hpp"

#include <cmath>
#include <stdexcept>

#include "units.hpp"

namespace spinprep {

namespace {

// 87Rb 5^2S_1/2 reference data (Steck) and SI constants
constexpr double kHfsSplittingHz = 6834682610.904;  // F=2 <-> F=1 zero-field splitting
constexpr double kGJ = 2.00233113;
constexpr double kGI = -0.0009951414;
constexpr double kMuB = 9.2740100783e-24;  // J/T
constexpr double kPlanckH = 6.62607015e-34;  // J s

}  // namespace

std::array<double, 5> breit_rabi_energies(double bias_field_gauss) {
  if (!(bias_field_gauss >= 0.0) || bias_field_gauss > 100.0)
    throw std::domain_error("bias field must be in [0, 100] G");

  const double b_tesla = bias_field_gauss * 1e-4;
  const double x = (kGJ - kGI) * kMuB * b_tesla / (kPlanckH * kHfsSplittingHz);
  const double nuclear_hz = kGI * kMuB * b_tesla / kPlanckH;  // per unit m_F

  // F = I + 1/2 branch for I = 3/2; the constant -dE/8 term drops out in the
  // shift below. For m_F = -2 the radicand is (1 - x)^2 exactly.
  std::array<double, 5> e_hz{};
  for (int idx = 0; idx < 5; ++idx) {
    const int m = 2 - idx;
    e_hz[idx] = nuclear_hz * m + 0.5 * kHfsSplittingHz * std::sqrt(1.0 + m * x + x * x);
  }
  const double shift = e_hz[2];
  std::array<double, 5> out{};
  for (int idx = 0; idx < 5; ++idx) out[idx] = two_pi * (e_hz[idx] - shift);
  out[2] = 0.0;
  return out;
}

SystemParams SystemParams::at_field(double bias_field_gauss, double rabi_rate,
                                    double dephasing_rate) {
  if (rabi_rate < 0.0) throw std::domain_error("rabi_rate must be >= 0");
  if (dephasing_rate < 0.0) throw std::domain_error("dephasing_rate must be >= 0");
  SystemParams p;
  p.bias_field_gauss = bias_field_gauss;
  p.rabi_rate = rabi_rate;
  p.dephasing_rate = dephasing_rate;
  p.level_energies = breit_rabi_energies(bias_field_gauss);
  return p;
}

HamiltonianTerm build_h0(const SystemParams& system) {
  HamiltonianTerm h;
  for (int i = 0; i < kLevels; ++i) h.entries(i, i) = system.level_energies[i];
  return h;
}

HamiltonianTerm build_h1(double rabi_rate) {
  if (rabi_rate < 0.0) throw std::domain_error("rabi_rate must be >= 0");
  HamiltonianTerm h;
  const double c = std::sqrt(1.5) * rabi_rate;
  h.entries(0, 1) = h.entries(1, 0) = rabi_rate;
  h.entries(1, 2) = h.entries(2, 1) = c;
  h.entries(2, 3) = h.entries(3, 2) = c;
  h.entries(3, 4) = h.entries(4, 3) = rabi_rate;
  return h;
}

HamiltonianTerm build_detuning(double f_value) {
  HamiltonianTerm h;
  for (int i = 0; i < kLevels; ++i) h.entries(i, i) = f_value * (i - 2);
  return h;
}

EigenstateTarget eigenstate_target(const SystemParams& system, double f_bar,
                                   EigenstateKind which) {
  Mat5 total = build_h0(system).entries + build_h1(system.rabi_rate).entries +
               build_detuning(f_bar).entries;
  Eigen::SelfAdjointEigenSolver<Mat5> es(total);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");

  const int idx = (which == EigenstateKind::ground) ? 0 : kLevels - 1;
  const int neighbour = (which == EigenstateKind::ground) ? 1 : kLevels - 2;
  const auto& ev = es.eigenvalues();
  const double scale = std::max({std::abs(ev[0]), std::abs(ev[kLevels - 1]), 1.0});
  if (std::abs(ev[idx] - ev[neighbour]) < 1e-9 * scale)
    throw std::domain_error("extremal eigenvalue is degenerate; target state undefined");

  EigenstateTarget target;
  CVec5 v = es.eigenvectors().col(idx);
  target.state = DensityMatrix::pure(v);
  target.populations = target.state.populations();
  target.eigenvalue = ev[idx];
  return target;
}

}  // namespace spinprep
