#pragma once

#include <array>

#include "types.hpp"

namespace spinprep {

/// Physical parameters of the driven F=2 manifold. Level energies are angular
/// frequencies shifted so the m_F = 0 level is exactly zero; index 0..4 maps
/// to m_F = +2..-2.
struct SystemParams {
  double bias_field_gauss = 6.179;
  double rabi_rate = 0.0;       // Omega, rad/s
  double dephasing_rate = 0.0;  // gamma, rad/s
  std::array<double, 5> level_energies{};  // omega_1..omega_5, rad/s

  static SystemParams at_field(double bias_field_gauss, double rabi_rate, double dephasing_rate);
};

/// F=2 Zeeman level energies of the 87Rb ground state from the Breit-Rabi
/// closed form, shifted so omega_3 = 0. Ordering m_F = +2..-2. rad/s.
std::array<double, 5> breit_rabi_energies(double bias_field_gauss);

/// H0 = diag(omega_1..omega_5).
HamiltonianTerm build_h0(const SystemParams& system);

/// Nearest-neighbour RF coupling: (1,2) = (4,5) = Omega, (2,3) = (3,4) = sqrt(3/2) Omega.
HamiltonianTerm build_h1(double rabi_rate);

/// V = f * diag(-2,-1,0,1,2).
HamiltonianTerm build_detuning(double f_value);

enum class EigenstateKind { ground, highest };

struct EigenstateTarget {
  Vec5 populations;
  DensityMatrix state;
  double eigenvalue;  // rad/s
};

/// Extremal eigenstate of H0 + H1 + V(f_bar) as a pure-state target.
/// Throws std::domain_error if the extremal eigenvalue is degenerate
/// (relative gap below 1e-9).
EigenstateTarget eigenstate_target(const SystemParams& system, double f_bar, EigenstateKind which);

}  // namespace spinprep
