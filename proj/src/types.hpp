#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinprep {

using cplx = std::complex<double>;
using Mat5 = Eigen::Matrix<cplx, 5, 5>;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using CVec5 = Eigen::Matrix<cplx, 5, 1>;

constexpr int kLevels = 5;

// thrown by parsers; carries the offending field/location
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, std::string where = {})
      : std::runtime_error(where.empty() ? what : where + ": " + what), location(std::move(where)) {}
  std::string location;
};

// thrown by config validation; lists every violation found
struct ValidationError : std::runtime_error {
  explicit ValidationError(std::vector<std::string> issues)
      : std::runtime_error(join(issues)), problems(std::move(issues)) {}
  std::vector<std::string> problems;

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid configuration:";
    for (const auto& p : v) s += "\n  - " + p;
    return s;
  }
};

// thrown when the integrator detects an invariant violation mid-run
struct IntegrationError : std::runtime_error {
  IntegrationError(const std::string& what, double t)
      : std::runtime_error(what + " at t = " + std::to_string(t * 1e6) + " us"), time(t) {}
  double time;
};

/// A 5x5 Hermitian matrix in angular-frequency units (H / hbar).
struct HamiltonianTerm {
  Mat5 entries = Mat5::Zero();
};

/// Unit-trace Hermitian state of the five-level manifold.
struct DensityMatrix {
  Mat5 entries = Mat5::Zero();

  static DensityMatrix basis_state(int level_1_to_5);
  static DensityMatrix pure(const CVec5& amplitudes);

  Vec5 populations() const {
    Vec5 p;
    for (int i = 0; i < kLevels; ++i) p[i] = entries(i, i).real();
    return p;
  }

  double trace_real() const { return entries.trace().real(); }
  double hermiticity_defect() const { return (entries - entries.adjoint()).cwiseAbs().maxCoeff(); }
  double min_eigenvalue() const;

  // invariant tolerances: hermitian to 1e-10, trace 1 to 1e-9, eigenvalues >= -1e-8
  bool is_valid(std::string* why = nullptr) const;
  void require_valid(const char* context) const;
};

inline DensityMatrix DensityMatrix::basis_state(int level_1_to_5) {
  if (level_1_to_5 < 1 || level_1_to_5 > kLevels)
    throw std::domain_error("basis level must be in 1..5");
  DensityMatrix rho;
  rho.entries(level_1_to_5 - 1, level_1_to_5 - 1) = 1.0;
  return rho;
}

inline DensityMatrix DensityMatrix::pure(const CVec5& amplitudes) {
  DensityMatrix rho;
  const double n2 = amplitudes.squaredNorm();
  if (n2 <= 0.0) throw std::domain_error("pure state must have nonzero norm");
  CVec5 v = amplitudes / std::sqrt(n2);
  rho.entries = v * v.adjoint();
  return rho;
}

inline double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat5> es(0.5 * (entries + entries.adjoint()),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

inline bool DensityMatrix::is_valid(std::string* why) const {
  const double herm = hermiticity_defect();
  if (herm > 1e-10) {
    if (why) *why = "hermiticity defect " + std::to_string(herm);
    return false;
  }
  const double tr = trace_real();
  if (std::abs(tr - 1.0) > 1e-9) {
    if (why) *why = "trace " + std::to_string(tr);
    return false;
  }
  const double lam = min_eigenvalue();
  if (lam < -1e-8) {
    if (why) *why = "negative eigenvalue " + std::to_string(lam);
    return false;
  }
  return true;
}

inline void DensityMatrix::require_valid(const char* context) const {
  std::string why;
  if (!is_valid(&why)) throw std::domain_error(std::string(context) + ": invalid density matrix (" + why + ")");
}

}  // namespace spinprep
