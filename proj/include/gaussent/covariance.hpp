#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gaussent {

using Matrix = Eigen::MatrixXd;

inline constexpr double kSymmetryTolerance = 1e-10;
inline constexpr double kPhysicalityTolerance = 1e-9;
inline constexpr double kPairingTolerance = 1e-8;

/// Real symmetric 2N x 2N matrix of second moments, quadratures ordered
/// x1, p1, ..., xN, pN, vacuum variance 1.
class CovarianceMatrix {
 public:
  /// Throws Error(kInvalidArgument) if `entries` is not square with even
  /// dimension or is asymmetric beyond kSymmetryTolerance.
  explicit CovarianceMatrix(Matrix entries);

  static CovarianceMatrix vacuum(int n_modes);

  int n_modes() const noexcept { return n_modes_; }
  int dim() const noexcept { return 2 * n_modes_; }
  const Matrix& entries() const noexcept { return entries_; }
  double operator()(int row, int col) const { return entries_(row, col); }

  /// 2x2 block coupling `mode_i` (rows) and `mode_j` (columns).
  Eigen::Matrix2d block(int mode_i, int mode_j) const;

 private:
  Matrix entries_;
  int n_modes_ = 0;
};

/// Symplectic eigenvalues, ascending.
struct SymplecticSpectrum {
  std::vector<double> values;

  double min() const { return values.front(); }
  double max() const { return values.back(); }
  std::size_t size() const noexcept { return values.size(); }
};

struct GlobalInvariants {
  double det_sigma = 0.0;
  double seralian = 0.0;
};

/// Block-diagonal form with N copies of [[0, 1], [-1, 0]].
Matrix build_omega(int n_modes);

/// Moduli of the eigenvalues of Omega*sigma, paired into N doubly degenerate
/// values. Requires a positive definite input. Throws
/// Error(kPairingFailure) when the moduli do not pair within
/// kPairingTolerance (relative).
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm);

/// sigma + i*Omega >= 0: positive definite with every symplectic eigenvalue
/// at least 1 - tol. Never throws.
bool check_physical(const CovarianceMatrix& cm,
                    double tol = kPhysicalityTolerance);

/// Mirrors the momentum quadrature of each listed mode (0-based). Throws
/// Error(kIndexOutOfRange).
CovarianceMatrix partial_transpose(const CovarianceMatrix& cm,
                                   std::span<const int> modes);

GlobalInvariants global_invariants(const CovarianceMatrix& cm);

/// Logarithmic negativity (natural log) of the bipartition `partition` vs.
/// the remaining modes.
double log_negativity(const CovarianceMatrix& cm,
                      std::span<const int> partition);

CovarianceMatrix direct_sum(const CovarianceMatrix& a,
                            const CovarianceMatrix& b);

/// Reduced state of the listed modes, in the listed order.
CovarianceMatrix reduce_to_modes(const CovarianceMatrix& cm,
                                 std::span<const int> modes);

/// S * sigma * S^T. S is not checked for being symplectic.
CovarianceMatrix congruence(const Matrix& transform,
                            const CovarianceMatrix& cm);

// Symplectic generators acting on an n_modes system.

Matrix two_mode_squeezer(int n_modes, int mode_i, int mode_j, double r);
Matrix single_mode_squeezer(int n_modes, int mode, double s);
Matrix phase_rotation(int n_modes, int mode, double theta);
/// Passive mixing of two modes with transmissivity cos^2(theta).
Matrix beam_splitter(int n_modes, int mode_i, int mode_j, double theta);

}  // namespace gaussent
