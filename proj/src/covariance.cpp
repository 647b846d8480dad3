#include "gaussent/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gaussent/error.hpp"

namespace gaussent {

namespace {

void require_mode(int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "mode index " + std::to_string(mode) + " out of range for " +
                    std::to_string(n_modes) + " modes");
  }
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(Matrix entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0 ||
      entries_.rows() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "covariance matrix must be square with even, nonzero size");
  }
  if (!entries_.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument,
                "covariance matrix has non-finite entries");
  }
  const double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance) {
    throw Error(ErrorCode::kInvalidArgument,
                "covariance matrix is not symmetric (max |s_ij - s_ji| = " +
                    std::to_string(asym) + ")");
  }
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
  n_modes_ = static_cast<int>(entries_.rows() / 2);
}

CovarianceMatrix CovarianceMatrix::vacuum(int n_modes) {
  if (n_modes < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_modes must be >= 1");
  }
  return CovarianceMatrix(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

Eigen::Matrix2d CovarianceMatrix::block(int mode_i, int mode_j) const {
  require_mode(n_modes_, mode_i);
  require_mode(n_modes_, mode_j);
  return entries_.block<2, 2>(2 * mode_i, 2 * mode_j);
}

Matrix build_omega(int n_modes) {
  if (n_modes < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_modes must be >= 1");
  }
  Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

namespace {

// Moduli of the eigenvalues of Omega*sigma. For positive definite sigma these
// are the singular values of the antisymmetric L^T Omega L (sigma = L L^T).
std::vector<double> omega_sigma_moduli(const CovarianceMatrix& cm) {
  const Matrix omega = build_omega(cm.n_modes());
  const auto dim = static_cast<std::size_t>(omega.rows());
  std::vector<double> moduli(dim);
  Eigen::LLT<Matrix> llt(cm.entries());
  if (llt.info() == Eigen::Success) {
    const Matrix l = llt.matrixL();
    Eigen::JacobiSVD<Matrix> svd(l.transpose() * omega * l);
    for (std::size_t i = 0; i < dim; ++i) {
      moduli[i] = svd.singularValues()(static_cast<Eigen::Index>(i));
    }
    return moduli;
  }
  Eigen::EigenSolver<Matrix> solver(omega * cm.entries(), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kPairingFailure,
                "eigenvalue iteration did not converge");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    moduli[i] = std::abs(solver.eigenvalues()(static_cast<Eigen::Index>(i)));
  }
  return moduli;
}

}  // namespace

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm) {
  std::vector<double> moduli = omega_sigma_moduli(cm);
  std::sort(moduli.begin(), moduli.end());

  SymplecticSpectrum spectrum;
  spectrum.values.reserve(moduli.size() / 2);
  for (std::size_t k = 0; k + 1 < moduli.size(); k += 2) {
    const double lo = moduli[k];
    const double hi = moduli[k + 1];
    if (hi - lo > kPairingTolerance * std::max(hi, 1e-300)) {
      throw Error(ErrorCode::kPairingFailure,
                  "eigenvalue moduli " + std::to_string(lo) + " and " +
                      std::to_string(hi) + " do not pair");
    }
    spectrum.values.push_back(0.5 * (lo + hi));
  }
  return spectrum;
}

bool check_physical(const CovarianceMatrix& cm, double tol) {
  Eigen::LLT<Matrix> llt(cm.entries());
  if (llt.info() != Eigen::Success) return false;
  try {
    return symplectic_spectrum(cm).min() >= 1.0 - tol;
  } catch (const Error&) {
    return false;
  }
}

CovarianceMatrix partial_transpose(const CovarianceMatrix& cm,
                                   std::span<const int> modes) {
  std::vector<bool> flip(static_cast<std::size_t>(cm.n_modes()), false);
  for (int mode : modes) {
    require_mode(cm.n_modes(), mode);
    flip[static_cast<std::size_t>(mode)] = true;
  }
  Matrix out = cm.entries();
  for (int mode = 0; mode < cm.n_modes(); ++mode) {
    if (!flip[static_cast<std::size_t>(mode)]) continue;
    out.row(2 * mode + 1) *= -1.0;
    out.col(2 * mode + 1) *= -1.0;
  }
  return CovarianceMatrix(std::move(out));
}

GlobalInvariants global_invariants(const CovarianceMatrix& cm) {
  GlobalInvariants inv;
  inv.det_sigma = cm.entries().determinant();
  for (double nu : symplectic_spectrum(cm).values) inv.seralian += nu * nu;
  return inv;
}

double log_negativity(const CovarianceMatrix& cm,
                      std::span<const int> partition) {
  const SymplecticSpectrum pt = symplectic_spectrum(partial_transpose(cm, partition));
  double en = 0.0;
  for (double nu : pt.values) {
    if (nu < 1.0) en -= std::log(nu);
  }
  return en;
}

CovarianceMatrix direct_sum(const CovarianceMatrix& a,
                            const CovarianceMatrix& b) {
  Matrix out = Matrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  out.topLeftCorner(a.dim(), a.dim()) = a.entries();
  out.bottomRightCorner(b.dim(), b.dim()) = b.entries();
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix reduce_to_modes(const CovarianceMatrix& cm,
                                 std::span<const int> modes) {
  if (modes.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no modes selected");
  }
  const auto k = static_cast<Eigen::Index>(modes.size());
  Matrix out(2 * k, 2 * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    require_mode(cm.n_modes(), modes[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < k; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = cm.block(modes[static_cast<std::size_t>(i)],
                                               modes[static_cast<std::size_t>(j)]);
    }
  }
  return CovarianceMatrix(std::move(out));
}

CovarianceMatrix congruence(const Matrix& transform,
                            const CovarianceMatrix& cm) {
  if (transform.rows() != cm.dim() || transform.cols() != cm.dim()) {
    throw Error(ErrorCode::kInvalidArgument, "transform size mismatch");
  }
  Matrix out = transform * cm.entries() * transform.transpose();
  return CovarianceMatrix(0.5 * (out + out.transpose()));
}

Matrix two_mode_squeezer(int n_modes, int mode_i, int mode_j, double r) {
  require_mode(n_modes, mode_i);
  require_mode(n_modes, mode_j);
  if (mode_i == mode_j) {
    throw Error(ErrorCode::kInvalidArgument, "two-mode squeezer needs two modes");
  }
  Matrix s = Matrix::Identity(2 * n_modes, 2 * n_modes);
  const double ch = std::cosh(r);
  const double sh = std::sinh(r);
  const int xi = 2 * mode_i, pi = xi + 1, xj = 2 * mode_j, pj = xj + 1;
  s(xi, xi) = ch;
  s(xj, xj) = ch;
  s(pi, pi) = ch;
  s(pj, pj) = ch;
  s(xi, xj) = sh;
  s(xj, xi) = sh;
  s(pi, pj) = -sh;
  s(pj, pi) = -sh;
  return s;
}

Matrix single_mode_squeezer(int n_modes, int mode, double s) {
  require_mode(n_modes, mode);
  Matrix out = Matrix::Identity(2 * n_modes, 2 * n_modes);
  out(2 * mode, 2 * mode) = std::exp(-s);
  out(2 * mode + 1, 2 * mode + 1) = std::exp(s);
  return out;
}

Matrix phase_rotation(int n_modes, int mode, double theta) {
  require_mode(n_modes, mode);
  Matrix out = Matrix::Identity(2 * n_modes, 2 * n_modes);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const int x = 2 * mode, p = x + 1;
  out(x, x) = c;
  out(x, p) = s;
  out(p, x) = -s;
  out(p, p) = c;
  return out;
}

Matrix beam_splitter(int n_modes, int mode_i, int mode_j, double theta) {
  require_mode(n_modes, mode_i);
  require_mode(n_modes, mode_j);
  if (mode_i == mode_j) {
    throw Error(ErrorCode::kInvalidArgument, "beam splitter needs two modes");
  }
  Matrix out = Matrix::Identity(2 * n_modes, 2 * n_modes);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (int q = 0; q < 2; ++q) {
    const int a = 2 * mode_i + q, b = 2 * mode_j + q;
    out(a, a) = c;
    out(b, b) = c;
    out(a, b) = s;
    out(b, a) = -s;
  }
  return out;
}

}  // namespace gaussent
