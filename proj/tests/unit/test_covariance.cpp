#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaussent/covariance.hpp"
#include "gaussent/error.hpp"
#include "gaussent/sampler.hpp"

using namespace gaussent;

namespace {

// Two-mode squeezed vacuum written out by hand.
CovarianceMatrix tmsv(double r) {
  const double c = std::cosh(2 * r), s = std::sinh(2 * r);
  Matrix m(4, 4);
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return CovarianceMatrix(m);
}

// nu_-^2, nu_+^2 of a two-mode CM from its local invariants.
std::pair<double, double> two_mode_spectrum_oracle(const CovarianceMatrix& cm) {
  const double delta = cm.block(0, 0).determinant() + cm.block(1, 1).determinant() +
                       2 * cm.block(0, 1).determinant();
  const double det = cm.entries().determinant();
  const double root = std::sqrt(delta * delta - 4 * det);
  return {std::sqrt((delta - root) / 2), std::sqrt((delta + root) / 2)};
}

bool is_symplectic(const Matrix& s) {
  const Matrix omega = build_omega(static_cast<int>(s.rows() / 2));
  return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() < 1e-9;
}

}  // namespace

TEST_CASE("build_omega") {
  const Matrix w = build_omega(3);
  CHECK(w.rows() == 6);
  CHECK((w * w + Matrix::Identity(6, 6)).norm() == 0.0);
  CHECK((w.transpose() + w).norm() == 0.0);
  CHECK(w(0, 1) == 1.0);
  CHECK(w(1, 0) == -1.0);
  CHECK_THROWS_AS(build_omega(0), Error);
}

TEST_CASE("construction validates shape and symmetry") {
  Matrix odd = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(CovarianceMatrix{odd}, Error);
  Matrix rect = Matrix::Identity(4, 2);
  CHECK_THROWS_AS(CovarianceMatrix{rect}, Error);
  Matrix asym = Matrix::Identity(2, 2);
  asym(0, 1) = 1e-6;
  try {
    CovarianceMatrix cm{asym};
    FAIL("asymmetric matrix accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
  Matrix bad = Matrix::Identity(2, 2);
  bad(1, 1) = NAN;
  CHECK_THROWS_AS(CovarianceMatrix{bad}, Error);

  Matrix tiny = Matrix::Identity(2, 2);
  tiny(0, 1) = 1e-12;
  CovarianceMatrix ok{tiny};
  CHECK(ok(0, 1) == ok(1, 0));
}

TEST_CASE("vacuum and thermal spectra") {
  const SymplecticSpectrum s = symplectic_spectrum(CovarianceMatrix::vacuum(3));
  REQUIRE(s.size() == 3);
  for (double nu : s.values) CHECK(nu == doctest::Approx(1.0).epsilon(1e-14));

  Matrix thermal = Matrix::Zero(4, 4);
  thermal.diagonal() << 2, 2, 3, 3;
  const SymplecticSpectrum t = symplectic_spectrum(CovarianceMatrix(thermal));
  CHECK(t.min() == doctest::Approx(2.0));
  CHECK(t.max() == doctest::Approx(3.0));
}

TEST_CASE("spectrum of a two-mode squeezed vacuum is pure") {
  const SymplecticSpectrum s = symplectic_spectrum(tmsv(1.0));
  CHECK(s.values[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(s.values[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("random known spectra are recovered") {
  Sampler rng({.seed = 11});
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<double> nu(static_cast<std::size_t>(n));
    for (double& x : nu) x = rng.uniform(1.0, 4.0);
    const CovarianceMatrix cm = rng.cm_with_spectrum(nu);
    std::sort(nu.begin(), nu.end());
    const SymplecticSpectrum s = symplectic_spectrum(cm);
    REQUIRE(s.size() == nu.size());
    for (std::size_t k = 0; k < nu.size(); ++k) {
      CHECK(std::abs(s.values[k] - nu[k]) < 1e-8 * nu[k]);
    }
  }
}

TEST_CASE("property: spectrum bounded below and matches determinant") {
  Sampler rng({.seed = 12});
  for (int trial = 0; trial < 300; ++trial) {
    const CovarianceMatrix cm = rng.physical_cm(1 + trial % 5);
    const SymplecticSpectrum s = symplectic_spectrum(cm);
    double prod = 1.0;
    for (double nu : s.values) {
      CHECK(nu >= 1.0 - 1e-9);
      prod *= nu * nu;
    }
    const double det = cm.entries().determinant();
    CHECK(std::abs(prod - det) <= 1e-8 * det);
    CHECK(check_physical(cm));
  }
}

TEST_CASE("two-mode spectrum matches the seralian formula") {
  Sampler rng({.seed = 13});
  for (int trial = 0; trial < 100; ++trial) {
    const CovarianceMatrix cm = rng.physical_cm(2);
    const auto [lo, hi] = two_mode_spectrum_oracle(cm);
    const SymplecticSpectrum s = symplectic_spectrum(cm);
    CHECK(s.values[0] == doctest::Approx(lo).epsilon(1e-8));
    CHECK(s.values[1] == doctest::Approx(hi).epsilon(1e-8));
  }
}

TEST_CASE("check_physical") {
  CHECK(check_physical(CovarianceMatrix::vacuum(2)));
  CHECK(check_physical(tmsv(2.0)));
  CHECK_FALSE(check_physical(CovarianceMatrix(0.5 * Matrix::Identity(2, 2))));
  Matrix indefinite = Matrix::Identity(2, 2);
  indefinite(1, 1) = -1.0;
  CHECK_FALSE(check_physical(CovarianceMatrix(indefinite)));
  Matrix squeezed = Matrix::Zero(2, 2);
  squeezed.diagonal() << 0.5, 2.0;
  CHECK(check_physical(CovarianceMatrix(squeezed)));
  squeezed(1, 1) = 1.9;
  CHECK_FALSE(check_physical(CovarianceMatrix(squeezed)));
}

TEST_CASE("gates are symplectic") {
  Sampler rng({.seed = 14});
  CHECK(is_symplectic(two_mode_squeezer(3, 0, 2, 0.7)));
  CHECK(is_symplectic(single_mode_squeezer(3, 1, -0.4)));
  CHECK(is_symplectic(phase_rotation(3, 2, 1.1)));
  CHECK(is_symplectic(beam_splitter(3, 0, 1, 0.3)));
  for (int n = 1; n <= 4; ++n) CHECK(is_symplectic(rng.random_symplectic(n)));
  CHECK_THROWS_AS(two_mode_squeezer(2, 1, 1, 0.1), Error);
  CHECK_THROWS_AS(single_mode_squeezer(2, 2, 0.1), Error);
}

TEST_CASE("partial transpose") {
  const CovarianceMatrix cm = tmsv(0.5);
  const int mode[] = {1};
  const CovarianceMatrix pt = partial_transpose(cm, mode);
  CHECK(pt(2, 2) == cm(2, 2));
  CHECK(pt(1, 3) == -cm(1, 3));
  CHECK(pt(0, 2) == cm(0, 2));

  Sampler rng({.seed = 15});
  for (int trial = 0; trial < 50; ++trial) {
    const CovarianceMatrix r = rng.physical_cm(3);
    const int modes[] = {0, 2};
    const CovarianceMatrix twice = partial_transpose(partial_transpose(r, modes), modes);
    CHECK((twice.entries() - r.entries()).cwiseAbs().maxCoeff() <= 1e-12);
  }
  const int bad[] = {2};
  try {
    partial_transpose(cm, bad);
    FAIL("out of range mode accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIndexOutOfRange);
  }
}

TEST_CASE("log negativity examples") {
  const int mode[] = {1};
  CHECK(log_negativity(CovarianceMatrix::vacuum(2), mode) == 0.0);
  CHECK(log_negativity(tmsv(1.0), mode) == doctest::Approx(2.0).epsilon(1e-10));
  Matrix thermal = Matrix::Zero(4, 4);
  thermal.diagonal() << 2, 2, 3, 3;
  CHECK(log_negativity(CovarianceMatrix(thermal), mode) == 0.0);
  const int first[] = {0};
  CHECK(log_negativity(tmsv(0.3), first) == doctest::Approx(0.6).epsilon(1e-10));
}

TEST_CASE("property: negativity of products vanishes, local invariance") {
  Sampler rng({.seed = 16});
  for (int trial = 0; trial < 100; ++trial) {
    const CovarianceMatrix a = rng.physical_cm(1);
    const CovarianceMatrix b = rng.physical_cm(1 + trial % 2);
    const int mode[] = {0};
    CHECK(log_negativity(direct_sum(a, b), mode) == 0.0);

    const CovarianceMatrix cm = rng.physical_cm(2);
    const double en = log_negativity(cm, mode);
    CHECK(en >= 0.0);
    Matrix local = single_mode_squeezer(2, trial % 2, rng.uniform(-1.0, 1.0));
    local = phase_rotation(2, trial % 2, rng.uniform(0.0, 6.0)) * local;
    CHECK(std::abs(log_negativity(congruence(local, cm), mode) - en) < 1e-7);
  }
}

TEST_CASE("reduce_to_modes and direct_sum") {
  Sampler rng({.seed = 17});
  const CovarianceMatrix a = rng.physical_cm(2);
  const CovarianceMatrix b = rng.physical_cm(1);
  const CovarianceMatrix ab = direct_sum(a, b);
  CHECK(ab.n_modes() == 3);
  const int keep[] = {2};
  CHECK((reduce_to_modes(ab, keep).entries() - b.entries()).norm() == 0.0);
  const int swap[] = {1, 0};
  const CovarianceMatrix swapped = reduce_to_modes(a, swap);
  CHECK(swapped(0, 0) == a(2, 2));
  CHECK_THROWS_AS(reduce_to_modes(a, std::span<const int>{}), Error);
}

TEST_CASE("global invariants") {
  const GlobalInvariants g = global_invariants(tmsv(0.8));
  CHECK(g.det_sigma == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(g.seralian == doctest::Approx(2.0).epsilon(1e-9));
}
