#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaussent/covariance.hpp"
#include "gaussent/error.hpp"
#include "gaussent/sampler.hpp"
#include "gaussent/two_mode.hpp"

using namespace gaussent;

namespace {

CovarianceMatrix tmsv(double r) {
  const double c = std::cosh(2 * r), s = std::sinh(2 * r);
  Matrix m(4, 4);
  m << c, 0, s, 0,
       0, c, 0, -s,
       s, 0, c, 0,
       0, -s, 0, c;
  return CovarianceMatrix(m);
}

double pt_nu_minus_oracle(const TwoModeInvariants& inv) {
  const int mode[] = {1};
  return symplectic_spectrum(partial_transpose(standard_form_from_invariants(inv).to_cm(), mode))
      .min();
}

}  // namespace

TEST_CASE("invariants_from_cm examples") {
  const TwoModeInvariants vac = invariants_from_cm(CovarianceMatrix::vacuum(2));
  CHECK(vac.mu1 == 1.0);
  CHECK(vac.mu == 1.0);
  CHECK(vac.delta == 2.0);

  const TwoModeInvariants sq = invariants_from_cm(tmsv(0.7));
  CHECK(sq.mu1 == doctest::Approx(1.0 / std::cosh(1.4)).epsilon(1e-12));
  CHECK(sq.mu2 == doctest::Approx(1.0 / std::cosh(1.4)).epsilon(1e-12));
  CHECK(sq.mu == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sq.delta == doctest::Approx(2.0).epsilon(1e-10));

  Matrix d = Matrix::Zero(4, 4);
  d.diagonal() << 2, 2, 3, 3;
  const TwoModeInvariants th = invariants_from_cm(CovarianceMatrix(d));
  CHECK(th.mu1 == doctest::Approx(0.5));
  CHECK(th.mu2 == doctest::Approx(1.0 / 3.0));
  CHECK(th.mu == doctest::Approx(1.0 / 6.0));
  CHECK(th.delta == doctest::Approx(13.0));

  CHECK_THROWS_AS(invariants_from_cm(CovarianceMatrix::vacuum(3)), Error);
  try {
    invariants_from_cm(CovarianceMatrix(0.5 * Matrix::Identity(4, 4)));
    FAIL("unphysical CM accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnphysicalState);
  }
}

TEST_CASE("standard form examples") {
  const StandardForm vac = standard_form_from_invariants({1, 1, 1, 2});
  CHECK(vac.a == 1.0);
  CHECK(vac.b == 1.0);
  CHECK(vac.c_plus == doctest::Approx(0.0));
  CHECK(vac.c_minus == doctest::Approx(0.0));

  const double m = 1.0 / std::cosh(2.0);
  const StandardForm sq = standard_form_from_invariants({m, m, 1, 2});
  CHECK(sq.a == doctest::Approx(std::cosh(2.0)).epsilon(1e-12));
  CHECK(sq.c_plus == doctest::Approx(std::sinh(2.0)).epsilon(1e-9));
  CHECK(sq.c_minus == doctest::Approx(-std::sinh(2.0)).epsilon(1e-9));
}

TEST_CASE("validate_invariants") {
  ValidationReport r = validate_invariants(0.5, 0.5, 0.2, 5.0);
  CHECK_FALSE(r.mu.pass);
  CHECK(r.mu.lower == doctest::Approx(0.25));
  CHECK_FALSE(r.physical());

  r = validate_invariants(1, 1, 1, 2);
  CHECK(r.physical());
  CHECK(r.delta.upper_margin() == doctest::Approx(0.0));
  CHECK(r.delta.lower_margin() == doctest::Approx(0.0));

  const double lower = 2.0 / 0.9 + std::pow((0.6 - 0.9) / (0.6 * 0.9), 2);
  r = validate_invariants(0.6, 0.9, 0.9, lower - 0.1);
  CHECK_FALSE(r.delta.pass);
  CHECK(r.delta.lower == doctest::Approx(lower));

  r = validate_invariants(1.2, 0.5, 0.5, 4.0);
  CHECK_FALSE(r.mu1.pass);
  r = validate_invariants(0.5, 0.5, 0.3, NAN);
  CHECK_FALSE(r.delta.pass);
}

TEST_CASE("ppt spectrum examples") {
  const SymplecticPair vac = ppt_symplectic_eigs({1, 1, 1, 2});
  CHECK(vac.nu_minus == doctest::Approx(1.0));
  CHECK(vac.nu_plus == doctest::Approx(1.0));

  const TwoModeInvariants sq = invariants_from_cm(tmsv(1.0));
  const SymplecticPair pt = ppt_symplectic_eigs(sq);
  CHECK(pt.nu_minus == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
  CHECK(pt.nu_plus == doctest::Approx(std::exp(2.0)).epsilon(1e-8));
  CHECK(two_mode_negativity(sq) == doctest::Approx(2.0).epsilon(1e-8));

  const SymplecticPair prod = ppt_symplectic_eigs({0.5, 1.0 / 3.0, 1.0 / 6.0, 13.0});
  CHECK(prod.nu_minus >= 1.0);
  CHECK(two_mode_negativity({0.5, 1.0 / 3.0, 1.0 / 6.0, 13.0}) == 0.0);
  CHECK(two_mode_negativity({1, 1, 1, 2}) == 0.0);
}

TEST_CASE("symmetric squeezed thermal negativity") {
  for (double r : {0.1, 0.5, 1.5}) {
    for (double mu : {0.2, 0.6, 1.0}) {
      const double nu = 1.0 / std::sqrt(mu);
      const CovarianceMatrix cm = congruence(two_mode_squeezer(2, 0, 1, r),
                                             CovarianceMatrix(nu * Matrix::Identity(4, 4)));
      const double expected = std::max(0.0, -0.5 * std::log(std::exp(-4 * r) / mu));
      CHECK(two_mode_negativity(invariants_from_cm(cm)) == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: round trip, PT spectrum, physical induced CM") {
  Sampler rng({.seed = 31});
  for (int trial = 0; trial < 10000; ++trial) {
    const TwoModeInvariants inv = rng.two_mode_invariants();
    const StandardForm sf = standard_form_from_invariants(inv);
    CHECK(sf.c_plus >= std::abs(sf.c_minus) - 1e-12);
    const CovarianceMatrix cm = sf.to_cm();
    const TwoModeInvariants back = invariants_from_cm(cm);
    CHECK(std::abs(back.mu1 - inv.mu1) < 1e-9);
    CHECK(std::abs(back.mu2 - inv.mu2) < 1e-9);
    CHECK(std::abs(back.mu - inv.mu) < 1e-9);
    CHECK(std::abs(back.delta - inv.delta) < 1e-9 * inv.delta);
    if (trial % 10 == 0) {
      CHECK(check_physical(cm));
      const SymplecticPair pt = ppt_symplectic_eigs(inv);
      CHECK(std::abs(pt.nu_minus - pt_nu_minus_oracle(inv)) < 1e-8);
      CHECK(pt.nu_minus * pt.nu_plus == doctest::Approx(1.0 / inv.mu).epsilon(1e-9));
      const int mode[] = {1};
      CHECK(std::abs(two_mode_negativity(inv) - log_negativity(cm, mode)) < 1e-9);
    }
  }
}

TEST_CASE("property: pure states are symmetric") {
  for (double m : {0.1, 0.4, 0.9, 1.0}) {
    const StandardForm sf = standard_form_from_invariants({m, m, 1.0, 2.0});
    const double c = std::sqrt(sf.a * sf.a - 1.0);
    CHECK(sf.c_plus == doctest::Approx(c).epsilon(1e-9));
    CHECK(sf.c_minus == doctest::Approx(-c).epsilon(1e-9));
  }
}

TEST_CASE("property: nu~_- increases with the seralian") {
  for (double mu1 : {0.2, 0.5, 0.8}) {
    for (double mu2 : {0.3, 0.6, 0.95}) {
      const double lo_mu = min_global_purity(mu1, mu2), hi_mu = max_global_purity(mu1, mu2);
      for (int k = 1; k < 10; ++k) {
        const double mu = lo_mu + (hi_mu - lo_mu) * k / 10.0;
        const double d_lo = seralian_lower_bound(mu1, mu2, mu);
        const double d_hi = seralian_attainable_upper_bound(mu1, mu2, mu);
        const double h = 1e-4;
        for (double d = d_lo; d + h <= d_hi; d += (d_hi - d_lo) / 50.0) {
          CHECK(ppt_symplectic_eigs({mu1, mu2, mu, d + h}).nu_minus >
                ppt_symplectic_eigs({mu1, mu2, mu, d}).nu_minus);
        }
      }
    }
  }
}

TEST_CASE("unphysical invariants throw") {
  try {
    standard_form_from_invariants({0.5, 0.5, 0.2, 10.0});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnphysicalState);
  }
  CHECK_THROWS_AS(ppt_symplectic_eigs({0.5, 0.5, 0.3, 1.0}), Error);
  CHECK_THROWS_AS(two_mode_negativity({0.5, 0.5, 0.3, 100.0}), Error);
}

TEST_CASE("seralian bounds") {
  CHECK(seralian_upper_bound(0.5) == doctest::Approx(5.0));
  CHECK(seralian_lower_bound(0.5, 0.5, 0.5) == doctest::Approx(4.0));
  // attainable cap bites only where the marginals are mixed enough
  CHECK(seralian_attainable_upper_bound(0.9, 0.9, 0.9) == doctest::Approx(seralian_upper_bound(0.9)));
  CHECK(seralian_attainable_upper_bound(0.5, 0.5, 0.3) < seralian_upper_bound(0.3));
}
