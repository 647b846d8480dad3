#include <doctest.h>

#include <cmath>
#include <vector>

#include "gaussent/covariance.hpp"
#include "gaussent/entropy.hpp"
#include "gaussent/error.hpp"
#include "gaussent/sampler.hpp"

using namespace gaussent;

namespace {

// Thermal mode with symplectic eigenvalue nu has occupation n = (nu-1)/2 and
// Fock weights (1-q) q^k, q = n/(n+1). Sums over the weights serve as oracles.
std::vector<double> fock_weights(double nu) {
  const double n = 0.5 * (nu - 1.0);
  const double q = n / (n + 1.0);
  std::vector<double> w;
  double term = 1.0 - q;
  for (int k = 0; k < 20000 && term > 1e-300; ++k) {
    w.push_back(term);
    term *= q;
  }
  return w;
}

double trace_power_oracle(double nu, double p) {
  double s = 0.0;
  for (double w : fock_weights(nu)) s += std::pow(w, p);
  return s;
}

double shannon_oracle(double nu) {
  double s = 0.0;
  for (double w : fock_weights(nu)) s -= w * std::log(w);
  return s;
}

CovarianceMatrix diag_cm(std::vector<double> d) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return CovarianceMatrix(m);
}

}  // namespace

TEST_CASE("g_p examples") {
  for (double p : {1.5, 2.0, 3.0, 7.0}) CHECK(g_p(1.0, p) == 1.0);
  for (double x : {1.0, 1.3, 2.0, 10.0, 1e4}) CHECK(g_p(x, 2.0) == doctest::Approx(1.0 / x).epsilon(1e-14));
  CHECK(g_p(2.0, 3.0) == doctest::Approx(8.0 / 26.0).epsilon(1e-14));
  CHECK(g_p(1.0 - 1e-11, 2.0) == 1.0);
}

TEST_CASE("g_p domain") {
  try {
    g_p(0.5, 2.0);
    FAIL("x < 1 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDomainError);
  }
  CHECK_THROWS_AS(g_p(2.0, 1.0), Error);
  CHECK_THROWS_AS(g_p(2.0, 0.5), Error);
}

TEST_CASE("g_p agrees with the Fock-basis trace") {
  for (double nu : {1.0, 1.5, 3.0, 9.0}) {
    for (double p : {1.5, 2.0, 3.0, 4.5}) {
      CHECK(g_p(nu, p) == doctest::Approx(trace_power_oracle(nu, p)).epsilon(1e-10));
    }
  }
}

TEST_CASE("property: g_p strictly decreasing in x") {
  for (double p : {1.2, 2.0, 3.0, 4.0, 10.0}) {
    double prev = g_p(1.0, p);
    for (int k = 1; k <= 200; ++k) {
      const double x = 1.0 + 0.05 * k;
      const double v = g_p(x, p);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("purity") {
  CHECK(purity(CovarianceMatrix::vacuum(2)) == doctest::Approx(1.0));
  CHECK(purity(diag_cm({2, 2, 3, 3})) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(linear_entropy(diag_cm({2, 2, 3, 3})) == doctest::Approx(5.0 / 6.0));
  CHECK_THROWS_AS(purity(diag_cm({1, -1})), Error);
}

TEST_CASE("tsallis examples") {
  CHECK(tsallis_entropy(CovarianceMatrix::vacuum(2), 3.0) == 0.0);
  // g_3(3) = 8 / (4^3 - 2^3)
  CHECK(tsallis_entropy(diag_cm({3, 3}), 3.0) == doctest::Approx((1.0 - 8.0 / 56.0) / 2.0).epsilon(1e-13));
  CHECK(tsallis_entropy(diag_cm({3, 3}), 3.0) ==
        doctest::Approx((1.0 - trace_power_oracle(3.0, 3.0)) / 2.0).epsilon(1e-10));
  const CovarianceMatrix cm = diag_cm({2, 2, 3, 3});
  CHECK(tsallis_entropy(cm, 2.0) == doctest::Approx(linear_entropy(cm)).epsilon(1e-13));
}

TEST_CASE("von Neumann examples") {
  CHECK(von_neumann_entropy(CovarianceMatrix::vacuum(1)) == 0.0);
  CHECK(von_neumann_entropy(diag_cm({3, 3})) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
  for (double nu : {1.2, 3.0, 7.5}) {
    CHECK(von_neumann_term(nu) == doctest::Approx(shannon_oracle(nu)).epsilon(1e-9));
  }
  const CovarianceMatrix a = diag_cm({2, 2}), b = diag_cm({5, 5});
  CHECK(von_neumann_entropy(direct_sum(a, b)) ==
        doctest::Approx(von_neumann_entropy(a) + von_neumann_entropy(b)).epsilon(1e-12));
}

TEST_CASE("renyi examples") {
  CHECK(renyi_entropy(CovarianceMatrix::vacuum(2), 2.0) == doctest::Approx(0.0));
  const CovarianceMatrix cm = diag_cm({2, 2, 3, 3});
  CHECK(renyi_entropy(cm, 2.0) == doctest::Approx(-std::log(purity(cm))).epsilon(1e-13));
  for (double nu : {1.5, 4.0}) {
    const double oracle = std::log(trace_power_oracle(nu, 3.0)) / (1.0 - 3.0);
    CHECK(renyi_entropy(diag_cm({nu, nu}), 3.0) == doctest::Approx(oracle).epsilon(1e-10));
  }
}

TEST_CASE("property: p -> 1 limits approach von Neumann") {
  Sampler rng({.seed = 21});
  for (int trial = 0; trial < 200; ++trial) {
    const CovarianceMatrix cm = rng.physical_cm(1 + trial % 5);
    const double sv = von_neumann_entropy(cm);
    CHECK(std::abs(tsallis_entropy(cm, 1.0 + 1e-6) - sv) < 1e-4);
    CHECK(std::abs(renyi_entropy(cm, 1.0 + 1e-6) - sv) < 1e-4);
  }
}

TEST_CASE("property: tsallis range, purity via g_2, symplectic invariance") {
  Sampler rng({.seed = 22});
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 5;
    const CovarianceMatrix cm = rng.physical_cm(n);
    const SymplecticSpectrum s = symplectic_spectrum(cm);
    CHECK(std::abs(trace_rho_p(s.values, 2.0) - purity(cm)) <= 1e-12);
    for (double p : {2.0, 3.0, 4.0}) {
      const double sp = tsallis_entropy(cm, p);
      CHECK(sp > 0.0);
      CHECK(sp < 1.0 / (p - 1.0));
    }
    const CovarianceMatrix moved = congruence(rng.random_symplectic(n), cm);
    for (const EntropySpec& spec :
         {EntropySpec{EntropyFamily::kPurity}, EntropySpec{EntropyFamily::kLinear},
          EntropySpec{EntropyFamily::kTsallis, 3.0}, EntropySpec{EntropyFamily::kRenyi, 2.5},
          EntropySpec{EntropyFamily::kVonNeumann}}) {
      CHECK(std::abs(entropy(moved, spec) - entropy(cm, spec)) < 1e-8);
      CHECK(entropy_from_spectrum(s.values, spec) == doctest::Approx(entropy(cm, spec)).epsilon(1e-9));
    }
  }
}

TEST_CASE("tsallis pseudo-additivity on products") {
  const CovarianceMatrix a = diag_cm({2, 2}), b = diag_cm({1.5, 1.5, 4, 4});
  const double p = 3.0;
  const double sa = tsallis_entropy(a, p), sb = tsallis_entropy(b, p);
  CHECK(tsallis_entropy(direct_sum(a, b), p) ==
        doctest::Approx(sa + sb - (p - 1.0) * sa * sb).epsilon(1e-12));
}
