#include "gaussent/entropic_bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "gaussent/error.hpp"

namespace gaussent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// An interior sweep point only beats the edge states by more than this.
constexpr double kEdgePreference = 1e-10;

void require_measure(const EntropySpec& measure) {
  switch (measure.family) {
    case EntropyFamily::kLinear:
    case EntropyFamily::kVonNeumann:
      return;
    case EntropyFamily::kTsallis:
      if (measure.p > 1.0 && std::isfinite(measure.p)) return;
      throw Error(ErrorCode::kDomainError, "Tsallis order must be > 1");
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "entropic bounds support tsallis, linear and von Neumann "
                  "entropies only");
  }
}

/// Bisection on a sign change; `f_lo` is f(lo).
template <class F>
double bisect(F&& f, double lo, double hi, double f_lo) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Every sign change of f on [lo, hi], scanned over `cells` equal cells.
template <class F>
std::vector<double> bracket_roots(F&& f, double lo, double hi, int cells) {
  std::vector<double> roots;
  if (!(hi >= lo)) return roots;
  if (hi == lo) {
    if (f(lo) == 0.0) roots.push_back(lo);
    return roots;
  }
  cells = std::max(cells, 1);
  const double step = (hi - lo) / cells;
  double x_prev = lo;
  double f_prev = f(lo);
  if (f_prev == 0.0) roots.push_back(lo);
  for (int k = 1; k <= cells; ++k) {
    const double x = k == cells ? hi : lo + k * step;
    const double fx = f(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && (fx < 0.0) != (f_prev < 0.0)) {
      roots.push_back(bisect(f, x_prev, x, f_prev));
    }
    x_prev = x;
    f_prev = fx;
  }
  return roots;
}

struct Marginals {
  double mu1;
  double mu2;
};

Marginals marginals_of(const EntropicConstraint& c) {
  require_measure(c.measure);
  return {marginal_purity_from_entropy(c.s1, c.measure),
          marginal_purity_from_entropy(c.s2, c.measure)};
}

/// Physical global purities at fixed seralian.
std::optional<std::array<double, 2>> mu_interval_at_delta(Marginals m,
                                                          double delta) {
  const double prod = m.mu1 * m.mu2;
  const double u = std::pow((m.mu1 - m.mu2) / prod, 2);
  const double v = std::pow((m.mu1 + m.mu2) / prod, 2);
  double lo = prod;
  lo = std::max(lo, delta > u ? 2.0 / (delta - u) : kInf);
  lo = std::max(lo, delta < v ? 2.0 / (v - delta) : kInf);
  double hi = max_global_purity(m.mu1, m.mu2);
  if (delta > 1.0) hi = std::min(hi, 1.0 / std::sqrt(delta - 1.0));
  if (!(lo <= hi * (1.0 + 1e-12))) return std::nullopt;
  return std::array<double, 2>{std::min(lo, hi), hi};
}

EntropicPoint make_point(Marginals m, double mu, double delta) {
  EntropicPoint pt;
  pt.mu = mu;
  pt.delta = delta;
  pt.nu_tilde_minus = ppt_symplectic_eigs({m.mu1, m.mu2, mu, delta}).nu_minus;
  pt.negativity = std::max(0.0, -std::log(pt.nu_tilde_minus));
  return pt;
}

struct Edges {
  std::vector<EntropicPoint> lower;  // squeezed thermal edge
  std::vector<EntropicPoint> upper;  // partial minimum uncertainty edge
};

Edges find_edges(Marginals m, const EntropicConstraint& c, int cells) {
  const double lo = min_global_purity(m.mu1, m.mu2);
  const double hi = max_global_purity(m.mu1, m.mu2);
  Edges edges;
  auto on_lower = [&](double mu) {
    return two_mode_entropy(mu, seralian_lower_bound(m.mu1, m.mu2, mu), c.measure) -
           c.s_global;
  };
  auto on_upper = [&](double mu) {
    return two_mode_entropy(mu, seralian_attainable_upper_bound(m.mu1, m.mu2, mu),
                            c.measure) -
           c.s_global;
  };
  for (double mu : bracket_roots(on_lower, lo, hi, cells)) {
    edges.lower.push_back(make_point(m, mu, seralian_lower_bound(m.mu1, m.mu2, mu)));
  }
  for (double mu : bracket_roots(on_upper, lo, hi, cells)) {
    edges.upper.push_back(
        make_point(m, mu, seralian_attainable_upper_bound(m.mu1, m.mu2, mu)));
  }
  return edges;
}

std::vector<double> mu_roots(Marginals m, double delta,
                             const EntropicConstraint& c, int cells) {
  const auto interval = mu_interval_at_delta(m, delta);
  if (!interval) return {};
  auto f = [&](double mu) {
    return two_mode_entropy(mu, delta, c.measure) - c.s_global;
  };
  return bracket_roots(f, (*interval)[0], (*interval)[1], cells);
}

std::string describe(const EntropicConstraint& c) {
  std::ostringstream msg;
  msg << "global entropy " << c.s_global << " is not attainable with marginal "
      << "entropies (" << c.s1 << ", " << c.s2 << ")";
  return msg.str();
}

}  // namespace

const char* family_name(ExtremalFamily family) noexcept {
  switch (family) {
    case ExtremalFamily::kGmemsEdge: return "gmems";
    case ExtremalFamily::kGlemsEdge: return "glems";
    case ExtremalFamily::kInterior: return "interior";
  }
  return "unknown";
}

double single_mode_entropy(double mu_i, const EntropySpec& measure) {
  const std::array<double, 1> spectrum{1.0 / mu_i};
  return entropy_from_spectrum(spectrum, measure);
}

double single_mode_entropy_supremum(const EntropySpec& measure) {
  require_measure(measure);
  switch (measure.family) {
    case EntropyFamily::kLinear: return 1.0;
    case EntropyFamily::kTsallis: return 1.0 / (measure.p - 1.0);
    default: return kInf;
  }
}

double marginal_purity_from_entropy(double s, const EntropySpec& measure) {
  const double sup = single_mode_entropy_supremum(measure);
  if (!(s >= 0.0) || !(s < sup)) {
    std::ostringstream msg;
    msg << "entropy " << s << " outside the attainable range [0, " << sup << ")";
    throw Error(ErrorCode::kOutOfRange, msg.str());
  }
  if (s == 0.0) return 1.0;

  auto excess = [&](double mu) { return single_mode_entropy(mu, measure) - s; };
  double lo = 0.5;
  while (excess(lo) <= 0.0) {
    lo *= 0.5;
    if (lo < 1e-300) {
      throw Error(ErrorCode::kOutOfRange, "entropy too close to its supremum");
    }
  }
  const double mu = bisect(excess, lo, 1.0, excess(lo));
  if (std::abs(excess(mu)) > 1e-10) {
    throw Error(ErrorCode::kOutOfRange, "marginal entropy inversion did not converge");
  }
  return mu;
}

double marginal_purity_from_entropy(double s, double p) {
  return marginal_purity_from_entropy(s, {EntropyFamily::kTsallis, p});
}

double two_mode_entropy(double mu, double delta, const EntropySpec& measure) {
  const SymplecticPair pair = symplectic_eigs_from_invariants(delta, mu);
  const std::array<double, 2> spectrum{pair.nu_minus, pair.nu_plus};
  return entropy_from_spectrum(spectrum, measure);
}

std::vector<double> solve_mu_at_fixed_entropy(double delta,
                                              const EntropicConstraint& constraint,
                                              int bracket_cells) {
  const Marginals m = marginals_of(constraint);
  std::vector<double> roots = mu_roots(m, delta, constraint, bracket_cells);
  if (roots.empty()) {
    std::ostringstream msg;
    msg << describe(constraint) << " at seralian " << delta;
    throw Error(ErrorCode::kNoSolution, msg.str());
  }
  return roots;
}

EntropicBounds entropic_negativity_bounds(const EntropicConstraint& constraint,
                                          const EntropicOptions& options) {
  const Marginals m = marginals_of(constraint);
  const Edges edges = find_edges(m, constraint, options.bracket_cells);
  if (edges.lower.empty() && edges.upper.empty()) {
    throw Error(ErrorCode::kNoSolution, describe(constraint));
  }

  EntropicBounds out;
  out.gmems_edge = edges.lower.empty() ? EntropicPoint{kNaN, kNaN, kNaN, kNaN}
                                       : edges.lower.front();
  out.glems_edge = edges.upper.empty() ? EntropicPoint{kNaN, kNaN, kNaN, kNaN}
                                       : edges.upper.front();

  out.e_min = kInf;
  out.e_max = -kInf;
  out.delta_min = kInf;
  out.delta_max = -kInf;
  auto consider_edge = [&](const EntropicPoint& pt, ExtremalFamily family) {
    out.delta_min = std::min(out.delta_min, pt.delta);
    out.delta_max = std::max(out.delta_max, pt.delta);
    // On exact ties the squeezed thermal edge is reported as the maximum and
    // the partial minimum uncertainty edge as the minimum.
    if (pt.negativity > out.e_max ||
        (pt.negativity == out.e_max && family == ExtremalFamily::kGmemsEdge)) {
      out.e_max = pt.negativity;
      out.argmax_family = family;
    }
    if (pt.negativity < out.e_min ||
        (pt.negativity == out.e_min && family == ExtremalFamily::kGlemsEdge)) {
      out.e_min = pt.negativity;
      out.argmin_family = family;
    }
  };
  for (const auto& pt : edges.lower) consider_edge(pt, ExtremalFamily::kGmemsEdge);
  for (const auto& pt : edges.upper) consider_edge(pt, ExtremalFamily::kGlemsEdge);

  const int points = std::max(options.delta_points, 2);
  const double span = out.delta_max - out.delta_min;
  for (int k = 0; k < points; ++k) {
    const double delta = out.delta_min + span * k / (points - 1);
    for (double mu : mu_roots(m, delta, constraint, options.bracket_cells)) {
      const EntropicPoint pt = make_point(m, mu, delta);
      if (pt.negativity > out.e_max + kEdgePreference) {
        out.e_max = pt.negativity;
        out.argmax_family = ExtremalFamily::kInterior;
      }
      if (pt.negativity < out.e_min - kEdgePreference) {
        out.e_min = pt.negativity;
        out.argmin_family = ExtremalFamily::kInterior;
      }
    }
  }
  return out;
}

double mean_delta_derivative(const EntropicConstraint& constraint,
                             const EntropicOptions& options) {
  const Marginals m = marginals_of(constraint);
  const Edges edges = find_edges(m, constraint, options.bracket_cells);
  std::vector<EntropicPoint> ends = edges.lower;
  ends.insert(ends.end(), edges.upper.begin(), edges.upper.end());
  if (ends.size() < 2) throw Error(ErrorCode::kNoSolution, describe(constraint));
  const auto [first, last] = std::minmax_element(
      ends.begin(), ends.end(),
      [](const EntropicPoint& a, const EntropicPoint& b) { return a.delta < b.delta; });
  const double width = last->delta - first->delta;
  if (!(width > 0.0)) throw Error(ErrorCode::kNoSolution, describe(constraint));
  return (last->nu_tilde_minus - first->nu_tilde_minus) / width;
}

EntropyRange attainable_global_entropy(double s1, double s2,
                                       const EntropySpec& measure,
                                       const EntropicOptions& options) {
  const Marginals m = marginals_of({measure, 0.0, s1, s2});
  const double lo = min_global_purity(m.mu1, m.mu2);
  const double hi = max_global_purity(m.mu1, m.mu2);
  EntropyRange range{kInf, -kInf};
  const int samples = std::max(8 * options.bracket_cells, 16);
  for (int k = 0; k <= samples; ++k) {
    const double mu = lo + (hi - lo) * k / samples;
    for (double delta : {seralian_lower_bound(m.mu1, m.mu2, mu),
                         seralian_attainable_upper_bound(m.mu1, m.mu2, mu)}) {
      const double s = two_mode_entropy(mu, delta, measure);
      range.lo = std::min(range.lo, s);
      range.hi = std::max(range.hi, s);
    }
  }
  return range;
}

NodalPoint nodal_point(double s_marginal, const EntropySpec& measure,
                       const EntropicOptions& options) {
  NodalPoint result;
  result.s_marginal = s_marginal;
  const EntropyRange range = attainable_global_entropy(s_marginal, s_marginal,
                                                       measure, options);
  const double margin = 1e-4 * (range.hi - range.lo);
  const double lo = range.lo + margin;
  const double hi = range.hi - margin;
  if (!(hi > lo)) return result;

  auto derivative = [&](double s_global) {
    try {
      return mean_delta_derivative({measure, s_global, s_marginal, s_marginal},
                                   options);
    } catch (const Error&) {
      return kNaN;
    }
  };

  const int scan = std::max(options.nodal_scan_points, 2);
  double s_prev = lo;
  double d_prev = derivative(lo);
  for (int k = 1; k <= scan; ++k) {
    const double s = lo + (hi - lo) * k / scan;
    const double d = derivative(s);
    if (std::isfinite(d) && std::isfinite(d_prev) && d != 0.0 &&
        (d < 0.0) != (d_prev < 0.0)) {
      result.found = true;
      result.s_nodal = bisect(derivative, s_prev, s, d_prev);
      result.derivative = derivative(result.s_nodal);
      return result;
    }
    if (d == 0.0) {
      result.found = true;
      result.s_nodal = s;
      return result;
    }
    if (std::isfinite(d)) {
      s_prev = s;
      d_prev = d;
    }
  }
  return result;
}

std::vector<NodalPoint> nodal_surface(std::span<const double> s_marginal_grid,
                                      const EntropySpec& measure,
                                      const EntropicOptions& options) {
  std::vector<NodalPoint> points;
  points.reserve(s_marginal_grid.size());
  for (double s : s_marginal_grid) points.push_back(nodal_point(s, measure, options));
  return points;
}

}  // namespace gaussent
