// gaussent command-line front end. Every subcommand forwards to the C API.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaussent/gaussent.h"

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  LibraryError(ge_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  ge_status status;
};

void check(ge_status status) {
  if (status != GE_OK) throw LibraryError(status, ge_last_error());
}

struct CmHandle {
  ge_cm* ptr = nullptr;
  CmHandle() = default;
  CmHandle(const CmHandle&) = delete;
  CmHandle& operator=(const CmHandle&) = delete;
  ~CmHandle() { ge_cm_free(ptr); }
};

struct SamplerHandle {
  ge_sampler* ptr = nullptr;
  SamplerHandle() = default;
  SamplerHandle(const SamplerHandle&) = delete;
  SamplerHandle& operator=(const SamplerHandle&) = delete;
  ~SamplerHandle() { ge_sampler_free(ptr); }
};

// ---- formatting

std::string fmt12(double x) {
  if (!std::isfinite(x)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Rounded to 12 significant digits; the serializer then prints the shortest
// round-trip form of the rounded value.
ordered_json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(fmt12(x).c_str(), nullptr);
}

ordered_json num(std::optional<double> x) { return x ? num(*x) : ordered_json(nullptr); }

struct Display {
  double log_scale = 1.0;  // 1/ln 2 for base-2 output
  double log(double x) const { return x * log_scale; }
};

void emit(const std::string& command, ordered_json inputs, ordered_json results) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out["results"] = std::move(results);
  std::cout << out.dump(2) << "\n";
}

// ---- argument helpers

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
    }
    if (used != item.size()) throw UsageError(std::string(flag) + ": cannot parse '" + item + "'");
    values.push_back(v);
  }
  if (expected != 0 && values.size() != expected) {
    throw UsageError(std::string(flag) + ": expected " + std::to_string(expected) + " values");
  }
  return values;
}

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  double at(int k, int steps) const { return steps <= 1 ? lo : lo + (hi - lo) * k / (steps - 1); }
  int points(int steps) const { return lo == hi ? 1 : steps; }
};

Range parse_range(const std::string& text, const char* flag) {
  const std::vector<double> v = parse_list(text, 0, flag);
  if (v.size() == 1) return {v[0], v[0]};
  if (v.size() == 2) return {v[0], v[1]};
  throw UsageError(std::string(flag) + ": expected lo,hi or a single value");
}

ge_entropy_family parse_family(const std::string& name) {
  if (name == "purity") return GE_ENTROPY_PURITY;
  if (name == "linear") return GE_ENTROPY_LINEAR;
  if (name == "tsallis") return GE_ENTROPY_TSALLIS;
  if (name == "renyi") return GE_ENTROPY_RENYI;
  if (name == "von-neumann") return GE_ENTROPY_VON_NEUMANN;
  throw UsageError("unknown entropy family " + name);
}

bool log_valued(ge_entropy_family family) {
  return family == GE_ENTROPY_RENYI || family == GE_ENTROPY_VON_NEUMANN;
}

int parse_region(const std::string& name) {
  if (name == "any") return -1;
  if (name == "separable") return GE_REGION_SEPARABLE;
  if (name == "coexistence") return GE_REGION_COEXISTENCE;
  if (name == "entangled") return GE_REGION_ENTANGLED;
  throw UsageError("unknown region " + name);
}

ordered_json invariants_json(const ge_invariants& inv) {
  return {{"mu1", num(inv.mu1)}, {"mu2", num(inv.mu2)}, {"mu", num(inv.mu)},
          {"delta", num(inv.delta)}};
}

ordered_json check_json(const ge_bound_check& c) {
  return {{"lower", num(c.lower)}, {"value", num(c.value)}, {"upper", num(c.upper)},
          {"pass", c.pass != 0}};
}

ordered_json validation_json(const ge_validation& v) {
  return {{"physical", v.physical != 0},
          {"mu1", check_json(v.mu1)},
          {"mu2", check_json(v.mu2)},
          {"mu", check_json(v.mu)},
          {"delta", check_json(v.delta)},
          {"delta_attainable", check_json(v.delta_attainable)}};
}

ordered_json thresholds_json(const ge_class& c) {
  return {{"product", num(c.product)},
          {"separable", num(c.separable)},
          {"coexistence", num(c.coexistence)},
          {"gmemms", num(c.gmemms)}};
}

ge_class classify_or_fail(double mu1, double mu2, double mu) {
  ge_class c{};
  check(ge_classify(mu1, mu2, mu, &c));
  if (c.region == GE_REGION_UNPHYSICAL) {
    throw LibraryError(GE_ERR_UNPHYSICAL, "purities outside the physical range");
  }
  return c;
}

// ---- subcommands

struct PurityArgs {
  double mu1 = 1.0, mu2 = 1.0, mu = 1.0;
};

void add_purities(CLI::App* sub, PurityArgs& args) {
  sub->add_option("--mu1", args.mu1, "marginal purity of mode 1")->required();
  sub->add_option("--mu2", args.mu2, "marginal purity of mode 2")->required();
  sub->add_option("--mu", args.mu, "global purity")->required();
}

ordered_json purity_inputs(const PurityArgs& a) {
  return {{"mu1", num(a.mu1)}, {"mu2", num(a.mu2)}, {"mu", num(a.mu)}};
}

void run_classify(const PurityArgs& a) {
  const ge_class c = classify_or_fail(a.mu1, a.mu2, a.mu);
  emit("classify", purity_inputs(a),
       {{"class", ge_region_name(c.region)}, {"thresholds", thresholds_json(c)}});
}

void run_bounds(const PurityArgs& a, const Display& d) {
  const ge_class c = classify_or_fail(a.mu1, a.mu2, a.mu);
  ge_bounds b{};
  check(ge_negativity_bounds(a.mu1, a.mu2, a.mu, &b));
  emit("bounds", purity_inputs(a),
       {{"class", ge_region_name(c.region)},
        {"emin", num(d.log(b.e_min))},
        {"emax", num(d.log(b.e_max))},
        {"ebar", num(d.log(b.mean))},
        {"delta", b.has_relative_error ? num(b.relative_error) : ordered_json(nullptr)}});
}

struct NegativityArgs {
  std::string cm_path;
  std::string invariants;
  std::vector<int> partition{1};
};

void run_negativity(const NegativityArgs& a, const Display& d) {
  if (a.cm_path.empty() == a.invariants.empty()) {
    throw UsageError("negativity: give exactly one of --cm or --invariants");
  }
  ordered_json inputs;
  ordered_json results;
  if (!a.invariants.empty()) {
    const std::vector<double> v = parse_list(a.invariants, 4, "--invariants");
    const ge_invariants inv{v[0], v[1], v[2], v[3]};
    inputs["invariants"] = invariants_json(inv);
    ge_validation report{};
    check(ge_validate_invariants(&inv, &report));
    if (!report.physical) {
      throw LibraryError(GE_ERR_UNPHYSICAL, "invariants violate the physical constraints: " +
                                                validation_json(report).dump());
    }
    double en = 0.0, nu_minus = 0.0, nu_plus = 0.0;
    check(ge_two_mode_negativity(&inv, &en));
    check(ge_ppt_symplectic_eigs(&inv, &nu_minus, &nu_plus));
    results = {{"en", num(d.log(en))},
               {"nu_tilde_minus", num(nu_minus)},
               {"nu_tilde_plus", num(nu_plus)},
               {"validation", validation_json(report)}};
  } else {
    CmHandle cm;
    check(ge_cm_load_file(a.cm_path.c_str(), &cm.ptr));
    inputs["cm"] = a.cm_path;
    inputs["partition"] = a.partition;
    int physical = 0;
    check(ge_check_physical(cm.ptr, 1e-9, &physical));
    if (!physical) throw LibraryError(GE_ERR_UNPHYSICAL, "covariance matrix is not physical");
    const int n = ge_cm_n_modes(cm.ptr);
    std::vector<double> pt(static_cast<std::size_t>(n));
    double en = 0.0;
    check(ge_log_negativity(cm.ptr, a.partition.data(), a.partition.size(), &en));
    check(ge_partial_transpose_spectrum(cm.ptr, a.partition.data(), a.partition.size(),
                                        pt.data(), pt.size()));
    results["en"] = num(d.log(en));
    results["nu_tilde_minus"] = num(pt.front());
    results["nu_tilde_plus"] = num(pt.back());
    ordered_json spectrum = ordered_json::array();
    for (double x : pt) spectrum.push_back(num(x));
    results["pt_spectrum"] = spectrum;
    if (n == 2) {
      ge_invariants inv{};
      ge_validation report{};
      check(ge_invariants_from_cm(cm.ptr, &inv));
      check(ge_validate_invariants(&inv, &report));
      results["invariants"] = invariants_json(inv);
      results["validation"] = validation_json(report);
    }
  }
  emit("negativity", inputs, results);
}

struct EntropyArgs {
  std::string cm_path;
  std::string family = "von-neumann";
  double p = 2.0;
  bool as_json = false;
};

void run_entropy(const EntropyArgs& a, const Display& d) {
  const ge_entropy_family family = parse_family(a.family);
  CmHandle cm;
  check(ge_cm_load_file(a.cm_path.c_str(), &cm.ptr));
  double value = 0.0;
  check(ge_entropy(cm.ptr, family, a.p, &value));
  if (log_valued(family)) value = d.log(value);
  if (!a.as_json) {
    std::cout << fmt12(value) << "\n";
    return;
  }
  emit("entropy", {{"cm", a.cm_path}, {"family", a.family}, {"p", num(a.p)}},
       {{"value", num(value)}});
}

void add_grid_options(CLI::App* sub, ge_entropic_options& grid) {
  sub->add_option("--bracket-cells", grid.bracket_cells, "mu scan cells per root search")
      ->check(CLI::Range(2, 1 << 24));
  sub->add_option("--delta-points", grid.delta_points, "seralian sweep points")
      ->check(CLI::Range(2, 1 << 24));
  sub->add_option("--nodal-scan-points", grid.nodal_scan_points, "global entropy scan points")
      ->check(CLI::Range(2, 1 << 24));
}

struct EntropicArgs {
  ge_entropic_options grid = ge_entropic_default_options();
  std::string family = "tsallis";
  double p = 2.0;
  double s_global = 0.0;
  std::optional<double> s_marginal, s1, s2;
};

ordered_json point_json(const ge_entropic_point& pt, const Display& d) {
  return {{"mu", num(pt.mu)},
          {"delta", num(pt.delta)},
          {"en", num(d.log(pt.negativity))},
          {"nu_tilde_minus", num(pt.nu_tilde_minus)}};
}

void run_entropic_bounds(const EntropicArgs& a, const Display& d) {
  double s1 = 0.0, s2 = 0.0;
  if (a.s_marginal && !a.s1 && !a.s2) {
    s1 = s2 = *a.s_marginal;
  } else if (!a.s_marginal && a.s1 && a.s2) {
    s1 = *a.s1;
    s2 = *a.s2;
  } else {
    throw UsageError("entropic-bounds: give --s-marginal or both --s1 and --s2");
  }
  const ge_entropy_family family = parse_family(a.family);
  ge_entropic_bounds b{};
  check(ge_entropic_negativity_bounds(family, a.p, a.s_global, s1, s2, &a.grid, &b));
  emit("entropic-bounds",
       {{"family", a.family}, {"p", num(a.p)}, {"s_global", num(a.s_global)},
        {"s1", num(s1)}, {"s2", num(s2)}},
       {{"emin", num(d.log(b.e_min))},
        {"emax", num(d.log(b.e_max))},
        {"argmin_family", ge_family_name(b.argmin_family)},
        {"argmax_family", ge_family_name(b.argmax_family)},
        {"delta_range", {num(b.delta_min), num(b.delta_max)}},
        {"gmems", point_json(b.gmems_edge, d)},
        {"glems", point_json(b.glems_edge, d)}});
}

template <class RowFn>
std::vector<std::string> parallel_rows(int n_rows, RowFn row_fn) {
  std::vector<std::string> rows(static_cast<std::size_t>(n_rows));
  std::vector<ge_status> status(rows.size(), GE_OK);
  std::vector<std::string> messages(rows.size());
  const unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < n_threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t k = t; k < rows.size(); k += n_threads) {
        try {
          rows[k] = row_fn(static_cast<int>(k));
        } catch (const LibraryError& e) {
          status[k] = e.status;
          messages[k] = e.what();
        }
      }
    });
  }
  for (std::thread& w : workers) w.join();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (status[k] != GE_OK) throw LibraryError(status[k], messages[k]);
  }
  return rows;
}

struct NodalArgs {
  ge_entropic_options grid = ge_entropic_default_options();
  std::string family = "tsallis";
  double p = 4.0;
  int grid_steps = 50;
  std::optional<double> s_max;
};

void run_nodal(const NodalArgs& a) {
  const ge_entropy_family family = parse_family(a.family);
  double top = 0.0;
  check(ge_single_mode_entropy_supremum(family, a.p, &top));
  if (a.s_max) top = *a.s_max;
  if (!std::isfinite(top)) throw UsageError("nodal: --s-max is required for this family");
  if (a.grid_steps < 1) throw UsageError("nodal: --grid-steps must be positive");
  const std::vector<std::string> rows = parallel_rows(a.grid_steps, [&](int k) {
    const double sm = top * (k + 1) / (a.grid_steps + 1);
    ge_nodal node{};
    check(ge_nodal_point(family, a.p, sm, &a.grid, &node));
    return fmt12(sm) + "," + (node.found ? fmt12(node.s_nodal) : "") + "\n";
  });
  std::cout << "s_marginal,s_nodal\n";
  for (const std::string& row : rows) std::cout << row;
}

struct LocalizeArgs {
  std::string params;
  int n = 1;
  std::string method = "direct";
};

void run_localize(const LocalizeArgs& a, const Display& d) {
  const std::vector<double> v = parse_list(a.params, 7, "--params");
  const ge_symmetric_params params{v[0], v[1], v[2], v[3], v[4], v[5], v[6], a.n};
  ge_method method = GE_METHOD_DIRECT;
  if (a.method == "localized") method = GE_METHOD_LOCALIZED;
  else if (a.method == "estimated") method = GE_METHOD_ESTIMATED;
  else if (a.method != "direct") throw UsageError("unknown method " + a.method);

  ge_localized loc{};
  check(ge_localize(&params, &loc));
  ge_multimode_negativity r{};
  check(ge_one_to_n_negativity(&params, method, &r));

  ordered_json results;
  if (r.has_estimate) {
    results["class"] = ge_region_name(r.region);
    results["emin"] = num(d.log(r.estimate.e_min));
    results["emax"] = num(d.log(r.estimate.e_max));
    results["ebar"] = num(d.log(r.estimate.mean));
    results["delta"] = r.estimate.has_relative_error ? num(r.estimate.relative_error)
                                                     : ordered_json(nullptr);
  } else {
    results["en"] = num(d.log(r.value));
  }
  results["equivalent"] = invariants_json(loc.equivalent);
  results["block"] = {{"nu_minus", num(loc.nu_minus_block)},
                      {"degeneracy", loc.degeneracy},
                      {"nu_plus", num(loc.nu_plus_block)},
                      {"mu_block", num(loc.mu_block)}};
  emit("localize",
       {{"params",
         {{"a1", num(v[0])}, {"a2", num(v[1])}, {"b", num(v[2])}, {"e1", num(v[3])},
          {"e2", num(v[4])}, {"g1", num(v[5])}, {"g2", num(v[6])}}},
        {"n", a.n},
        {"method", a.method}},
       results);
}

struct SampleArgs {
  std::uint64_t seed = 0;
  int count = 10;
  std::string region = "any";
  std::string format = "csv";
  double mu_floor = 0.05;
};

void run_sample(const SampleArgs& a, const Display& d) {
  if (a.count < 0) throw UsageError("sample: --count must be non-negative");
  SamplerHandle sampler;
  check(ge_sampler_create(a.seed, a.mu_floor, parse_region(a.region), &sampler.ptr));
  ordered_json records = ordered_json::array();
  if (a.format == "csv") std::cout << "mu1,mu2,mu,delta,class,en\n";
  for (int k = 0; k < a.count; ++k) {
    ge_invariants inv{};
    ge_class c{};
    double en = 0.0;
    check(ge_sampler_two_mode(sampler.ptr, &inv));
    check(ge_classify(inv.mu1, inv.mu2, inv.mu, &c));
    check(ge_two_mode_negativity(&inv, &en));
    if (a.format == "csv") {
      std::cout << fmt12(inv.mu1) << "," << fmt12(inv.mu2) << "," << fmt12(inv.mu) << ","
                << fmt12(inv.delta) << "," << ge_region_name(c.region) << ","
                << fmt12(d.log(en)) << "\n";
    } else {
      ordered_json rec = invariants_json(inv);
      rec["class"] = ge_region_name(c.region);
      rec["en"] = num(d.log(en));
      records.push_back(std::move(rec));
    }
  }
  if (a.format == "json") {
    emit("sample",
         {{"seed", a.seed}, {"count", a.count}, {"region", a.region},
          {"mu_floor", num(a.mu_floor)}},
         {{"samples", records}});
  }
}

struct SweepArgs {
  ge_entropic_options grid = ge_entropic_default_options();
  std::string mu1_range, mu2_range, mu_range;
  bool symmetric = false;
  std::optional<double> p;
  std::string family = "tsallis";
  std::string s_marginal_range, s_global_range;
  int steps = 21;
};

void run_purity_sweep(const SweepArgs& a, const Display& d) {
  if (a.mu1_range.empty() || a.mu_range.empty() || (a.mu2_range.empty() && !a.symmetric)) {
    throw UsageError("sweep: --mu1-range, --mu-range and --mu2-range (or --symmetric) needed");
  }
  const Range r1 = parse_range(a.mu1_range, "--mu1-range");
  const Range r2 = a.symmetric ? r1 : parse_range(a.mu2_range, "--mu2-range");
  const Range rm = parse_range(a.mu_range, "--mu-range");
  const int n1 = r1.points(a.steps);
  const int n2 = a.symmetric ? 1 : r2.points(a.steps);
  const int nm = rm.points(a.steps);

  const std::vector<std::string> rows = parallel_rows(n1, [&](int i) {
    std::string block;
    const double mu1 = r1.at(i, n1);
    for (int j = 0; j < n2; ++j) {
      const double mu2 = a.symmetric ? mu1 : r2.at(j, n2);
      for (int m = 0; m < nm; ++m) {
        const double mu = rm.at(m, nm);
        ge_class c{};
        check(ge_classify(mu1, mu2, mu, &c));
        std::string line = fmt12(mu1) + "," + fmt12(mu2) + "," + fmt12(mu) + "," +
                           ge_region_name(c.region) + ",";
        if (c.region == GE_REGION_UNPHYSICAL) {
          line += ",,,,";
        } else {
          ge_bounds b{};
          check(ge_negativity_bounds(mu1, mu2, mu, &b));
          line += fmt12(d.log(b.e_min)) + "," + fmt12(d.log(b.e_max)) + "," +
                  fmt12(d.log(b.mean)) + "," +
                  (b.has_relative_error ? fmt12(b.relative_error) : "") + ",";
        }
        line += fmt12(mu / (mu1 * mu2)) + "," + fmt12(mu / mu1) + "\n";
        block += line;
      }
    }
    return block;
  });
  std::cout << "mu1,mu2,mu,class,emin,emax,ebar,delta,mu_over_mu1mu2,mu_over_mu1\n";
  for (const std::string& block : rows) std::cout << block;
}

void run_entropic_sweep(const SweepArgs& a, const Display& d) {
  if (a.s_marginal_range.empty() || a.s_global_range.empty()) {
    throw UsageError("sweep: --p needs --s-marginal-range and --s-global-range");
  }
  const ge_entropy_family family = parse_family(a.family);
  const Range rs = parse_range(a.s_marginal_range, "--s-marginal-range");
  const Range rg = parse_range(a.s_global_range, "--s-global-range");
  const int ns = rs.points(a.steps);
  const int ng = rg.points(a.steps);
  const std::vector<std::string> rows = parallel_rows(ns, [&](int i) {
    std::string block;
    const double sm = rs.at(i, ns);
    double lo = 0.0, hi = 0.0;
    check(ge_attainable_global_entropy(family, *a.p, sm, sm, &a.grid, &lo, &hi));
    for (int j = 0; j < ng; ++j) {
      const double sg = rg.at(j, ng);
      std::string line = fmt12(sm) + "," + fmt12(sg) + ",";
      ge_entropic_bounds b{};
      if (sg < lo || sg > hi ||
          ge_entropic_negativity_bounds(family, *a.p, sg, sm, sm, &a.grid, &b) != GE_OK) {
        line += ",,,,";
      } else {
        line += fmt12(d.log(b.e_min)) + "," + fmt12(d.log(b.e_max)) + "," +
                fmt12(d.log(b.e_max - b.e_min)) + "," + ge_family_name(b.argmin_family) + "," +
                ge_family_name(b.argmax_family);
      }
      block += line + "\n";
    }
    return block;
  });
  std::cout << "s_marginal,s_global,emin,emax,gap,argmin,argmax\n";
  for (const std::string& block : rows) std::cout << block;
}

void print_error(const std::string& code, const std::string& message) {
  ordered_json err;
  err["schema_version"] = kSchemaVersion;
  err["error"] = {{"code", code}, {"message", message}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of two-mode and symmetric multimode Gaussian states"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string log_base = "e";
  app.add_option("--log-base", log_base, "base of displayed logarithms")
      ->check(CLI::IsMember({"e", "2"}));

  PurityArgs classify_args, bounds_args;
  auto* classify_cmd = app.add_subcommand("classify", "entanglement class of purity triple");
  add_purities(classify_cmd, classify_args);
  auto* bounds_cmd = app.add_subcommand("bounds", "extremal negativities at fixed purities");
  add_purities(bounds_cmd, bounds_args);

  NegativityArgs neg_args;
  auto* neg_cmd = app.add_subcommand("negativity", "logarithmic negativity");
  neg_cmd->add_option("--cm", neg_args.cm_path, "covariance matrix JSON file");
  neg_cmd->add_option("--invariants", neg_args.invariants, "mu1,mu2,mu,delta");
  neg_cmd->add_option("--partition", neg_args.partition, "0-based modes transposed (CM input)")
      ->delimiter(',');

  EntropyArgs ent_args;
  auto* ent_cmd = app.add_subcommand("entropy", "entropy of a covariance matrix");
  ent_cmd->add_option("--cm", ent_args.cm_path, "covariance matrix JSON file")->required();
  ent_cmd->add_option("--family", ent_args.family)
      ->check(CLI::IsMember({"purity", "linear", "tsallis", "renyi", "von-neumann"}));
  ent_cmd->add_option("--p", ent_args.p, "entropy order for tsallis/renyi");
  ent_cmd->add_flag("--json", ent_args.as_json, "print a full output record");

  EntropicArgs eb_args;
  auto* eb_cmd = app.add_subcommand("entropic-bounds", "negativity bounds at fixed entropies");
  eb_cmd->add_option("--family", eb_args.family)
      ->check(CLI::IsMember({"linear", "tsallis", "von-neumann"}));
  eb_cmd->add_option("--p", eb_args.p);
  eb_cmd->add_option("--s-global", eb_args.s_global)->required();
  eb_cmd->add_option("--s-marginal", eb_args.s_marginal);
  eb_cmd->add_option("--s1", eb_args.s1);
  eb_cmd->add_option("--s2", eb_args.s2);
  add_grid_options(eb_cmd, eb_args.grid);

  NodalArgs nodal_args;
  auto* nodal_cmd = app.add_subcommand("nodal", "nodal line for symmetric marginals (CSV)");
  nodal_cmd->add_option("--family", nodal_args.family)
      ->check(CLI::IsMember({"linear", "tsallis", "von-neumann"}));
  nodal_cmd->add_option("--p", nodal_args.p);
  nodal_cmd->add_option("--grid-steps", nodal_args.grid_steps);
  nodal_cmd->add_option("--s-max", nodal_args.s_max, "upper end of the marginal grid");
  add_grid_options(nodal_cmd, nodal_args.grid);

  LocalizeArgs loc_args;
  auto* loc_cmd = app.add_subcommand("localize", "1xN negativity of a symmetric state");
  loc_cmd->add_option("--params", loc_args.params, "a1,a2,b,e1,e2,g1,g2")->required();
  loc_cmd->add_option("--n", loc_args.n)->required();
  loc_cmd->add_option("--method", loc_args.method)
      ->check(CLI::IsMember({"direct", "localized", "estimated"}));

  SampleArgs sample_args;
  auto* sample_cmd = app.add_subcommand("sample", "random two-mode invariants");
  sample_cmd->add_option("--seed", sample_args.seed)->required();
  sample_cmd->add_option("--count", sample_args.count);
  sample_cmd->add_option("--region", sample_args.region)
      ->check(CLI::IsMember({"any", "separable", "coexistence", "entangled"}));
  sample_cmd->add_option("--format", sample_args.format)->check(CLI::IsMember({"csv", "json"}));
  sample_cmd->add_option("--mu-floor", sample_args.mu_floor);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep of bounds (CSV)");
  sweep_cmd->add_option("--mu1-range", sweep_args.mu1_range, "lo,hi or value");
  sweep_cmd->add_option("--mu2-range", sweep_args.mu2_range, "lo,hi or value");
  sweep_cmd->add_option("--mu-range", sweep_args.mu_range, "lo,hi or value");
  sweep_cmd->add_flag("--symmetric", sweep_args.symmetric, "tie mu2 to mu1");
  sweep_cmd->add_option("--p", sweep_args.p, "entropy order; switches to an entropy grid");
  sweep_cmd->add_option("--family", sweep_args.family)
      ->check(CLI::IsMember({"linear", "tsallis", "von-neumann"}));
  sweep_cmd->add_option("--s-marginal-range", sweep_args.s_marginal_range);
  sweep_cmd->add_option("--s-global-range", sweep_args.s_global_range);
  sweep_cmd->add_option("--steps", sweep_args.steps)->check(CLI::PositiveNumber);
  add_grid_options(sweep_cmd, sweep_args.grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("usage", e.what());
    return 2;
  }

  Display display;
  if (log_base == "2") display.log_scale = 1.0 / std::log(2.0);

  try {
    if (*classify_cmd) run_classify(classify_args);
    else if (*bounds_cmd) run_bounds(bounds_args, display);
    else if (*neg_cmd) run_negativity(neg_args, display);
    else if (*ent_cmd) run_entropy(ent_args, display);
    else if (*eb_cmd) run_entropic_bounds(eb_args, display);
    else if (*nodal_cmd) run_nodal(nodal_args);
    else if (*loc_cmd) run_localize(loc_args, display);
    else if (*sample_cmd) run_sample(sample_args, display);
    else if (*sweep_cmd) {
      if (sweep_args.p) run_entropic_sweep(sweep_args, display);
      else run_purity_sweep(sweep_args, display);
    }
  } catch (const UsageError& e) {
    print_error("usage", e.what());
    return 2;
  } catch (const LibraryError& e) {
    print_error(ge_status_name(e.status), e.what());
    return 1;
  }
  return 0;
}
