#include "cauchylab/experiment.hpp"

#include "cauchylab/cauchy.hpp"
#include "cauchylab/fourier.hpp"
#include "cauchylab/ground_state.hpp"
#include "cauchylab/potential.hpp"
#include "cauchylab/specfun.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cauchylab {

using std::numbers::pi;

namespace {

constexpr double kJ01Reference = 2.4048255577;

struct NamedExperiment {
  Experiment value;
  const char* name;
};

constexpr NamedExperiment kExperiments[] = {
    {Experiment::counterexample, "counterexample"},
    {Experiment::sharp_constant, "sharp-constant"},
    {Experiment::eigentest, "eigentest"},
    {Experiment::annulus_identity, "annulus-identity"},
    {Experiment::multipole, "multipole"},
    {Experiment::schur, "schur"},
};

std::string level_key(const std::string& name, int level) {
  return name + "_l" + std::to_string(level);
}

template <typename Body>
void stage(ExperimentReport& report, const std::string& name, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
  } catch (const std::exception& e) {
    throw std::runtime_error("stage " + name + ": " + e.what());
  }
  report.timing[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void run_counterexample(const ExperimentConfig& config, ExperimentReport& report) {
  const auto& tol = config.tolerances;
  stage(report, "counterexample", [&] {
    const CounterexampleReport ce = counterexample();
    report.record("lhs", ce.lhs, {"weighted form of the unit-disk indicator, 8/3", 8.0 / 3.0, tol.at("lhs"), Relation::absolute});
    report.record("lhs_error_estimate", ce.lhs_error_estimate);
    report.record("rhs", ce.rhs, {"pi / j01", pi / kJ01Reference, tol.at("rhs"), Relation::absolute});
    report.record("j01", ce.j01, {"first zero of J0", kJ01Reference, tol.at("rhs"), Relation::absolute});
    report.record("counterexample", ce.lhs - ce.rhs, {"lhs exceeds rhs", 0.0, 0.0, Relation::greater});
  });
  stage(report, "bessel_integral", [&] {
    const TruncatedIntegral b = bessel_j1_squared_over_r2();
    report.record("bessel_j1_integral", b.value,
                  {"int_0^inf J1(r)^2 / r^2 dr = 4 / (3 pi)", 4.0 / (3.0 * pi), tol.at("bessel_integral"), Relation::absolute});
  });
  stage(report, "plancherel", [&] {
    const TruncatedIntegral p = plancherel_norm_sq(RadialProfile::indicator(1.0));
    report.record("plancherel", p.value, {"||1_D||^2 = pi", pi, tol.at("plancherel"), Relation::absolute});
  });
}

void run_sharp_constant(const ExperimentConfig& config, ExperimentReport& report) {
  const auto& tol = config.tolerances;
  const DomainSpec& spec = config.domain;
  const std::vector<int> levels = config.resolved_levels();
  const int max_level = *std::max_element(levels.begin(), levels.end());
  SharpConstantReport sc;
  stage(report, "sharp_constant", [&] { sc = sharp_constant(spec, max_level); });

  double min_increase = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < sc.per_level.size(); ++k) {
    const SharpConstantLevel& row = sc.per_level[k];
    report.record(level_key("c_estimate", row.level), row.c_estimate);
    report.record(level_key("node_count", row.level), static_cast<double>(row.node_count));
    if (k > 0) min_increase = std::min(min_increase, row.c_estimate - sc.per_level[k - 1].c_estimate);
  }
  const double slack = tol.at("monotone_slack");
  report.record("min_level_increase", min_increase,
                {"Nystrom estimates increase with level", -slack, slack, Relation::greater});
  report.record("fitted_order", sc.fitted_order);
  report.record("extrapolation_order", sc.extrapolation_order);
  report.record("extrapolated", sc.extrapolated);
  report.record("lower_bound", sc.lower_bound);
  report.record("schur_upper", sc.schur_upper);
  report.record("sandwich_lower", sc.extrapolated - sc.lower_bound,
                {"Rayleigh quotient of 1 <= extrapolated", -slack, slack, Relation::greater});
  report.record("sandwich_upper", sc.schur_upper - sc.extrapolated,
                {"extrapolated <= Schur bound", -slack, slack, Relation::greater});
  if (spec.kind() == DomainKind::disk) {
    // Every quantity scales linearly with the radius.
    const double scale = spec.radius();
    report.record("radial_value", *sc.radial_value,
                  {"sharp constant of the disk, 0.852", 0.852 * scale, tol.at("sharp_constant"), Relation::absolute});
    report.record("nystrom_minus_radial", sc.extrapolated - *sc.radial_value,
                  {"2-D Nystrom agrees with the radial reduction", 0.0, tol.at("nystrom_agreement"), Relation::absolute});
    report.record("lower_bound_closed_form", sc.lower_bound,
                  {"Rayleigh quotient of 1 on the disk, 8 / (3 pi)", 8.0 / (3.0 * pi) * scale, tol.at("lower_bound"), Relation::absolute});
    report.record("schur_closed_form", sc.schur_upper,
                  {"Schur bound of the disk, 1", scale, tol.at("schur"), Relation::absolute});
  }
}

void run_eigentest(const ExperimentConfig& config, ExperimentReport& report) {
  const auto& tol = config.tolerances;
  const DomainSpec& spec = config.domain;
  for (const int level : config.resolved_levels()) {
    EigentestReport r;
    stage(report, level_key("eigentest", level), [&] { r = eigentest(spec, level); });
    report.record(level_key("lambda1", level), r.lambda1);
    report.record(level_key("threshold", level), r.threshold);
    report.record(level_key("node_count", level), static_cast<double>(r.node_count));
    report.record(level_key("h_over_w", level), r.h_norm_sq / r.w_norm_sq);
    report.record(level_key("margin", level), r.margin,
                  {"ratio >= 2 / sqrt(lambda1)", -tol.at("disk_ratio"), tol.at("disk_ratio"), Relation::greater});
    report.record(level_key("pythagoras", level), r.pythagoras_residual,
                  {"||w||^2 = ||v0||^2 + ||h||^2", r.residual_tolerance, r.residual_tolerance, Relation::less});
    report.record(level_key("orthogonality", level), r.orthogonality_residual,
                  {"<v0, h> = 0", r.residual_tolerance, r.residual_tolerance, Relation::less});
    report.record(level_key("v0_threshold", level), r.v0_threshold_residual,
                  {"||v0|| / ||u|| = 2 / sqrt(lambda1)", r.residual_tolerance, r.residual_tolerance, Relation::less});
    if (spec.kind() == DomainKind::disk) {
      const double target = 2.0 / kJ01Reference;
      report.record(level_key("ratio", level), r.ratio,
                    {"disk ratio 2 / j01", target, tol.at("disk_ratio"), Relation::absolute});
      report.record(level_key("h_over_w_disk", level), r.h_norm_sq / r.w_norm_sq,
                    {"h vanishes on the disk", tol.at("disk_h_over_w"), tol.at("disk_h_over_w"), Relation::less});
    } else if (spec.kind() == DomainKind::rectangle) {
      report.record(level_key("ratio", level), r.ratio,
                    {"ratio > 2 / sqrt(lambda1)", r.threshold, 0.0, Relation::greater});
    } else {
      report.record(level_key("ratio", level), r.ratio);
    }
  }
  if (spec.kind() == DomainKind::rectangle) {
    stage(report, "origin", [&] {
      const EigenPair pair = ground_state(spec);
      const std::complex<double> v0 = v0_field(pair, 0.0);
      const std::complex<double> w =
          cauchy_general(spec, [&pair](Point p) { return std::complex<double>(pair.u(p)); }, 0.0);
      report.record("v0_at_origin", std::abs(v0), {"v0(0) = 0", 0.0, 0.0, Relation::absolute});
      report.record("re_cauchy_at_origin", w.real(), {"Re C_D u(0) < 0", 0.0, 0.0, Relation::less});
      report.record("im_cauchy_at_origin", w.imag());
    });
  }
}

void run_annulus_identity(const ExperimentConfig& config, ExperimentReport& report) {
  const auto& tol = config.tolerances;
  const DomainSpec& spec = config.domain;
  const std::vector<int> levels = config.resolved_levels();
  const int level = *std::max_element(levels.begin(), levels.end());
  AnnulusIdentityReport a;
  stage(report, "annulus_identity", [&] { a = annulus_identity(spec.r_inner(), spec.r_outer(), level); });
  report.record("lambda1", a.lambda1);
  report.record("hopf_derivative", a.hopf_derivative);
  report.record("coefficient", a.coefficient);
  report.record("max_pointwise_error", a.max_pointwise_error,
                {"C_A f = v0 + c / z pointwise", tol.at("pointwise"), tol.at("pointwise"), Relation::less});
  report.record("v0_inv_z_product", a.v0_inv_z_product,
                {"<v0, 1/z> = 0", tol.at("angular_orthogonality"), tol.at("angular_orthogonality"), Relation::less});
  report.record("inv_z_norm_sq", a.inv_z_norm_sq,
                {"||1/z||^2 = 2 pi log(R / r)", a.inv_z_norm_sq_exact, tol.at("inv_z_norm"), Relation::absolute});
  report.record("gap", a.gap);
  report.record("gap_predicted", a.gap_predicted);
  report.record("gap_relative_error", a.gap_relative_error,
                {"ratio^2 - 4 / lambda1 = |c|^2 ||1/z||^2 / ||f||^2", tol.at("gap_relative"), tol.at("gap_relative"), Relation::less});
}

void run_multipole(const ExperimentConfig& config, ExperimentReport& report) {
  const auto& tol = config.tolerances;
  const DomainSpec& spec = config.domain;
  const std::vector<int> levels = config.resolved_levels();
  const int level = *std::max_element(levels.begin(), levels.end());
  constexpr int kOrder = 8;
  const Point direction = std::polar(1.0, 0.3);
  stage(report, "laurent", [&] {
    const EigenPair pair = ground_state(spec);
    const ComplexField u = [&pair](Point p) { return std::complex<double>(pair.u(p)); };
    const MultipoleExpansion expansion = multipole_moments(spec, u, kOrder, level);
    const Point z = 10.0 * direction;
    const std::complex<double> direct = exterior_cauchy(spec, u, z, level);
    report.record("laurent_mismatch", std::abs(direct - expansion.evaluate(z)),
                  {"exterior transform = truncated Laurent series", tol.at("laurent"), tol.at("laurent"), Relation::less});
    report.record("laurent_tail_bound", expansion.tail_bound(z));
    report.record("moment0_re", expansion.moments()[0].real());
    report.record("moment0_im", expansion.moments()[0].imag());
  });
  stage(report, "decay", [&] {
    // A generic density with a non-zero mean.
    const ComplexField f = [](Point w) {
      return std::complex<double>(1.0 + w.real() * w.imag(), std::norm(w));
    };
    const double near = std::abs(exterior_cauchy(spec, f, 10.0 * direction, level));
    const double far = std::abs(exterior_cauchy(spec, f, 100.0 * direction, level));
    report.record("decay_slope", std::log(far / near) / std::log(10.0),
                  {"exterior transform decays like 1/z", -1.0, tol.at("decay_slope"), Relation::absolute});
  });
}

void run_schur(const ExperimentConfig& config, ExperimentReport& report) {
  const auto& tol = config.tolerances;
  const DomainSpec& spec = config.domain;
  SchurBound b;
  stage(report, "schur", [&] { b = schur_bound(spec); });
  report.record("argmax_x", b.argmax.real());
  report.record("argmax_y", b.argmax.imag());
  report.record("grid_spacing", b.grid_spacing);
  if (spec.kind() == DomainKind::disk) {
    report.record("bound", b.value, {"Schur bound of the disk, R", spec.radius(), tol.at("schur"), Relation::absolute});
    report.record("argmax_offset", std::abs(b.argmax),
                  {"supremum at the centre", b.grid_spacing, 0.0, Relation::less});
  } else if (spec.kind() == DomainKind::annulus) {
    report.record("bound", b.value,
                  {"below the bound of the enclosing disk", spec.r_outer(), 0.0, Relation::less});
  } else {
    report.record("bound", b.value);
  }
}

}  // namespace

std::string to_string(Experiment experiment) {
  for (const auto& e : kExperiments) {
    if (e.value == experiment) return e.name;
  }
  throw std::invalid_argument("unknown experiment");
}

Experiment parse_experiment(std::string_view name) {
  for (const auto& e : kExperiments) {
    if (name == e.name) return e.value;
  }
  throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

std::string to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  throw std::invalid_argument("unknown format");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::absolute: return "abs";
    case Relation::relative: return "rel";
    case Relation::less: return "lt";
    case Relation::greater: return "gt";
  }
  throw std::invalid_argument("unknown relation");
}

Relation parse_relation(std::string_view name) {
  if (name == "abs") return Relation::absolute;
  if (name == "rel") return Relation::relative;
  if (name == "lt") return Relation::less;
  if (name == "gt") return Relation::greater;
  throw std::invalid_argument("unknown relation '" + std::string(name) + "'");
}

std::map<std::string, double> default_tolerances() {
  return {
      {"angular_orthogonality", 1e-10},
      {"bessel_integral", 1e-6},
      {"decay_slope", 0.1},
      {"disk_h_over_w", 1e-8},
      {"disk_ratio", 1e-4},
      {"gap_relative", 1e-5},
      {"inv_z_norm", 1e-10},
      {"laurent", 1e-10},
      {"lhs", 1e-5},
      {"lower_bound", 1e-5},
      {"monotone_slack", 1e-4},
      {"nystrom_agreement", 5e-3},
      {"plancherel", 1e-4},
      {"pointwise", 1e-8},
      {"rhs", 1e-9},
      {"schur", 1e-6},
      {"sharp_constant", 5e-3},
  };
}

bool Reference::accepts(double value) const {
  if (!std::isfinite(value)) return false;
  switch (relation) {
    case Relation::absolute: return std::abs(value - target) <= tolerance;
    case Relation::relative: return std::abs(value - target) <= tolerance * std::abs(target);
    case Relation::less: return value < target;
    case Relation::greater: return value > target;
  }
  return false;
}

void ExperimentConfig::validate() const {
  const auto defaults = default_tolerances();
  for (const auto& [key, value] : tolerances) {
    if (!defaults.contains(key)) throw std::invalid_argument("unknown tolerance '" + key + "'");
    if (!(value >= 0.0)) throw std::invalid_argument("tolerance '" + key + "' must be non-negative");
  }
  for (const auto& [key, value] : defaults) {
    if (!tolerances.contains(key)) throw std::invalid_argument("missing tolerance '" + key + "'");
  }
  for (const int level : levels) {
    if (level < 0 || level > kMaxMeshLevel) {
      throw std::invalid_argument("levels must lie in [0, " + std::to_string(kMaxMeshLevel) + "]");
    }
  }
  switch (experiment) {
    case Experiment::counterexample:
      if (!(domain == DomainSpec::disk(1.0))) {
        throw std::invalid_argument("counterexample runs on the unit disk only");
      }
      break;
    case Experiment::annulus_identity:
      if (domain.kind() != DomainKind::annulus) {
        throw std::invalid_argument("annulus-identity needs an annulus");
      }
      break;
    case Experiment::sharp_constant: {
      const auto resolved = resolved_levels();
      if (*std::max_element(resolved.begin(), resolved.end()) < 2) {
        throw std::invalid_argument("sharp-constant needs a level of at least 2");
      }
      break;
    }
    default:
      break;
  }
}

std::vector<int> ExperimentConfig::resolved_levels() const {
  if (!levels.empty()) return levels;
  switch (experiment) {
    case Experiment::sharp_constant: return {1, 2, 3};
    case Experiment::eigentest: return {2, 3, 4};
    case Experiment::annulus_identity:
    case Experiment::multipole: return {3};
    case Experiment::counterexample:
    case Experiment::schur: return {};
  }
  return {};
}

bool ExperimentReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

void ExperimentReport::record(const std::string& name, double value) { computed[name] = value; }

void ExperimentReport::record(const std::string& name, double value, Reference reference) {
  computed[name] = value;
  verdicts[name] = reference.accepts(value);
  references[name] = std::move(reference);
}

ExperimentReport run(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  report.config = config;
  report.config.levels = config.resolved_levels();
  switch (config.experiment) {
    case Experiment::counterexample: run_counterexample(report.config, report); break;
    case Experiment::sharp_constant: run_sharp_constant(report.config, report); break;
    case Experiment::eigentest: run_eigentest(report.config, report); break;
    case Experiment::annulus_identity: run_annulus_identity(report.config, report); break;
    case Experiment::multipole: run_multipole(report.config, report); break;
    case Experiment::schur: run_schur(report.config, report); break;
  }
  return report;
}

}  // namespace cauchylab
