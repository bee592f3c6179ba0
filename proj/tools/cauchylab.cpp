#include "cauchylab/experiment.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitFail = 2;

cauchylab::DomainSpec make_domain(const std::string& kind, double r, double R) {
  if (kind == "disk") return cauchylab::DomainSpec::disk(R);
  if (kind == "annulus") return cauchylab::DomainSpec::annulus(r, R);
  if (kind == "square") return cauchylab::DomainSpec::unit_square();
  throw std::invalid_argument("unknown domain '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for the planar Cauchy transform and the |xi|^-1 Fourier weight"};
  app.require_subcommand(1);

  std::string experiment;
  std::string domain = "disk";
  double r_inner = 0.5;
  double r_outer = 1.0;
  std::vector<int> levels;
  std::string out;
  std::string format = "text";
  std::vector<std::string> tolerance_overrides;
  bool timing = false;

  CLI::App* run = app.add_subcommand("run", "Run one experiment and report its verdicts");
  run->add_option("experiment", experiment,
                  "counterexample | sharp-constant | eigentest | annulus-identity | multipole | schur")
      ->required();
  run->add_option("--domain", domain, "disk | square | annulus")->capture_default_str();
  run->add_option("--r", r_inner, "Annulus inner radius")->capture_default_str();
  run->add_option("--R", r_outer, "Disk radius or annulus outer radius")->capture_default_str();
  run->add_option("--levels", levels, "Mesh levels, comma separated")->delimiter(',');
  run->add_option("--out", out, "Output file (standard output when omitted)");
  run->add_option("--format", format, "json | csv | text")->capture_default_str();
  run->add_option("--tol", tolerance_overrides, "Tolerance override name=value (repeatable)");
  run->add_flag("--timing", timing, "Include per-stage wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    cauchylab::ExperimentConfig config;
    config.experiment = cauchylab::parse_experiment(experiment);
    config.domain = make_domain(domain, r_inner, r_outer);
    config.levels = levels;
    config.output_path = out;
    config.format = cauchylab::parse_format(format);
    for (const std::string& item : tolerance_overrides) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--tol expects name=value");
      const std::string name = item.substr(0, eq);
      if (!config.tolerances.contains(name)) {
        throw std::invalid_argument("unknown tolerance '" + name + "'");
      }
      config.tolerances[name] = std::stod(item.substr(eq + 1));
    }
    const cauchylab::ExperimentReport report = cauchylab::run(config);
    cauchylab::emit(report, config.format, config.output_path, {timing});
    return report.all_pass() ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "cauchylab: %s\n", e.what());
    return kExitError;
  }
}
