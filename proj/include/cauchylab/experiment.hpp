#ifndef CAUCHYLAB_EXPERIMENT_HPP
#define CAUCHYLAB_EXPERIMENT_HPP

#include "cauchylab/domains.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cauchylab {

enum class Experiment { counterexample, sharp_constant, eigentest, annulus_identity, multipole, schur };
enum class OutputFormat { json, csv, text };

std::string to_string(Experiment experiment);
std::string to_string(OutputFormat format);
/// Throws std::invalid_argument for unknown names.
Experiment parse_experiment(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// Named tolerances with their defaults.  Keys not listed here are rejected.
std::map<std::string, double> default_tolerances();

struct ExperimentConfig {
  Experiment experiment = Experiment::counterexample;
  DomainSpec domain = DomainSpec::disk();
  /// Mesh levels; empty selects the experiment's default.
  std::vector<int> levels;
  std::map<std::string, double> tolerances = default_tolerances();
  std::string output_path;
  OutputFormat format = OutputFormat::text;

  /// Throws std::invalid_argument on an incompatible experiment and domain,
  /// an unknown tolerance key or an out-of-range level.
  void validate() const;
  /// levels, or the experiment's default when empty.
  std::vector<int> resolved_levels() const;
};

/// How a computed value is judged against its target.
enum class Relation {
  absolute,  // |value - target| <= tolerance
  relative,  // |value - target| <= tolerance |target|
  less,      // value < target
  greater,   // value > target
};

std::string to_string(Relation relation);
Relation parse_relation(std::string_view name);

struct Reference {
  std::string anchor;
  double target = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::absolute;

  bool accepts(double value) const;
  friend bool operator==(const Reference&, const Reference&) = default;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::map<std::string, double> computed;
  /// Keyed like computed; every key here has a verdict.
  std::map<std::string, Reference> references;
  std::map<std::string, bool> verdicts;
  /// Wall-clock seconds per stage.
  std::map<std::string, double> timing;

  bool all_pass() const;
  /// Records value and, when a reference is given, its verdict.
  void record(const std::string& name, double value);
  void record(const std::string& name, double value, Reference reference);
};

/// Deterministic for a given config except for timing.  Numerical failures
/// are rethrown as std::runtime_error naming the stage.
ExperimentReport run(const ExperimentConfig& config);

struct EmitOptions {
  bool include_timing = false;
};

/// json: schema 1, sorted keys, shortest round-trip floats.  csv: header
/// name,value,reference,tolerance,verdict and one row per computed value.
/// text: aligned table.
std::string render(const ExperimentReport& report, OutputFormat format, EmitOptions options = {});

/// Writes render(...) to path, or to standard output when path is empty.
/// Throws std::runtime_error on I/O failure.
void emit(const ExperimentReport& report, OutputFormat format, const std::string& path,
          EmitOptions options = {});

/// Inverse of the json rendering.  Throws std::invalid_argument on a
/// malformed document or an unsupported schema.
ExperimentReport parse_json_report(const std::string& text);

}  // namespace cauchylab

#endif  // CAUCHYLAB_EXPERIMENT_HPP
