#include "cauchylab/experiment.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cauchylab {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

std::string shortest(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string fixed_width(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.10g", value);
  return buffer;
}

json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number()) throw std::invalid_argument("expected a number");
  return j.get<double>();
}

json domain_to_json(const DomainSpec& d) {
  switch (d.kind()) {
    case DomainKind::disk: return {{"kind", "disk"}, {"radius", d.radius()}};
    case DomainKind::annulus:
      return {{"kind", "annulus"}, {"r_inner", d.r_inner()}, {"r_outer", d.r_outer()}};
    case DomainKind::rectangle:
      return {{"kind", "rectangle"}, {"width", d.width()}, {"height", d.height()}};
  }
  throw std::invalid_argument("unknown domain kind");
}

DomainSpec domain_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "disk") return DomainSpec::disk(j.at("radius").get<double>());
  if (kind == "annulus") {
    return DomainSpec::annulus(j.at("r_inner").get<double>(), j.at("r_outer").get<double>());
  }
  if (kind == "rectangle") {
    return DomainSpec::rectangle(j.at("width").get<double>(), j.at("height").get<double>());
  }
  throw std::invalid_argument("unknown domain kind '" + kind + "'");
}

json to_json(const ExperimentReport& report, const EmitOptions& options) {
  const ExperimentConfig& c = report.config;
  json config = {
      {"domain", domain_to_json(c.domain)},
      {"experiment", to_string(c.experiment)},
      {"format", to_string(c.format)},
      {"levels", c.levels},
      {"output_path", c.output_path},
      {"tolerances", json::object()},
  };
  for (const auto& [k, v] : c.tolerances) config["tolerances"][k] = number(v);

  json computed = json::object();
  for (const auto& [k, v] : report.computed) computed[k] = number(v);
  json references = json::object();
  for (const auto& [k, r] : report.references) {
    references[k] = {{"anchor", r.anchor},
                     {"relation", to_string(r.relation)},
                     {"target", number(r.target)},
                     {"tolerance", number(r.tolerance)}};
  }
  json verdicts = json::object();
  for (const auto& [k, v] : report.verdicts) verdicts[k] = v ? "pass" : "fail";

  json out = {{"schema", kSchema},
              {"config", config},
              {"computed", computed},
              {"references", references},
              {"verdicts", verdicts}};
  if (options.include_timing) {
    json timing = json::object();
    for (const auto& [k, v] : report.timing) timing[k] = number(v);
    out["timing"] = timing;
  }
  return out;
}

std::string render_csv(const ExperimentReport& report) {
  std::string out = "name,value,reference,tolerance,verdict\n";
  for (const auto& [name, value] : report.computed) {
    out += name + "," + shortest(value);
    const auto ref = report.references.find(name);
    if (ref != report.references.end()) {
      out += "," + shortest(ref->second.target) + "," + shortest(ref->second.tolerance) + "," +
             (report.verdicts.at(name) ? "pass" : "fail");
    } else {
      out += ",,,";
    }
    out += "\n";
  }
  return out;
}

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::absolute: return "=";
    case Relation::relative: return "~";
    case Relation::less: return "<";
    case Relation::greater: return ">";
  }
  return "?";
}

std::string render_text(const ExperimentReport& report, const EmitOptions& options) {
  const ExperimentConfig& c = report.config;
  std::ostringstream out;
  out << "experiment: " << to_string(c.experiment) << "\n";
  out << "domain:     " << c.domain.name() << "\n";
  out << "levels:    ";
  if (c.levels.empty()) out << " -";
  for (const int l : c.levels) out << " " << l;
  out << "\n\n";

  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"name", "value", "reference", "tolerance", "verdict"});
  for (const auto& [name, value] : report.computed) {
    std::array<std::string, 5> row{name, fixed_width(value), "", "", ""};
    const auto ref = report.references.find(name);
    if (ref != report.references.end()) {
      row[2] = relation_symbol(ref->second.relation) + " " + fixed_width(ref->second.target);
      row[3] = fixed_width(ref->second.tolerance);
      row[4] = report.verdicts.at(name) ? "pass" : "FAIL";
    }
    rows.push_back(row);
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::string cell = row[k];
      if (k + 1 < row.size()) cell.resize(width[k] + 2, ' ');
      line += cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }

  const auto passed = std::count_if(report.verdicts.begin(), report.verdicts.end(),
                                    [](const auto& kv) { return kv.second; });
  out << "\n" << passed << "/" << report.verdicts.size() << " checks pass\n";
  if (options.include_timing) {
    out << "\n";
    for (const auto& [stage, seconds] : report.timing) {
      out << "time " << stage << ": " << fixed_width(seconds) << " s\n";
    }
  }
  return out.str();
}

}  // namespace

std::string render(const ExperimentReport& report, OutputFormat format, EmitOptions options) {
  switch (format) {
    case OutputFormat::json: return to_json(report, options).dump(2) + "\n";
    case OutputFormat::csv: return render_csv(report);
    case OutputFormat::text: return render_text(report, options);
  }
  throw std::invalid_argument("unknown format");
}

void emit(const ExperimentReport& report, OutputFormat format, const std::string& path,
          EmitOptions options) {
  const std::string text = render(report, format, options);
  if (path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

ExperimentReport parse_json_report(const std::string& text) {
  try {
    const json j = json::parse(text);
    if (j.at("schema").get<int>() != kSchema) throw std::invalid_argument("unsupported schema");
    ExperimentReport report;
    const json& c = j.at("config");
    report.config.experiment = parse_experiment(c.at("experiment").get<std::string>());
    report.config.domain = domain_from_json(c.at("domain"));
    report.config.levels = c.at("levels").get<std::vector<int>>();
    report.config.output_path = c.at("output_path").get<std::string>();
    report.config.format = parse_format(c.at("format").get<std::string>());
    report.config.tolerances.clear();
    for (const auto& [k, v] : c.at("tolerances").items()) report.config.tolerances[k] = read_number(v);
    for (const auto& [k, v] : j.at("computed").items()) report.computed[k] = read_number(v);
    for (const auto& [k, v] : j.at("references").items()) {
      report.references[k] = {v.at("anchor").get<std::string>(), read_number(v.at("target")),
                              read_number(v.at("tolerance")),
                              parse_relation(v.at("relation").get<std::string>())};
    }
    for (const auto& [k, v] : j.at("verdicts").items()) {
      const std::string verdict = v.get<std::string>();
      if (verdict != "pass" && verdict != "fail") throw std::invalid_argument("bad verdict");
      report.verdicts[k] = verdict == "pass";
    }
    if (j.contains("timing")) {
      for (const auto& [k, v] : j.at("timing").items()) report.timing[k] = read_number(v);
    }
    return report;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace cauchylab
