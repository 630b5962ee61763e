#include "restrictlab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace restrictlab {

namespace {

template <class Domain>
Json grid_to_json(const Grid2D<Domain>& f) {
  Json values = Json::array();
  for (const auto& v : f.values()) values.push_back({v.real(), v.imag()});
  return {{"n", f.ring().modulus()}, {"values", std::move(values)}};
}

template <class Domain>
Grid2D<Domain> grid_from_json(const Json& j) {
  const auto n = j.at("n").get<std::int64_t>();
  const auto& raw = j.at("values");
  if (!raw.is_array()) throw std::invalid_argument("\"values\" must be an array");
  std::vector<Complex> values;
  values.reserve(raw.size());
  for (const auto& pair : raw) {
    if (!pair.is_array() || pair.size() != 2) {
      throw std::invalid_argument("each value must be a [re, im] pair");
    }
    values.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return Grid2D<Domain>(RingContext(n), std::move(values));
}

}  // namespace

Json to_json(const Signal2D& f) { return grid_to_json(f); }
Json to_json(const Spectrum2D& f) { return grid_to_json(f); }
Signal2D signal_from_json(const Json& j) { return grid_from_json<SpaceDomain>(j); }
Spectrum2D spectrum_from_json(const Json& j) { return grid_from_json<FrequencyDomain>(j); }

Json to_json(const RecoveryProblem& problem) {
  Json j = grid_to_json(problem.observed);
  Json missing = Json::array();
  for (const char m : problem.missing) missing.push_back(m ? 1 : 0);
  j["missing"] = std::move(missing);
  if (problem.true_signal) j["true_signal"] = grid_to_json(*problem.true_signal);
  if (problem.support_hint) j["support_hint"] = *problem.support_hint;
  return j;
}

RecoveryProblem problem_from_json(const Json& j) {
  Spectrum2D observed = spectrum_from_json(j);
  const auto n = observed.side();
  const auto& raw = j.at("missing");
  if (!raw.is_array() || raw.size() != n * n) {
    throw std::invalid_argument("\"missing\" must hold one 0/1 flag per cell");
  }
  std::vector<char> missing(n * n, 0);
  std::vector<Frequency> unobserved;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (raw[k].get<int>() != 0) {
      missing[k] = 1;
      unobserved.push_back({k / n, k % n});
      observed[k] = 0.0;
    }
  }
  RecoveryProblem problem{observed.ring(), std::move(unobserved), std::move(missing),
                          std::move(observed), std::nullopt, std::nullopt};
  if (j.contains("true_signal")) {
    problem.true_signal = signal_from_json(j.at("true_signal"));
    if (!(problem.true_signal->ring() == problem.ring)) {
      throw std::invalid_argument("true_signal has a different modulus");
    }
    const auto spectrum = dft(*problem.true_signal);
    for (std::size_t k = 0; k < n * n; ++k) {
      if (!problem.missing[k] && std::abs(spectrum[k] - problem.observed[k]) > 1e-10) {
        throw std::invalid_argument("true_signal disagrees with the observed spectrum");
      }
    }
  }
  if (j.contains("support_hint")) {
    problem.support_hint = j.at("support_hint").get<std::vector<std::size_t>>();
  }
  return problem;
}

Json to_json(const RecoveryResult& result) {
  Json j = grid_to_json(result.recovered);
  j["iterations"] = result.iterations;
  j["final_objective"] = result.final_objective;
  j["residual"] = result.residual;
  j["status"] = to_string(result.status);
  j["exactness"] = to_string(result.exactness);
  if (result.error) j["error"] = *result.error;
  return j;
}

Json to_json(const EnergyReport& report, const RingContext& ring) {
  return {{"N", ring.modulus()},
          {"omega", ring.omega()},
          {"subset_size", report.subset_size},
          {"energy", report.energy},
          {"bound", report.bound},
          {"max_rep", report.max_rep}};
}

Json to_json(const DecayProfile& profile, bool include_magnitudes) {
  Json j = {{"N", profile.modulus},
            {"max_nontrivial", profile.max_nontrivial},
            {"max_ratio", profile.max_ratio},
            {"witness", {profile.witness.first, profile.witness.second}}};
  if (include_magnitudes) j["magnitudes"] = profile.magnitudes;
  return j;
}

Json to_json(const RestrictionReport& report) {
  return {{"lhs", report.lhs},
          {"rhs", report.rhs},
          {"ratio", report.ratio},
          {"constant", report.constant},
          {"satisfied", report.satisfied}};
}

Json to_json(const UniversalCertificate& cert) {
  return {{"lambda_size", cert.lambda_size},
          {"lambda_energy", cert.lambda_energy},
          {"implied_constant", cert.implied_constant},
          {"theorem_constant", cert.theorem_constant}};
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> row) {
  if (row.size() != header_.size()) {
    throw std::invalid_argument("CSV row has " + std::to_string(row.size()) + " fields, expected " +
                                std::to_string(header_.size()));
  }
  rows_.push_back(std::move(row));
}

void CsvTable::add_metadata(std::string key, std::string value) {
  metadata_.emplace_back(std::move(key), std::move(value));
}

namespace {
void write_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}
}  // namespace

void CsvTable::write(std::ostream& out) const {
  write_line(out, header_);
  for (const auto& row : rows_) write_line(out, row);
  if (!metadata_.empty()) {
    out << '#';
    for (const auto& [key, value] : metadata_) out << ' ' << key << '=' << value;
    out << '\n';
  }
}

std::string CsvTable::str() const {
  std::ostringstream out;
  write(out);
  return out.str();
}

CsvTable CsvTable::parse(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream words(line.substr(1));
      std::string word;
      while (words >> word) {
        const auto eq = word.find('=');
        if (eq == std::string::npos) continue;
        metadata.emplace_back(word.substr(0, eq), word.substr(eq + 1));
      }
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    lines.push_back(std::move(fields));
  }
  if (lines.empty()) return CsvTable({});
  CsvTable table(std::move(lines.front()));
  for (std::size_t i = 1; i < lines.size(); ++i) table.add_row(std::move(lines[i]));
  table.metadata_ = std::move(metadata);
  return table;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  throw std::out_of_range("no CSV column named " + std::string(name));
}

std::vector<std::string> restriction_row(const RingContext& ring, std::string_view r_label,
                                         const RestrictionReport& report,
                                         std::string_view witness_kind) {
  return {std::to_string(ring.modulus()),
          std::to_string(ring.omega()),
          ring.squarefree() ? "true" : "false",
          std::string(r_label),
          format_number(report.lhs),
          format_number(report.rhs),
          format_number(report.ratio),
          format_number(report.constant),
          report.satisfied ? "true" : "false",
          std::string(witness_kind)};
}

std::vector<std::string> energy_row(const RingContext& ring, const EnergyReport& report) {
  return {std::to_string(ring.modulus()),    std::to_string(ring.omega()),
          std::to_string(report.subset_size), std::to_string(report.energy),
          std::to_string(report.bound),       std::to_string(report.max_rep)};
}

std::vector<std::string> sweep_row(const SweepRow& row) {
  return {std::to_string(row.modulus),
          std::to_string(row.unobserved_size),
          std::to_string(row.support_size),
          std::to_string(row.trials),
          format_number(row.exact_rate),
          format_number(row.mean_iterations),
          format_number(row.ds_threshold),
          format_number(row.improved_threshold)};
}

}  // namespace restrictlab
