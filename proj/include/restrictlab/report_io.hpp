#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "restrictlab/fourier.hpp"
#include "restrictlab/parabola.hpp"
#include "restrictlab/recovery.hpp"
#include "restrictlab/restriction.hpp"

namespace restrictlab {

using Json = nlohmann::ordered_json;

// Signals and spectra: {"n": N, "values": [[re, im], ...]} in row-major order.
Json to_json(const Signal2D& f);
Json to_json(const Spectrum2D& f);
Signal2D signal_from_json(const Json& j);
Spectrum2D spectrum_from_json(const Json& j);

// Problems add "missing" (0/1 per cell), and optionally "true_signal" and
// "support_hint". "values" holds the observed spectrum, zero where missing.
Json to_json(const RecoveryProblem& problem);
RecoveryProblem problem_from_json(const Json& j);
Json to_json(const RecoveryResult& result);

Json to_json(const EnergyReport& report, const RingContext& ring);
Json to_json(const DecayProfile& profile, bool include_magnitudes = false);
Json to_json(const RestrictionReport& report);
Json to_json(const UniversalCertificate& cert);

/// Shortest text that round-trips for typical values; fixed so repeated runs
/// produce identical bytes.
std::string format_number(double value);

/// Minimal CSV table: header, rows, and a trailing "# key=value ..." line.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const noexcept {
    return metadata_;
  }

  /// Throws std::invalid_argument when the row width does not match.
  void add_row(std::vector<std::string> row);
  void add_metadata(std::string key, std::string value);

  void write(std::ostream& out) const;
  std::string str() const;

  /// Parses text written by write(); comment lines are kept as metadata.
  static CsvTable parse(std::string_view text);

  /// Column index by name; throws std::out_of_range when absent.
  std::size_t column(std::string_view name) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::pair<std::string, std::string>> metadata_;
};

inline const std::vector<std::string> kRestrictionColumns = {
    "N", "omega", "squarefree", "r", "lhs", "rhs", "ratio", "constant", "satisfied", "witness_kind"};
inline const std::vector<std::string> kEnergyColumns = {"N",      "omega", "subset_size",
                                                        "energy", "bound", "max_rep"};
inline const std::vector<std::string> kSweepColumns = {
    "N", "S_size", "E_size", "trials", "exact_rate", "mean_iterations", "ds_threshold",
    "improved_threshold"};

std::vector<std::string> restriction_row(const RingContext& ring, std::string_view r_label,
                                         const RestrictionReport& report,
                                         std::string_view witness_kind);
std::vector<std::string> energy_row(const RingContext& ring, const EnergyReport& report);
std::vector<std::string> sweep_row(const SweepRow& row);

}  // namespace restrictlab
