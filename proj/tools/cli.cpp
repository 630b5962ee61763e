#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "restrictlab/fuzz.hpp"
#include "restrictlab/parabola.hpp"
#include "restrictlab/recovery.hpp"
#include "restrictlab/report_io.hpp"
#include "restrictlab/restriction.hpp"

namespace restrictlab::cli {

namespace {

struct Config {
  std::string command;
  std::vector<std::string> moduli;
  bool squarefree_only = false;
  std::uint64_t seed = 0;
  std::optional<std::size_t> trials;
  std::size_t structured = 0;
  std::vector<std::string> sizes;
  std::string r = "4/3";
  std::string output;
  std::string format = "csv";
  std::optional<std::size_t> max_support;
  std::optional<std::size_t> exhaustive;
  bool worst_case = false;
  bool l1_l2 = false;
  bool timing = false;
  std::string input;
  std::string method = "logan";
  std::vector<std::string> files;
};

struct Outcome {
  explicit Outcome(CsvTable t) : table(std::move(t)) {}

  CsvTable table;
  bool violation = false;
  /// Replaces the tabular JSON rendering when set.
  std::optional<Json> json;
};

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(bool v) { return v ? "true" : "false"; }
std::string num(double v) { return format_number(v); }

std::uint64_t parse_uint(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError{"not a non-negative integer: '" + text + "'"};
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw UsageError{"integer out of range: '" + text + "'"};
  }
}

// --------------------------------------------------------------------------
// Modulus lists

std::vector<RingContext> resolve_moduli(const Config& cfg, bool gated) {
  if (cfg.moduli.empty()) throw UsageError{"--n/--moduli is required"};
  auto values = parse_int_list(cfg.moduli, 2);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const bool filter = cfg.squarefree_only && cfg.command != "sharpness";
  std::vector<RingContext> rings;
  for (const auto n : values) {
    if (n > static_cast<std::uint64_t>(INT64_MAX)) throw UsageError{"modulus too large"};
    RingContext ring(static_cast<std::int64_t>(n));
    if (!ring.squarefree()) {
      if (filter) continue;
      if (gated) {
        throw UsageError{cfg.command + " requires squarefree N; got N=" + str(n) +
                         " (use --squarefree-only to skip)"};
      }
    }
    rings.push_back(std::move(ring));
  }
  return rings;
}

double parse_r(const std::string& label) {
  if (label == "4/3") return 4.0 / 3.0;
  if (label == "6/5") return 6.0 / 5.0;
  throw UsageError{"--r must be 4/3 or 6/5"};
}

std::vector<Frequency> parabola_frequencies(const RingContext& ring) {
  const ParabolaSet sigma(ring);
  return {sigma.points().begin(), sigma.points().end()};
}

bool below_ds_threshold(std::uint64_t n, std::size_t support, std::size_t unobserved) {
  return 2 * static_cast<std::uint64_t>(support) * unobserved < n * n;
}

// --------------------------------------------------------------------------
// Commands

Outcome cmd_energy(const Config& cfg) {
  Outcome out{CsvTable(kEnergyColumns)};
  for (const auto& ring : resolve_moduli(cfg, false)) {
    const auto report = energy_exact(ParabolaSet(ring));
    out.table.add_row(energy_row(ring, report));
    if (ring.squarefree() && report.energy > report.bound) out.violation = true;
  }
  return out;
}

Outcome cmd_decay(const Config& cfg) {
  Outcome out{CsvTable({"N", "omega", "squarefree", "max_nontrivial", "max_ratio", "witness_m1",
                        "witness_m2"})};
  for (const auto& ring : resolve_moduli(cfg, false)) {
    const auto profile = decay_profile(ParabolaSet(ring));
    out.table.add_row({str(ring.modulus()), str(static_cast<std::uint64_t>(ring.omega())),
                       str(ring.squarefree()), num(profile.max_nontrivial),
                       num(profile.max_ratio), str(profile.witness.first),
                       str(profile.witness.second)});
  }
  return out;
}

Outcome cmd_restrict_verify(const Config& cfg) {
  const double r = parse_r(cfg.r);
  const auto trials = cfg.trials.value_or(100);
  Outcome out{CsvTable(kRestrictionColumns)};
  for (const auto& ring : resolve_moduli(cfg, true)) {
    for (const auto& rec : fuzz_main_theorem(ring, trials, cfg.structured, cfg.seed, r)) {
      out.table.add_row(restriction_row(ring, cfg.r, rec.report, rec.kind));
      out.violation = out.violation || !rec.report.satisfied;
    }
  }
  return out;
}

Outcome cmd_dual_verify(const Config& cfg) {
  const auto trials = cfg.trials.value_or(100);
  Outcome out{CsvTable(kRestrictionColumns)};
  for (const auto& ring : resolve_moduli(cfg, true)) {
    const auto records = cfg.l1_l2 ? fuzz_l1_l2(ring, trials, cfg.structured, cfg.seed)
                                   : fuzz_dual(ring, trials, cfg.structured, cfg.seed);
    for (const auto& rec : records) {
      out.table.add_row(restriction_row(ring, cfg.l1_l2 ? "L1" : "L4", rec.report, rec.kind));
      out.violation = out.violation || !rec.report.satisfied;
    }
  }
  return out;
}

Outcome cmd_certificate(const Config& cfg) {
  Outcome out{CsvTable({"N", "omega", "lambda_size", "lambda_energy", "implied_constant",
                        "theorem_constant", "certified"})};
  for (const auto& ring : resolve_moduli(cfg, true)) {
    const auto cert = universal_certificate(ParabolaSet(ring));
    const bool certified = cert.implied_constant <= cert.theorem_constant + kRatioTolerance;
    out.table.add_row({str(ring.modulus()), str(static_cast<std::uint64_t>(ring.omega())),
                       num(cert.lambda_size), num(cert.lambda_energy),
                       num(cert.implied_constant), num(cert.theorem_constant), str(certified)});
    out.violation = out.violation || !certified;
  }
  return out;
}

std::string join_indices(const std::vector<std::size_t>& values) {
  std::string text;
  for (const auto v : values) {
    if (!text.empty()) text += ' ';
    text += std::to_string(v);
  }
  return text;
}

Outcome cmd_uncertainty(const Config& cfg) {
  if (!cfg.max_support) throw UsageError{"uncertainty requires --max-support"};
  const auto max_support = *cfg.max_support;
  Outcome out{CsvTable({"N", "omega", "max_support", "bound", "exhaustive_max_size",
                        "random_samples", "supports_checked", "witness_found",
                        "witness_support"})};
  for (const auto& ring : resolve_moduli(cfg, true)) {
    const auto n = ring.modulus();
    const double bound = static_cast<double>(n * n) / std::pow(2.0, ring.omega());
    if (static_cast<double>(max_support) >= bound) {
      throw UsageError{"--max-support must stay below N^2/2^omega = " + num(bound) +
                       " for N=" + str(n)};
    }
    UncertaintyOptions options;
    options.exhaustive_max_size = std::min(max_support, cfg.exhaustive.value_or(3));
    options.random_samples =
        options.exhaustive_max_size < max_support ? cfg.trials.value_or(10000) : 0;
    options.seed = cfg.seed;
    const auto verdict = uncertainty_search(ring, max_support, options);
    out.table.add_row({str(n), str(static_cast<std::uint64_t>(ring.omega())), str(max_support),
                       num(bound), str(options.exhaustive_max_size), str(options.random_samples),
                       str(verdict.supports_checked), str(verdict.witness_found),
                       join_indices(verdict.support)});
    out.violation = out.violation || verdict.witness_found;
  }
  return out;
}

Outcome cmd_sharpness(const Config& cfg) {
  Outcome out{CsvTable({"N", "omega", "squarefree", "ratio_4_3", "ratio_6_5", "constant",
                        "exceeds_constant", "witness_kind", "step1", "step2", "length1",
                        "length2", "evaluated"})};
  for (const auto& ring : resolve_moduli(cfg, false)) {
    SharpnessOptions options;
    options.random_indicators = cfg.trials.value_or(options.random_indicators);
    options.seed = cfg.seed;
    const auto result = sharpness_probe(ring, options);
    const double constant = main_theorem_constant(ring);
    const bool exceeds = result.best_ratio > constant + kRatioTolerance;
    const auto& w = result.witness;
    out.table.add_row({str(ring.modulus()), str(static_cast<std::uint64_t>(ring.omega())),
                       str(ring.squarefree()), num(result.best_ratio),
                       num(result.best_ratio_six_fifths), num(constant), str(exceeds), w.kind,
                       str(w.step1), str(w.step2), str(w.length1), str(w.length2),
                       str(static_cast<std::uint64_t>(result.evaluated))});
    out.violation = out.violation || (ring.squarefree() && exceeds);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot open " + path};
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError{path + ": " + e.what()};
  }
}

Outcome cmd_recover(const Config& cfg) {
  if (cfg.method != "logan" && cfg.method != "least-squares") {
    throw UsageError{"--method must be logan or least-squares"};
  }
  std::optional<RecoveryProblem> problem;
  if (!cfg.input.empty()) {
    try {
      problem = problem_from_json(read_json_file(cfg.input));
    } catch (const std::invalid_argument& e) {
      throw UsageError{cfg.input + ": " + e.what()};
    } catch (const Json::exception& e) {
      throw UsageError{cfg.input + ": " + e.what()};
    }
  } else {
    const auto rings = resolve_moduli(cfg, false);
    if (rings.size() != 1) throw UsageError{"recover takes exactly one modulus"};
    std::size_t support = 0;
    if (cfg.max_support) {
      support = *cfg.max_support;
    } else if (!cfg.sizes.empty()) {
      const auto sizes = parse_int_list(cfg.sizes, 0);
      if (sizes.size() != 1) throw UsageError{"recover takes a single --sizes value"};
      support = sizes.front();
    } else {
      throw UsageError{"recover needs --input, or --n with --sizes/--max-support"};
    }
    const auto& ring = rings.front();
    if (support > ring.modulus() * ring.modulus()) throw UsageError{"support larger than N^2"};
    const auto f = random_sparse_signal(ring, support, cfg.worst_case, cfg.seed, 0, 0);
    problem = erase(f, parabola_frequencies(ring));
    std::vector<std::size_t> hint;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] != Complex{}) hint.push_back(i);
    }
    problem->support_hint = std::move(hint);
  }
  if (cfg.method == "least-squares" && !problem->support_hint) {
    throw UsageError{"least-squares needs a support_hint in the problem"};
  }

  const auto result = cfg.method == "logan" ? logan_recover(*problem)
                                            : least_squares_recover(*problem);
  const auto n = problem->ring.modulus();
  std::optional<std::size_t> support_size;
  if (problem->true_signal) {
    std::size_t count = 0;
    for (const auto& v : problem->true_signal->values()) count += v != Complex{} ? 1 : 0;
    support_size = count;
  }
  const bool guaranteed =
      support_size && below_ds_threshold(n, *support_size, problem->unobserved.size());

  Outcome out{CsvTable({"N", "S_size", "E_size", "method", "status", "exactness", "iterations",
                        "final_objective", "residual", "error", "below_ds_threshold"})};
  out.table.add_row({str(n), str(static_cast<std::uint64_t>(problem->unobserved.size())),
                     support_size ? str(static_cast<std::uint64_t>(*support_size)) : "",
                     cfg.method, to_string(result.status), to_string(result.exactness),
                     str(static_cast<std::uint64_t>(result.iterations)),
                     num(result.final_objective), num(result.residual),
                     result.error ? num(*result.error) : "", str(guaranteed)});
  out.violation = guaranteed && !result.exact();
  Json j = to_json(result);
  j["method"] = cfg.method;
  j["below_ds_threshold"] = guaranteed;
  out.json = std::move(j);
  return out;
}

Outcome cmd_sweep(const Config& cfg) {
  if (cfg.sizes.empty()) throw UsageError{"sweep requires --sizes"};
  const auto parsed = parse_int_list(cfg.sizes, 0);
  const std::vector<std::size_t> sizes(parsed.begin(), parsed.end());
  SweepOptions options;
  options.seed = cfg.seed;
  options.worst_case = cfg.worst_case;
  Outcome out{CsvTable(kSweepColumns)};
  for (const auto& ring : resolve_moduli(cfg, false)) {
    for (const auto size : sizes) {
      if (size > ring.modulus() * ring.modulus()) {
        throw UsageError{"--sizes value " + str(static_cast<std::uint64_t>(size)) +
                         " exceeds N^2 for N=" + str(ring.modulus())};
      }
    }
    const auto lost = parabola_frequencies(ring);
    for (const auto& row : threshold_sweep(ring, lost, sizes, cfg.trials.value_or(100), options)) {
      out.table.add_row(sweep_row(row));
      if (below_ds_threshold(row.modulus, row.support_size, row.unobserved_size) &&
          row.exact_rate < 1.0) {
        out.violation = true;
      }
    }
  }
  return out;
}

// --------------------------------------------------------------------------
// summarize

struct Schema {
  std::vector<std::string> header;
  std::string ratio;
  std::string constant;
  std::function<bool(const CsvTable&, const std::vector<std::string>&)> violated;
};

std::string cell(const CsvTable& t, const std::vector<std::string>& row, std::string_view name) {
  return row.at(t.column(name));
}

double cell_number(const CsvTable& t, const std::vector<std::string>& row,
                   std::string_view name) {
  try {
    return std::stod(cell(t, row, name));
  } catch (const std::exception&) {
    throw UsageError{"non-numeric value in column " + std::string(name)};
  }
}

const std::vector<Schema>& schemas() {
  static const std::vector<Schema> all = {
      {kRestrictionColumns, "ratio", "constant",
       [](const CsvTable& t, const auto& row) { return cell(t, row, "satisfied") != "true"; }},
      {kEnergyColumns, "", "",
       [](const CsvTable& t, const auto& row) {
         const auto n = parse_uint(cell(t, row, "N"));
         return RingContext(static_cast<std::int64_t>(n)).squarefree() &&
                parse_uint(cell(t, row, "energy")) > parse_uint(cell(t, row, "bound"));
       }},
      {kSweepColumns, "", "",
       [](const CsvTable& t, const auto& row) {
         return below_ds_threshold(parse_uint(cell(t, row, "N")),
                                   parse_uint(cell(t, row, "E_size")),
                                   parse_uint(cell(t, row, "S_size"))) &&
                cell_number(t, row, "exact_rate") < 1.0;
       }},
      {{"N", "omega", "lambda_size", "lambda_energy", "implied_constant", "theorem_constant",
        "certified"},
       "implied_constant", "theorem_constant",
       [](const CsvTable& t, const auto& row) { return cell(t, row, "certified") != "true"; }},
      {{"N", "omega", "squarefree", "ratio_4_3", "ratio_6_5", "constant", "exceeds_constant",
        "witness_kind", "step1", "step2", "length1", "length2", "evaluated"},
       "ratio_4_3", "constant",
       [](const CsvTable& t, const auto& row) {
         return cell(t, row, "squarefree") == "true" && cell(t, row, "exceeds_constant") == "true";
       }},
      {{"N", "omega", "max_support", "bound", "exhaustive_max_size", "random_samples",
        "supports_checked", "witness_found", "witness_support"},
       "", "",
       [](const CsvTable& t, const auto& row) { return cell(t, row, "witness_found") == "true"; }},
      {{"N", "omega", "squarefree", "max_nontrivial", "max_ratio", "witness_m1", "witness_m2"},
       "max_ratio", "", [](const CsvTable&, const auto&) { return false; }},
  };
  return all;
}

struct Aggregate {
  std::size_t rows = 0;
  std::optional<double> max_ratio;
  std::string constant;
  std::string ds_threshold;
  std::string improved_threshold;
  std::optional<std::uint64_t> max_exact_size;
  std::size_t violations = 0;
};

Outcome cmd_summarize(const Config& cfg) {
  std::vector<CsvTable> tables;
  for (const auto& path : cfg.files) {
    std::ifstream in(path);
    if (!in) throw UsageError{"cannot open " + path};
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
      auto table = CsvTable::parse(buffer.str());
      if (!table.header().empty()) tables.push_back(std::move(table));
    } catch (const std::invalid_argument& e) {
      throw UsageError{path + ": malformed CSV: " + e.what()};
    }
  }

  const std::vector<std::string> header{"N",           "rows",          "max_ratio",
                                        "constant",    "ds_threshold",  "improved_threshold",
                                        "max_exact_size", "violations", "verdict"};
  Outcome out{CsvTable(header)};
  if (tables.empty()) return out;

  for (const auto& t : tables) {
    if (t.header() != tables.front().header()) throw UsageError{"report schemas differ"};
  }
  const auto& schemas_list = schemas();
  const auto schema = std::find_if(schemas_list.begin(), schemas_list.end(), [&](const Schema& s) {
    return s.header == tables.front().header();
  });
  if (schema == schemas_list.end()) throw UsageError{"unrecognised report schema"};
  const bool is_sweep = schema->header == kSweepColumns;

  std::map<std::uint64_t, Aggregate> groups;
  for (const auto& t : tables) {
    for (const auto& row : t.rows()) {
      auto& g = groups[parse_uint(cell(t, row, "N"))];
      ++g.rows;
      if (!schema->ratio.empty()) {
        const double ratio = cell_number(t, row, schema->ratio);
        g.max_ratio = g.max_ratio ? std::max(*g.max_ratio, ratio) : ratio;
      }
      if (!schema->constant.empty()) g.constant = cell(t, row, schema->constant);
      if (is_sweep) {
        g.ds_threshold = cell(t, row, "ds_threshold");
        g.improved_threshold = cell(t, row, "improved_threshold");
        if (cell_number(t, row, "exact_rate") >= 1.0) {
          const auto size = parse_uint(cell(t, row, "E_size"));
          g.max_exact_size = g.max_exact_size ? std::max(*g.max_exact_size, size) : size;
        }
      }
      if (schema->violated(t, row)) ++g.violations;
    }
  }
  std::size_t total_violations = 0;
  for (const auto& [n, g] : groups) {
    out.table.add_row({str(n), str(static_cast<std::uint64_t>(g.rows)),
                       g.max_ratio ? num(*g.max_ratio) : "", g.constant, g.ds_threshold,
                       g.improved_threshold, g.max_exact_size ? str(*g.max_exact_size) : "",
                       str(static_cast<std::uint64_t>(g.violations)),
                       g.violations == 0 ? "pass" : "fail"});
    total_violations += g.violations;
  }
  out.violation = total_violations > 0;
  return out;
}

// --------------------------------------------------------------------------
// Output

Json cell_to_json(const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
    return std::stoull(text);
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (!text.empty() && end == text.c_str() + text.size() && std::isfinite(value)) return value;
  return text;
}

Json table_to_json(const CsvTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows()) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.header()[i]] = cell_to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

void emit(Outcome& outcome, const Config& cfg, double seconds, std::ostream& out) {
  outcome.table.add_metadata("command", cfg.command);
  outcome.table.add_metadata("seed", std::to_string(cfg.seed));
  outcome.table.add_metadata("version", RESTRICTLAB_VERSION);
  if (cfg.timing) outcome.table.add_metadata("wall_time_s", num(seconds));

  std::string text;
  if (cfg.format == "json") {
    Json doc = Json::object();
    for (const auto& [key, value] : outcome.table.metadata()) doc[key] = cell_to_json(value);
    if (outcome.json) {
      doc["result"] = *outcome.json;
    } else {
      doc["rows"] = table_to_json(outcome.table);
    }
    doc["violation"] = outcome.violation;
    text = doc.dump(2) + "\n";
  } else {
    text = outcome.table.str();
  }

  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError{"cannot write " + cfg.output};
  file << text;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--n,--moduli", cfg.moduli, "Moduli: 15, 5..40 or comma lists")
      ->delimiter(',');
  sub->add_flag("--squarefree-only", cfg.squarefree_only, "Skip non-squarefree moduli");
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--output", cfg.output, "Write the report here instead of stdout");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--timing", cfg.timing, "Record wall time in the metadata line");
}

}  // namespace

std::vector<std::uint64_t> parse_int_list(const std::vector<std::string>& tokens,
                                          std::uint64_t minimum) {
  std::vector<std::uint64_t> values;
  for (const auto& raw : tokens) {
    std::stringstream parts(raw);
    std::string token;
    while (std::getline(parts, token, ',')) {
      if (token.empty()) continue;
      const auto dots = token.find("..");
      if (dots == std::string::npos) {
        values.push_back(parse_uint(token));
      } else {
        const auto lo = parse_uint(token.substr(0, dots));
        const auto hi = parse_uint(token.substr(dots + 2));
        if (hi < lo) throw UsageError{"empty range '" + token + "'"};
        if (hi - lo > 1000000) throw UsageError{"range too long '" + token + "'"};
        for (auto v = lo; v <= hi; ++v) values.push_back(v);
      }
    }
  }
  for (const auto v : values) {
    if (v < minimum) throw UsageError{"value " + str(v) + " is below " + str(minimum)};
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Restriction and recovery experiments on (Z/NZ)^2", "restrictlab"};
  app.set_version_flag("--version", std::string(RESTRICTLAB_VERSION));
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands{
      {"energy", "Additive energy of the parabola"},
      {"decay", "Largest nontrivial parabola exponential sum"},
      {"restrict-verify", "Fuzz the (2, r) restriction estimate"},
      {"dual-verify", "Fuzz the L4 extension estimate"},
      {"certificate", "Energy certificate for the restriction constant"},
      {"uncertainty", "Search for small supports with spectrum on the parabola"},
      {"sharpness", "Structured indicators that stress the 4/3 estimate"},
      {"recover", "Recover one signal with lost parabola frequencies"},
      {"sweep", "Exact-recovery rates against support size"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&cfg, n = name] { cfg.command = n; });
    add_common(sub, cfg);
    if (name == "restrict-verify" || name == "dual-verify" || name == "uncertainty" ||
        name == "sharpness" || name == "sweep") {
      sub->add_option("--trials", cfg.trials, "Random trials or samples");
    }
    if (name == "restrict-verify" || name == "dual-verify") {
      sub->add_option("--structured", cfg.structured, "Structured trials after the random ones");
    }
    if (name == "restrict-verify") sub->add_option("--r", cfg.r, "4/3 or 6/5");
    if (name == "dual-verify") sub->add_flag("--l1-l2", cfg.l1_l2, "Check the L1-L2 bound");
    if (name == "uncertainty" || name == "recover") {
      sub->add_option("--max-support", cfg.max_support, "Largest support size");
    }
    if (name == "uncertainty") {
      sub->add_option("--exhaustive", cfg.exhaustive, "Exhaustive search up to this size");
    }
    if (name == "sweep" || name == "recover") {
      sub->add_option("--sizes", cfg.sizes, "Support sizes: 5..40 or comma lists")
          ->delimiter(',');
      sub->add_flag("--worst-case", cfg.worst_case, "Unimodular amplitudes");
    }
    if (name == "recover") {
      sub->add_option("--input", cfg.input, "Problem JSON");
      sub->add_option("--method", cfg.method, "logan or least-squares");
    }
  }
  auto* summarize = app.add_subcommand("summarize", "Aggregate report CSV files");
  summarize->callback([&cfg] { cfg.command = "summarize"; });
  summarize->add_option("files", cfg.files, "Report files");
  add_common(summarize, cfg);

  std::vector<const char*> argv{"restrictlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << RESTRICTLAB_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  static const std::map<std::string, Outcome (*)(const Config&)> dispatch{
      {"energy", cmd_energy},         {"decay", cmd_decay},
      {"restrict-verify", cmd_restrict_verify}, {"dual-verify", cmd_dual_verify},
      {"certificate", cmd_certificate}, {"uncertainty", cmd_uncertainty},
      {"sharpness", cmd_sharpness},   {"recover", cmd_recover},
      {"sweep", cmd_sweep},           {"summarize", cmd_summarize},
  };
  try {
    const auto start = std::chrono::steady_clock::now();
    auto outcome = dispatch.at(cfg.command)(cfg);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    emit(outcome, cfg, elapsed.count(), out);
    if (outcome.violation) {
      err << cfg.command << ": violation found\n";
      return kExitViolation;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.message << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace restrictlab::cli
