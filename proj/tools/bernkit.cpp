// bernkit: compute Bernoulli-family sequences, expand generating functions,
// and run the identity and congruence suites.
//
// Exit codes: 0 all checks pass, 1 at least one verified failure, 2 usage or
// configuration error.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bernkit/congr.hpp"
#include "bernkit/fps.hpp"
#include "bernkit/identities.hpp"
#include "bernkit/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string format = "json";
  std::string out_path;
  bool no_meta = false;

  std::string selector;
  std::vector<std::string> selectors;
  unsigned n_max = 40;
  std::optional<unsigned> j_min;
  std::optional<unsigned> j_max;
  unsigned m_max = 20;
  unsigned p_max = 101;
  unsigned order = 32;
  std::optional<unsigned> k;
  std::optional<unsigned> p;
  std::optional<std::string> x;
  bool include_j_equals_n = false;
  std::optional<std::string> inject_fault;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::optional<bernkit::ReportMeta> meta_for(const RunConfig& cfg, const std::string& command) {
  if (cfg.no_meta) return std::nullopt;
  return bernkit::ReportMeta{command, utc_now()};
}

bernkit::Format format_of(const RunConfig& cfg) {
  auto f = bernkit::parse_format(cfg.format);
  if (!f) throw UsageError("unknown format: " + cfg.format + " (expected json, csv or markdown)");
  return *f;
}

std::optional<bernkit::Rat> parse_x(const RunConfig& cfg) {
  if (!cfg.x) return std::nullopt;
  try {
    return bernkit::parse_rat(*cfg.x);
  } catch (const std::exception& e) {
    throw UsageError("malformed --x: " + *cfg.x + " (" + e.what() + ")");
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file: " + cfg.out_path);
  out << text;
}

template <typename Known>
std::vector<std::string> resolve_selectors(const std::vector<std::string>& requested, const Known& known,
                                           const char* what) {
  std::vector<std::string> ids;
  for (const std::string& s : requested) {
    if (s == "all") {
      for (auto id : known) ids.emplace_back(id);
      continue;
    }
    bool found = false;
    for (auto id : known) found = found || id == s;
    if (!found) throw UsageError(std::string("unknown ") + what + ": " + s);
    ids.push_back(s);
  }
  if (ids.empty()) throw UsageError(std::string("no ") + what + " selected");
  return ids;
}

int cmd_compute(const RunConfig& cfg) {
  const auto format = format_of(cfg);
  const auto names = bernkit::sequence_names();
  if (std::find(names.begin(), names.end(), cfg.selector) == names.end()) {
    throw UsageError("unknown sequence: " + cfg.selector);
  }
  const auto x = parse_x(cfg);
  bernkit::SequenceTable table;
  try {
    table = bernkit::compute_sequence(cfg.selector, cfg.n_max, x, cfg.p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(cfg, bernkit::render_sequence(table, format, meta_for(cfg, "compute")));
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg) {
  const auto format = format_of(cfg);
  const auto ids = resolve_selectors(cfg.selectors, bernkit::identity_ids(), "identity");
  if (cfg.inject_fault) resolve_selectors({*cfg.inject_fault}, bernkit::identity_ids(), "identity");
  if (cfg.j_min && cfg.j_max && *cfg.j_min > *cfg.j_max) throw UsageError("--j-min exceeds --j-max");

  bernkit::Sweep sweep;
  sweep.n_max = cfg.n_max;
  sweep.j_min = cfg.j_min;
  sweep.j_max = cfg.j_max;
  sweep.m_max = cfg.m_max;
  sweep.include_j_equals_n = cfg.include_j_equals_n;
  sweep.fault = cfg.inject_fault;

  std::vector<bernkit::IdentityReport> reports;
  bool pass = true;
  for (const std::string& id : ids) {
    reports.push_back(bernkit::verify_identity(id, sweep));
    pass = pass && reports.back().pass();
  }
  emit(cfg, bernkit::render_verify(reports, format, meta_for(cfg, "verify")));
  return pass ? kExitPass : kExitFail;
}

int cmd_congruence(const RunConfig& cfg) {
  const auto format = format_of(cfg);
  const auto ids = resolve_selectors(cfg.selectors, bernkit::congruence_ids(), "congruence");
  if (cfg.p_max < 3) throw UsageError("--p-max must be >= 3");
  const bernkit::PrimeSweepReport report = bernkit::prime_sweep(ids, cfg.p_max);
  emit(cfg, bernkit::render_congruence(report, format, meta_for(cfg, "congruence")));
  return report.pass() ? kExitPass : kExitFail;
}

int cmd_series(const RunConfig& cfg) {
  const auto format = format_of(cfg);
  const auto names = bernkit::series_names();
  if (std::find(names.begin(), names.end(), cfg.selector) == names.end()) {
    throw UsageError("unknown series: " + cfg.selector);
  }
  bernkit::SeriesParams params;
  params.k = cfg.k;
  params.p = cfg.p;
  params.x = parse_x(cfg);
  bernkit::Egf series(0);
  try {
    series = bernkit::named_series(cfg.selector, cfg.order, params);
  } catch (const bernkit::SeriesError& e) {
    throw UsageError(e.what());
  }
  emit(cfg, bernkit::render_series(cfg.selector, params, series, format, meta_for(cfg, "series")));
  return kExitPass;
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "Output format: json, csv or markdown");
  sub->add_option("--out", cfg.out_path, "Write to PATH instead of standard output");
  sub->add_flag("--no-meta", cfg.no_meta, "Omit the metadata header (byte-deterministic output)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bernoulli, Stirling and harmonic-number toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* compute = app.add_subcommand("compute", "Print exact values of a sequence");
  compute->add_option("sequence", cfg.selector,
                      "bernoulli | euler | cauchy1 | stirling1 | stirling2 | harmonic | dibernoulli | hw | "
                      "poly_bernoulli")
      ->required();
  compute->add_option("--n-max", cfg.n_max, "Largest index")->check(CLI::NonNegativeNumber);
  compute->add_option("--x", cfg.x, "Rational argument for hw and poly_bernoulli, e.g. -1/2");
  compute->add_option("--p", cfg.p, "Polylog order for poly_bernoulli")->check(CLI::PositiveNumber);
  add_output_options(compute, cfg);

  auto* verify = app.add_subcommand("verify", "Sweep identities and report counterexamples");
  verify->add_option("identities", cfg.selectors, "Identity ids, or all")->required();
  verify->add_option("--n-max", cfg.n_max, "Largest n in the sweep")->check(CLI::PositiveNumber);
  verify->add_option("--j-min", cfg.j_min, "Smallest j")->check(CLI::NonNegativeNumber);
  verify->add_option("--j-max", cfg.j_max, "Largest j")->check(CLI::NonNegativeNumber);
  verify->add_option("--m-max", cfg.m_max, "Largest m")->check(CLI::PositiveNumber);
  verify->add_flag("--include-j-equals-n", cfg.include_j_equals_n,
                   "Also run MAIN at j = n, where the right side is indeterminate");
  verify->add_option("--inject-fault", cfg.inject_fault, "Add 1 to the left side of one identity (mutation test)")
      ->group("");
  add_output_options(verify, cfg);

  auto* congruence = app.add_subcommand("congruence", "Check prime congruences over odd primes");
  congruence->add_option("congruences", cfg.selectors, "Congruence ids, or all")->required();
  congruence->add_option("--p-max", cfg.p_max, "Largest prime")->check(CLI::PositiveNumber);
  add_output_options(congruence, cfg);

  auto* series = app.add_subcommand("series", "Dump a catalog generating function");
  series->add_option("name", cfg.selector,
                     "stirling2-egf | harmonic-ogf | harmonic-sq-ogf | central-binomial-harmonic-ogf | euler-egf | "
                     "polybern | hw-half-egf")
      ->required();
  series->add_option("--order", cfg.order, "Truncation order")->check(CLI::PositiveNumber);
  series->add_option("--k", cfg.k, "Block count for stirling2-egf")->check(CLI::NonNegativeNumber);
  series->add_option("--p", cfg.p, "Polylog order for polybern")->check(CLI::PositiveNumber);
  series->add_option("--x", cfg.x, "Rational argument for euler-egf and polybern");
  add_output_options(series, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*congruence) return cmd_congruence(cfg);
    if (*series) return cmd_series(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
