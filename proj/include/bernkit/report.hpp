#pragma once

// Serialization for the command-line front end. JSON is the canonical form:
//
//   { "suite": str, "cases": int,
//     "failures": [ { "id": str, "params": {..}, "lhs": "num/den", "rhs": "num/den" } ],
//     "notes": [str] }
//
// CSV and markdown are projections of the same data. Rationals are always
// "num/den" strings. Nothing here depends on the clock; the optional meta
// block is supplied by the caller.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bernkit/congr.hpp"
#include "bernkit/fps.hpp"
#include "bernkit/identities.hpp"
#include "bernkit/rat.hpp"

namespace bernkit {

enum class Format { Json, Csv, Markdown };

std::optional<Format> parse_format(std::string_view name);

struct ReportMeta {
  std::string command;
  std::string generated;  // timestamp, caller-provided
};

struct SequenceTable {
  std::string name;
  Params params;
  bool triangle = false;
  /// (index, values); sequences carry one value per row.
  std::vector<std::pair<unsigned, std::vector<Rat>>> rows;
};

class UnknownSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string_view> sequence_names();

/// Values for n = first..n_max of a named sequence. `x` is used by hw and
/// poly_bernoulli, `p` by poly_bernoulli (required there). Throws
/// UnknownSequence or std::invalid_argument for missing parameters.
SequenceTable compute_sequence(std::string_view name, unsigned n_max, const std::optional<Rat>& x,
                               const std::optional<unsigned>& p);

std::string render_verify(std::span<const IdentityReport> reports, Format format,
                          const std::optional<ReportMeta>& meta);
std::string render_congruence(const PrimeSweepReport& report, Format format, const std::optional<ReportMeta>& meta);
std::string render_sequence(const SequenceTable& table, Format format, const std::optional<ReportMeta>& meta);
std::string render_series(std::string_view name, const SeriesParams& params, const Egf& series, Format format,
                          const std::optional<ReportMeta>& meta);

}  // namespace bernkit
