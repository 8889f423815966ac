#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qid/identities.hpp"

namespace qid {

/// "%.17g" for real values, "re+imi" / "re-imi" otherwise.
std::string format_scalar(Scalar v);
/// Inverse of format_scalar; grammar <real>[+|-]<real>i, no spaces. Throws ParseError.
Scalar parse_scalar(std::string_view text);
std::vector<Scalar> parse_scalar_list(std::string_view csv);

struct SampleRecord {
  std::size_t index = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  double rel_err = 0.0;
  double effective_tol = 0.0;
  double cancellation_digits = 0.0;
  bool pass = false;
  std::optional<int> m;           // lattice runs only
  std::optional<std::string> c;   // lattice runs only: q^{1+m}
  std::optional<std::string> error;
};

struct Summary {
  std::size_t count = 0;
  std::size_t passed = 0;
  double max_rel_err = 0.0;
  double mean_rel_err = 0.0;
  bool operator==(const Summary&) const = default;
};

struct Report {
  std::string schema_version = "1";
  std::string identity;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::vector<SampleRecord> samples;
  Summary summary;

  bool all_pass() const { return summary.count == summary.passed; }
};

SampleRecord record(std::size_t index, const CheckResult& r);
/// Failed record for a sample whose evaluation threw.
SampleRecord error_record(std::size_t index, const Params& p, std::string message);

/// Samples without a finite rel_err contribute to neither max nor mean.
Summary summarize(const std::vector<SampleRecord>& samples);

nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);

/// Two-space indented JSON with reals printed to 17 significant digits.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace qid
