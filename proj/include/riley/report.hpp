#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "riley/bipoly.hpp"
#include "riley/verifier.hpp"

namespace riley {

enum class ReportFormat { jsonl, csv };

ReportFormat parse_report_format(const std::string& name);

/// I/O failure while writing a report; the message names the destination.
class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Keys in order: knot, sigma_abs, degree, real_roots, holds; then
/// "flag" when the record is a counterexample candidate and "error" when
/// validation failed. Timing is left out so reports are reproducible.
nlohmann::ordered_json to_json(const ConjectureRecord& rec);
nlohmann::ordered_json to_json(const TheoremRecord& rec);
nlohmann::ordered_json to_json(const CrossCheck& rec);

/// {"y_degree": d, "coeffs": [[x-coefficients, ascending]...]} with every
/// coefficient an exact fraction string.
nlohmann::ordered_json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

/// "p,q,sigma_abs,degree,real_roots,holds,flag"
const std::string& conjecture_csv_header();

void emit_report(const std::vector<ConjectureRecord>& records, ReportFormat format, std::ostream& out);
void emit_report(const std::vector<ConjectureRecord>& records, ReportFormat format,
                 const std::filesystem::path& destination);

}  // namespace riley
