#include "riley/report.hpp"

#include <fstream>
#include <ostream>

namespace riley {

namespace {

std::string flag_of(const ConjectureRecord& rec) {
  if (!rec.error.empty()) return "validation-error";
  if (rec.counterexample_candidate) return "counterexample-candidate";
  if (!rec.holds) return "violation";
  return "";
}

}  // namespace

ReportFormat parse_report_format(const std::string& name) {
  if (name == "jsonl") return ReportFormat::jsonl;
  if (name == "csv") return ReportFormat::csv;
  throw AlgebraError("unknown report format '" + name + "' (expected jsonl or csv)");
}

nlohmann::ordered_json to_json(const ConjectureRecord& rec) {
  nlohmann::ordered_json j;
  j["knot"] = rec.knot.to_string();
  j["sigma_abs"] = rec.sigma_abs;
  j["degree"] = rec.parabolic_degree;
  j["real_roots"] = rec.real_roots;
  j["holds"] = rec.holds && rec.error.empty();
  if (rec.y2_root_excluded) j["y2_root_excluded"] = true;
  if (const auto flag = flag_of(rec); !flag.empty()) j["flag"] = flag;
  if (!rec.error.empty()) j["error"] = rec.error;
  return j;
}

nlohmann::ordered_json to_json(const TheoremRecord& rec) {
  nlohmann::ordered_json j;
  j["family"] = std::string(family_name(rec.family.family));
  j["knot"] = rec.family.to_string();
  j["m"] = rec.family.m;
  j["n"] = rec.family.n;
  j["x0"] = to_string(rec.x0);
  j["in_range"] = rec.in_range;
  j["expected"] = rec.expected.to_string();
  j["observed_roots"] = rec.observed_roots;
  j["holds"] = rec.holds;
  return j;
}

nlohmann::ordered_json to_json(const CrossCheck& rec) {
  nlohmann::ordered_json j;
  j["family"] = rec.family.to_string();
  j["knot"] = rec.knot.to_string();
  j["equal"] = rec.equal;
  if (!rec.equal) j["diff"] = rec.diff;
  return j;
}

nlohmann::ordered_json to_json(const BiPoly& p) {
  nlohmann::ordered_json j;
  j["y_degree"] = p.y_degree();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& cx : p.y_coeffs()) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& c : cx.coeffs()) row.push_back(to_string(c));
    coeffs.push_back(std::move(row));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
  try {
    std::vector<UniPoly> rows;
    for (const auto& row : j.at("coeffs")) {
      std::vector<Rational> cs;
      for (const auto& c : row) cs.push_back(parse_rational(c.get<std::string>()));
      rows.emplace_back(std::move(cs));
    }
    BiPoly out(std::move(rows));
    if (out.y_degree() != j.at("y_degree").get<int>()) throw AlgebraError("y_degree does not match coeffs");
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw AlgebraError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

const std::string& conjecture_csv_header() {
  static const std::string header = "p,q,sigma_abs,degree,real_roots,holds,flag";
  return header;
}

void emit_report(const std::vector<ConjectureRecord>& records, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::jsonl) {
    for (const auto& r : records) out << to_json(r).dump() << '\n';
    return;
  }
  out << conjecture_csv_header() << '\n';
  for (const auto& r : records) {
    out << r.knot.p() << ',' << r.knot.q() << ',' << r.sigma_abs << ',' << r.parabolic_degree << ','
        << r.real_roots << ',' << ((r.holds && r.error.empty()) ? "true" : "false") << ',' << flag_of(r) << '\n';
  }
}

void emit_report(const std::vector<ConjectureRecord>& records, ReportFormat format,
                 const std::filesystem::path& destination) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw ReportError("cannot open report destination " + destination.string());
  emit_report(records, format, out);
  out.flush();
  if (!out) throw ReportError("failed writing report to " + destination.string());
}

}  // namespace riley
