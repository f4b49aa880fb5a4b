#include "padlab/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace padlab {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_representable:
      return "not-representable";
  }
  return "fail";  // unreachable
}

void VerificationReport::add_statement(const std::string& kind,
                                       const std::string& lhs,
                                       const std::string& relation,
                                       const std::string& rhs,
                                       const std::string& location) {
  long statements = static_cast<long>(evidence.size()) -
                    (violations - suppressed_violations);
  if (statements >= kMaxStatements) {
    ++suppressed_statements;
    return;
  }
  evidence.push_back(EvidenceRow{kind, lhs, relation, rhs, location});
}

void VerificationReport::add_violation(const std::string& kind,
                                       const std::string& lhs,
                                       const std::string& relation,
                                       const std::string& rhs,
                                       const std::string& location) {
  ++violations;
  if (violations - suppressed_violations > kMaxViolations) {
    ++suppressed_violations;
    return;
  }
  evidence.push_back(
      EvidenceRow{"violation:" + kind, lhs, relation, rhs, location});
}

void VerificationReport::absorb(const VerificationReport& other,
                                const std::string& prefix) {
  for (const EvidenceRow& row : other.evidence) {
    EvidenceRow copy = row;
    copy.location = prefix.empty() ? row.location : prefix + " " + row.location;
    if (copy.kind.rfind("violation:", 0) == 0) {
      ++violations;
      if (violations - suppressed_violations > kMaxViolations) {
        ++suppressed_violations;
        continue;
      }
    } else {
      long statements = static_cast<long>(evidence.size()) -
                        (violations - suppressed_violations);
      if (statements >= kMaxStatements) {
        ++suppressed_statements;
        continue;
      }
    }
    evidence.push_back(std::move(copy));
  }
  // Rows the other report had already suppressed stay suppressed here.
  violations += other.suppressed_violations;
  suppressed_violations += other.suppressed_violations;
  suppressed_statements += other.suppressed_statements;
}

void VerificationReport::finalize() {
  if (verdict == Verdict::not_representable) return;
  verdict = violations == 0 ? Verdict::pass : Verdict::fail;
}

namespace {

nlohmann::ordered_json params_json(const ReportParams& p) {
  nlohmann::ordered_json j;
  j["p"] = p.p ? nlohmann::ordered_json(*p.p) : nlohmann::ordered_json(nullptr);
  j["n"] = p.n ? nlohmann::ordered_json(*p.n) : nlohmann::ordered_json(nullptr);
  j["a"] = p.a ? nlohmann::ordered_json(*p.a) : nlohmann::ordered_json(nullptr);
  j["precision"] = p.precision ? nlohmann::ordered_json(*p.precision)
                               : nlohmann::ordered_json(nullptr);
  j["seed"] =
      p.seed ? nlohmann::ordered_json(*p.seed) : nlohmann::ordered_json(nullptr);
  j["samples"] = p.samples ? nlohmann::ordered_json(*p.samples)
                           : nlohmann::ordered_json(nullptr);
  j["iters"] =
      p.iters ? nlohmann::ordered_json(*p.iters) : nlohmann::ordered_json(nullptr);
  return j;
}

std::vector<EvidenceRow> rows_with_notes(const VerificationReport& r) {
  std::vector<EvidenceRow> rows = r.evidence;
  if (r.suppressed_statements > 0)
    rows.push_back(EvidenceRow{
        "note", "", "", "",
        std::to_string(r.suppressed_statements) + " statement rows suppressed"});
  if (r.suppressed_violations > 0)
    rows.push_back(EvidenceRow{
        "note", "", "", "",
        std::to_string(r.suppressed_violations) + " violation rows suppressed"});
  return rows;
}

}  // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  std::vector<EvidenceRow> rows = rows_with_notes(report);
  if (format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["check_id"] = report.check_id;
    j["params"] = params_json(report.params);
    j["verdict"] = verdict_name(report.verdict);
    nlohmann::ordered_json ev = nlohmann::ordered_json::array();
    for (const EvidenceRow& row : rows) {
      nlohmann::ordered_json je;
      je["kind"] = row.kind;
      je["lhs_exponent"] = row.lhs_exponent;
      je["relation"] = row.relation;
      je["rhs_exponent"] = row.rhs_exponent;
      je["location"] = row.location;
      ev.push_back(std::move(je));
    }
    j["evidence"] = std::move(ev);
    j["timing_ms"] = report.timing_ms;
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "check    " << report.check_id << "\n";
  os << "params  ";
  if (report.params.p) os << " p=" << *report.params.p;
  if (report.params.n) os << " n=" << *report.params.n;
  if (report.params.a) os << " a=" << *report.params.a;
  if (report.params.precision) os << " precision=" << *report.params.precision;
  if (report.params.seed) os << " seed=" << *report.params.seed;
  if (report.params.samples) os << " samples=" << *report.params.samples;
  if (report.params.iters) os << " iters=" << *report.params.iters;
  os << "\n";
  os << "verdict  " << verdict_name(report.verdict) << "\n";
  os << "evidence " << rows.size() << " rows\n";
  size_t wk = 4, wl = 3, wr = 3, wh = 3;
  for (const EvidenceRow& row : rows) {
    wk = std::max(wk, row.kind.size());
    wl = std::max(wl, row.lhs_exponent.size());
    wr = std::max(wr, row.relation.size());
    wh = std::max(wh, row.rhs_exponent.size());
  }
  for (const EvidenceRow& row : rows) {
    os << "  " << row.kind << std::string(wk - row.kind.size() + 2, ' ')
       << row.lhs_exponent << std::string(wl - row.lhs_exponent.size() + 1, ' ')
       << row.relation << std::string(wr - row.relation.size() + 1, ' ')
       << row.rhs_exponent << std::string(wh - row.rhs_exponent.size() + 2, ' ')
       << row.location << "\n";
  }
  os << "timing   " << report.timing_ms << " ms\n";
  return os.str();
}

}  // namespace padlab
