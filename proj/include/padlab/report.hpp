#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padlab {

/// One exact norm statement, e.g. |c_plus| "=" p^0. Violations use a kind
/// prefixed with "violation:"; a report passes only with zero violations.
struct EvidenceRow {
  std::string kind;
  std::string lhs_exponent;
  std::string relation;
  std::string rhs_exponent;
  std::string location;
};

struct ReportParams {
  std::optional<long> p;
  std::optional<long> n;
  std::optional<std::string> a;
  std::optional<int> precision;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<int> iters;
};

enum class Verdict { pass, fail, not_representable };

std::string verdict_name(Verdict v);

/// Machine-readable outcome of a lemma/theorem check. Reports are
/// reproducible byte-for-byte for a fixed seed; timing_ms is emitted as 0
/// unless timing collection is explicitly requested, so that serialized
/// reports stay deterministic.
struct VerificationReport {
  std::string check_id;
  ReportParams params;
  Verdict verdict = Verdict::pass;
  std::vector<EvidenceRow> evidence;
  long timing_ms = 0;

  long violations = 0;
  long suppressed_statements = 0;
  long suppressed_violations = 0;

  static constexpr long kMaxStatements = 48;
  static constexpr long kMaxViolations = 48;

  void add_statement(const std::string& kind, const std::string& lhs,
                     const std::string& relation, const std::string& rhs,
                     const std::string& location);
  void add_violation(const std::string& kind, const std::string& lhs,
                     const std::string& relation, const std::string& rhs,
                     const std::string& location);
  /// Merge another report's evidence (prefixing locations), keeping counts.
  void absorb(const VerificationReport& other, const std::string& prefix);
  /// Set the verdict from the violation count (pass/fail); never overrides
  /// an explicit not_representable.
  void finalize();
};

enum class ReportFormat { json, text };

/// Serialize per the fixed schema: top-level
/// {check_id, params:{p,n,a,precision,seed,samples,iters}, verdict,
///  evidence:[{kind, lhs_exponent, relation, rhs_exponent, location}],
///  timing_ms}. Norms appear as exact exponent strings ("p^-2"), never
/// decimals. The text format is an aligned table of the same content.
std::string emit_report(const VerificationReport& report, ReportFormat format);

}  // namespace padlab
