#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bpdfq/verify.hpp"

namespace bpdfq {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

enum class OutputFormat { text, json, csv };
OutputFormat parse_output_format(const std::string& name);

// Exact values: rationals as "p/q" strings, quaternions as 4-arrays
// [w, x, y, z], dual quaternions as {"primal": [...], "dual": [...]}.
Json to_json(const BigRational& q);
Json to_json(const RationalQuaternion& q);
Json to_json(const RationalDualQuaternion& q);
Json to_json(const RationalDualScalar& q);
Json to_json(const CaseValue& v);

BigRational rational_from_json(const Json& j);
RationalQuaternion quaternion_from_json(const Json& j);
RationalDualQuaternion dual_quaternion_from_json(const Json& j);

/// Renders a value as in the text tables: "p/q", "(w,x,y,z)", "(..) + ε(..)".
std::string render(const BigRational& q);
std::string render(const RationalQuaternion& q);
std::string render(const RationalDualQuaternion& q);
std::string render(const RationalDualScalar& q);
std::string render(const CaseValue& v);

Json report_to_json(const CheckReport& report);
/// {version, reports: [...], passed, verdict}
Json reports_to_json(const std::vector<CheckReport>& reports);
void write_reports(const std::vector<CheckReport>& reports, OutputFormat format, std::ostream& os);

enum class SequenceKind { scalar, dual, quat, dualquat };
SequenceKind parse_sequence_kind(const std::string& name);
std::string_view to_string(SequenceKind kind);

using SequenceValue = std::variant<BigRational, RationalDualScalar, RationalQuaternion, RationalDualQuaternion>;

struct SequenceTable {
  BigRational a;
  BigRational b;
  SequenceKind kind = SequenceKind::scalar;
  std::vector<std::pair<long, SequenceValue>> rows;
};

SequenceTable make_sequence_table(const BiperiodicParams& params, SequenceKind kind, long from, long to);
Json sequence_to_json(const SequenceTable& table);
SequenceTable sequence_from_json(const Json& j);
void write_sequence(const SequenceTable& table, OutputFormat format, std::ostream& os);

}  // namespace bpdfq
