#include "bpdfq/report_io.hpp"

#include <ostream>
#include <sstream>

#include "bpdfq/error.hpp"

namespace bpdfq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const char* const kEpsilon = "ε";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Eight exact strings w,x,y,z,eps:w,... ; a rational fills the first slot only.
std::vector<std::string> flatten(const CaseValue& v) {
  std::vector<std::string> out(8);
  std::visit(overloaded{[&](const BigRational& q) { out[0] = q.to_string(); },
                        [&](const RationalDualQuaternion& q) {
                          const auto p = q.primal.components();
                          const auto d = q.dual.components();
                          for (int i = 0; i < 4; ++i) {
                            out[i] = p[i]->to_string();
                            out[i + 4] = d[i]->to_string();
                          }
                        }},
             v);
  return out;
}

std::string params_label(const BigRational& a, const BigRational& b) {
  return "a=" + a.to_string() + " b=" + b.to_string();
}

Json named_checks(const std::vector<NamedCheck>& checks) {
  Json arr = Json::array();
  for (const NamedCheck& c : checks) {
    Json j;
    j["name"] = c.name;
    j["holds"] = c.holds;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) {
    if (!r.passed()) return false;
  }
  return true;
}

Verdict overall_verdict(const std::vector<CheckReport>& reports) {
  bool any_match = false;
  bool any_mismatch = false;
  for (const CheckReport& r : reports) {
    any_match = any_match || r.matched > 0;
    any_mismatch = any_mismatch || r.mismatched > 0;
  }
  if (!any_mismatch) return Verdict::confirmed;
  return any_match ? Verdict::mixed : Verdict::refuted;
}

void write_text(const std::vector<CheckReport>& reports, std::ostream& os) {
  for (const CheckReport& r : reports) {
    os << '[' << r.identity << ']';
    for (const BiperiodicParams& p : r.matrix) os << " (" << params_label(p.a(), p.b()) << ')';
    os << " n=" << r.ranges.n_from << ".." << r.ranges.n_to;
    if (!r.ranges.r_values.empty()) {
      os << " r=";
      for (std::size_t i = 0; i < r.ranges.r_values.size(); ++i) os << (i ? "," : "") << r.ranges.r_values[i];
    }
    os << ": " << r.cases.size() << " cases, " << r.matched << " match, " << r.mismatched << " mismatch -> "
       << to_string(r.verdict) << (r.passed() ? " (pass)" : " (FAIL)") << '\n';
    for (const NamedCheck& c : r.consistency) {
      os << "  check " << c.name << ": " << (c.holds ? "holds" : "FAILS") << (c.detail.empty() ? "" : " (" + c.detail + ")")
         << '\n';
    }
    for (const NamedCheck& c : r.exploratory) {
      os << "  finding " << c.name << ": " << (c.holds ? "holds" : "does not hold")
         << (c.detail.empty() ? "" : " (" + c.detail + ")") << '\n';
    }
    for (const CheckCase& c : r.cases) {
      if (c.status == Status::match) continue;
      os << "  mismatch " << c.identity << ' ' << params_label(c.a, c.b) << " n=" << c.n;
      if (c.r) os << " r=" << *c.r;
      os << " delta=" << render(c.delta);
      if (c.residue) os << " sqrt(D)-residue=" << render(*c.residue);
      os << '\n';
    }
  }
  os << "overall: " << to_string(overall_verdict(reports)) << ", " << (all_passed(reports) ? "pass" : "FAIL") << '\n';
}

void write_csv(const std::vector<CheckReport>& reports, std::ostream& os) {
  os << "a,b,suite,identity,n,r,status,out_of_hypothesis";
  for (const char* side : {"lhs", "rhs"}) {
    for (const char* comp : {"w", "x", "y", "z"}) os << ',' << side << '.' << comp;
    for (const char* comp : {"w", "x", "y", "z"}) os << ',' << side << '.' << kEpsilon << ':' << comp;
  }
  os << '\n';
  for (const CheckReport& r : reports) {
    for (const CheckCase& c : r.cases) {
      os << csv_field(c.a.to_string()) << ',' << csv_field(c.b.to_string()) << ',' << r.identity << ',' << c.identity
         << ',' << c.n << ',' << (c.r ? std::to_string(*c.r) : "") << ',' << to_string(c.status) << ','
         << (c.out_of_hypothesis ? "true" : "false");
      for (const CaseValue* v : {&c.lhs, &c.rhs}) {
        for (const std::string& s : flatten(*v)) os << ',' << csv_field(s);
      }
      os << '\n';
    }
  }
}

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw ParseError("unknown output format '" + name + "' (expected text, json or csv)");
}

Json to_json(const BigRational& q) { return q.to_string(); }

Json to_json(const RationalQuaternion& q) {
  return Json::array({q.w.to_string(), q.x.to_string(), q.y.to_string(), q.z.to_string()});
}

Json to_json(const RationalDualQuaternion& q) {
  Json j;
  j["primal"] = to_json(q.primal);
  j["dual"] = to_json(q.dual);
  return j;
}

Json to_json(const RationalDualScalar& q) {
  Json j;
  j["real"] = q.real.to_string();
  j["dual"] = q.dual.to_string();
  return j;
}

Json to_json(const CaseValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

BigRational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string, got " + j.dump());
  return BigRational::parse(j.get<std::string>());
}

RationalQuaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("quaternion must be a 4-array");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

RationalDualQuaternion dual_quaternion_from_json(const Json& j) {
  return {quaternion_from_json(j.at("primal")), quaternion_from_json(j.at("dual"))};
}

std::string render(const BigRational& q) { return q.to_string(); }

std::string render(const RationalQuaternion& q) {
  return "(" + q.w.to_string() + "," + q.x.to_string() + "," + q.y.to_string() + "," + q.z.to_string() + ")";
}

std::string render(const RationalDualQuaternion& q) {
  return render(q.primal) + " + " + kEpsilon + render(q.dual);
}

std::string render(const RationalDualScalar& q) {
  return q.real.to_string() + " + " + kEpsilon + "·" + q.dual.to_string();
}

std::string render(const CaseValue& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

Json report_to_json(const CheckReport& report) {
  Json j;
  if (report.matrix.size() == 1) {
    j["params"] = {{"a", report.matrix.front().a().to_string()}, {"b", report.matrix.front().b().to_string()}};
  } else {
    Json arr = Json::array();
    for (const BiperiodicParams& p : report.matrix) arr.push_back({{"a", p.a().to_string()}, {"b", p.b().to_string()}});
    j["params"] = std::move(arr);
  }
  j["suite"] = report.identity;
  j["ranges"] = {{"n_from", report.ranges.n_from}, {"n_to", report.ranges.n_to}, {"r", report.ranges.r_values}};
  Json cases = Json::array();
  for (const CheckCase& c : report.cases) {
    Json jc;
    jc["identity"] = c.identity;
    if (report.matrix.size() != 1) {
      jc["a"] = c.a.to_string();
      jc["b"] = c.b.to_string();
    }
    jc["n"] = c.n;
    jc["r"] = c.r ? Json(*c.r) : Json(nullptr);
    jc["status"] = std::string(to_string(c.status));
    jc["lhs"] = to_json(c.lhs);
    jc["rhs"] = to_json(c.rhs);
    jc["delta"] = to_json(c.delta);
    if (c.residue) jc["residue"] = to_json(*c.residue);
    if (c.out_of_hypothesis) jc["out_of_hypothesis"] = true;
    if (!c.variants.empty()) {
      Json vs = Json::array();
      for (const VariantOutcome& v : c.variants) vs.push_back({{"form", v.name}, {"status", std::string(to_string(v.status))}});
      jc["variants"] = std::move(vs);
    }
    cases.push_back(std::move(jc));
  }
  j["cases"] = std::move(cases);
  j["summary"] = {{"cases", report.cases.size()}, {"match", report.matched}, {"mismatch", report.mismatched}};
  j["consistency"] = named_checks(report.consistency);
  j["exploratory"] = named_checks(report.exploratory);
  j["verdict"] = std::string(to_string(report.verdict));
  j["passed"] = report.passed();
  return j;
}

Json reports_to_json(const std::vector<CheckReport>& reports) {
  Json j;
  j["version"] = kReportVersion;
  Json arr = Json::array();
  for (const CheckReport& r : reports) arr.push_back(report_to_json(r));
  j["reports"] = std::move(arr);
  j["verdict"] = std::string(to_string(overall_verdict(reports)));
  j["passed"] = all_passed(reports);
  return j;
}

void write_reports(const std::vector<CheckReport>& reports, OutputFormat format, std::ostream& os) {
  switch (format) {
    case OutputFormat::json:
      os << reports_to_json(reports).dump(2) << '\n';
      return;
    case OutputFormat::csv:
      write_csv(reports, os);
      return;
    case OutputFormat::text:
      write_text(reports, os);
      return;
  }
}

SequenceKind parse_sequence_kind(const std::string& name) {
  if (name == "scalar") return SequenceKind::scalar;
  if (name == "dual") return SequenceKind::dual;
  if (name == "quat") return SequenceKind::quat;
  if (name == "dualquat") return SequenceKind::dualquat;
  throw ParseError("unknown sequence kind '" + name + "' (expected scalar, dual, quat or dualquat)");
}

std::string_view to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::scalar:
      return "scalar";
    case SequenceKind::dual:
      return "dual";
    case SequenceKind::quat:
      return "quat";
    case SequenceKind::dualquat:
      return "dualquat";
  }
  return "?";
}

SequenceTable make_sequence_table(const BiperiodicParams& params, SequenceKind kind, long from, long to) {
  if (from > to) {
    throw PreconditionError("empty range: --from " + std::to_string(from) + " exceeds --to " + std::to_string(to));
  }
  SequenceCache cache(params);
  cache.fill(from, to + 4);
  SequenceTable table{params.a(), params.b(), kind, {}};
  for (long n = from; n <= to; ++n) {
    switch (kind) {
      case SequenceKind::scalar:
        table.rows.emplace_back(n, cache.fib(n));
        break;
      case SequenceKind::dual:
        table.rows.emplace_back(n, cache.dual_fib(n));
        break;
      case SequenceKind::quat:
        table.rows.emplace_back(n, cache.fib_quat(n));
        break;
      case SequenceKind::dualquat:
        table.rows.emplace_back(n, cache.dual_fib_quat(n));
        break;
    }
  }
  return table;
}

Json sequence_to_json(const SequenceTable& table) {
  Json j;
  j["version"] = kReportVersion;
  j["params"] = {{"a", table.a.to_string()}, {"b", table.b.to_string()}};
  j["kind"] = std::string(to_string(table.kind));
  Json rows = Json::array();
  for (const auto& [n, value] : table.rows) {
    Json row;
    row["n"] = n;
    row["value"] = std::visit([](const auto& v) { return to_json(v); }, value);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

SequenceTable sequence_from_json(const Json& j) {
  SequenceTable table;
  table.a = rational_from_json(j.at("params").at("a"));
  table.b = rational_from_json(j.at("params").at("b"));
  table.kind = parse_sequence_kind(j.at("kind").get<std::string>());
  for (const Json& row : j.at("rows")) {
    const long n = row.at("n").get<long>();
    const Json& v = row.at("value");
    switch (table.kind) {
      case SequenceKind::scalar:
        table.rows.emplace_back(n, rational_from_json(v));
        break;
      case SequenceKind::dual:
        table.rows.emplace_back(n, RationalDualScalar{rational_from_json(v.at("real")), rational_from_json(v.at("dual"))});
        break;
      case SequenceKind::quat:
        table.rows.emplace_back(n, quaternion_from_json(v));
        break;
      case SequenceKind::dualquat:
        table.rows.emplace_back(n, dual_quaternion_from_json(v));
        break;
    }
  }
  return table;
}

void write_sequence(const SequenceTable& table, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::json) {
    os << sequence_to_json(table).dump(2) << '\n';
    return;
  }
  if (format == OutputFormat::csv) {
    os << "n";
    switch (table.kind) {
      case SequenceKind::scalar:
        os << ",value";
        break;
      case SequenceKind::dual:
        os << ",real," << kEpsilon << ":dual";
        break;
      case SequenceKind::quat:
        os << ",w,x,y,z";
        break;
      case SequenceKind::dualquat:
        os << ",w,x,y,z," << kEpsilon << ":w," << kEpsilon << ":x," << kEpsilon << ":y," << kEpsilon << ":z";
        break;
    }
    os << '\n';
    for (const auto& [n, value] : table.rows) {
      os << n;
      std::visit(overloaded{[&](const BigRational& q) { os << ',' << q; },
                            [&](const RationalDualScalar& q) { os << ',' << q.real << ',' << q.dual; },
                            [&](const RationalQuaternion& q) { os << ',' << q.w << ',' << q.x << ',' << q.y << ',' << q.z; },
                            [&](const RationalDualQuaternion& q) {
                              for (const auto* part : {&q.primal, &q.dual}) {
                                os << ',' << part->w << ',' << part->x << ',' << part->y << ',' << part->z;
                              }
                            }},
                 value);
      os << '\n';
    }
    return;
  }
  for (const auto& [n, value] : table.rows) {
    os << n << '\t' << std::visit([](const auto& v) { return render(v); }, value) << '\n';
  }
}

}  // namespace bpdfq
