#include "bpdfq/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "bpdfq/error.hpp"
#include "bpdfq/verify.hpp"

namespace bpdfq {

namespace {

struct ParamOptions {
  std::string a;
  std::string b;
  std::string preset;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;
  CLI::Option* preset_opt = nullptr;

  void add_to(CLI::App& app) {
    a_opt = app.add_option("--a", a, "Parameter a (integer or p/q)");
    b_opt = app.add_option("--b", b, "Parameter b (integer or p/q)");
    preset_opt = app.add_option("--preset", preset, "fibonacci | pell | k-fibonacci:<k>");
    preset_opt->excludes(a_opt)->excludes(b_opt);
    a_opt->needs(b_opt);
    b_opt->needs(a_opt);
  }

  bool given() const { return a_opt->count() > 0 || preset_opt->count() > 0; }

  BiperiodicParams params() const {
    if (preset_opt->count() > 0) return preset_params(preset);
    return {BigRational::parse(a), BigRational::parse(b)};
  }
};

struct OutputOptions {
  std::string format;
  std::string path;

  void add_to(CLI::App& app) {
    app.add_option("--format", format, "text | json | csv (default: $" + std::string(kFormatEnv) + " or text)");
    app.add_option("--out", path, "Write output to this file instead of stdout");
  }

  OutputFormat resolved() const {
    if (!format.empty()) return parse_output_format(format);
    if (const char* env = std::getenv(kFormatEnv); env != nullptr && *env != '\0') return parse_output_format(env);
    return OutputFormat::text;
  }
};

template <typename Writer>
void emit(const OutputOptions& output, std::ostream& out, Writer&& write) {
  if (output.path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(output.path, std::ios::binary);
  if (!file) throw Error("cannot open output file '" + output.path + "'");
  write(file);
  if (!file) throw Error("failed writing '" + output.path + "'");
}

}  // namespace

BiperiodicParams preset_params(const std::string& preset) {
  if (preset == "fibonacci") return {1, 1};
  if (preset == "pell") return {2, 2};
  const std::string prefix = "k-fibonacci:";
  if (preset.rfind(prefix, 0) == 0) {
    const BigRational k = BigRational::parse(preset.substr(prefix.size()));
    return {k, k};
  }
  throw ParseError("unknown preset '" + preset + "' (expected fibonacci, pell or k-fibonacci:<k>)");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact bi-periodic dual Fibonacci quaternion toolkit"};
  app.require_subcommand(1);

  CLI::App* seq = app.add_subcommand("seq", "Print F_n, dual F_n, Q_n or dual Q_n over an index range");
  ParamOptions seq_params;
  OutputOptions seq_output;
  std::string kind = "scalar";
  long from = 0;
  long to = 10;
  seq_params.add_to(*seq);
  seq_output.add_to(*seq);
  seq->add_option("--kind", kind, "scalar | dual | quat | dualquat")->capture_default_str();
  seq->add_option("--from", from, "First index (may be negative)")->capture_default_str();
  seq->add_option("--to", to, "Last index")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "Check closed forms and identities against the recurrence");
  ParamOptions verify_params;
  OutputOptions verify_output;
  std::string suite = "all";
  std::optional<long> verify_to;
  std::optional<long> order;
  long rmax = 4;
  bool exploratory = false;
  bool serial = false;
  int threads = 0;
  verify_params.add_to(*verify);
  verify_output.add_to(*verify);
  verify->add_option("--suite", suite, "binet | gf | catalan | cassini | all")->capture_default_str();
  verify->add_option("--to", verify_to, "Largest index checked (default 40 for binet, 20 for identities)");
  verify->add_option("--order", order, "Series truncation order (default 32 scalar, 24 quaternion)");
  verify->add_option("--rmax", rmax, "Largest Catalan shift r")->capture_default_str();
  verify->add_flag("--exploratory", exploratory, "Also evaluate odd r (outside the identity's hypothesis)");
  verify->add_flag("--serial", serial, "Use the serial reference kernels");
  verify->add_option("--threads", threads, "OpenMP worker threads (default: runtime choice)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (seq->parsed()) {
      const BiperiodicParams params = seq_params.given() ? seq_params.params() : preset_params("fibonacci");
      const SequenceTable table = make_sequence_table(params, parse_sequence_kind(kind), from, to);
      const OutputFormat format = seq_output.resolved();
      emit(seq_output, out, [&](std::ostream& os) { write_sequence(table, format, os); });
      return kExitOk;
    }

    const OutputFormat format = verify_output.resolved();
    const std::vector<BiperiodicParams> matrix =
        verify_params.given() ? std::vector<BiperiodicParams>{verify_params.params()} : default_parameter_matrix();
    const Mode mode = exploratory ? Mode::exploratory : Mode::strict;
    const Execution exec = serial ? Execution::serial : Execution::parallel;
    if (threads > 0) set_threads(threads);

    const bool all = suite == "all";
    if (!all && suite != "binet" && suite != "gf" && suite != "catalan" && suite != "cassini") {
      throw ParseError("unknown suite '" + suite + "' (expected binet, gf, catalan, cassini or all)");
    }
    if (rmax < 0) throw PreconditionError("--rmax must be non-negative");
    if (mode == Mode::strict && parity(rmax) != 0) {
      throw PreconditionError("--rmax must be even: the Catalan identity is stated for even r (use --exploratory)");
    }
    if (verify_to && *verify_to < 0) throw PreconditionError("--to must be non-negative");
    if (order && *order < 0) throw PreconditionError("--order must be non-negative");

    const long binet_to = verify_to.value_or(40);
    const long identity_to = verify_to.value_or(20);
    const long scalar_order = order.value_or(kDefaultScalarOrder);
    const long quaternion_order = order.value_or(kDefaultQuaternionOrder);
    IndexRanges identity_ranges{0, identity_to, {}};
    for (long r = 0; r <= rmax; r += (mode == Mode::strict ? 2 : 1)) identity_ranges.r_values.push_back(r);

    std::vector<CheckReport> reports;
    for (const BiperiodicParams& params : matrix) {
      if (all || suite == "binet") reports.push_back(run_binet(params, binet_to, exec));
      if (all || suite == "gf") reports.push_back(run_gf(params, scalar_order, quaternion_order, exec));
      if (all || suite == "catalan") reports.push_back(run_report(IdentityName::catalan, {params}, identity_ranges, mode, exec));
      if (all || suite == "cassini") {
        reports.push_back(run_report(IdentityName::cassini_odd, {params}, identity_ranges, mode, exec));
        reports.push_back(run_report(IdentityName::cassini_even, {params}, identity_ranges, mode, exec));
      }
    }
    emit(verify_output, out, [&](std::ostream& os) { write_reports(reports, format, os); });
    for (const CheckReport& r : reports) {
      if (!r.passed()) return kExitChecksFailed;
    }
    return kExitOk;
  } catch (const DegenerateParameters& e) {
    err << "error: degenerate parameters: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyFailure& e) {
    err << "error: internal consistency failure: " << e.what() << '\n';
    return kExitChecksFailed;
  } catch (const FormulaTranscriptionError& e) {
    err << "error: formula transcription failure: " << e.what() << '\n';
    return kExitChecksFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace bpdfq
