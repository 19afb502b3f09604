#include "montype/cli.hpp"

#include <ostream>

#include "montype/error.hpp"
#include "montype/report.hpp"

namespace montype {

namespace {

void emit(std::ostream& out, const RunConfig& config, const json& j, const std::string& text) {
  if (config.json) {
    out << j.dump(2) << "\n";
  } else {
    out << text;
  }
}

int dispatch(const RunConfig& config, std::ostream& out) {
  if (config.max_degree && *config.max_degree < 2) {
    throw Error(ErrorCode::PreconditionViolated, "--max-degree must be at least 2");
  }
  if (config.command == "conjecture") {
    ScanConfig scan;
    scan.length = config.length;
    scan.patches = config.patches;
    scan.trials = config.trials;
    scan.seed = config.seed;
    scan.max_degree = config.max_degree.value_or(0);
    scan.threads = config.threads;
    scan.budget = config.budget;
    const ScanReport report = conjecture_scan(scan);
    emit(out, config, to_json(report), to_text(report));
    return ExitOk;
  }

  const ParsedInput input = read_input(config.input);
  if (config.command == "classify") {
    const ClassifyReport report = classify_report(input);
    emit(out, config, to_json(report), to_text(report));
  } else if (config.command == "cycles") {
    const std::size_t max_length = config.max_length.value_or(input.complex.size());
    const CycleReport report = cycle_report(input.complex, config.mode, max_length);
    emit(out, config, to_json(report, input.complex), to_text(report, input.complex));
  } else if (config.command == "linear-type") {
    VerifyOptions options;
    options.budget = config.budget;
    options.threads = config.threads;
    const int k = config.max_degree.value_or(default_max_degree(input.ideal.size()));
    const Certificate cert = verify_linear_type(input.ideal, k, options);
    emit(out, config, to_json(cert), to_text(cert));
  } else if (config.command == "rees") {
    const int k = config.max_degree.value_or(default_max_degree(input.ideal.size()));
    const ReesReport report = rees_report(input.ideal, k, config.emit_groebner, config.budget);
    emit(out, config, to_json(report), to_text(report));
  } else {
    throw Error(ErrorCode::PreconditionViolated, "unknown command '" + config.command + "'");
  }
  return ExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ResourceLimit ? ExitResourceLimit : ExitPrecondition;
  }
}

}  // namespace montype
