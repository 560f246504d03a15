#include "protometric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "protometric/checks.hpp"
#include "protometric/classify.hpp"
#include "protometric/errors.hpp"
#include "protometric/generators.hpp"
#include "protometric/io.hpp"
#include "protometric/transforms.hpp"

namespace protometric::cli {

namespace {

using io::Format;

struct Options {
  std::string input = "-";
  std::string output;
  std::string format;
  ToleranceConfig tol;

  // check
  std::string property;
  bool log_compatible = false;

  // transform
  std::string op;
  std::optional<double> alpha;
  std::optional<double> constant;
  std::string f_file;
  std::string other;
  std::string base_label;
  bool cancel_diagonal = false;

  // generate
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string type = "t";
  bool strict = false;
  double scale = 10.0;
  double ties = 0.0;
};

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string read_input(const Options& opt, std::istream& in) {
  if (opt.input == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_file(opt.input);
}

std::optional<Format> extension_format(const std::string& path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".json")) return Format::json;
  if (ends_with(".csv")) return Format::csv;
  if (ends_with(".txt")) return Format::text;
  return std::nullopt;
}

/// --format, then the output file extension, then the input's format.
Format output_format(const Options& opt, Format fallback) {
  if (!opt.format.empty()) return *io::parse_format(opt.format);
  if (auto f = extension_format(opt.output)) return *f;
  return fallback;
}

/// Reports (classification, verdicts) have no CSV form; CSV input maps to text.
Format report_format(const Options& opt, Format input) {
  const Format f = output_format(opt, input == Format::json ? Format::json : Format::text);
  return f == Format::csv ? Format::text : f;
}

void emit(const Options& opt, std::ostream& out, const std::string& payload) {
  if (opt.output.empty() || opt.output == "-") {
    out << payload;
    return;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw InputError("cannot write '" + opt.output + "'");
  file << payload;
}

InequalityType require_type(std::string_view text, std::string_view context) {
  if (auto ty = parse_inequality_type(text)) return *ty;
  throw InputError(std::string(context) + ": unknown inequality type '" + std::string(text) +
                   "' (expected o, i, t or c)");
}

int run_classify(const Options& opt, std::istream& in, std::ostream& out) {
  const std::string text = read_input(opt, in);
  const Format input = io::detect_format(text);
  const auto m = io::parse_matrix(text, input);
  emit(opt, out, io::serialize_report(classify(m, opt.tol), report_format(opt, input)));
  return kExitOk;
}

int run_check(const Options& opt, std::istream& in, std::ostream& out) {
  const auto colon = opt.property.find(':');
  const std::string family = opt.property.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : opt.property.substr(colon + 1);
  std::optional<InequalityType> ty;
  if (family == "transition") {
    if (colon != std::string::npos) throw InputError("check: 'transition' takes no type");
  } else if (family == "triangle" || family == "prequad" || family == "strict") {
    ty = require_type(arg, "check");
  } else {
    throw InputError("check: unknown property '" + opt.property +
                     "' (expected triangle:T, prequad:T, strict:T or transition)");
  }

  const std::string text = read_input(opt, in);
  const Format input = io::detect_format(text);
  const auto m = io::parse_matrix(text, input);
  PropertyVerdict v;
  if (family == "triangle") v = check_triangle(m, *ty, opt.tol);
  else if (family == "prequad") v = check_prequadrangle(m, *ty, opt.tol);
  else if (family == "strict") v = check_strict(m, *ty, opt.tol);
  else v = check_transition(m, opt.tol, {}, opt.log_compatible);
  emit(opt, out, io::serialize_verdict(v, opt.property, report_format(opt, input)));
  return v.passed() ? kExitOk : kExitViolation;
}

void require_flag(bool present, std::string_view flag, const Options& opt) {
  if (!present)
    throw InputError("transform " + opt.op + " requires " + std::string(flag));
}

int run_transform(const Options& opt, std::istream& in, std::ostream& out) {
  const std::string& op = opt.op;
  if (op == "gauge" || op == "metrize") require_flag(opt.alpha.has_value(), "--alpha", opt);
  if (op == "gauge") require_flag(!opt.f_file.empty() || opt.cancel_diagonal, "--f-file", opt);
  if (op == "add") require_flag(!opt.other.empty(), "--other", opt);
  if (op == "gromov" || op == "farris" || op == "minfarris")
    require_flag(!opt.base_label.empty(), "--base-label", opt);
  if (op == "farris") require_flag(opt.constant.has_value(), "--constant", opt);

  const std::string text = read_input(opt, in);
  const Format input = io::detect_format(text);
  const Format format = output_format(opt, input);
  auto matrix_out = [&](const LabeledMatrix& m) { emit(opt, out, io::serialize_matrix(m, format)); };

  if (op == "compose") {
    if (io::looks_like_decomposition(text)) {
      matrix_out(compose(io::parse_decomposition(text), opt.tol));
    } else {
      require_flag(!opt.f_file.empty(), "--f-file", opt);
      const auto d = io::parse_matrix(text, input);
      matrix_out(compose(d, io::parse_label_function(read_file(opt.f_file)), opt.tol));
    }
    return kExitOk;
  }

  const auto m = io::parse_matrix(text, input);
  if (op == "transpose") {
    matrix_out(transpose(m));
  } else if (op == "add") {
    matrix_out(add(m, io::parse_matrix(read_file(opt.other))));
  } else if (op == "gauge") {
    const auto f = opt.cancel_diagonal ? diagonal_cancelling_gauge(m, *opt.alpha)
                                       : io::parse_label_function(read_file(opt.f_file));
    matrix_out(affine_gauge(m, *opt.alpha, f));
  } else if (op == "metrize") {
    matrix_out(metrize(m, *opt.alpha, opt.tol));
  } else if (op == "decompose") {
    emit(opt, out, io::serialize_decomposition(decompose(m, opt.tol)));
  } else if (op == "zerocoords") {
    emit(opt, out, io::serialize_zero_coordinates(zero_coordinates(m, opt.tol)));
  } else if (op == "potential") {
    emit(opt, out, io::serialize_label_function(potential_of(m, opt.tol), format));
  } else if (op == "preorder") {
    emit(opt, out,
         io::serialize_preorder(specialization_preorder(m, opt.tol),
                                format == Format::text ? Format::text : Format::json));
  } else if (op == "gromov") {
    matrix_out(gromov_product(m, opt.base_label, opt.tol));
  } else if (op == "farris") {
    matrix_out(farris_transform(m, opt.base_label, *opt.constant, opt.tol));
  } else if (op == "minfarris") {
    emit(opt, out, io::format_number(min_farris_constant(m, opt.base_label, opt.tol)) + "\n");
  } else if (op == "log") {
    matrix_out(log_transform(m));
  }
  return kExitOk;
}

int run_generate(const Options& opt, std::ostream& out) {
  GenSpec spec;
  spec.n = opt.n;
  spec.seed = opt.seed;
  spec.scale = opt.scale;
  spec.tie_probability = opt.ties;
  spec.validate();
  const auto ty = require_type(opt.type, "generate");

  std::optional<LabeledMatrix> m;
  if (opt.kind == "metric") m = gen_metric(spec);
  else if (opt.kind == "qsm") m = gen_quasi_semi_metric(spec);
  else if (opt.kind == "protometric") m = gen_protometric(spec, ty, opt.strict);
  else m = gen_zero_protometric(spec);
  emit(opt, out, io::serialize_matrix(*m, output_format(opt, Format::csv)));
  return kExitOk;
}

void print_precondition(const PreconditionError& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (e.verdict() && !e.verdict()->witnesses.empty()) {
    const auto& w = e.verdict()->witnesses.front();
    err << "witness (" << w.x << "," << w.y << "," << w.z << ") lhs=" << io::format_number(w.lhs)
        << " rhs=" << io::format_number(w.rhs) << " deficit=" << io::format_number(w.deficit)
        << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Classify finite generalized distance matrices and apply protometric transforms",
               "protometric"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* sub, bool reads_input) {
    if (reads_input)
      sub->add_option("-i,--input", opt.input, "Input matrix file, or - for standard input");
    sub->add_option("-o,--output", opt.output, "Output file (default: standard output)");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--tolerance-ineq", opt.tol.eps_ineq, "Inequality slack")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--tolerance-eq", opt.tol.eps_eq, "Equality band")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--tolerance-strict", opt.tol.eps_strict, "Strictness margin")
        ->check(CLI::NonNegativeNumber);
  };

  auto* classify_cmd = app.add_subcommand("classify", "Full taxonomy report for one matrix");
  add_io(classify_cmd, true);

  auto* check_cmd = app.add_subcommand(
      "check", "Single property check: exit 0 on PASS, 1 on FAIL");
  check_cmd->add_option("property", opt.property,
                        "triangle:T, prequad:T, strict:T (T in o,i,t,c) or transition")
      ->required();
  check_cmd->add_flag("--log-compatible", opt.log_compatible,
                      "transition: report NOT_APPLICABLE when an entry is <= 0");
  add_io(check_cmd, true);

  auto* transform_cmd = app.add_subcommand("transform", "Apply one transformation");
  transform_cmd
      ->add_option("op", opt.op, "Transformation")
      ->required()
      ->check(CLI::IsMember({"transpose", "gauge", "add", "metrize", "compose", "decompose",
                             "zerocoords", "potential", "preorder", "gromov", "farris",
                             "minfarris", "log"}));
  transform_cmd->add_option("--alpha", opt.alpha, "Positive scale factor (gauge, metrize)");
  transform_cmd->add_option("--f-file", opt.f_file, "Two-column CSV label,value (gauge, compose)");
  transform_cmd->add_flag("--cancel-diagonal", opt.cancel_diagonal,
                          "gauge: use f(x) = -(alpha/2) p(x,x)");
  transform_cmd->add_option("--other", opt.other, "Second matrix file (add)");
  transform_cmd->add_option("--base-label", opt.base_label, "Base point (gromov, farris, minfarris)");
  transform_cmd->add_option("--constant", opt.constant, "Farris constant C");
  add_io(transform_cmd, true);

  auto* generate_cmd = app.add_subcommand("generate", "Seeded random instance of a class");
  generate_cmd->add_option("kind", opt.kind, "Instance class")
      ->required()
      ->check(CLI::IsMember({"metric", "qsm", "protometric", "zeroproto"}));
  generate_cmd->add_option("--n", opt.n, "Number of points")->required();
  generate_cmd->add_option("--seed", opt.seed, "Seed");
  generate_cmd->add_option("--type", opt.type, "Protometric type (o, i, t, c)");
  generate_cmd->add_flag("--strict", opt.strict, "Strict protometric");
  generate_cmd->add_option("--scale", opt.scale, "Entry magnitude");
  generate_cmd->add_option("--ties", opt.ties, "Probability of zero draws in the base");
  add_io(generate_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*classify_cmd) return run_classify(opt, in, out);
    if (*check_cmd) return run_check(opt, in, out);
    if (*transform_cmd) return run_transform(opt, in, out);
    return run_generate(opt, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    print_precondition(e, err);
    return kExitViolation;
  } catch (const ToleranceInconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace protometric::cli
