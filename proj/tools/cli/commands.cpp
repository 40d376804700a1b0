#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "cli/group_spec.hpp"
#include "cli/suite.hpp"
#include "powerlambda/constructive.hpp"
#include "powerlambda/error.hpp"
#include "powerlambda/graph.hpp"
#include "powerlambda/group_io.hpp"
#include "powerlambda/power_graph.hpp"
#include "powerlambda/search.hpp"
#include "powerlambda/serialization.hpp"

namespace powerlambda::cli {

namespace {

using Clock = std::chrono::steady_clock;

/// Raised for internal consistency failures (exit 2).
struct Inconsistent {
  std::string detail;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge:
    case ErrorCode::Timeout: return kResourceLimit;
    case ErrorCode::ConstructionFailed: return kViolation;
    default: return kInputError;
  }
}

void print_json(std::ostream& out, const Json& json) { out << json.dump(2) << '\n'; }

struct Options {
  std::string spec;
  bool stable = false;
  bool pretty = false;
  std::string method = "auto";
  std::string csv;
  std::string labelling;
  std::string format;
  std::string output;
  std::size_t max_order = 64;
  std::vector<std::string> includes;
  std::optional<long long> budget_ms;
  std::optional<std::size_t> max_exact;
};

Limits make_limits(const Options& options) {
  Limits limits = limits_from_environment();
  if (options.budget_ms) limits.search_budget = std::chrono::milliseconds(*options.budget_ms);
  if (options.max_exact) limits.max_exact_vertices = *options.max_exact;
  return limits;
}

bool is_p_group(const FiniteGroup& group) {
  return group.order() == 1 || prime_power_base(group.order()).has_value();
}

/// Constructive certificate for p-groups, exact search otherwise.
LambdaCertificate compute_lambda(const FiniteGroup& group, const PowerGraph& power,
                                 const Limits& limits) {
  if (is_p_group(group)) return lambda_p_group(group, limits);
  const Label start = power_graph_lower_bound(power).value;
  return exact_lambda(power.graph, start, SearchOptions::exact(limits));
}

void check_consistency(const PowerGraph& power, const LambdaCertificate& certificate) {
  const auto n = static_cast<Label>(power.group.order());
  if (n >= 3 && certificate.lambda < n) {
    throw Inconsistent{"lambda " + std::to_string(certificate.lambda) + " is below |G| = " +
                       std::to_string(n)};
  }
  if (certificate.witness.span() != certificate.lambda) {
    throw Inconsistent{"witness span " + std::to_string(certificate.witness.span()) +
                       " differs from lambda " + std::to_string(certificate.lambda)};
  }
  if (!validate_labelling(power.graph, certificate.witness.labels).empty()) {
    throw Inconsistent{"witness is not an L(2,1)-labelling"};
  }
}

Json timeout_json(const TimeoutError& error) {
  Json json;
  json["status"] = "timeout";
  json["lower_bound"] = error.lower_bound();
  json["upper_bound"] = error.upper_bound() ? Json(*error.upper_bound()) : Json(nullptr);
  return json;
}

// analyze ------------------------------------------------------------------

Json group_summary(const std::string& spec, const FiniteGroup& group, const OrderTable& orders) {
  Json json;
  json["spec"] = spec;
  json["order"] = group.order();
  json["exponent"] = orders.exponent;
  json["prime"] = orders.p_group_prime ? Json(*orders.p_group_prime) : Json(nullptr);
  if (is_p_group(group)) {
    json["family"] = std::string(to_string(recognize_family(group).family));
    const bool qualifies = orders.p_group_prime && exponent_of(group.order(), *orders.p_group_prime) >= 2;
    json["maximal_class"] = qualifies ? Json(is_maximal_class(group)) : Json(nullptr);
  } else {
    json["family"] = "non-p-group";
    json["maximal_class"] = nullptr;
  }
  return json;
}

void print_pretty(std::ostream& out, const Json& report) {
  const auto& g = report["group"];
  auto text = [](const Json& value) { return value.is_null() ? std::string("-") : value.dump(); };
  out << "group          " << g["spec"].get<std::string>() << '\n'
      << "order          " << g["order"] << '\n'
      << "exponent       " << g["exponent"] << '\n'
      << "prime          " << text(g["prime"]) << '\n'
      << "family         " << g["family"].get<std::string>() << '\n'
      << "maximal class  " << text(g["maximal_class"]) << '\n'
      << "\n  order   m\n";
  for (const auto& [order, m] : report["m"].items()) {
    out << "  " << std::setw(5) << order << "   " << m << '\n';
  }
  out << '\n' << "lambda         " << text(report["lambda"]) << '\n';
  if (!report["certificate"].is_null()) {
    const auto& cert = report["certificate"];
    out << "method         " << cert["method"].get<std::string>() << '\n'
        << "evidence       " << cert["evidence"]["kind"].get<std::string>() << '\n';
  }
  if (report.contains("timing_ms")) out << "time           " << report["timing_ms"] << " ms\n";
}

int cmd_analyze(const Options& options, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Limits limits = make_limits(options);
  const FiniteGroup group = build_group(parse_group_spec(options.spec), limits);
  const PowerGraph power = build_power_graph(group);
  const OrderTable orders = order_table(group);
  const ClassPartition partition = cyclic_classes(group);

  Json report;
  report["group"] = group_summary(options.spec, group, orders);
  Json m = Json::object();
  for (const auto& [order, count] : partition.class_numbers) {
    if (order != 1) m[std::to_string(order)] = count;
  }
  report["m"] = m;

  int code = kSuccess;
  try {
    const LambdaCertificate certificate = compute_lambda(group, power, limits);
    check_consistency(power, certificate);
    report["lambda"] = certificate.lambda;
    report["certificate"] = certificate_to_json(certificate);
  } catch (const TimeoutError& error) {
    report["lambda"] = nullptr;
    report["certificate"] = timeout_json(error);
    err << "error: " << error.what() << '\n';
    code = kResourceLimit;
  } catch (const Error& error) {
    if (error.code() != ErrorCode::TooLarge) throw;
    report["lambda"] = nullptr;
    report["certificate"] = nullptr;
    err << "error: " << error.what() << '\n';
    code = kResourceLimit;
  }
  if (!options.stable) report["timing_ms"] = elapsed_ms(start);
  if (options.pretty) {
    print_pretty(out, report);
  } else {
    print_json(out, report);
  }
  return code;
}

// lambda -------------------------------------------------------------------

int cmd_lambda(const Options& options, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Limits limits = make_limits(options);
  const FiniteGroup group = build_group(parse_group_spec(options.spec), limits);
  const PowerGraph power = build_power_graph(group);

  std::string method = options.method;
  if (method == "auto") method = is_p_group(group) ? "constructive" : "exact";
  if (method == "constructive" && !is_p_group(group)) {
    throw Error(ErrorCode::NotPGroup, "the constructive method needs a p-group; use --method exact");
  }
  auto exact = [&] {
    return exact_lambda(power.graph, power_graph_lower_bound(power).value,
                        SearchOptions::exact(limits));
  };

  Json result;
  result["group"] = options.spec;
  result["order"] = group.order();
  LambdaCertificate chosen;
  int code = kSuccess;
  try {
    if (method == "both") {
      const LambdaCertificate constructive = lambda_p_group(group, limits);
      const LambdaCertificate oracle = exact();
      check_consistency(power, constructive);
      check_consistency(power, oracle);
      const bool agree = constructive.lambda == oracle.lambda;
      result["agree"] = agree;
      result["lambda"] = constructive.lambda;
      result["constructive"] = certificate_to_json(constructive);
      result["exact"] = certificate_to_json(oracle);
      if (!agree) {
        err << "error: constructive lambda " << constructive.lambda << " disagrees with exact "
            << oracle.lambda << '\n';
        code = kViolation;
      }
      chosen = constructive;
    } else {
      chosen = method == "exact" ? exact() : lambda_p_group(group, limits);
      check_consistency(power, chosen);
      result["lambda"] = chosen.lambda;
      result["certificate"] = certificate_to_json(chosen);
    }
  } catch (const TimeoutError& error) {
    result["lambda"] = nullptr;
    Json partial = timeout_json(error);
    const Label bound = power_graph_lower_bound(power).value;
    partial["lower_bound"] = std::max<long long>(error.lower_bound(), bound);
    result["timeout"] = partial;
    if (!options.stable) result["timing_ms"] = elapsed_ms(start);
    print_json(out, result);
    err << "error: " << error.what() << '\n';
    return kResourceLimit;
  }
  if (!options.stable) result["timing_ms"] = elapsed_ms(start);
  print_json(out, result);

  if (!options.csv.empty()) {
    std::ofstream csv(options.csv);
    if (!csv) throw Error(ErrorCode::ParseError, "cannot write " + options.csv);
    write_labelling_csv(csv, group, chosen.witness.labels);
  }
  return code;
}

// check --------------------------------------------------------------------

int cmd_check(const Options& options, std::ostream& out, std::ostream&) {
  const Limits limits = make_limits(options);
  const FiniteGroup group = build_group(parse_group_spec(options.spec), limits);
  const PowerGraph power = build_power_graph(group);
  std::ifstream in(options.labelling);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + options.labelling);
  const std::vector<Label> labels = read_labelling_csv(in, group);
  const auto violations = validate_labelling(power.graph, labels);

  Json result;
  result["valid"] = violations.empty();
  result["span"] = span(labels);
  Json list = Json::array();
  for (const auto& v : violations) {
    list.push_back({{"first", group.name(v.first)},
                    {"second", group.name(v.second)},
                    {"distance", v.distance},
                    {"gap", v.gap}});
  }
  result["violations"] = list;
  print_json(out, result);
  return violations.empty() ? kSuccess : kViolation;
}

// export -------------------------------------------------------------------

int cmd_export(const Options& options, std::ostream& out, std::ostream& err) {
  if (options.format != "dot" && options.format != "edges" && options.format != "cayley") {
    err << "error: unknown format `" << options.format << "` (expected dot, edges or cayley)\n";
    return kInputError;
  }
  const Limits limits = make_limits(options);
  const FiniteGroup group = build_group(parse_group_spec(options.spec), limits);
  std::ostringstream text;
  if (options.format == "cayley") {
    write_cayley(text, group);
  } else {
    const PowerGraph power = build_power_graph(group);
    if (options.format == "dot") {
      write_dot(text, power.graph, group.names());
    } else {
      write_edge_list(text, power.graph);
    }
  }
  if (options.output.empty()) {
    out << text.str();
  } else {
    std::ofstream file(options.output, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot write " + options.output);
    file << text.str();
  }
  return kSuccess;
}

// suite --------------------------------------------------------------------

int cmd_suite(const Options& options, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const Limits limits = make_limits(options);
  if (options.max_order > limits.max_group_order) {
    throw Error(ErrorCode::TooLarge, "--max-order " + std::to_string(options.max_order) +
                                         " exceeds the maximum group order " +
                                         std::to_string(limits.max_group_order));
  }
  std::vector<std::pair<std::string, FiniteGroup>> groups;
  for (const auto& spec : options.includes) {
    groups.emplace_back(spec, build_group(parse_group_spec(spec), limits));
  }
  for (const auto& spec : builtin_catalogue(options.max_order)) {
    groups.emplace_back(spec, build_group(parse_group_spec(spec), limits));
  }

  std::vector<std::future<GroupReport>> pending;
  pending.reserve(groups.size());
  for (const auto& [spec, group] : groups) {
    pending.push_back(std::async(std::launch::async, [&spec, &group, &limits] {
      return run_group_checks(spec, group, limits);
    }));
  }

  Json list = Json::array();
  std::size_t failed = 0;
  std::size_t expected = 0;
  std::optional<std::string> first_failure;
  for (auto& future : pending) {
    const GroupReport report = future.get();
    Json checks = Json::array();
    for (const auto& check : report.checks) {
      Json entry{{"property", check.property}, {"status", to_string(check.status)}};
      if (!check.detail.empty()) entry["detail"] = check.detail;
      checks.push_back(entry);
      if (check.status == CheckStatus::ExpectedFail) ++expected;
      if (check.status == CheckStatus::Fail && !first_failure) {
        first_failure = report.spec + ": " + check.property + " (" + check.detail + ")";
      }
    }
    if (report.failed()) ++failed;
    list.push_back({{"spec", report.spec},
                    {"order", report.order},
                    {"status", report.failed() ? "fail" : "pass"},
                    {"checks", checks}});
  }

  Json summary;
  summary["max_order"] = options.max_order;
  summary["groups"] = groups.size();
  summary["passed"] = groups.size() - failed;
  summary["failed"] = failed;
  summary["expected_failures"] = expected;
  summary["first_failure"] = first_failure ? Json(*first_failure) : Json(nullptr);
  Json result{{"summary", summary}, {"groups", list}};
  if (!options.stable) result["timing_ms"] = elapsed_ms(start);
  print_json(out, result);
  if (first_failure) {
    err << "error: first failing property: " << *first_failure << '\n';
    return kViolation;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lambda numbers of power graphs of finite groups", "powerlambda"};
  app.require_subcommand(1);
  Options options;

  auto add_limits = [&](CLI::App* command) {
    command->add_option("--budget-ms", options.budget_ms, "Search budget in milliseconds")
        ->check(CLI::PositiveNumber);
    command->add_option("--max-exact", options.max_exact, "Largest graph for the exact search");
  };

  auto* analyze = app.add_subcommand("analyze", "Group summary, class numbers and lambda");
  analyze->add_option("spec", options.spec, "Group specification")->required();
  analyze->add_flag("--pretty", options.pretty, "Human-readable table instead of JSON");
  analyze->add_flag("--stable", options.stable, "Omit timing fields");
  add_limits(analyze);

  auto* lambda = app.add_subcommand("lambda", "Lambda number with a certificate");
  lambda->add_option("spec", options.spec, "Group specification")->required();
  lambda->add_option("--method", options.method, "constructive, exact, both or auto")
      ->check(CLI::IsMember({"auto", "constructive", "exact", "both"}));
  lambda->add_option("--csv", options.csv, "Write the witness labelling as CSV");
  lambda->add_flag("--stable", options.stable, "Omit timing fields");
  add_limits(lambda);

  auto* check = app.add_subcommand("check", "Validate an L(2,1)-labelling CSV");
  check->add_option("spec", options.spec, "Group specification")->required();
  check->add_option("labelling", options.labelling, "CSV file with header element,label")
      ->required();

  auto* exporter = app.add_subcommand("export", "Write the power graph or Cayley table");
  exporter->add_option("spec", options.spec, "Group specification")->required();
  exporter->add_option("--format", options.format, "dot, edges or cayley")->required();
  exporter->add_option("-o,--output", options.output, "Output file (default: stdout)");

  auto* suite = app.add_subcommand("suite", "Property checks over the built-in catalogue");
  suite->add_option("--max-order", options.max_order, "Largest catalogue group order");
  suite->add_option("--include", options.includes, "Extra group specification");
  suite->add_flag("--stable", options.stable, "Omit timing fields");
  add_limits(suite);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(options, out, err);
    if (lambda->parsed()) return cmd_lambda(options, out, err);
    if (check->parsed()) return cmd_check(options, out, err);
    if (exporter->parsed()) return cmd_export(options, out, err);
    return cmd_suite(options, out, err);
  } catch (const Inconsistent& failure) {
    err << "error: internal consistency failure: " << failure.detail << '\n';
    return kViolation;
  } catch (const Error& error) {
    err << "error: " << error.what() << '\n';
    return exit_code_for(error.code());
  } catch (const std::exception& error) {
    err << "error: " << error.what() << '\n';
    return kInputError;
  }
}

}  // namespace powerlambda::cli
