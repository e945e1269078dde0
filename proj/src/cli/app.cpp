#include "folint/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "folint/cli/report.hpp"

namespace folint {

namespace {

struct Settings {
  std::string format = "text";
  int parallel = 1;
  int jet_cap = 0;  // 0: module default
  std::string file;
  int max_degree = 0;
  bool timings = false;
  bool no_diagnostics = false;
  std::string numerator, denominator;
  std::string germ;
  std::vector<std::string> times;
  std::string s_type;
};

FoliationFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_foliation_file(ss.str());
}

std::array<long, 3> parse_s_type(const std::string& text) {
  std::array<long, 3> v{};
  std::stringstream ss(text);
  std::string part;
  size_t i = 0;
  while (std::getline(ss, part, ',')) {
    if (i == 3) break;
    try {
      size_t used = 0;
      v[i] = std::stol(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "--s-type expects a,b,k");
    }
    ++i;
  }
  if (i != 3 || std::getline(ss, part, ',')) throw Error(ErrorKind::InvalidArgument, "--s-type expects a,b,k");
  if (v[0] <= 0 || v[1] <= 0 || v[2] <= 0) throw Error(ErrorKind::InvalidArgument, "--s-type entries must be positive");
  return v;
}

std::pair<Json, int> run_analyze(const Settings& s) {
  const FoliationFile file = load(s.file);
  const Foliation f = Foliation::make(file.form);
  LocusOptions lo;
  if (s.jet_cap > 0) lo.jet_cap = s.jet_cap;
  const SingularLocus locus = singular_locus(f, lo);
  return {analyze_report(file, f, locus), 0};
}

std::pair<Json, int> run_integrate(const Settings& s) {
  const FoliationFile file = load(s.file);
  const Foliation f = Foliation::make(file.form);
  IntegrateOptions opt;
  opt.max_degree = s.max_degree;
  opt.parallel = s.parallel;
  if (s.jet_cap > 0) opt.jet_cap = s.jet_cap;
  opt.diagnostics = !s.no_diagnostics;
  const IntegrabilityReport rep = find_first_integral(f, opt);
  return {integrate_report(file, rep, s.timings), exit_code(rep.verdict)};
}

std::pair<Json, int> run_certify(const Settings& s) {
  const FoliationFile file = load(s.file);
  const Foliation f = Foliation::make(file.form);
  const QMultiPoly F = parse_rational_polynomial(s.numerator);
  const QMultiPoly G = parse_rational_polynomial(s.denominator);
  const WedgeOutcome w = certify_wedge(F, G, f.rational_form());
  return {certify_report(file, F, G, w), w.zero ? 0 : 1};
}

std::pair<Json, int> run_germ(const Settings& s) {
  ParseContext ctx;
  ctx.variables = {"u", "v", ""};
  GermQuery q;
  q.f = parse_polynomial(s.germ, ctx);
  q.text = s.times.empty() ? s.germ : "(" + s.germ + ")";
  for (const auto& t : s.times) {
    q.f = q.f * parse_polynomial(t, ctx);
    q.text += " * (" + t + ")";
  }
  if (!s.s_type.empty()) q.s_type = parse_s_type(s.s_type);
  if (s.jet_cap > 0) q.jet_cap = s.jet_cap;
  return {germ_report(q), 0};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Rational first integrals of plane foliations", "folint"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", s.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--parallel", s.parallel, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--jet-cap", s.jet_cap, "Jet order cap for local algebra")->check(CLI::PositiveNumber);

  CLI::App* analyze = app.add_subcommand("analyze", "Singular locus and eigenvalue data");
  analyze->add_option("file", s.file, "Foliation file")->required();

  CLI::App* integrate = app.add_subcommand("integrate", "Search for a rational first integral");
  integrate->add_option("file", s.file, "Foliation file")->required();
  integrate->add_option("--max-degree", s.max_degree, "Exclusive bound on the degree of the integral")->required();
  integrate->add_flag("--timings", s.timings, "Include per-stage timings");
  integrate->add_flag("--no-diagnostics", s.no_diagnostics, "Skip the germ diagnostics");

  CLI::App* certify = app.add_subcommand("certify", "Check the wedge identity for F/G");
  certify->add_option("file", s.file, "Foliation file")->required();
  certify->add_option("--numerator", s.numerator, "F")->required();
  certify->add_option("--denominator", s.denominator, "G")->required();

  CLI::App* germ = app.add_subcommand("germ", "Local invariants of a plane curve germ in u, v");
  germ->add_option("polynomial", s.germ, "Germ at the origin")->required();
  germ->add_option("--times", s.times, "Further factors")->allow_extra_args(false);
  germ->add_option("--s-type", s.s_type, "Compare with S(a,b,k), given as a,b,k");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 3;
  }

  std::string command;
  for (CLI::App* sub : {analyze, integrate, certify, germ})
    if (sub->parsed()) command = sub->get_name();
  const ReportFormat format = s.format == "json" ? ReportFormat::Json : ReportFormat::Text;

  Json report;
  int code = 0;
  try {
    std::pair<Json, int> result;
    if (command == "analyze") result = run_analyze(s);
    if (command == "integrate") result = run_integrate(s);
    if (command == "certify") result = run_certify(s);
    if (command == "germ") result = run_germ(s);
    report = std::move(result.first);
    code = result.second;
  } catch (const Error& e) {
    report = error_report(command, e);
    code = exit_code(e.kind());
  }
  out << render_report(report, format);
  return code;
}

}  // namespace folint
