#include "folint/cli/report.hpp"

#include <algorithm>
#include <cstdio>

namespace folint {

namespace {

const std::array<std::string, 3> kLocalNames{"u", "v", ""};

std::string field_name(const FieldPtr& K) {
  if (!K) return "Q";
  return "Q[t]/(" + render(from_univariate(K->minimal_polynomial(), 0), {"t", "", ""}) + ")";
}

Json pair_json(const EigenPair& p) {
  Json j;
  j["delta"] = p.delta;
  j["rho"] = p.rho;
  return j;
}

std::string kind_of(const SingularClass& c) {
  if (!c.eigen) return "degenerate";
  if (!c.eigen->pair) return "irrational";
  return c.non_reduced() ? "non_reduced" : "reduced";
}

Json wedge_json(const WedgeOutcome& w) {
  if (w.zero) return "zero";
  Json j;
  j["component"] = w.component;
  j["monomial"] = render_monomial(w.monomial);
  j["coefficient"] = to_string(w.coefficient);
  return j;
}

// k repeated over each class, largest first.
Json solution_json(const DiophantineSolution& s, const std::vector<int>& sizes) {
  Json j;
  j["d"] = s.d;
  j["k"] = s.k;
  std::vector<int> multiset;
  for (size_t i = 0; i < s.k.size() && i < sizes.size(); ++i)
    for (int c = 0; c < sizes[i]; ++c) multiset.push_back(s.k[i]);
  std::sort(multiset.rbegin(), multiset.rend());
  j["multiset"] = multiset;
  return j;
}

Json candidate_json(const PencilCandidate& c, const std::vector<int>& sizes) {
  Json j = solution_json(c.solution, sizes);
  j["dimension"] = c.basis.size();
  j["conditions_rank"] = c.conditions_rank;
  j["status"] = candidate_status_name(c.status);
  if (c.wedge) j["wedge_certificate"] = wedge_json(*c.wedge);
  return j;
}

Json condition_d_json(const ConditionD& d) {
  Json j;
  j["pass"] = d.pass();
  j["member1"] = render(d.member1);
  j["member2"] = render(d.member2);
  Json points = Json::array();
  for (const auto& p : d.points) {
    Json q;
    q["point"] = p.point;
    q["k"] = p.k;
    q["pair"] = pair_json(p.pair);
    q["type"] = p.type;
    q["equisingular"] = p.equisingular;
    q["reduced"] = p.reduced;
    q["milnor"] = p.milnor;
    q["tjurina"] = p.tjurina;
    q["type_match"] = p.type_match;
    q["pass"] = p.pass();
    if (!p.failure.empty()) q["failure"] = p.failure;
    points.push_back(std::move(q));
  }
  j["points"] = std::move(points);
  return j;
}

Json condition_e_json(const std::vector<PointConditionE>& e, const std::string& error) {
  Json j;
  bool pass = error.empty();
  Json points = Json::array();
  for (const auto& p : e) {
    pass = pass && p.pass;
    Json q;
    q["point"] = p.point;
    q["member"] = p.member;
    q["pass"] = p.pass;
    if (!p.failure.empty()) q["failure"] = p.failure;
    points.push_back(std::move(q));
  }
  j["pass"] = pass;
  j["points"] = std::move(points);
  if (!error.empty()) j["error"] = error;
  return j;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  return j;
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void text_lines(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value))
        out += pad + key + ": " + scalar_text(value) + "\n";
      else if (value.empty())
        out += pad + key + ": " + (value.is_object() ? "{}" : "[]") + "\n";
      else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
        std::string row;
        for (const auto& x : value) row += (row.empty() ? "" : ", ") + scalar_text(x);
        out += pad + key + ": [" + row + "]\n";
      } else {
        out += pad + key + ":\n";
        text_lines(value, indent + 2, out);
      }
    }
    return;
  }
  for (const auto& item : j) {
    if (is_scalar(item)) {
      out += pad + "- " + scalar_text(item) + "\n";
    } else {
      out += pad + "-\n";
      text_lines(item, indent + 2, out);
    }
  }
}

}  // namespace

Json input_json(const FoliationFile& file) {
  Json j;
  if (file.field_extension) j["field_extension"] = render(from_univariate(*file.field_extension, 0), {"t", "", ""});
  j["A"] = render(file.form.A);
  j["B"] = render(file.form.B);
  j["C"] = render(file.form.C);
  return j;
}

Json point_json(const SingularClass& c) {
  Json j;
  j["point"] = render_point(c.point);
  j["field"] = field_name(c.field);
  j["size"] = c.size;
  j["chart"] = chart_name(c.chart);
  j["milnor"] = c.milnor;
  j["kind"] = kind_of(c);
  if (c.eigen) {
    Json e;
    e["trace"] = to_string(c.eigen->trace);
    e["det"] = to_string(c.eigen->det);
    if (c.eigen->s) e["s"] = to_string(*c.eigen->s);
    if (c.eigen->pair)
      e["pair"] = pair_json(*c.eigen->pair);
    else
      e["pair"] = nullptr;
    j["eigen"] = std::move(e);
  }
  return j;
}

Json locus_json(const SingularLocus& locus, int r) {
  Json j;
  Json classes = Json::array();
  bool all_simple = true;
  int irrational = 0;
  for (const auto& c : locus.classes) {
    classes.push_back(point_json(c));
    all_simple = all_simple && c.milnor == 1;
    if (c.irrational()) irrational += c.size;
  }
  j["classes"] = std::move(classes);
  j["weighted_milnor"] = locus.weighted_milnor();
  j["expected_milnor"] = r * r + r + 1;
  j["nondegenerate"] = all_simple && locus.weighted_milnor() == r * r + r + 1;
  j["non_reduced"] = locus.non_reduced_count();
  j["reduced"] = locus.reduced_count();
  j["irrational"] = irrational;
  return j;
}

Json cluster_json(const Cluster& c) {
  Json j;
  j["point"] = render_point(c.origin);
  j["field"] = field_name(c.field);
  j["pair"] = pair_json(c.pair());
  j["multiplicities"] = c.multiplicities();
  Json chain = Json::array();
  for (const auto& p : c.chain) {
    Json q;
    q["level"] = p.level;
    if (p.level == 0)
      q["step"] = "origin";
    else
      q["step"] = p.step.vertical ? std::string("vertical") : "slope " + to_string(p.step.slope);
    q["pair"] = pair_json(p.pair);
    q["multiplicity"] = p.multiplicity;
    chain.push_back(std::move(q));
  }
  j["chain"] = std::move(chain);
  j["dicritical_end"] = c.dicritical_end;
  return j;
}

Json analyze_report(const FoliationFile& file, const Foliation& f, const SingularLocus& locus) {
  Json j = header("analyze");
  j["input"] = input_json(file);
  const int r = f.degree();
  j["degree"] = r;
  if (f.removed_factor().degree() > 0) j["removed_factor"] = render(f.removed_factor());
  j["locus"] = locus_json(locus, r);
  Json cota;
  cota["r"] = r;
  cota["n"] = locus.non_reduced_count();
  cota["pass"] = cota_test(r, locus.non_reduced_count());
  j["cardinality_bound"] = std::move(cota);
  return j;
}

Json integrate_report(const FoliationFile& file, const IntegrabilityReport& rep, bool timings) {
  std::vector<int> sizes;
  for (size_t i : rep.cluster_class) sizes.push_back(rep.locus.classes[i].size);
  Json j = header("integrate");
  j["input"] = input_json(file);
  j["degree"] = rep.degree;
  j["verdict"] = verdict_name(rep.verdict);
  j["bound"] = rep.bound;
  if (rep.numerator) j["numerator"] = render(*rep.numerator);
  if (rep.denominator) j["denominator"] = render(*rep.denominator);
  if (rep.verdict == Verdict::FirstIntegral && rep.wedge) j["wedge_certificate"] = wedge_json(*rep.wedge);
  if (!rep.candidates.empty() && rep.verdict == Verdict::FirstIntegral)
    j["solution"] = solution_json(rep.candidates.back().solution, sizes);
  if (rep.obstruction) {
    Json o;
    o["type"] = rep.obstruction->type;
    o["r"] = rep.obstruction->r;
    o["n"] = rep.obstruction->n;
    if (rep.obstruction->point) o["point"] = point_json(*rep.obstruction->point);
    j["obstruction"] = std::move(o);
  }
  if (!rep.reason.empty()) j["reason"] = rep.reason;
  if (!rep.locus.classes.empty()) j["locus"] = locus_json(rep.locus, rep.degree);
  Json clusters = Json::array();
  for (const auto& c : rep.clusters) clusters.push_back(cluster_json(c));
  j["clusters"] = std::move(clusters);
  Json solutions = Json::array();
  for (const auto& s : rep.solutions) solutions.push_back(solution_json(s, sizes));
  j["solutions"] = std::move(solutions);
  Json candidates = Json::array();
  for (const auto& c : rep.candidates) candidates.push_back(candidate_json(c, sizes));
  j["candidates"] = std::move(candidates);
  if (rep.condition_d) {
    Json conditions;
    conditions["d"] = condition_d_json(*rep.condition_d);
    conditions["e"] = condition_e_json(rep.condition_e, rep.condition_e_error);
    j["conditions"] = std::move(conditions);
  }
  j["caveats"] = rep.caveats;
  if (timings) {
    Json t;
    for (const auto& s : rep.timings) t[s.stage] = seconds(s.seconds);
    j["timings"] = std::move(t);
  }
  return j;
}

Json certify_report(const FoliationFile& file, const QMultiPoly& F, const QMultiPoly& G, const WedgeOutcome& w) {
  Json j = header("certify");
  j["input"] = input_json(file);
  j["numerator"] = render(F);
  j["denominator"] = render(G);
  j["result"] = w.zero ? "certified_zero" : "nonzero";
  j["wedge_certificate"] = wedge_json(w);
  return j;
}

Json germ_report(const GermQuery& q) {
  Json j = header("germ");
  j["input"] = q.text;
  j["germ"] = render(q.f, kLocalNames);
  j["order"] = q.f.is_zero() ? -1 : q.f.order();
  j["tangent_cone"] = tangent_cone_type(q.f);
  const bool reduced = is_locally_reduced(q.f);
  if (reduced) {
    const int mu = germ_milnor(q.f, q.jet_cap);
    const int tau = germ_tjurina(q.f, q.jet_cap);
    j["milnor"] = mu;
    j["tjurina"] = tau;
    j["quasi_homogeneous"] = mu == tau;
  } else {
    // a multiple component through the origin
    j["milnor"] = "infinite";
    j["tjurina"] = "infinite";
    j["quasi_homogeneous"] = nullptr;
  }
  j["locally_reduced"] = reduced;
  const NodalResult nodal = is_nodal(q.f);
  Json nj;
  nj["nodal"] = nodal.nodal;
  if (nodal.nodal) {
    nj["n"] = nodal.n;
    nj["m"] = nodal.m;
  }
  if (!nodal.reason.empty()) nj["reason"] = nodal.reason;
  j["nodal"] = std::move(nj);
  if (q.s_type) {
    const auto [a, b, k] = *q.s_type;
    Json s;
    s["type"] = "S(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(k) + ")";
    try {
      const TypeCheck t = type_check_S(q.f, a, b, k, q.jet_cap);
      s["match"] = t.match;
      s["milnor"] = t.milnor;
      s["multiplicities"] = t.multiplicities;
      if (!t.reason.empty()) s["reason"] = t.reason;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotReduced) throw;
      s["match"] = false;
      s["reason"] = e.what();
    }
    j["s_type"] = std::move(s);
  }
  return j;
}

Json error_report(const std::string& command, const Error& e) {
  Json j = header(command);
  Json err;
  err["kind"] = std::string(error_kind_name(e.kind()));
  err["message"] = e.what();
  j["error"] = std::move(err);
  return j;
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::FirstIntegral:
    case Verdict::ProvenNo: return 0;
    case Verdict::NoBelowBound: return 2;
    case Verdict::Unsupported: return 4;
  }
  return 4;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::InhomogeneousInput:
    case ErrorKind::EulerViolation:
    case ErrorKind::NotSquarefreeExtension:
    case ErrorKind::ReducibleExtension:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::NotCoprime:
    case ErrorKind::UnequalDegrees:
    case ErrorKind::InvalidArgument: return 3;
    default: return 4;
  }
}

std::string render_report(const Json& report, ReportFormat format) {
  if (format == ReportFormat::Json) return report.dump(2) + "\n";
  std::string out;
  text_lines(report, 0, out);
  return out;
}

}  // namespace folint
