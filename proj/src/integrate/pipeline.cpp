#include "folint/integrate/pipeline.hpp"

#include <chrono>
#include <future>
#include <numeric>

namespace folint {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::FirstIntegral: return "first_integral";
    case Verdict::ProvenNo: return "proven_no";
    case Verdict::NoBelowBound: return "no_below_bound";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

std::optional<std::pair<QMultiPoly, QMultiPoly>> degree_one_normal_form(const QOneForm& w) {
  const std::array<Exponent, 3> shape{{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};
  std::array<Rational, 3> c;
  for (int i = 0; i < 3; ++i) {
    const QMultiPoly& p = w[i];
    if (p.size() != 1 || p.terms().begin()->first != shape[static_cast<size_t>(i)]) return std::nullopt;
    c[static_cast<size_t>(i)] = p.terms().begin()->second;
  }
  Integer den = 1, num = 0;
  for (const auto& x : c) den = lcm(den, Integer(x.get_den()));
  std::array<Integer, 3> e;
  for (size_t i = 0; i < 3; ++i) {
    e[i] = Integer(c[i] * den);
    num = gcd(num, e[i]);
  }
  QMultiPoly F(Rational(1)), G(Rational(1));
  for (size_t i = 0; i < 3; ++i) {
    e[i] /= num;
    if (!e[i].fits_sint_p()) return std::nullopt;
    const int k = static_cast<int>(e[i].get_si());
    if (k > 0) F = F * QMultiPoly::var(static_cast<int>(i)).pow(k);
    if (k < 0) G = G * QMultiPoly::var(static_cast<int>(i)).pow(-k);
  }
  if (F.degree() != G.degree() || F.degree() <= 0) return std::nullopt;
  return std::make_pair(F, G);
}

namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& out) : out_(out), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    out_.push_back({stage, std::chrono::duration<double>(now - start_).count()});
    start_ = now;
  }

 private:
  std::vector<StageTiming>& out_;
  std::chrono::steady_clock::time_point start_;
};

template <class T, class Fn>
std::vector<T> run_chunk(size_t begin, size_t end, int parallel, Fn&& fn) {
  std::vector<T> out;
  if (parallel <= 1) {
    for (size_t i = begin; i < end; ++i) out.push_back(fn(i));
    return out;
  }
  std::vector<std::future<T>> jobs;
  for (size_t i = begin; i < end; ++i) jobs.push_back(std::async(std::launch::async, fn, i));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

void attach_diagnostics(IntegrabilityReport& rep, const PencilCandidate& c) {
  rep.condition_d = verify_condition_d(c, rep.clusters);
  std::vector<SingularClass> reduced;
  for (const auto& cls : rep.locus.classes)
    if (cls.eigen && !cls.non_reduced()) reduced.push_back(cls);
  try {
    rep.condition_e = verify_condition_e(c, reduced);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BasePointCollision) throw;
    rep.condition_e_error = e.what();
  }
}

void run(const Foliation& f, const IntegrateOptions& options, IntegrabilityReport& rep) {
  StageClock clock(rep.timings);
  if (!f.has_rational_coefficients()) {
    rep.verdict = Verdict::Unsupported;
    rep.reason = "foliations with coefficients outside Q are not supported";
    return;
  }
  LocusOptions lo = options.locus;
  lo.jet_cap = options.jet_cap;
  rep.locus = singular_locus(f, lo);
  check_nondegenerate(rep.locus, rep.degree);
  clock.lap("locus");
  const QOneForm omega = f.rational_form();

  if (rep.degree == 1) {
    const auto nf = degree_one_normal_form(omega);
    if (!nf) {
      rep.verdict = Verdict::Unsupported;
      rep.reason = "degree-one normal-form detection not implemented";
      return;
    }
    if (nf->first.degree() >= options.max_degree) {
      rep.verdict = Verdict::NoBelowBound;
      rep.caveats.push_back("the primitive integral X^a*Y^b*Z^c of the normal form has degree " +
                            std::to_string(nf->first.degree()));
      return;
    }
    rep.wedge = certify_wedge(nf->first, nf->second, omega);
    if (!rep.wedge->zero) throw Error(ErrorKind::InvalidArgument, "normal-form integral failed to certify");
    rep.verdict = Verdict::FirstIntegral;
    rep.numerator = nf->first;
    rep.denominator = nf->second;
    return;
  }

  const int n = rep.locus.non_reduced_count();
  if (!cota_test(rep.degree, n)) {
    rep.verdict = Verdict::ProvenNo;
    rep.obstruction = Obstruction{"cardinality", rep.degree, n, std::nullopt};
    return;
  }
  for (const auto& cls : rep.locus.classes)
    if (cls.irrational()) {
      rep.verdict = Verdict::ProvenNo;
      rep.obstruction = Obstruction{"irrational_ratio", rep.degree, n, cls};
      return;
    }

  std::vector<EigenClass> data;
  for (size_t i = 0; i < rep.locus.classes.size(); ++i) {
    const auto& cls = rep.locus.classes[i];
    if (!cls.non_reduced()) continue;
    rep.cluster_class.push_back(i);
    data.push_back({cls.eigen->pair->delta, cls.eigen->pair->rho, cls.size});
  }
  rep.clusters = run_chunk<Cluster>(0, rep.cluster_class.size(), options.parallel, [&](size_t i) {
    return foliation_cluster(f, rep.locus.classes[rep.cluster_class[i]]);
  });
  clock.lap("clusters");
  rep.solutions = solve_diophantine(data, rep.degree, options.max_degree);
  clock.lap("diophantine");

  const size_t chunk = static_cast<size_t>(std::max(1, options.parallel));
  for (size_t begin = 0; begin < rep.solutions.size(); begin += chunk) {
    const size_t end = std::min(rep.solutions.size(), begin + chunk);
    auto results = run_chunk<PencilCandidate>(begin, end, options.parallel, [&](size_t i) {
      return evaluate_candidate(rep.solutions[i], rep.clusters, omega);
    });
    for (auto& c : results) {
      rep.candidates.push_back(std::move(c));
      const PencilCandidate& last = rep.candidates.back();
      if (last.status != CandidateStatus::Certified) continue;
      clock.lap("candidates");
      rep.verdict = Verdict::FirstIntegral;
      rep.numerator = last.basis[0];
      rep.denominator = last.basis[1];
      rep.wedge = last.wedge;
      if (options.diagnostics) {
        attach_diagnostics(rep, last);
        clock.lap("diagnostics");
      }
      return;
    }
  }
  clock.lap("candidates");
  rep.verdict = Verdict::NoBelowBound;
  rep.caveats.push_back(
      "only pencils with rational coefficients and k constant on conjugacy classes were searched");
}

}  // namespace

IntegrabilityReport find_first_integral(const Foliation& f, const IntegrateOptions& options) {
  if (options.max_degree < 2) throw Error(ErrorKind::InvalidArgument, "the degree bound must be at least 2");
  IntegrabilityReport rep;
  rep.bound = options.max_degree;
  rep.degree = f.degree();
  try {
    run(f, options, rep);
  } catch (const Error& e) {
    switch (e.kind()) {
      case ErrorKind::Unsupported:
      case ErrorKind::UnsupportedExtension:
      case ErrorKind::FactorDegreeCap:
      case ErrorKind::NonIsolated:
      case ErrorKind::AmbiguousChain:
        rep.verdict = Verdict::Unsupported;
        rep.reason = std::string(error_kind_name(e.kind())) + ": " + e.what();
        break;
      default:
        throw;
    }
  }
  return rep;
}

}  // namespace folint
