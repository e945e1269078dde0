#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folint/integrate/diagnostics.hpp"

namespace folint {

struct IntegrateOptions {
  int max_degree = 2;  // exclusive bound t on d
  int parallel = 1;
  int jet_cap = 20;
  bool diagnostics = true;
  LocusOptions locus;
};

enum class Verdict { FirstIntegral, ProvenNo, NoBelowBound, Unsupported };
std::string verdict_name(Verdict v);

struct Obstruction {
  std::string type;  // "cardinality" or "irrational_ratio"
  int r = 0, n = 0;
  std::optional<SingularClass> point;
};

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct IntegrabilityReport {
  Verdict verdict = Verdict::Unsupported;
  int bound = 0;
  int degree = 0;  // r
  SingularLocus locus;
  std::vector<Cluster> clusters;            // one per non-reduced class, in locus order
  std::vector<size_t> cluster_class;        // index into locus.classes
  std::vector<DiophantineSolution> solutions;
  std::vector<PencilCandidate> candidates;  // explored, in order, up to the accepted one
  std::optional<QMultiPoly> numerator, denominator;
  std::optional<WedgeOutcome> wedge;
  std::optional<Obstruction> obstruction;
  std::optional<ConditionD> condition_d;
  std::vector<PointConditionE> condition_e;
  std::string condition_e_error;
  std::string reason;  // Unsupported
  std::vector<std::string> caveats;
  std::vector<StageTiming> timings;
};

/// Decides whether F has a rational first integral F/G with deg F < t.
IntegrabilityReport find_first_integral(const Foliation& f, const IntegrateOptions& options);

/// Closed-form integral X^a Y^b Z^c of a Y Z dX + b X Z dY + c X Y dZ,
/// as (numerator, denominator), if the form has this shape.
std::optional<std::pair<QMultiPoly, QMultiPoly>> degree_one_normal_form(const QOneForm& w);

}  // namespace folint
