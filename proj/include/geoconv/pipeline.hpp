// Classical-to-intuitionistic transformation of proofs of geometric
// implications, and growth measurements over families of such proofs.

#ifndef GEOCONV_PIPELINE_HPP
#define GEOCONV_PIPELINE_HPP

#include <string>
#include <vector>

#include "geoconv/calculus.hpp"

namespace geoconv {

struct PipelineStep {
  std::string name;  // "input", "step1", ..., "step5", "output"
  Mode mode;         // mode the step was checked in
  Derivation derivation;
  SizeReport size;
};

struct PipelineTrace {
  Theory theory;
  Formula goal;
  // input, step1 (=> phi^E in T^E), step2 (=> phi^E in T), step3 (psi => theta^E),
  // step4 (psi => ~~theta), step5 (psi => (theta -> theta) -> theta), output (=> phi).
  std::vector<PipelineStep> steps;

  const PipelineStep& step(const std::string& name) const;
  const Derivation& input() const { return step("input").derivation; }
  const Derivation& output() const { return step("output").derivation; }
};

// Requires: d passes the classical check in t with root => phi, every axiom of
// t is in Q, and phi is a geometric implication. Every step is re-checked;
// a failing re-check throws InternalError.
PipelineTrace barr_transform(const Derivation& d, const Theory& t, const Formula& phi);

struct StepGrowth {
  std::string name;
  double slope = 0;      // log-log slope of step symbol_count against input symbol_count
  double max_ratio = 0;  // max of step / input symbol_count
};

struct GrowthFit {
  std::size_t points = 0;
  double slope = 0;      // output against input, log-log least squares
  double intercept = 0;
  double max_ratio = 0;  // max output / input symbol_count
  // Max over consecutive traces (sorted by input size) of rho_{k+1} / rho_k,
  // where rho = output / input symbol_count.
  double max_ratio_growth = 0;
  std::vector<StepGrowth> per_step;
};

// Requires at least three traces and at least two distinct input sizes.
GrowthFit growth_report(const std::vector<PipelineTrace>& traces);

std::string format_growth(const GrowthFit& g);

}  // namespace geoconv

#endif  // GEOCONV_PIPELINE_HPP
