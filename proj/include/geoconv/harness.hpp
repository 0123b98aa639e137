// Built-in theories, sample classical proofs, a generated proof family and the
// size benchmark.

#ifndef GEOCONV_HARNESS_HPP
#define GEOCONV_HARNESS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "geoconv/pipeline.hpp"

namespace geoconv {

struct TheoryCorpusEntry {
  std::string name;
  Theory theory;
  std::vector<Formula> sample_goals;
};

// Theories of arithmetic, local rings, fields and dense linear orders, plus
// two small propositional-style theories. Every entry is geometric.
const std::vector<TheoryCorpusEntry>& builtin_theories();
const TheoryCorpusEntry& builtin_theory(const std::string& name);

struct SampleProof {
  std::string name;
  std::string theory;  // entry name
  Formula goal;
  Derivation proof;  // classical, root => goal
};

const std::vector<SampleProof>& builtin_samples();

struct FamilyInstance {
  Theory theory;
  Formula goal;
  Derivation proof;
};

// "chain":  P1 or R, Pi -> P(i+1) or R (i = 1..n), P(n+1) -> bot |- forall x R(x).
//           The proof carries two succedent formulas throughout (classical).
// "ladder": the same theory; case splits with one succedent formula.
std::vector<std::string> family_names();
FamilyInstance gen_family(const std::string& name, std::size_t n);

struct BenchConfig {
  std::string family = "chain";
  std::size_t n_min = 2;
  std::size_t n_max = 50;
  std::filesystem::path output_dir;
};

struct BenchRow {
  std::size_t n;
  std::vector<std::pair<std::string, SizeReport>> sizes;  // input, step1..5, output
};

struct BenchResult {
  std::vector<BenchRow> rows;
  GrowthFit fit;
};

// Writes bench.tsv and growth.tsv into output_dir (when non-empty). A failing
// re-check writes the offending theory and proof to output_dir/failed_n<k>.
BenchResult run_bench(const BenchConfig& cfg);

std::string bench_tsv(const BenchResult& r);

// Writes the sizes table of a trace as TSV.
std::string sizes_tsv(const PipelineTrace& t);

}  // namespace geoconv

#endif  // GEOCONV_HARNESS_HPP
