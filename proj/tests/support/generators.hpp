// Random formulas, derivations and mutations for property tests.

#ifndef GEOCONV_TESTS_GENERATORS_HPP
#define GEOCONV_TESTS_GENERATORS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "geoconv/calculus.hpp"

namespace geoconv::testgen {

using Rng = std::mt19937_64;

struct FormulaOptions {
  int max_depth = 3;
  bool allow_e = false;
  bool allow_bot = true;
  bool quantifiers = true;
};

// Predicates P/1, Q/1, R/2, S/0; free variables a, b, c; constant k.
Formula random_formula(Rng& rng, const FormulaOptions& opt);

// Members of Q, R, J built from the class grammars. cls is 'Q', 'R' or 'J'.
Formula random_member(Rng& rng, char cls, int depth);

struct DerivationOptions {
  int steps = 12;
  FormulaOptions leaves{2, false, true, true};
};

// Valid by construction: assembled from the rule builders only.
Derivation random_derivation(Rng& rng, Mode mode, const DerivationOptions& opt = {});

// A derivation with an AllR or ExL node whose eigenvariable is `a`, and
// which mentions E so that a substitution for E can clash with `a`.
Derivation clash_derivation(Rng& rng, int variant);

struct Mutation {
  Derivation derivation;
  std::string kind;
  std::string path;
};

// Single-point change chosen so that the changed node cannot satisfy its rule.
std::optional<Mutation> mutate(Rng& rng, const Derivation& d);

}  // namespace geoconv::testgen

#endif  // GEOCONV_TESTS_GENERATORS_HPP
