// The E-negative translation on formulas, theories and derivations.

#ifndef GEOCONV_TRANSLATION_HPP
#define GEOCONV_TRANSLATION_HPP

#include <unordered_map>
#include <utility>

#include "geoconv/calculus.hpp"

namespace geoconv {

Formula e_translate(const Formula& phi);

struct TranslatedTheory {
  Theory base;
  std::vector<Formula> translated_axioms;

  // The theory whose axioms are the translated ones.
  Theory as_theory() const;
};

TranslatedTheory translate_theory(const Theory& t);

// Memoized derivations of ~~A => A for formulas A of "stable shape": E,
// X -> E, conjunctions of stable formulas, X -> (stable), and universal
// quantifications of stable formulas. Every image of e_translate is stable.
class Stabilizer {
 public:
  const Derivation& collapse(const Formula& a);
  static bool is_stable(const Formula& a);

 private:
  Derivation build(const Formula& a);
  SpellingMap<Derivation> memo_;
};

struct Stability {
  Derivation collapse;  // ~~phi^E => phi^E
  Derivation intro;     // phi^E => ~~phi^E
};

Stability stability(const Formula& phi);

// Maps a classical derivation of Gamma => delta in T to a minimal derivation
// of Gamma^E => delta^E in T^E.
Derivation translate_derivation(const Derivation& d, const Theory& t);

}  // namespace geoconv

#endif  // GEOCONV_TRANSLATION_HPP
