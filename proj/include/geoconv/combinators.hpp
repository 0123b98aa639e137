// The mixed-negation lemma schemas and the Q/R/J embedding builders.
//
// Notation: ~X is X -> E and -X is X -> bot.

#ifndef GEOCONV_COMBINATORS_HPP
#define GEOCONV_COMBINATORS_HPP

#include <unordered_map>
#include <vector>

#include "geoconv/translation.hpp"

namespace geoconv {

inline constexpr int kLemmaCount = 10;

// Minimal for every item except 8, which needs AxBot.
Mode lemma_mode(int id);

// Number of arguments: 1 for item 1, 2 for items 2-8, and one quantified
// template (forall/exists x body) for items 9 and 10.
std::size_t lemma_arity(int id);

// The schema instance, as a single formula.
Formula lemma_statement(int id, const std::vector<Formula>& args);

// Derivation of => lemma_statement(id, args).
Derivation lemma(int id, const std::vector<Formula>& args);

// Derivation builders sharing one stability cache. The sequent forms are
//   q(phi):  phi => phi^E          for phi in Q
//   r(psi):  ~-psi => psi^E        for psi in R
//   j(th):   th^E => ~~th          for th in J
class Embedder {
 public:
  const Derivation& q(const Formula& phi);
  const Derivation& r(const Formula& psi);
  const Derivation& j(const Formula& theta);

  // Lemma items in sequent form: premise formulas on the left.
  Derivation lemma_sequent(int id, const std::vector<Formula>& args);

  Stabilizer& stabilizer() { return stab_; }

 private:
  Derivation build_q(const Formula& phi);
  Derivation build_r(const Formula& psi);
  Derivation build_j(const Formula& theta);
  Formula tr(const Formula& f);

  Stabilizer stab_;
  SpellingMap<Formula> tr_;
  SpellingMap<Derivation> q_, r_, j_;
};

// => phi -> phi^E, intuitionistic.
Derivation embed_Q(const Formula& phi);
// => ~-psi -> psi^E, intuitionistic.
Derivation embed_R(const Formula& psi);
// => theta^E -> ~~theta, intuitionistic.
Derivation embed_J(const Formula& theta);

}  // namespace geoconv

#endif  // GEOCONV_COMBINATORS_HPP
