// Derivation builders with set semantics.
//
// Every builder returns a derivation whose conclusion has no duplicate
// formulas on either side. Principal formulas may sit anywhere in the
// premises; the builders insert the exchange, contraction and weakening steps
// the checker needs.

#ifndef GEOCONV_BUILD_HPP
#define GEOCONV_BUILD_HPP

#include <optional>
#include <vector>

#include "geoconv/calculus.hpp"

namespace geoconv::build {

using Seq = std::vector<Formula>;

Seq dedup(const Seq& s);

// A => A.
Derivation ax(const Formula& a);
// bot => succ (succ empty or one formula).
Derivation ax_bot(const Seq& succ = {});
// => T_i.
Derivation ax_theory(const Theory& t, std::size_t i);

// Duplicate-free version of the same sequent.
Derivation normalize(const Derivation& d);
// Weaken (and contract) to the union of the current sequent and the extras.
Derivation weaken(const Derivation& d, const Seq& ante, const Seq& succ = {});

// `left` selects the component; by default whichever occurs, left first.
Derivation and_l(const Formula& conj, const Derivation& d, std::optional<bool> left = {});
Derivation and_r(const Formula& conj, const Derivation& left, const Derivation& right);
Derivation or_l(const Formula& disj, const Derivation& left, const Derivation& right);
Derivation or_r(const Formula& disj, const Derivation& d, std::optional<bool> left = {});
Derivation imp_l(const Formula& imp, const Derivation& left, const Derivation& right);
// Missing antecedent or consequent are weakened in first.
Derivation imp_r(const Formula& imp, const Derivation& d);
Derivation all_l(const Formula& all, const Term& t, const Derivation& d);
Derivation all_r(const Formula& all, const std::string& eigen, const Derivation& d);
Derivation ex_l(const Formula& ex, const std::string& eigen, const Derivation& d);
Derivation ex_r(const Formula& ex, const Term& t, const Derivation& d);

// Gamma => A->B and Delta => A give Gamma, Delta => B.
Derivation mp(const Derivation& imp, const Derivation& arg);
// Gamma => A->B gives Gamma, A => B.
Derivation unfold(const Derivation& imp);
// Gamma => A gives Gamma => ~~A (with ~X := X->E).
Derivation dneg_intro(const Derivation& d);
// Gamma, B => C gives Gamma, ~~B => ~~C.
Derivation dn_map(const Formula& b, const Formula& c, const Derivation& d);
// Gamma, B => C gives Gamma, ~C => ~B.
Derivation contra(const Formula& b, const Formula& c, const Derivation& d);

// Throws InternalError if d fails the check.
void verify(const Derivation& d, Mode mode, const Theory* theory, const char* what);

}  // namespace geoconv::build

#endif  // GEOCONV_BUILD_HPP
