// Substitution on derivations.

#ifndef GEOCONV_SUBSTITUTION_HPP
#define GEOCONV_SUBSTITUTION_HPP

#include "geoconv/calculus.hpp"

namespace geoconv {

// Replaces the free variable a by c in every formula, term and eigenvariable
// of d. Throws PreconditionError if c already occurs in d.
Derivation subst_var_deriv(const Derivation& d, const std::string& a, const std::string& c);

// Replaces E by psi throughout, renaming the eigenvariable of every AllR and
// ExL node to a fresh variable that occurs neither in d nor in psi. The tree
// shape is unchanged.
Derivation subst_placeholder_deriv(const Derivation& d, const Formula& psi);

// As above, after rejecting theories whose axioms mention E.
Derivation subst_placeholder_deriv(const Derivation& d, const Formula& psi, const Theory& t);

}  // namespace geoconv

#endif  // GEOCONV_SUBSTITUTION_HPP
