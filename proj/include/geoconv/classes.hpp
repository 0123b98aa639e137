// Positive formulas, geometric implications and the classes Q, R, J.

#ifndef GEOCONV_CLASSES_HPP
#define GEOCONV_CLASSES_HPP

#include <string>
#include <vector>

#include "geoconv/calculus.hpp"

namespace geoconv {

struct ClassMembership {
  bool positive = false;
  bool geometric_implication = false;
  bool inQ = false;
  bool inR = false;
  bool inJ = false;
  friend bool operator==(const ClassMembership&, const ClassMembership&) = default;
};

// One bottom-up pass. Throws PreconditionError if phi contains E.
ClassMembership classify(const Formula& phi);

enum class Requirement { Geometric, InQ };

struct TheoryReport {
  std::vector<std::size_t> failing;  // axiom indices
  bool ok() const { return failing.empty(); }
};

TheoryReport validate_theory(const Theory& t, Requirement req);

}  // namespace geoconv

#endif  // GEOCONV_CLASSES_HPP
