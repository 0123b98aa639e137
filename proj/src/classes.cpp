#include "geoconv/classes.hpp"

namespace geoconv {

namespace {

ClassMembership go(const Formula& f) {
  ClassMembership m;
  switch (f.kind()) {
    case Connective::Atom:
      m.positive = m.inQ = m.inJ = true;
      break;
    case Connective::Falsum:
      m.positive = m.inQ = m.inR = m.inJ = true;
      break;
    case Connective::Placeholder:
      throw PreconditionError("classify: formula contains E");
    case Connective::And:
    case Connective::Or: {
      ClassMembership a = go(f.lhs());
      ClassMembership b = go(f.rhs());
      m.positive = a.positive && b.positive;
      m.inQ = a.inQ && b.inQ;
      m.inR = a.inR && b.inR;
      m.inJ = a.inJ && b.inJ;
      break;
    }
    case Connective::Imp: {
      ClassMembership a = go(f.lhs());
      ClassMembership b = go(f.rhs());
      m.inQ = a.inJ && b.inQ;
      m.inR = a.inJ && b.inR;
      m.inJ = a.inR && b.inJ;
      m.geometric_implication = a.positive && b.positive;
      return m;
    }
    case Connective::Forall: {
      ClassMembership b = go(f.body());
      m.inQ = b.inQ;
      m.inR = b.inR;
      m.geometric_implication = b.geometric_implication;
      return m;
    }
    case Connective::Exists: {
      ClassMembership b = go(f.body());
      m.positive = b.positive;
      m.inQ = b.inQ;
      m.inJ = b.inJ;
      break;
    }
  }
  m.geometric_implication = m.positive;
  return m;
}

}  // namespace

ClassMembership classify(const Formula& phi) { return go(phi); }

TheoryReport validate_theory(const Theory& t, Requirement req) {
  TheoryReport r;
  for (std::size_t i = 0; i < t.axioms.size(); ++i) {
    const auto& a = t.axioms[i];
    if (a.has_placeholder()) {
      r.failing.push_back(i);
      continue;
    }
    ClassMembership m = classify(a);
    if (!(req == Requirement::Geometric ? m.geometric_implication : m.inQ)) r.failing.push_back(i);
  }
  return r;
}

}  // namespace geoconv
