#include <gtest/gtest.h>

#include "geoconv/syntax.hpp"

using namespace geoconv;

namespace {

Formula P(const char* name, std::vector<Term> args = {}) { return Formula::atom(name, std::move(args)); }

}  // namespace

TEST(Parse, NegationSugar) {
  Formula f = parse_formula("(imp (atom P) bot)");
  EXPECT_EQ(f, neg(P("P")));
}

TEST(Parse, FieldAxiom) {
  Signature sig;
  sig.add_constant("c0");
  sig.add_constant("c1");
  ParseOptions opts{&sig};
  Formula f = parse_formula("(forall x (or (atom Eq x c0) (exists y (atom Eq (mul x y) c1))))", opts);
  ASSERT_TRUE(f.is(Connective::Forall));
  EXPECT_TRUE(is_sentence(f));
  const Formula& d = f.body();
  ASSERT_TRUE(d.is(Connective::Or));
  EXPECT_EQ(d.lhs(), P("Eq", {Term::bound(0), Term::app("c0")}));
  const Formula& ex = d.rhs();
  ASSERT_TRUE(ex.is(Connective::Exists));
  EXPECT_EQ(ex.body(), P("Eq", {Term::app("mul", {Term::bound(1), Term::bound(0)}), Term::app("c1")}));
  EXPECT_EQ(print_formula(f), "(forall x (or (atom Eq x c0) (exists y (atom Eq (mul x y) c1))))");
}

TEST(Parse, UnbalancedReportsEndOfInput) {
  try {
    parse_formula("(imp (atom P)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 14u);
  }
}

TEST(Parse, ArityMismatch) {
  EXPECT_THROW(parse_formula("(and (atom P a) (atom P a b))"), ParseError);
  Signature sig;
  sig.add_predicate("P", 2);
  ParseOptions opts{&sig};
  EXPECT_THROW(parse_formula("(atom P a)", opts), ParseError);
}

TEST(Parse, ReservedSymbols) {
  EXPECT_THROW(parse_formula("(atom E)"), ParseError);
  EXPECT_THROW(parse_formula("(atom bot)"), ParseError);
  EXPECT_THROW(parse_formula("(atom P v0)"), ParseError);
  EXPECT_THROW(parse_formula("(forall x (forall x (atom P x)))"), ParseError);
  ParseOptions opts;
  opts.allow_reserved_names = true;
  EXPECT_NO_THROW(parse_formula("(atom P v0)", opts));
  Signature sig;
  EXPECT_THROW(sig.add_predicate("E", 0), PreconditionError);
}

TEST(Print, Basics) {
  EXPECT_EQ(print_formula(Formula::falsum()), "bot");
  EXPECT_EQ(print_formula(Formula::placeholder()), "E");
  EXPECT_EQ(print_formula(dneg_e(P("P"))), "(imp (imp (atom P) E) E)");
}

TEST(Print, RoundTrip) {
  const char* cases[] = {
      "(forall x (imp (atom P x) (exists y (and (atom R x y) (atom Q (f y a))))))",
      "(or bot (imp E (atom P)))",
      "(exists x (forall y (or (atom P x) (atom P y))))",
  };
  for (const char* c : cases) {
    Formula f = parse_formula(c);
    EXPECT_EQ(print_formula(f), c);
    EXPECT_EQ(parse_formula(print_formula(f)), f);
  }
}

TEST(Equality, AlphaEquivalence) {
  EXPECT_EQ(parse_formula("(forall x (atom P x))"), parse_formula("(forall y (atom P y))"));
  EXPECT_NE(parse_formula("(forall x (atom P x))"), parse_formula("(forall x (atom P a))"));
}

TEST(SubstTerm, Examples) {
  Term a = Term::free("a"), b = Term::free("b"), c = Term::app("c");
  Variable va{"a", VarKind::Free};
  EXPECT_EQ(subst_term(P("P", {a}), va, c), P("P", {c}));
  Formula all = Formula::forall("x", P("P", {Term::bound(0)}));
  EXPECT_TRUE(subst_term(all, va, c).same_node(all));
  Term fb = Term::app("f", {b});
  EXPECT_EQ(subst_term(Formula::conj(P("P", {a}), P("Q", {a, b})), va, fb),
            Formula::conj(P("P", {fb}), P("Q", {fb, b})));
  EXPECT_THROW(subst_term(P("P", {a}), Variable{"x", VarKind::Bound}, c), PreconditionError);
}

TEST(SubstPlaceholder, Examples) {
  Formula e = Formula::placeholder();
  Formula theta = parse_formula("(exists x (atom Q x))");
  EXPECT_EQ(subst_placeholder(Formula::imp(e, e), theta), Formula::imp(theta, theta));
  Formula phi = parse_formula("(forall x (imp (atom P x) E))");
  EXPECT_TRUE(subst_placeholder(phi, e).same_node(phi));
  Formula out = subst_placeholder(phi, theta);
  EXPECT_EQ(out, parse_formula("(forall x (imp (atom P x) (exists z (atom Q z))))"));
  EXPECT_FALSE(well_formed(out).has_value());
  EXPECT_EQ(print_formula(out), "(forall x (imp (atom P x) (exists x_1 (atom Q x_1))))");
}

TEST(SubstPlaceholder, FreeVariableClashRenamesOuterBinder) {
  Formula phi = parse_formula("(forall x (imp (atom P x) E))");
  Formula out = subst_placeholder(phi, parse_formula("(atom Q x)"));
  EXPECT_FALSE(well_formed(out).has_value());
  EXPECT_TRUE(occurs_free(out, "x"));
  EXPECT_EQ(print_formula(out), "(forall x_1 (imp (atom P x_1) (atom Q x)))");
}

TEST(SubstPlaceholder, BotLeavesEFreeFormula) {
  Formula f = parse_formula("(forall x (or (atom P x) bot))");
  EXPECT_EQ(subst_placeholder(f, Formula::falsum()), f);
}

TEST(FreshVar, Deterministic) {
  EXPECT_EQ(fresh_free_var({"a", "b"}).name, "v0");
  EXPECT_EQ(fresh_free_var({"v0"}).name, "v1");
  EXPECT_EQ(fresh_free_var({}).name, "v0");
  EXPECT_EQ(fresh_free_var({}).kind, VarKind::Free);
}

TEST(Signature, ParseAndPrint) {
  Signature s = Signature::parse("const c0\nfun mul 2\npred Eq 2\n# comment\n");
  EXPECT_TRUE(s.is_constant("c0"));
  EXPECT_EQ(s.function_arity("mul"), 2u);
  EXPECT_EQ(s.predicate_arity("Eq"), 2u);
  EXPECT_THROW(Signature::parse("fun f\n"), ParseError);
  EXPECT_EQ(Signature::parse(s.print()).print(), s.print());
}

TEST(Instantiate, Body) {
  Formula all = parse_formula("(forall x (exists y (atom R x y)))");
  Formula inst = instantiate(all.body(), Term::free("a"));
  EXPECT_EQ(inst, parse_formula("(exists y (atom R a y))"));
  EXPECT_EQ(forall_over(inst, "a"), all);
}
