#include <gtest/gtest.h>

#include "geoconv/build.hpp"
#include "geoconv/substitution.hpp"

using namespace geoconv;
namespace b = geoconv::build;

namespace {

const Formula kE = Formula::placeholder();
Formula F(const char* s) { return parse_formula(s); }
Formula Pa() { return Formula::atom("P", {Term::free("a")}); }

// => forall x (P(x) -> (E -> E)) with eigenvariable a.
Derivation quantified_e() {
  Formula all = F("(forall x (imp (atom P x) (imp E E)))");
  Formula inst = instantiate(all.body(), Term::free("a"));
  Derivation d = b::imp_r(inst, b::imp_r(Formula::imp(kE, kE), b::ax(kE)));
  return b::all_r(all, "a", d);
}

}  // namespace

TEST(SubstVar, RenamesEverywhere) {
  Derivation d = b::ax(Pa());
  Derivation out = subst_var_deriv(d, "a", "c");
  Formula pc = Formula::atom("P", {Term::free("c")});
  EXPECT_EQ(out.conclusion().ante, std::vector<Formula>{pc});
  EXPECT_EQ(out.conclusion().succ, std::vector<Formula>{pc});
  EXPECT_TRUE(check(out, Mode::Minimal).ok());
}

TEST(SubstVar, AbsentVariableIsIdentity) {
  Derivation d = b::ax(Pa());
  EXPECT_EQ(subst_var_deriv(d, "b", "c").identity(), d.identity());
}

TEST(SubstVar, RejectsOccurringTarget) {
  Derivation d = b::ax(Formula::conj(Pa(), Formula::atom("P", {Term::free("c")})));
  EXPECT_THROW(subst_var_deriv(d, "a", "c"), PreconditionError);
}

TEST(SubstVar, RenamesEigenvariables) {
  Derivation d = quantified_e();
  Derivation out = subst_var_deriv(d, "a", "c");
  EXPECT_EQ(out.tag().eigen, "c");
  EXPECT_TRUE(check(out, Mode::Minimal).ok());
  EXPECT_EQ(out.size().inference_count, d.size().inference_count);
}

TEST(SubstPlaceholder, EtoEGivesThetaToTheta) {
  Derivation d = b::imp_r(Formula::imp(kE, kE), b::ax(kE));
  Formula theta = F("(exists y (atom Q y))");
  Derivation out = subst_placeholder_deriv(d, theta);
  EXPECT_TRUE(check(out, Mode::Minimal).ok());
  EXPECT_EQ(out.conclusion().succ, std::vector<Formula>{Formula::imp(theta, theta)});
}

TEST(SubstPlaceholder, PlaceholderIsIdentity) {
  Derivation d = quantified_e();
  EXPECT_EQ(subst_placeholder_deriv(d, kE).identity(), d.identity());
}

TEST(SubstPlaceholder, EigenvariableClashIsRepaired) {
  Derivation d = quantified_e();
  Formula psi = Formula::atom("Q", {Term::free("a")});
  Derivation out = subst_placeholder_deriv(d, psi);
  CheckReport r = check(out, Mode::Minimal);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_NE(out.tag().eigen, "a");
  EXPECT_EQ(out.size().inference_count, d.size().inference_count);
  Formula expect = Formula::forall("x", Formula::imp(Formula::atom("P", {Term::bound(0)}),
                                                     Formula::imp(psi, psi)));
  EXPECT_EQ(out.conclusion().succ, std::vector<Formula>{expect});
}

TEST(SubstPlaceholder, RejectsTheoryWithE) {
  Derivation d = b::ax(kE);
  Theory t{"bad", {Formula::imp(kE, kE)}};
  EXPECT_THROW(subst_placeholder_deriv(d, Pa(), t), PreconditionError);
}
