#include <gtest/gtest.h>

#include "geoconv/build.hpp"
#include "geoconv/calculus.hpp"

using namespace geoconv;
namespace b = geoconv::build;

namespace {

Formula atom(const char* p, std::vector<Term> args = {}) { return Formula::atom(p, std::move(args)); }
const Formula kP = atom("P");
const Formula kQ = atom("Q");
const Formula kR = atom("R");

bool has_message(const CheckReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.message.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Check, IdentityLeafMinimal) {
  EXPECT_TRUE(check(b::ax(kP), Mode::Minimal).ok());
}

TEST(Check, AxBotForbiddenInMinimal) {
  Derivation d(Sequent{{kR, Formula::falsum()}, {kQ}}, RuleTag::plain(Rule::AxBot));
  auto r = check(d, Mode::Minimal);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_message(r, "AxBot forbidden in minimal"));
  EXPECT_TRUE(check(d, Mode::Intuitionistic).ok());
  EXPECT_TRUE(check(d, Mode::Classical).ok());
}

TEST(Check, EigenvariableOccursInConclusion) {
  Formula pa = atom("P", {Term::free("a")});
  Formula all = Formula::forall("x", atom("P", {Term::bound(0)}));
  Derivation leaf = b::ax(pa);
  Derivation bad(Sequent{{pa}, {all}}, RuleTag::with_eigen(Rule::AllR, "a"), {leaf});
  auto r = check(bad, Mode::Minimal);
  ASSERT_FALSE(r.ok());
  EXPECT_TRUE(has_message(r, "eigenvariable a occurs in conclusion"));
  EXPECT_EQ(r.violations[0].path, "root");
}

TEST(Check, SuccedentBound) {
  Derivation d(Sequent{{kP}, {kP, kQ}}, RuleTag::plain(Rule::AxId));
  EXPECT_TRUE(check(d, Mode::Classical).ok());
  EXPECT_FALSE(check(d, Mode::Intuitionistic).ok());
}

TEST(Check, TheoryAxiom) {
  Theory t{"t", {kP}};
  Derivation d(Sequent{{kQ}, {kP}}, RuleTag::theory(0));
  EXPECT_TRUE(check(d, Mode::Minimal, t).ok());
  EXPECT_FALSE(check(d, Mode::Minimal).ok());
  Derivation bad(Sequent{{}, {kQ}}, RuleTag::theory(0));
  EXPECT_FALSE(check(bad, Mode::Minimal, t).ok());
}

TEST(Check, ReportsAllViolationsWithPaths) {
  Derivation bad1(Sequent{{kP}, {kQ}}, RuleTag::plain(Rule::AxId));
  Derivation bad2(Sequent{{kP}, {kR}}, RuleTag::plain(Rule::AxId));
  Formula conj = Formula::conj(kQ, kR);
  Derivation root(Sequent{{kP}, {conj}}, RuleTag::plain(Rule::AndR), {bad1, bad2});
  auto r = check(root, Mode::Classical);
  ASSERT_EQ(r.violations.size(), 2u);
  EXPECT_EQ(r.violations[0].path, "root.0");
  EXPECT_EQ(r.violations[1].path, "root.1");
}

TEST(Size, Examples) {
  Derivation leaf = b::ax(kP);
  EXPECT_EQ(leaf.size().inference_count, 1u);
  EXPECT_EQ(leaf.size().height, 1u);
  EXPECT_EQ(leaf.size().symbol_count, 2u);
  Derivation w = weaken_to(leaf, {kQ, kP}, {kP});
  EXPECT_EQ(w.rule(), Rule::WeakL);
  EXPECT_EQ(w.size().inference_count, 2u);
  EXPECT_EQ(w.size().height, 2u);
}

TEST(WeakenTo, Examples) {
  Derivation leaf = b::ax(kP);
  EXPECT_TRUE(weaken_to(leaf, {kP}, {kP}).identity() == leaf.identity());
  Derivation w = weaken_to(leaf, {kP, kQ}, {kP});
  EXPECT_EQ(w.conclusion(), (Sequent{{kP, kQ}, {kP}}));
  EXPECT_TRUE(check(w, Mode::Minimal).ok());
  EXPECT_LE(w.size().inference_count, 3u);

  Derivation pqr(Sequent{{kP, kQ}, {kR}}, RuleTag::plain(Rule::AxTheory));
  Derivation swapped = weaken_to(pqr, {kQ, kP}, {kR});
  EXPECT_EQ(swapped.rule(), Rule::ExchL);
  EXPECT_EQ(swapped.size().inference_count, 2u);
  EXPECT_THROW(weaken_to(leaf, {kQ}, {kP}), PreconditionError);
  EXPECT_THROW(weaken_to(b::ax(kP), {kP}, {}), PreconditionError);
}

TEST(WeakenTo, LinearBound) {
  Derivation leaf = b::ax(kP);
  std::vector<Formula> ante{kP}, succ{kP};
  for (int i = 0; i < 30; ++i) {
    ante.insert(ante.begin(), atom(("A" + std::to_string(i)).c_str()));
    succ.push_back(atom(("B" + std::to_string(i)).c_str()));
  }
  Derivation w = weaken_to(leaf, ante, succ);
  EXPECT_TRUE(check(w, Mode::Classical).ok());
  EXPECT_LE(w.size().inference_count - 1, 2 * (ante.size() + succ.size()) + 2);
}

TEST(Cut, Examples) {
  Formula imp = Formula::imp(kP, kQ);
  Derivation mp_shape = b::imp_l(imp, b::ax(kP), b::ax(kQ));
  EXPECT_EQ(mp_shape.conclusion(), (Sequent{{imp, kP}, {kQ}}));
  Theory t{"t", {kP}};
  Derivation c = cut(b::ax_theory(t, 0), mp_shape, kP);
  EXPECT_EQ(c.conclusion(), (Sequent{{imp}, {kQ}}));
  EXPECT_TRUE(check(c, Mode::Minimal, t).ok());
  EXPECT_THROW(cut(b::ax(kP), b::ax(kQ), kP), PreconditionError);
}

TEST(Builders, DerivedHelpersCheckMinimal) {
  Formula e = Formula::placeholder();
  Derivation dn = b::dneg_intro(b::ax(kP));
  EXPECT_EQ(dn.conclusion(), (Sequent{{kP}, {dneg_e(kP)}}));
  EXPECT_TRUE(check(dn, Mode::Minimal).ok());
  Derivation pq = b::unfold(b::imp_r(Formula::imp(kP, kQ), b::weaken(b::ax(kQ), {kP})));
  Derivation map = b::dn_map(kP, kQ, pq);
  EXPECT_TRUE(check(map, Mode::Minimal).ok());
  Derivation con = b::contra(kP, kQ, b::weaken(b::ax(kQ), {kP}));
  EXPECT_EQ(con.conclusion().succ, std::vector<Formula>{neg_e(kP)});
  EXPECT_TRUE(check(con, Mode::Minimal).ok());
  (void)e;
}

TEST(Files, DerivationRoundTrip) {
  Formula all = Formula::forall("x", atom("P", {Term::bound(0)}));
  Formula ex = Formula::exists("x", atom("P", {Term::bound(0)}));
  Derivation d = b::imp_r(Formula::imp(all, ex),
                          b::all_l(all, Term::app("c"), b::ex_r(ex, Term::app("c"), b::ax(atom("P", {Term::app("c")})))));
  ASSERT_TRUE(check(d, Mode::Minimal).ok());
  Signature sig;
  sig.add_constant("c");
  std::string text = print_derivation(d);
  Derivation back = parse_derivation(text, &sig);
  EXPECT_EQ(print_derivation(back), text);
  EXPECT_TRUE(check(back, Mode::Minimal).ok());
}

TEST(Files, Theory) {
  Theory t = parse_theory("(theory fields (forall x (or (atom Eq x zero) (exists y (atom Eq (mul x y) one)))))");
  EXPECT_EQ(t.name, "fields");
  ASSERT_EQ(t.axioms.size(), 1u);
  EXPECT_TRUE(is_sentence(t.axioms[0]));
  EXPECT_EQ(parse_theory(print_theory(t)).axioms, t.axioms);
  EXPECT_THROW(parse_theory("(theory bad E)"), PreconditionError);
  Signature sig = theory_signature(t);
  EXPECT_TRUE(sig.is_constant("zero"));
  EXPECT_EQ(sig.function_arity("mul"), 2u);
}
