#include "geoconv/build.hpp"

#include <algorithm>
#include <unordered_set>

namespace geoconv::build {

namespace {

bool contains(const Seq& s, const Formula& f) {
  return std::any_of(s.begin(), s.end(), [&](const Formula& g) { return g == f; });
}

Seq remove_all(const Seq& s, const Formula& f) {
  Seq out;
  for (const auto& g : s)
    if (!(g == f)) out.push_back(g);
  return out;
}

Seq cat(const Seq& a, const Seq& b) {
  Seq out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Seq cons(const Formula& f, const Seq& s) { return cat(Seq{f}, s); }
Seq snoc(const Seq& s, const Formula& f) { return cat(s, Seq{f}); }

void expect(const Formula& f, Connective c, const char* who) {
  if (!f.is(c)) throw PreconditionError(std::string(who) + ": wrong principal connective in " +
                                        print_formula(f));
}

[[noreturn]] void missing(const char* who, const Formula& f, const char* side) {
  throw PreconditionError(std::string(who) + ": " + print_formula(f) + " not in " + side);
}

void require_fresh(const char* who, const Sequent& s, const std::string& a) {
  for (const auto& f : s.ante)
    if (occurs_free(f, a)) throw PreconditionError(std::string(who) + ": eigenvariable " + a +
                                                   " occurs in conclusion");
  for (const auto& f : s.succ)
    if (occurs_free(f, a)) throw PreconditionError(std::string(who) + ": eigenvariable " + a +
                                                   " occurs in conclusion");
}

// Moves `x` to the front of the antecedent and replaces it by `principal`.
Derivation left_intro(const Derivation& d, const Formula& x, const Formula& principal,
                      RuleTag tag) {
  Seq rest = remove_all(d.conclusion().ante, x);
  Derivation pre = reshape(d, cons(x, rest), d.conclusion().succ);
  return normalize(Derivation(Sequent{cons(principal, rest), d.conclusion().succ},
                              std::move(tag), {pre}));
}

// Moves `x` to the end of the succedent and replaces it by `principal`.
Derivation right_intro(const Derivation& d, const Formula& x, const Formula& principal,
                       RuleTag tag) {
  Seq ctx = remove_all(d.conclusion().succ, x);
  Derivation pre = reshape(d, d.conclusion().ante, snoc(ctx, x));
  return normalize(Derivation(Sequent{d.conclusion().ante, snoc(ctx, principal)},
                              std::move(tag), {pre}));
}

}  // namespace

Seq dedup(const Seq& s) {
  Seq out;
  std::unordered_set<Formula, FormulaHash> seen;
  for (const auto& f : s)
    if (seen.insert(f).second) out.push_back(f);
  return out;
}

Derivation ax(const Formula& a) { return Derivation(Sequent{{a}, {a}}, RuleTag::plain(Rule::AxId)); }

Derivation ax_bot(const Seq& succ) {
  return Derivation(Sequent{{Formula::falsum()}, dedup(succ)}, RuleTag::plain(Rule::AxBot));
}

Derivation ax_theory(const Theory& t, std::size_t i) {
  if (i >= t.axioms.size()) throw PreconditionError("ax_theory: no such axiom");
  return Derivation(Sequent{{}, {t.axioms[i]}}, RuleTag::theory(i));
}

Derivation normalize(const Derivation& d) {
  return reshape(d, dedup(d.conclusion().ante), dedup(d.conclusion().succ));
}

Derivation weaken(const Derivation& d, const Seq& ante, const Seq& succ) {
  return reshape(d, dedup(cat(d.conclusion().ante, ante)), dedup(cat(d.conclusion().succ, succ)));
}

Derivation and_l(const Formula& conj, const Derivation& d, std::optional<bool> left) {
  expect(conj, Connective::And, "and_l");
  const auto& a = d.conclusion().ante;
  if (left) {
    const Formula& x = *left ? conj.lhs() : conj.rhs();
    if (!contains(a, x)) missing("and_l", x, "antecedent");
    return left_intro(d, x, conj, RuleTag::plain(Rule::AndL));
  }
  if (contains(a, conj.lhs())) return left_intro(d, conj.lhs(), conj, RuleTag::plain(Rule::AndL));
  if (contains(a, conj.rhs())) return left_intro(d, conj.rhs(), conj, RuleTag::plain(Rule::AndL));
  missing("and_l", conj.lhs(), "antecedent");
}

Derivation and_r(const Formula& conj, const Derivation& left, const Derivation& right) {
  expect(conj, Connective::And, "and_r");
  const Formula& c = conj.lhs();
  const Formula& e = conj.rhs();
  if (!contains(left.conclusion().succ, c)) missing("and_r", c, "left succedent");
  if (!contains(right.conclusion().succ, e)) missing("and_r", e, "right succedent");
  Seq u = dedup(cat(left.conclusion().ante, right.conclusion().ante));
  Seq ctx = dedup(cat(remove_all(left.conclusion().succ, c), remove_all(right.conclusion().succ, e)));
  Derivation l = reshape(left, u, snoc(ctx, c));
  Derivation r = reshape(right, u, snoc(ctx, e));
  return normalize(Derivation(Sequent{u, snoc(ctx, conj)}, RuleTag::plain(Rule::AndR), {l, r}));
}

Derivation or_l(const Formula& disj, const Derivation& left, const Derivation& right) {
  expect(disj, Connective::Or, "or_l");
  const Formula& c = disj.lhs();
  const Formula& e = disj.rhs();
  if (!contains(left.conclusion().ante, c)) missing("or_l", c, "left antecedent");
  if (!contains(right.conclusion().ante, e)) missing("or_l", e, "right antecedent");
  Seq rest = dedup(cat(remove_all(left.conclusion().ante, c), remove_all(right.conclusion().ante, e)));
  Seq succ = dedup(cat(left.conclusion().succ, right.conclusion().succ));
  Derivation l = reshape(left, cons(c, rest), succ);
  Derivation r = reshape(right, cons(e, rest), succ);
  return normalize(Derivation(Sequent{cons(disj, rest), succ}, RuleTag::plain(Rule::OrL), {l, r}));
}

Derivation or_r(const Formula& disj, const Derivation& d, std::optional<bool> left) {
  expect(disj, Connective::Or, "or_r");
  const auto& s = d.conclusion().succ;
  if (left) {
    const Formula& x = *left ? disj.lhs() : disj.rhs();
    if (!contains(s, x)) missing("or_r", x, "succedent");
    return right_intro(d, x, disj, RuleTag::plain(Rule::OrR));
  }
  if (contains(s, disj.lhs())) return right_intro(d, disj.lhs(), disj, RuleTag::plain(Rule::OrR));
  if (contains(s, disj.rhs())) return right_intro(d, disj.rhs(), disj, RuleTag::plain(Rule::OrR));
  missing("or_r", disj.lhs(), "succedent");
}

Derivation imp_l(const Formula& imp, const Derivation& left, const Derivation& right) {
  expect(imp, Connective::Imp, "imp_l");
  const Formula& c = imp.lhs();
  const Formula& e = imp.rhs();
  if (!contains(left.conclusion().succ, c)) missing("imp_l", c, "left succedent");
  if (!contains(right.conclusion().ante, e)) missing("imp_l", e, "right antecedent");
  Seq s1 = remove_all(left.conclusion().succ, c);
  Seq a2 = remove_all(right.conclusion().ante, e);
  Derivation l = reshape(left, left.conclusion().ante, snoc(s1, c));
  Derivation r = reshape(right, cons(e, a2), right.conclusion().succ);
  Sequent concl{cons(imp, cat(left.conclusion().ante, a2)), cat(s1, right.conclusion().succ)};
  return normalize(Derivation(std::move(concl), RuleTag::plain(Rule::ImpL), {l, r}));
}

Derivation imp_r(const Formula& imp, const Derivation& d) {
  expect(imp, Connective::Imp, "imp_r");
  const Formula& c = imp.lhs();
  const Formula& e = imp.rhs();
  Seq a = remove_all(d.conclusion().ante, c);
  Seq s = remove_all(d.conclusion().succ, e);
  Derivation pre = reshape(d, cons(c, a), snoc(s, e));
  return normalize(Derivation(Sequent{a, snoc(s, imp)}, RuleTag::plain(Rule::ImpR), {pre}));
}

Derivation all_l(const Formula& all, const Term& t, const Derivation& d) {
  expect(all, Connective::Forall, "all_l");
  Formula inst = instantiate(all.body(), t);
  if (!contains(d.conclusion().ante, inst)) missing("all_l", inst, "antecedent");
  return left_intro(d, inst, all, RuleTag::with_term(Rule::AllL, t));
}

Derivation all_r(const Formula& all, const std::string& eigen, const Derivation& d) {
  expect(all, Connective::Forall, "all_r");
  Formula inst = instantiate(all.body(), Term::free(eigen));
  if (!contains(d.conclusion().succ, inst)) missing("all_r", inst, "succedent");
  Derivation out = right_intro(d, inst, all, RuleTag::with_eigen(Rule::AllR, eigen));
  require_fresh("all_r", out.conclusion(), eigen);
  return out;
}

Derivation ex_l(const Formula& ex, const std::string& eigen, const Derivation& d) {
  expect(ex, Connective::Exists, "ex_l");
  Formula inst = instantiate(ex.body(), Term::free(eigen));
  if (!contains(d.conclusion().ante, inst)) missing("ex_l", inst, "antecedent");
  Derivation out = left_intro(d, inst, ex, RuleTag::with_eigen(Rule::ExL, eigen));
  require_fresh("ex_l", out.conclusion(), eigen);
  return out;
}

Derivation ex_r(const Formula& ex, const Term& t, const Derivation& d) {
  expect(ex, Connective::Exists, "ex_r");
  Formula inst = instantiate(ex.body(), t);
  if (!contains(d.conclusion().succ, inst)) missing("ex_r", inst, "succedent");
  return right_intro(d, inst, ex, RuleTag::with_term(Rule::ExR, t));
}

Derivation mp(const Derivation& imp, const Derivation& arg) {
  if (imp.conclusion().succ.empty()) throw PreconditionError("mp: empty succedent");
  Formula f = imp.conclusion().succ.back();
  expect(f, Connective::Imp, "mp");
  return cut(imp, imp_l(f, arg, ax(f.rhs())), f);
}

Derivation unfold(const Derivation& imp) {
  if (imp.conclusion().succ.empty()) throw PreconditionError("unfold: empty succedent");
  Formula f = imp.conclusion().succ.back();
  expect(f, Connective::Imp, "unfold");
  return cut(imp, imp_l(f, ax(f.lhs()), ax(f.rhs())), f);
}

Derivation dneg_intro(const Derivation& d) {
  if (d.conclusion().succ.empty()) throw PreconditionError("dneg_intro: empty succedent");
  Formula a = d.conclusion().succ.back();
  Formula na = neg_e(a);
  return imp_r(neg_e(na), imp_l(na, d, ax(Formula::placeholder())));
}

Derivation dn_map(const Formula& b, const Formula& c, const Derivation& d) {
  Formula e = Formula::placeholder();
  Formula nb = neg_e(b);
  Formula nc = neg_e(c);
  Derivation s = imp_r(nb, imp_l(nc, d, ax(e)));
  return imp_r(neg_e(nc), imp_l(neg_e(nb), s, ax(e)));
}

Derivation contra(const Formula& b, const Formula& c, const Derivation& d) {
  return imp_r(neg_e(b), imp_l(neg_e(c), d, ax(Formula::placeholder())));
}

void verify(const Derivation& d, Mode mode, const Theory* theory, const char* what) {
  CheckReport r = theory ? check(d, mode, *theory) : check(d, mode);
  if (r.ok()) return;
  std::string msg = std::string(what) + " failed " + std::string(mode_name(mode)) + " check: ";
  std::size_t shown = 0;
  for (const auto& v : r.violations) {
    if (shown++ == 3) break;
    msg += v.path + " [" + std::string(rule_name(v.rule)) + "] " + v.message + "; ";
  }
  throw InternalError(msg);
}

}  // namespace geoconv::build
