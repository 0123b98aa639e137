#include "geoconv/translation.hpp"

#include <algorithm>
#include <unordered_set>

#include "geoconv/build.hpp"

namespace geoconv {

namespace b = build;

namespace {

Formula translate(const Formula& f, SpellingMap<Formula>& memo) {
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;
  Formula out = Formula::falsum();
  switch (f.kind()) {
    case Connective::Atom:
      out = dneg_e(f);
      break;
    case Connective::Falsum:
      out = Formula::placeholder();
      break;
    case Connective::Placeholder:
      throw PreconditionError("e_translate: formula contains E");
    case Connective::And:
      out = Formula::conj(translate(f.lhs(), memo), translate(f.rhs(), memo));
      break;
    case Connective::Or:
      out = dneg_e(Formula::disj(translate(f.lhs(), memo), translate(f.rhs(), memo)));
      break;
    case Connective::Imp:
      out = Formula::imp(translate(f.lhs(), memo), translate(f.rhs(), memo));
      break;
    case Connective::Forall:
      out = Formula::forall(f.name(), translate(f.body(), memo));
      break;
    case Connective::Exists:
      out = dneg_e(Formula::exists(f.name(), translate(f.body(), memo)));
      break;
  }
  memo.emplace(f, out);
  return out;
}

}  // namespace

Formula e_translate(const Formula& phi) {
  SpellingMap<Formula> memo;
  return translate(phi, memo);
}

Theory TranslatedTheory::as_theory() const { return Theory{base.name + "^E", translated_axioms}; }

TranslatedTheory translate_theory(const Theory& t) {
  require_plain_theory(t);
  TranslatedTheory out{t, {}};
  for (const auto& a : t.axioms) out.translated_axioms.push_back(e_translate(a));
  return out;
}

// ---------------------------------------------------------------------------
// Stability

bool Stabilizer::is_stable(const Formula& a) {
  switch (a.kind()) {
    case Connective::Placeholder:
      return true;
    case Connective::And:
      return is_stable(a.lhs()) && is_stable(a.rhs());
    case Connective::Imp:
      return a.rhs().is(Connective::Placeholder) || is_stable(a.rhs());
    case Connective::Forall:
      return is_stable(a.body());
    default:
      return false;
  }
}

const Derivation& Stabilizer::collapse(const Formula& a) {
  auto it = memo_.find(a);
  if (it != memo_.end()) return it->second;
  Derivation d = build(a);
  return memo_.emplace(a, std::move(d)).first->second;
}

Derivation Stabilizer::build(const Formula& a) {
  const Formula e = Formula::placeholder();
  switch (a.kind()) {
    case Connective::Placeholder: {
      Formula ee = Formula::imp(e, e);
      return b::imp_l(neg_e(ee), b::imp_r(ee, b::ax(e)), b::ax(e));
    }
    case Connective::And: {
      Formula l = a.lhs(), r = a.rhs();
      Derivation dl = cut(b::dn_map(a, l, b::and_l(a, b::ax(l), true)), collapse(l), dneg_e(l));
      Derivation dr = cut(b::dn_map(a, r, b::and_l(a, b::ax(r), false)), collapse(r), dneg_e(r));
      return b::and_r(a, dl, dr);
    }
    case Connective::Imp: {
      if (a.rhs().is(Connective::Placeholder)) {
        // Triple negation: ~~~X => ~X.
        Formula x = a.lhs();
        Derivation inner = b::dneg_intro(b::ax(x));
        return b::imp_r(a, b::imp_l(dneg_e(a), inner, b::ax(e)));
      }
      Formula x = a.lhs(), r = a.rhs();
      Derivation mp = b::imp_l(a, b::ax(x), b::ax(r));
      Derivation dn = b::dn_map(a, r, mp);
      return b::imp_r(a, cut(dn, collapse(r), dneg_e(r)));
    }
    case Connective::Forall: {
      std::set<std::string> names;
      collect_names(a, names);
      std::string v = fresh_free_var(names).name;
      Formula inst = instantiate(a.body(), Term::free(v));
      Derivation dn = b::dn_map(a, inst, b::all_l(a, Term::free(v), b::ax(inst)));
      return b::all_r(a, v, cut(dn, collapse(inst), dneg_e(inst)));
    }
    default:
      throw PreconditionError("stability: formula is not of stable shape: " + print_formula(a));
  }
}

Stability stability(const Formula& phi) {
  Formula t = e_translate(phi);
  Stabilizer s;
  return Stability{s.collapse(t), b::dneg_intro(b::ax(t))};
}

// ---------------------------------------------------------------------------
// Derivations

namespace {

class DerivationTranslator {
 public:
  explicit DerivationTranslator(const Theory& t) : theory_(t) {}

  Derivation root(const Derivation& d) {
    const auto& s = d.conclusion();
    Formula delta = s.succ.front();
    Derivation t = node(d);
    Formula dt = tr(delta);
    Derivation out = cut(b::imp_r(neg_e(neg_e(dt)), t), stab_.collapse(dt), dneg_e(dt));
    std::vector<Formula> ante;
    for (const auto& g : s.ante) ante.push_back(tr(g));
    return reshape(out, ante, {dt});
  }

 private:
  Formula tr(const Formula& f) {
    auto it = memo_f_.find(f);
    if (it != memo_f_.end()) return it->second;
    Formula out = translate(f, memo_f_);
    return out;
  }

  Formula n(const Formula& f) { return neg_e(tr(f)); }

  std::vector<Formula> target_ante(const Sequent& s) {
    std::vector<Formula> out;
    for (const auto& g : s.ante) out.push_back(tr(g));
    for (const auto& g : s.succ) out.push_back(n(g));
    return b::dedup(out);
  }

  Derivation fit(const Derivation& d, const Sequent& s) {
    return reshape(d, target_ante(s), {Formula::placeholder()});
  }

  Derivation node(const Derivation& d) {
    auto it = memo_d_.find(d.identity());
    if (it != memo_d_.end()) return it->second;
    Derivation out = fit(step(d), d.conclusion());
    memo_d_.emplace(d.identity(), out);
    return out;
  }

  Derivation step(const Derivation& d) {
    const Formula e = Formula::placeholder();
    const auto& s = d.conclusion();
    const auto& prem = d.premises();
    switch (d.rule()) {
      case Rule::AxId: {
        for (const auto& f : s.ante) {
          if (std::find(s.succ.begin(), s.succ.end(), f) == s.succ.end()) continue;
          return b::imp_l(n(f), b::ax(tr(f)), b::ax(e));
        }
        throw InternalError("translate: identity axiom without shared formula");
      }
      case Rule::AxBot:
        return b::ax(e);
      case Rule::AxTheory: {
        const Formula& phi = theory_.axioms.at(d.tag().axiom);
        Derivation leaf(Sequent{{}, {tr(phi)}}, RuleTag::theory(d.tag().axiom));
        return b::imp_l(n(phi), leaf, b::ax(e));
      }
      case Rule::WeakL:
      case Rule::WeakR:
      case Rule::ContrL:
      case Rule::ContrR:
      case Rule::ExchL:
      case Rule::ExchR:
        return node(prem[0]);
      case Rule::Cut: {
        Formula c = prem[0].conclusion().succ.back();
        Derivation t1 = node(prem[0]);
        Derivation t2 = node(prem[1]);
        return cut(b::imp_r(n(c), t2), t1, n(c));
      }
      case Rule::AndL: {
        const Formula& conj = s.ante.front();
        bool left = prem[0].conclusion().ante.front() == conj.lhs();
        return b::and_l(tr(conj), node(prem[0]), left);
      }
      case Rule::AndR: {
        const Formula& f = s.succ.back();
        Formula ft = tr(f);
        Formula cl = ft.lhs(), cr = ft.rhs();
        Derivation k = b::imp_l(neg_e(ft), b::and_r(ft, b::ax(cl), b::ax(cr)), b::ax(e));
        Derivation step2 = cut(b::imp_r(neg_e(cr), k), node(prem[1]), neg_e(cr));
        return cut(b::imp_r(neg_e(cl), step2), node(prem[0]), neg_e(cl));
      }
      case Rule::OrL: {
        const Formula& f = s.ante.front();
        Formula inner = Formula::disj(tr(f.lhs()), tr(f.rhs()));
        Derivation split = b::or_l(inner, node(prem[0]), node(prem[1]));
        return b::imp_l(tr(f), b::imp_r(neg_e(inner), split), b::ax(e));
      }
      case Rule::OrR: {
        const Formula& f = s.succ.back();
        bool left = prem[0].conclusion().succ.back() == f.lhs();
        const Formula& c = left ? f.lhs() : f.rhs();
        Formula inner = Formula::disj(tr(f.lhs()), tr(f.rhs()));
        Derivation up = b::dneg_intro(b::or_r(inner, b::ax(tr(c)), left));
        Derivation m = b::imp_r(n(c), b::imp_l(n(f), up, b::ax(e)));
        return cut(m, node(prem[0]), n(c));
      }
      case Rule::ImpL: {
        const Formula& f = s.ante.front();
        Formula ct = tr(f.lhs()), dt = tr(f.rhs());
        Formula ft = Formula::imp(ct, dt);
        Derivation inner = b::imp_l(ft, b::ax(ct), b::ax(dt));
        Derivation m = b::imp_r(neg_e(ct), b::imp_l(neg_e(dt), inner, b::ax(e)));
        Derivation left = cut(m, node(prem[0]), neg_e(ct));
        return cut(b::imp_r(neg_e(dt), node(prem[1])), left, neg_e(dt));
      }
      case Rule::ImpR: {
        const Formula& f = s.succ.back();
        Formula ct = tr(f.lhs()), dt = tr(f.rhs());
        Derivation t = b::imp_r(neg_e(neg_e(dt)), node(prem[0]));
        Derivation u = cut(t, stab_.collapse(dt), dneg_e(dt));
        Formula ft = Formula::imp(ct, dt);
        return b::imp_l(neg_e(ft), b::imp_r(ft, u), b::ax(e));
      }
      case Rule::AllL:
        return b::all_l(tr(s.ante.front()), *d.tag().term, node(prem[0]));
      case Rule::AllR: {
        const Formula& f = s.succ.back();
        Formula ft = tr(f);
        Formula inst = prem[0].conclusion().succ.back();
        Formula it = tr(inst);
        Derivation t = b::imp_r(neg_e(neg_e(it)), node(prem[0]));
        Derivation u = cut(t, stab_.collapse(it), dneg_e(it));
        return b::imp_l(neg_e(ft), b::all_r(ft, d.tag().eigen, u), b::ax(e));
      }
      case Rule::ExL: {
        const Formula& f = s.ante.front();
        Formula ft = tr(f);  // ~~ exists x B^E
        Formula ex = ft.lhs().lhs();
        Derivation t = b::ex_l(ex, d.tag().eigen, node(prem[0]));
        return b::imp_l(ft, b::imp_r(neg_e(ex), t), b::ax(e));
      }
      case Rule::ExR: {
        const Formula& f = s.succ.back();
        Formula ex = tr(f).lhs().lhs();
        Formula inst = prem[0].conclusion().succ.back();
        Derivation up = b::dneg_intro(b::ex_r(ex, *d.tag().term, b::ax(tr(inst))));
        Derivation m = b::imp_r(n(inst), b::imp_l(n(f), up, b::ax(e)));
        return cut(m, node(prem[0]), n(inst));
      }
    }
    throw InternalError("translate: unknown rule");
  }

  const Theory& theory_;
  Stabilizer stab_;
  SpellingMap<Formula> memo_f_;
  std::unordered_map<const void*, Derivation> memo_d_;
};

}  // namespace

Derivation translate_derivation(const Derivation& d, const Theory& t) {
  require_plain_theory(t);
  CheckReport r = check(d, Mode::Classical, t);
  if (!r.ok()) throw PreconditionError("translate_derivation: input fails classical check:\n" + r.summary());
  if (d.conclusion().succ.size() != 1)
    throw PreconditionError("translate_derivation: root succedent must contain exactly one formula");
  DerivationTranslator tr(t);
  return tr.root(d);
}

}  // namespace geoconv
