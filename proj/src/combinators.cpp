#include "geoconv/combinators.hpp"

#include "geoconv/build.hpp"
#include "geoconv/classes.hpp"

namespace geoconv {

namespace b = build;

namespace {

const Formula& E() {
  static const Formula e = Formula::placeholder();
  return e;
}

const Formula& Bot() {
  static const Formula f = Formula::falsum();
  return f;
}

// ~-X
Formula nn(const Formula& x) { return neg_e(neg(x)); }

void check_id(int id) {
  if (id < 1 || id > kLemmaCount)
    throw PreconditionError("lemma: no item " + std::to_string(id));
}

void check_args(int id, const std::vector<Formula>& args) {
  check_id(id);
  if (args.size() != lemma_arity(id))
    throw PreconditionError("lemma " + std::to_string(id) + ": expected " +
                            std::to_string(lemma_arity(id)) + " argument(s), got " +
                            std::to_string(args.size()));
  if ((id == 9 || id == 10) && !args[0].is_quantifier())
    throw PreconditionError("lemma " + std::to_string(id) +
                            ": argument must be a quantified template (forall/exists x body)");
}

std::string fresh_for(const std::vector<Formula>& fs) {
  std::set<std::string> names;
  for (const auto& f : fs) collect_names(f, names);
  return fresh_free_var(names).name;
}

// Replaces both conjuncts of conj in the antecedent by conj itself.
Derivation and_l_both(const Formula& conj, const Derivation& d) {
  Derivation out = b::and_l(conj, d, true);
  return conj.lhs() == conj.rhs() ? out : b::and_l(conj, out, false);
}

// The pieces of each schema: premises on the left and the conclusion.
struct Schema {
  std::vector<Formula> ante;
  Formula succ;
};

Schema schema(int id, const std::vector<Formula>& a) {
  check_args(id, a);
  const Formula& p = a[0];
  switch (id) {
    case 1:
      return {{p}, dneg_e(p)};
    case 2:
      return {{Formula::imp(p, a[1]), dneg_e(p)}, dneg_e(a[1])};
    case 3:
      return {{nn(Formula::conj(p, a[1]))}, Formula::conj(nn(p), nn(a[1]))};
    case 4:
      return {{Formula::conj(dneg_e(p), dneg_e(a[1]))}, dneg_e(Formula::conj(p, a[1]))};
    case 5:
      return {{nn(Formula::disj(p, a[1]))}, dneg_e(Formula::disj(nn(p), nn(a[1])))};
    case 6:
      return {{dneg_e(Formula::disj(dneg_e(p), dneg_e(a[1])))}, dneg_e(Formula::disj(p, a[1]))};
    case 7:
      return {{nn(Formula::imp(p, a[1])), dneg_e(p)}, nn(a[1])};
    case 8:
      return {{Formula::imp(nn(p), dneg_e(a[1]))}, dneg_e(Formula::imp(p, a[1]))};
    case 9:
      return {{nn(Formula::forall(p.name(), p.body()))},
              Formula::forall(p.name(), nn(p.body()))};
    case 10:
      return {{dneg_e(Formula::exists(p.name(), dneg_e(p.body())))},
              dneg_e(Formula::exists(p.name(), p.body()))};
  }
  throw PreconditionError("lemma: no such item");
}

}  // namespace

Mode lemma_mode(int id) {
  check_id(id);
  return id == 8 ? Mode::Intuitionistic : Mode::Minimal;
}

std::size_t lemma_arity(int id) {
  check_id(id);
  return (id == 1 || id == 9 || id == 10) ? 1 : 2;
}

Formula lemma_statement(int id, const std::vector<Formula>& args) {
  Schema s = schema(id, args);
  Formula out = s.succ;
  for (auto it = s.ante.rbegin(); it != s.ante.rend(); ++it) out = Formula::imp(*it, out);
  return out;
}

Derivation lemma(int id, const std::vector<Formula>& args) {
  Embedder emb;
  Schema s = schema(id, args);
  Derivation d = emb.lemma_sequent(id, args);
  Formula out = s.succ;
  for (auto it = s.ante.rbegin(); it != s.ante.rend(); ++it) {
    out = Formula::imp(*it, out);
    d = b::imp_r(out, d);
  }
  return d;
}

Derivation Embedder::lemma_sequent(int id, const std::vector<Formula>& args) {
  check_args(id, args);
  const Formula& p = args[0];
  const Formula& e = E();
  switch (id) {
    case 1:
      return b::dneg_intro(b::ax(p));
    case 2: {
      const Formula& q = args[1];
      return b::dn_map(p, q, b::imp_l(Formula::imp(p, q), b::ax(p), b::ax(q)));
    }
    case 3: {
      const Formula& q = args[1];
      Formula conj = Formula::conj(p, q);
      auto side = [&](const Formula& x, bool left) {
        Derivation d = b::imp_l(neg(x), b::and_l(conj, b::ax(x), left), b::ax(Bot()));
        return b::contra(neg(x), neg(conj), b::imp_r(neg(conj), d));
      };
      return b::and_r(Formula::conj(nn(p), nn(q)), side(p, true), side(q, false));
    }
    case 4: {
      const Formula& q = args[1];
      Formula conj = Formula::conj(p, q);
      Derivation d = b::imp_l(neg_e(conj), b::and_r(conj, b::ax(p), b::ax(q)), b::ax(e));
      d = b::imp_l(dneg_e(q), b::imp_r(neg_e(q), d), b::ax(e));
      if (!(p == q)) d = b::imp_l(dneg_e(p), b::imp_r(neg_e(p), d), b::ax(e));
      d = b::imp_r(dneg_e(conj), d);
      Formula both = Formula::conj(dneg_e(p), dneg_e(q));
      return and_l_both(both, d);
    }
    case 5: {
      const Formula& q = args[1];
      Formula disj = Formula::disj(p, q);
      Formula h = nn(disj);
      Formula d_ = Formula::disj(nn(p), nn(q));
      Formula k = neg_e(d_);
      Derivation split = b::or_l(disj, b::imp_l(neg(p), b::ax(p), b::ax(Bot())),
                                 b::imp_l(neg(q), b::ax(q), b::ax(Bot())));
      Derivation d = b::imp_l(h, b::imp_r(neg(disj), split), b::ax(e));
      d = b::or_r(d_, b::imp_r(nn(q), d), false);
      d = b::imp_l(k, d, b::ax(e));
      d = b::or_r(d_, b::imp_r(nn(p), d), true);
      d = b::imp_l(k, d, b::ax(e));
      return b::imp_r(neg_e(k), d);
    }
    case 6: {
      const Formula& q = args[1];
      Formula disj = Formula::disj(p, q);
      Formula inner = Formula::disj(dneg_e(p), dneg_e(q));
      Derivation l = b::dn_map(p, disj, b::or_r(disj, b::ax(p), true));
      Derivation r = b::dn_map(q, disj, b::or_r(disj, b::ax(q), false));
      Derivation d = b::dn_map(inner, dneg_e(disj), b::or_l(inner, l, r));
      return cut(d, stab_.collapse(dneg_e(disj)), dneg_e(dneg_e(disj)));
    }
    case 7: {
      const Formula& q = args[1];
      Formula imp = Formula::imp(p, q);
      Formula g = nn(imp);
      Derivation d = b::imp_l(imp, b::ax(p), b::imp_l(neg(q), b::ax(q), b::ax(Bot())));
      d = b::imp_l(g, b::imp_r(neg(imp), d), b::ax(e));
      d = b::imp_l(dneg_e(p), b::imp_r(neg_e(p), d), b::ax(e));
      return b::imp_r(nn(q), d);
    }
    case 8: {
      const Formula& q = args[1];
      Formula imp = Formula::imp(p, q);
      Formula n = neg_e(imp);
      Formula f = Formula::imp(nn(p), dneg_e(q));
      Derivation efq = b::imp_l(neg(p), b::ax(p), b::ax_bot({q}));
      Derivation to_nnp = b::imp_r(nn(p), b::imp_l(n, b::imp_r(imp, efq), b::ax(e)));
      Derivation to_nq = b::imp_r(neg_e(q), b::imp_l(n, b::imp_r(imp, b::ax(q)), b::ax(e)));
      Derivation nnq = b::imp_l(f, to_nnp, b::ax(dneg_e(q)));
      Derivation bottom = cut(nnq, b::imp_l(dneg_e(q), to_nq, b::ax(e)), dneg_e(q));
      return b::imp_r(neg_e(n), bottom);
    }
    case 9: {
      Formula all = Formula::forall(p.name(), p.body());
      std::string a = fresh_for({all});
      Formula inst = instantiate(p.body(), Term::free(a));
      Derivation d = b::imp_l(neg(inst), b::all_l(all, Term::free(a), b::ax(inst)), b::ax(Bot()));
      d = b::contra(neg(inst), neg(all), b::imp_r(neg(all), d));
      return b::all_r(Formula::forall(p.name(), nn(p.body())), a, d);
    }
    case 10: {
      Formula ex = Formula::exists(p.name(), p.body());
      Formula exnn = Formula::exists(p.name(), dneg_e(p.body()));
      std::string a = fresh_for({ex});
      Formula inst = instantiate(p.body(), Term::free(a));
      Derivation d = b::dn_map(inst, ex, b::ex_r(ex, Term::free(a), b::ax(inst)));
      d = b::dn_map(exnn, dneg_e(ex), b::ex_l(exnn, a, d));
      return cut(d, stab_.collapse(dneg_e(ex)), dneg_e(dneg_e(ex)));
    }
  }
  throw PreconditionError("lemma: no such item");
}

Formula Embedder::tr(const Formula& f) {
  auto it = tr_.find(f);
  if (it != tr_.end()) return it->second;
  Formula t = e_translate(f);
  tr_.emplace(f, t);
  return t;
}

const Derivation& Embedder::q(const Formula& phi) {
  auto it = q_.find(phi);
  if (it != q_.end()) return it->second;
  if (!classify(phi).inQ) throw PreconditionError("embed_Q: formula is not in Q: " + print_formula(phi));
  Derivation d = build_q(phi);
  return q_.emplace(phi, std::move(d)).first->second;
}

const Derivation& Embedder::r(const Formula& psi) {
  auto it = r_.find(psi);
  if (it != r_.end()) return it->second;
  if (!classify(psi).inR) throw PreconditionError("embed_R: formula is not in R: " + print_formula(psi));
  Derivation d = build_r(psi);
  return r_.emplace(psi, std::move(d)).first->second;
}

const Derivation& Embedder::j(const Formula& theta) {
  auto it = j_.find(theta);
  if (it != j_.end()) return it->second;
  if (!classify(theta).inJ) throw PreconditionError("embed_J: formula is not in J: " + print_formula(theta));
  Derivation d = build_j(theta);
  return j_.emplace(theta, std::move(d)).first->second;
}

Derivation Embedder::build_q(const Formula& phi) {
  Formula t = tr(phi);
  switch (phi.kind()) {
    case Connective::Falsum:
      return b::ax_bot({E()});
    case Connective::Atom:
      return b::dneg_intro(b::ax(phi));
    case Connective::And: {
      Derivation d = b::and_r(t, q(phi.lhs()), q(phi.rhs()));
      return and_l_both(phi, d);
    }
    case Connective::Or: {
      Formula inner = t.lhs().lhs();
      Derivation d = b::or_l(phi, b::or_r(inner, q(phi.lhs()), true), b::or_r(inner, q(phi.rhs()), false));
      return b::dneg_intro(d);
    }
    case Connective::Forall: {
      std::string a = fresh_for({phi});
      Term ta = Term::free(a);
      Derivation d = b::all_l(phi, ta, q(instantiate(phi.body(), ta)));
      return b::all_r(t, a, d);
    }
    case Connective::Exists: {
      std::string a = fresh_for({phi});
      Term ta = Term::free(a);
      Formula ex = t.lhs().lhs();
      Derivation d = b::ex_r(ex, ta, q(instantiate(phi.body(), ta)));
      return b::dneg_intro(b::ex_l(phi, a, d));
    }
    case Connective::Imp: {
      const Formula& jf = phi.lhs();
      const Formula& qf = phi.rhs();
      Formula qt = tr(qf);
      // (J -> Q), J^E => ~~Q
      Derivation star = cut(j(jf), lemma_sequent(2, {jf, qf}), dneg_e(jf));
      Derivation lifted = cut(star, b::dn_map(qf, qt, q(qf)), dneg_e(qf));
      Derivation body = cut(lifted, stab_.collapse(qt), dneg_e(qt));
      return b::imp_r(t, body);
    }
    default:
      throw PreconditionError("embed_Q: unexpected formula");
  }
}

Derivation Embedder::build_r(const Formula& psi) {
  Formula t = tr(psi);
  const Formula& e = E();
  switch (psi.kind()) {
    case Connective::Falsum: {
      Formula nbot = neg(Bot());
      return b::imp_l(nn(Bot()), b::imp_r(nbot, b::ax(Bot())), b::ax(e));
    }
    case Connective::And: {
      Formula both = Formula::conj(nn(psi.lhs()), nn(psi.rhs()));
      Derivation d = b::and_r(t, b::and_l(both, r(psi.lhs()), true), b::and_l(both, r(psi.rhs()), false));
      return cut(lemma_sequent(3, {psi.lhs(), psi.rhs()}), d, both);
    }
    case Connective::Or: {
      Formula src = Formula::disj(nn(psi.lhs()), nn(psi.rhs()));
      Formula dst = t.lhs().lhs();
      Derivation inner = b::or_l(src, b::or_r(dst, r(psi.lhs()), true), b::or_r(dst, r(psi.rhs()), false));
      Derivation d = b::dn_map(src, dst, inner);
      return cut(lemma_sequent(5, {psi.lhs(), psi.rhs()}), d, dneg_e(src));
    }
    case Connective::Forall: {
      std::string a = fresh_for({psi});
      Term ta = Term::free(a);
      Formula src = Formula::forall(psi.name(), nn(psi.body()));
      Derivation d = b::all_r(t, a, b::all_l(src, ta, r(instantiate(psi.body(), ta))));
      return cut(lemma_sequent(9, {psi}), d, src);
    }
    case Connective::Imp: {
      const Formula& jf = psi.lhs();
      const Formula& rf = psi.rhs();
      Derivation d = cut(j(jf), lemma_sequent(7, {jf, rf}), dneg_e(jf));
      d = cut(d, r(rf), nn(rf));
      return b::imp_r(t, d);
    }
    default:
      throw PreconditionError("embed_R: unexpected formula");
  }
}

Derivation Embedder::build_j(const Formula& theta) {
  Formula t = tr(theta);
  const Formula& e = E();
  switch (theta.kind()) {
    case Connective::Falsum:
      return b::imp_r(dneg_e(Bot()), b::weaken(b::ax(e), {neg_e(Bot())}));
    case Connective::Atom:
      return b::ax(t);
    case Connective::And: {
      Formula both = Formula::conj(dneg_e(theta.lhs()), dneg_e(theta.rhs()));
      Derivation d = b::and_r(both, b::and_l(t, j(theta.lhs()), true), b::and_l(t, j(theta.rhs()), false));
      return cut(d, lemma_sequent(4, {theta.lhs(), theta.rhs()}), both);
    }
    case Connective::Or: {
      Formula src = t.lhs().lhs();
      Formula dst = Formula::disj(dneg_e(theta.lhs()), dneg_e(theta.rhs()));
      Derivation inner = b::or_l(src, b::or_r(dst, j(theta.lhs()), true), b::or_r(dst, j(theta.rhs()), false));
      Derivation d = b::dn_map(src, dst, inner);
      return cut(d, lemma_sequent(6, {theta.lhs(), theta.rhs()}), dneg_e(dst));
    }
    case Connective::Exists: {
      std::string a = fresh_for({theta});
      Term ta = Term::free(a);
      Formula src = t.lhs().lhs();
      Formula dst = Formula::exists(theta.name(), dneg_e(theta.body()));
      Derivation inner = b::ex_l(src, a, b::ex_r(dst, ta, j(instantiate(theta.body(), ta))));
      Derivation d = b::dn_map(src, dst, inner);
      return cut(d, lemma_sequent(10, {theta}), dneg_e(dst));
    }
    case Connective::Imp: {
      const Formula& rf = theta.lhs();
      const Formula& jf = theta.rhs();
      Formula rt = tr(rf);
      Derivation app = cut(r(rf), b::imp_l(t, b::ax(rt), j(jf)), rt);
      Formula f = Formula::imp(nn(rf), dneg_e(jf));
      return cut(b::imp_r(f, app), lemma_sequent(8, {rf, jf}), f);
    }
    default:
      throw PreconditionError("embed_J: unexpected formula");
  }
}

Derivation embed_Q(const Formula& phi) {
  Embedder emb;
  return b::imp_r(Formula::imp(phi, e_translate(phi)), emb.q(phi));
}

Derivation embed_R(const Formula& psi) {
  Embedder emb;
  return b::imp_r(Formula::imp(nn(psi), e_translate(psi)), emb.r(psi));
}

Derivation embed_J(const Formula& theta) {
  Embedder emb;
  return b::imp_r(Formula::imp(e_translate(theta), dneg_e(theta)), emb.j(theta));
}

}  // namespace geoconv
