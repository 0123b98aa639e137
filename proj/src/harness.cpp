#include "geoconv/harness.hpp"

#include <fstream>

#include "geoconv/build.hpp"

namespace geoconv {

namespace b = build;

namespace {

Term v(const char* name) { return Term::free(name); }
Term c_zero() { return Term::app("zero"); }

// Strips leading quantifiers by instantiating them with ts, in order.
Formula inst(Formula f, const std::vector<Term>& ts) {
  for (const auto& t : ts) {
    if (!f.is_quantifier()) throw InternalError("inst: too many terms");
    f = instantiate(f.body(), t);
  }
  return f;
}

// d has the instance of axiom i at ts in its antecedent; the result discharges it.
Derivation use_axiom(const Theory& t, std::size_t i, const std::vector<Term>& ts, Derivation d) {
  std::vector<Formula> prefix{t.axioms.at(i)};
  for (const auto& term : ts) prefix.push_back(instantiate(prefix.back().body(), term));
  for (std::size_t k = ts.size(); k-- > 0;) d = b::all_l(prefix[k], ts[k], d);
  return cut(b::ax_theory(t, i), d, prefix.front());
}

// => X or -X, classically.
Derivation lem(const Formula& x) {
  Formula nx = neg(x);
  Formula disj = Formula::disj(x, nx);
  Derivation d = b::imp_r(nx, b::weaken(b::ax(x), {}, {Formula::falsum()}));
  d = b::or_r(disj, d, false);
  return b::or_r(disj, d, true);
}

// Routes d through a case split on X or -X.
Derivation lem_detour(const Derivation& d, const Formula& x) {
  Formula disj = Formula::disj(x, neg(x));
  Derivation split = b::or_l(disj, b::weaken(d, {x}), b::weaken(d, {neg(x)}));
  return cut(lem(x), split, disj);
}

Formula goal(const Theory& t, const char* text) {
  Signature sig = theory_signature(t);
  ParseOptions opts;
  opts.signature = &sig;
  opts.unbound_as_constants = true;
  return parse_formula(text, opts);
}

const char* kToySplit = R"((theory toy-split
  (forall x (or (atom P x) (atom Q x)))
  (forall x (imp (atom Q x) bot))))";

const char* kToyLem = R"((theory toy-lem
  (forall x (imp (atom P x) (atom R x)))
  (forall x (or (atom P x) (atom R x)))))";

const char* kRobinson = R"((theory robinson
  (forall x (imp (atom eq (s x) zero) bot))
  (forall x (forall y (imp (atom eq (s x) (s y)) (atom eq x y))))
  (forall x (or (atom eq x zero) (exists y (atom eq x (s y)))))
  (forall x (atom eq (add x zero) x))
  (forall x (forall y (atom eq (add x (s y)) (s (add x y)))))
  (forall x (atom eq (mul x zero) zero))
  (forall x (forall y (atom eq (mul x (s y)) (add (mul x y) x))))
  (forall x (atom eq x x))
  (forall x (forall y (imp (atom eq x y) (atom eq y x))))
  (forall x (forall y (forall z (imp (and (atom eq x y) (atom eq y z)) (atom eq x z)))))
  (forall x (forall y (imp (atom eq x y) (atom eq (s x) (s y)))))))";

const char* kLocalRings = R"((theory local-rings
  (forall x (atom eq x x))
  (forall x (forall y (imp (atom eq x y) (atom eq y x))))
  (forall x (forall y (forall z (imp (and (atom eq x y) (atom eq y z)) (atom eq x z)))))
  (forall x (forall y (atom eq (mul x y) (mul y x))))
  (forall x (atom eq (mul x one) x))
  (imp (atom eq zero one) bot)
  (forall x (or (exists y (atom eq (mul x y) one)) (exists y (atom eq (mul (sub one x) y) one))))))";

const char* kFields = R"((theory fields
  (forall x (atom eq x x))
  (forall x (forall y (imp (atom eq x y) (atom eq y x))))
  (forall x (forall y (forall z (imp (and (atom eq x y) (atom eq y z)) (atom eq x z)))))
  (forall x (forall y (atom eq (add x y) (add y x))))
  (forall x (forall y (atom eq (mul x y) (mul y x))))
  (forall x (atom eq (add x zero) x))
  (forall x (atom eq (mul x one) x))
  (imp (atom eq zero one) bot)
  (forall x (or (atom eq x zero) (exists y (atom eq (mul x y) one))))))";

const char* kDlo = R"((theory dense-linear-orders
  (forall x (imp (atom lt x x) bot))
  (forall x (forall y (forall z (imp (and (atom lt x y) (atom lt y z)) (atom lt x z)))))
  (forall x (forall y (or (atom lt x y) (or (atom eq x y) (atom lt y x)))))
  (forall x (forall y (imp (atom lt x y) (exists z (and (atom lt x z) (atom lt z y))))))
  (forall x (exists y (atom lt x y)))
  (forall x (exists y (atom lt y x)))
  (forall x (atom eq x x))
  (forall x (forall y (imp (atom eq x y) (atom eq y x))))))";

struct Corpus {
  std::vector<TheoryCorpusEntry> theories;
  std::vector<SampleProof> samples;

  const Theory& theory(const std::string& name) const {
    for (const auto& e : theories)
      if (e.name == name) return e.theory;
    throw PreconditionError("unknown theory " + name);
  }

  void add(const std::string& name, const std::string& th, const Formula& g, const Derivation& d) {
    samples.push_back(SampleProof{name, th, g, d});
    for (auto& e : theories)
      if (e.name == th) e.sample_goals.push_back(g);
  }
};

// In toy-split: P(a) or Q(a), Q(a) -> bot gives P(a).
void toy_samples(Corpus& c) {
  {
    const Theory& t = c.theory("toy-split");
    Formula g = goal(t, "(forall x (atom P x))");
    Formula pa = inst(g, {v("a")});
    Formula disj = inst(t.axioms[0], {v("a")});
    Formula qa = disj.rhs();
    Derivation d = b::or_l(disj, b::ax(pa), b::imp_l(inst(t.axioms[1], {v("a")}), b::ax(qa), b::ax_bot({pa})));
    d = use_axiom(t, 1, {v("a")}, d);
    d = use_axiom(t, 0, {v("a")}, d);
    c.add("toy-split-forall", "toy-split", g, b::all_r(g, "a", d));
  }
  {
    const Theory& t = c.theory("toy-lem");
    Formula g = goal(t, "(forall x (atom R x))");
    Formula ra = inst(g, {v("a")});
    Formula pa = Formula::atom("P", {v("a")});
    Derivation yes = use_axiom(t, 0, {v("a")}, b::imp_l(inst(t.axioms[0], {v("a")}), b::ax(pa), b::ax(ra)));
    Derivation no_inner = b::or_l(inst(t.axioms[1], {v("a")}),
                                  b::imp_l(neg(pa), b::ax(pa), b::ax_bot({ra})), b::ax(ra));
    Derivation no = use_axiom(t, 1, {v("a")}, no_inner);
    Formula split = Formula::disj(pa, neg(pa));
    Derivation d = cut(lem(pa), b::or_l(split, yes, no), split);
    c.add("toy-lem-excluded-middle", "toy-lem", g, b::all_r(g, "a", d));
  }
}

void robinson_samples(Corpus& c) {
  const std::string name = "robinson";
  const Theory& t = c.theory(name);
  Term a = v("a"), zero = c_zero();
  {
    // zero = s(a) -> bot, via symmetry and the successor axiom.
    Formula g = goal(t, "(forall x (imp (atom eq zero (s x)) bot))");
    Formula body = inst(g, {a});
    Formula x = body.lhs();
    Term sa = Term::app("s", {a});
    Formula sym = inst(t.axioms[8], {zero, sa});
    Formula ax0 = inst(t.axioms[0], {a});
    Derivation d = b::imp_l(sym, b::ax(x), b::imp_l(ax0, b::ax(ax0.lhs()), b::ax_bot({})));
    d = use_axiom(t, 0, {a}, d);
    d = use_axiom(t, 8, {zero, sa}, d);
    d = b::imp_r(body, d);
    c.add("robinson-zero-not-succ", name, g, b::all_r(g, "a", d));
  }
  {
    Formula g = goal(t, "(forall x (exists y (atom eq (s x) (s y))))");
    Formula ex = inst(g, {a});
    Term sa = Term::app("s", {a});
    Derivation d = b::ex_r(ex, a, b::ax(inst(t.axioms[7], {sa})));
    d = use_axiom(t, 7, {sa}, d);
    c.add("robinson-succ-exists", name, g, b::all_r(g, "a", d));
  }
  {
    // Disjuncts of the predecessor axiom swapped, by cases on a = zero.
    Formula g = goal(t, "(forall x (or (exists y (atom eq x (s y))) (atom eq x zero)))");
    Formula body = inst(g, {a});
    Formula x = body.rhs();
    Formula ax2 = inst(t.axioms[2], {a});
    Derivation yes = b::or_r(body, b::ax(x), false);
    Derivation no = b::or_l(ax2, b::imp_l(neg(x), b::ax(x), b::ax_bot({body})),
                            b::or_r(body, b::ax(body.lhs()), true));
    no = use_axiom(t, 2, {a}, no);
    Formula split = Formula::disj(x, neg(x));
    Derivation d = cut(lem(x), b::or_l(split, yes, no), split);
    c.add("robinson-predecessor-swap", name, g, b::all_r(g, "a", d));
  }
  {
    // s(s(a)) = s(zero) -> bot by injectivity, routed through a case split.
    Formula g = goal(t, "(forall x (imp (atom eq (s (s x)) (s zero)) bot))");
    Formula body = inst(g, {a});
    Term sa = Term::app("s", {a});
    Formula inj = inst(t.axioms[1], {sa, zero});
    Formula ax0 = inst(t.axioms[0], {a});
    Derivation d = b::imp_l(inj, b::ax(body.lhs()), b::imp_l(ax0, b::ax(ax0.lhs()), b::ax_bot({})));
    d = use_axiom(t, 0, {a}, d);
    d = use_axiom(t, 1, {sa, zero}, d);
    d = b::imp_r(body, lem_detour(d, Formula::atom("eq", {a, zero})));
    c.add("robinson-double-succ", name, g, b::all_r(g, "a", d));
  }
}

void field_samples(Corpus& c) {
  const std::string name = "fields";
  const Theory& t = c.theory(name);
  Term a = v("a"), zero = c_zero(), one = Term::app("one");
  {
    Formula g = goal(t, "(forall x (or (exists y (atom eq (mul x y) one)) (atom eq x zero)))");
    Formula body = inst(g, {a});
    Formula x = body.rhs();
    Formula ax8 = inst(t.axioms[8], {a});
    Derivation yes = b::or_r(body, b::ax(x), false);
    Derivation no = b::or_l(ax8, b::imp_l(neg(x), b::ax(x), b::ax_bot({body})),
                            b::or_r(body, b::ax(body.lhs()), true));
    no = use_axiom(t, 8, {a}, no);
    Formula split = Formula::disj(x, neg(x));
    Derivation d = cut(lem(x), b::or_l(split, yes, no), split);
    c.add("fields-inverse-swap", name, g, b::all_r(g, "a", d));
  }
  {
    Formula g = goal(t, "(imp (atom eq one zero) bot)");
    Formula x = g.lhs();
    Formula sym = inst(t.axioms[1], {one, zero});
    const Formula& ax7 = t.axioms[7];
    Derivation d = b::imp_l(sym, b::ax(x), b::imp_l(ax7, b::ax(ax7.lhs()), b::ax_bot({})));
    d = use_axiom(t, 7, {}, d);
    d = use_axiom(t, 1, {one, zero}, d);
    c.add("fields-one-not-zero", name, g, b::imp_r(g, d));
  }
  {
    Formula g = goal(t, "(exists y (atom eq (mul one y) one))");
    Derivation d = b::ex_r(g, one, b::ax(inst(t.axioms[6], {one})));
    d = use_axiom(t, 6, {one}, d);
    c.add("fields-one-invertible", name, g, lem_detour(d, t.axioms[7].lhs()));
  }
}

void local_ring_samples(Corpus& c) {
  const std::string name = "local-rings";
  const Theory& t = c.theory(name);
  Term a = v("a"), zero = c_zero();
  {
    // Both disjuncts held at once on the right, then merged.
    Formula g = goal(t, "(forall x (or (exists y (atom eq (mul (sub one x) y) one)) (exists y (atom eq (mul x y) one))))");
    Formula body = inst(g, {a});
    Formula ax6 = inst(t.axioms[6], {a});
    Formula l = ax6.lhs(), r = ax6.rhs();
    Derivation d = b::or_l(ax6, b::weaken(b::ax(l), {}, {r}), b::weaken(b::ax(r), {}, {l}));
    d = b::or_r(body, d, true);
    d = b::or_r(body, d, false);
    d = use_axiom(t, 6, {a}, d);
    c.add("local-rings-swap", name, g, b::all_r(g, "a", d));
  }
  {
    Formula g = goal(t, "(or (exists y (atom eq (mul zero y) one)) (exists y (atom eq (mul (sub one zero) y) one)))");
    Derivation d = use_axiom(t, 6, {zero}, b::ax(g));
    c.add("local-rings-at-zero", name, g, lem_detour(d, t.axioms[5].lhs()));
  }
}

void dlo_samples(Corpus& c) {
  const std::string name = "dense-linear-orders";
  const Theory& t = c.theory(name);
  Term a = v("a"), bb = v("b"), cc = v("c"), dd = v("d");
  auto lt = [](const Term& x, const Term& y) { return Formula::atom("lt", {x, y}); };
  {
    Formula g = goal(t, "(forall x (exists y (exists z (and (atom lt y x) (atom lt x z)))))");
    Formula ex = inst(g, {a});
    Formula ex2 = inst(ex, {bb});
    Formula body = inst(ex2, {cc});
    Derivation d = b::and_r(body, b::ax(lt(bb, a)), b::ax(lt(a, cc)));
    d = b::ex_r(ex, bb, b::ex_r(ex2, cc, d));
    d = b::ex_l(inst(t.axioms[4], {a}), "c", d);
    d = b::ex_l(inst(t.axioms[5], {a}), "b", d);
    d = use_axiom(t, 4, {a}, d);
    d = use_axiom(t, 5, {a}, d);
    c.add("dlo-no-endpoints", name, g, b::all_r(g, "a", d));
  }
  {
    Formula g = goal(t, "(forall x (forall y (imp (and (atom lt x y) (atom lt y x)) bot)))");
    Formula g1 = inst(g, {a});
    Formula body = inst(g1, {bb});
    Formula tr = inst(t.axioms[1], {a, bb, a});
    Formula irr = inst(t.axioms[0], {a});
    Derivation d = b::imp_l(tr, b::ax(body.lhs()), b::imp_l(irr, b::ax(lt(a, a)), b::ax_bot({})));
    d = use_axiom(t, 0, {a}, d);
    d = use_axiom(t, 1, {a, bb, a}, d);
    d = b::imp_r(body, d);
    c.add("dlo-asymmetry", name, g, b::all_r(g, "a", b::all_r(g1, "b", d)));
  }
  {
    // Trichotomy with the variables exchanged; three succedent formulas at once.
    Formula g = goal(t, "(forall x (forall y (or (atom lt y x) (or (atom eq y x) (atom lt x y)))))");
    Formula g1 = inst(g, {a});
    Formula body = inst(g1, {bb});
    Formula h = body.rhs();
    Formula lin = inst(t.axioms[2], {a, bb});
    Formula lab = lin.lhs(), eab = lin.rhs().lhs(), lba = lin.rhs().rhs();
    Derivation inner = b::or_l(lin.rhs(), b::weaken(b::ax(eab), {}, {lba}), b::weaken(b::ax(lba), {}, {eab}));
    Derivation d = b::or_l(lin, b::weaken(b::ax(lab), {}, {eab, lba}), b::weaken(inner, {}, {lab}));
    Formula sym = inst(t.axioms[7], {a, bb});
    d = b::imp_l(sym, d, b::ax(sym.rhs()));
    d = b::or_r(h, d, true);
    d = b::or_r(h, d, false);
    d = b::or_r(body, d, true);
    d = b::or_r(body, d, false);
    d = use_axiom(t, 7, {a, bb}, d);
    d = use_axiom(t, 2, {a, bb}, d);
    c.add("dlo-trichotomy-swap", name, g, b::all_r(g, "a", b::all_r(g1, "b", d)));
  }
  {
    Formula g = goal(t, "(forall x (forall y (imp (atom lt x y) (exists z (exists w (and (atom lt x z) (and (atom lt z w) (atom lt w y))))))))");
    Formula g1 = inst(g, {a});
    Formula body = inst(g1, {bb});
    Formula ex = body.rhs();
    Formula ex1 = inst(ex, {cc});
    Formula core_f = inst(ex1, {dd});
    Derivation d = b::and_r(core_f, b::ax(lt(a, cc)), b::and_r(core_f.rhs(), b::ax(lt(cc, dd)), b::ax(lt(dd, bb))));
    d = b::ex_r(ex, cc, b::ex_r(ex1, dd, d));
    Formula cd = Formula::conj(lt(cc, dd), lt(dd, bb));
    d = b::and_l(cd, b::and_l(cd, d, true), false);
    Formula den_cb = inst(t.axioms[3], {cc, bb});
    d = b::ex_l(den_cb.rhs(), "d", d);
    d = b::imp_l(den_cb, b::ax(den_cb.lhs()), d);
    d = use_axiom(t, 3, {cc, bb}, d);
    Formula ac = Formula::conj(lt(a, cc), lt(cc, bb));
    d = b::and_l(ac, b::and_l(ac, d, true), false);
    Formula den_ab = inst(t.axioms[3], {a, bb});
    d = b::ex_l(den_ab.rhs(), "c", d);
    d = b::imp_l(den_ab, b::ax(den_ab.lhs()), d);
    d = use_axiom(t, 3, {a, bb}, d);
    d = b::imp_r(body, d);
    c.add("dlo-double-density", name, g, b::all_r(g, "a", b::all_r(g1, "b", d)));
  }
}

Corpus make_corpus() {
  Corpus c;
  for (const char* text : {kRobinson, kLocalRings, kFields, kDlo, kToySplit, kToyLem}) {
    Theory t = parse_theory(text);
    c.theories.push_back(TheoryCorpusEntry{t.name, t, {}});
  }
  robinson_samples(c);
  field_samples(c);
  local_ring_samples(c);
  dlo_samples(c);
  toy_samples(c);
  return c;
}

const Corpus& corpus() {
  static const Corpus c = make_corpus();
  return c;
}

}  // namespace

const std::vector<TheoryCorpusEntry>& builtin_theories() { return corpus().theories; }

const TheoryCorpusEntry& builtin_theory(const std::string& name) {
  for (const auto& e : builtin_theories())
    if (e.name == name) return e;
  throw PreconditionError("unknown built-in theory '" + name + "'");
}

const std::vector<SampleProof>& builtin_samples() { return corpus().samples; }

namespace {

Formula pred(const std::string& p, const Term& t) { return Formula::atom(p, {t}); }
std::string p_name(std::size_t i) { return "P" + std::to_string(i); }

Theory chain_theory(std::size_t n) {
  Theory t{"chain-" + std::to_string(n), {}};
  auto all = [](Formula body) { return Formula::forall("x", body); };
  Term x = Term::bound(0);
  t.axioms.push_back(all(Formula::disj(pred(p_name(1), x), pred("R", x))));
  for (std::size_t i = 1; i <= n; ++i)
    t.axioms.push_back(all(Formula::imp(pred(p_name(i), x), Formula::disj(pred(p_name(i + 1), x), pred("R", x)))));
  t.axioms.push_back(all(Formula::imp(pred(p_name(n + 1), x), Formula::falsum())));
  return t;
}

// From A or B in the antecedent to A, B in the succedent.
Derivation split_right(const Formula& disj) {
  return b::or_l(disj, b::weaken(b::ax(disj.lhs()), {}, {disj.rhs()}),
                 b::weaken(b::ax(disj.rhs()), {}, {disj.lhs()}));
}

Derivation chain_proof(const Theory& t, std::size_t n, const Formula& g) {
  Term a = Term::free("a");
  // => P_i(a), R(a)
  Derivation d = use_axiom(t, 0, {a}, split_right(inst(t.axioms[0], {a})));
  for (std::size_t i = 1; i <= n; ++i) {
    Formula step = inst(t.axioms[i], {a});
    d = use_axiom(t, i, {a}, b::imp_l(step, d, split_right(step.rhs())));
  }
  Formula last = inst(t.axioms[n + 1], {a});
  d = use_axiom(t, n + 1, {a}, b::imp_l(last, d, b::ax_bot({})));
  return b::all_r(g, "a", d);
}

Derivation ladder_proof(const Theory& t, std::size_t n, const Formula& g) {
  Term a = Term::free("a");
  Formula ra = pred("R", a);
  // P_i(a) => R(a), from i = n + 1 down to 1.
  Formula last = inst(t.axioms[n + 1], {a});
  Derivation d = use_axiom(t, n + 1, {a}, b::imp_l(last, b::ax(last.lhs()), b::ax_bot({ra})));
  for (std::size_t i = n; i >= 1; --i) {
    Formula step = inst(t.axioms[i], {a});
    Derivation cases = b::or_l(step.rhs(), d, b::ax(ra));
    d = use_axiom(t, i, {a}, b::imp_l(step, b::ax(step.lhs()), cases));
  }
  Formula first = inst(t.axioms[0], {a});
  d = use_axiom(t, 0, {a}, b::or_l(first, d, b::ax(ra)));
  return b::all_r(g, "a", d);
}

}  // namespace

std::vector<std::string> family_names() { return {"chain", "ladder"}; }

FamilyInstance gen_family(const std::string& name, std::size_t n) {
  if (name != "chain" && name != "ladder") throw PreconditionError("unknown generator '" + name + "'");
  if (n < 1) throw PreconditionError("gen_family: n must be at least 1");
  Theory t = chain_theory(n);
  Formula g = Formula::forall("x", pred("R", Term::bound(0)));
  Derivation d = name == "chain" ? chain_proof(t, n, g) : ladder_proof(t, n, g);
  return FamilyInstance{t, g, d};
}

std::string sizes_tsv(const PipelineTrace& t) {
  std::string out = "step\tinference_count\tsymbol_count\theight\n";
  for (const auto& s : t.steps)
    out += s.name + "\t" + std::to_string(s.size.inference_count) + "\t" +
           std::to_string(s.size.symbol_count) + "\t" + std::to_string(s.size.height) + "\n";
  return out;
}

std::string bench_tsv(const BenchResult& r) {
  std::string out = "n";
  if (!r.rows.empty())
    for (const auto& [name, _] : r.rows.front().sizes)
      out += "\t" + name + "_inferences\t" + name + "_symbols\t" + name + "_height";
  out += "\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.n);
    for (const auto& [_, s] : row.sizes)
      out += "\t" + std::to_string(s.inference_count) + "\t" + std::to_string(s.symbol_count) + "\t" +
             std::to_string(s.height);
    out += "\n";
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << text;
}

}  // namespace

BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.n_min < 1) throw PreconditionError("bench: n_min must be at least 1");
  if (cfg.n_max < cfg.n_min) throw PreconditionError("bench: n_max must be at least n_min");
  if (!cfg.output_dir.empty()) std::filesystem::create_directories(cfg.output_dir);
  BenchResult r;
  std::vector<PipelineTrace> traces;
  for (std::size_t n = cfg.n_min; n <= cfg.n_max; ++n) {
    FamilyInstance fi = gen_family(cfg.family, n);
    try {
      traces.push_back(barr_transform(fi.proof, fi.theory, fi.goal));
    } catch (const Error&) {
      if (!cfg.output_dir.empty()) {
        auto dir = cfg.output_dir / ("failed_n" + std::to_string(n));
        std::filesystem::create_directories(dir);
        write_file(dir / "theory.sexp", print_theory(fi.theory));
        write_file(dir / "proof.sexp", print_derivation(fi.proof));
      }
      throw;
    }
    BenchRow row{n, {}};
    for (const auto& s : traces.back().steps) row.sizes.emplace_back(s.name, s.size);
    r.rows.push_back(std::move(row));
  }
  r.fit = growth_report(traces);
  if (!cfg.output_dir.empty()) {
    write_file(cfg.output_dir / "bench.tsv", bench_tsv(r));
    write_file(cfg.output_dir / "growth.tsv", format_growth(r.fit));
  }
  return r;
}

}  // namespace geoconv
