#include "geoconv/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <unordered_map>

#include "geoconv/build.hpp"
#include "geoconv/classes.hpp"
#include "geoconv/combinators.hpp"
#include "geoconv/substitution.hpp"
#include "geoconv/translation.hpp"

namespace geoconv {

namespace b = build;

const PipelineStep& PipelineTrace::step(const std::string& name) const {
  for (const auto& s : steps)
    if (s.name == name) return s;
  throw PreconditionError("trace has no step " + name);
}

namespace {

// Replaces every "=> T_i^E" leaf by a proof of it from "=> T_i".
class AxiomDischarger {
 public:
  AxiomDischarger(const Theory& t, Embedder& emb) : theory_(t), emb_(emb) {}

  Derivation run(const Derivation& d) {
    auto it = memo_.find(d.identity());
    if (it != memo_.end()) return it->second;
    Derivation out = d;
    if (d.rule() == Rule::AxTheory) {
      std::size_t i = d.tag().axiom;
      const Formula& ax = theory_.axioms.at(i);
      out = cut(b::ax_theory(theory_, i), emb_.q(ax), ax);
      if (!(out.conclusion() == d.conclusion())) throw InternalError("step2: axiom leaf mismatch");
    } else if (!d.premises().empty()) {
      std::vector<Derivation> prem;
      bool changed = false;
      for (const auto& p : d.premises()) {
        prem.push_back(run(p));
        changed |= prem.back().identity() != p.identity();
      }
      if (changed) out = Derivation(d.conclusion(), d.tag(), std::move(prem));
    }
    memo_.emplace(d.identity(), out);
    return out;
  }

 private:
  const Theory& theory_;
  Embedder& emb_;
  std::unordered_map<const void*, Derivation> memo_;
};

}  // namespace

PipelineTrace barr_transform(const Derivation& d, const Theory& t, const Formula& phi) {
  require_plain_theory(t);
  TheoryReport tr = validate_theory(t, Requirement::InQ);
  if (!tr.ok()) {
    std::string idx;
    for (auto i : tr.failing) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    throw PreconditionError("barr_transform: axioms not in Q: " + idx);
  }
  if (!classify(phi).geometric_implication)
    throw PreconditionError("barr_transform: goal is not a geometric implication: " + print_formula(phi));
  if (!(d.conclusion() == Sequent{{}, {phi}}))
    throw PreconditionError("barr_transform: root must be => goal, got " + print_sequent(d.conclusion()));
  CheckReport cr = check(d, Mode::Classical, t);
  if (!cr.ok()) throw PreconditionError("barr_transform: input fails classical check:\n" + cr.summary());

  PipelineTrace trace{t, phi, {}};
  auto record = [&](const char* name, Mode m, const Derivation& x, const Theory& th) {
    b::verify(x, m, &th, name);
    trace.steps.push_back(PipelineStep{name, m, x, x.size()});
  };
  trace.steps.push_back(PipelineStep{"input", Mode::Classical, d, d.size()});

  Theory te = translate_theory(t).as_theory();
  Derivation s1 = translate_derivation(d, t);
  record("step1", Mode::Minimal, s1, te);

  Embedder emb;
  Derivation s2 = AxiomDischarger(t, emb).run(s1);
  record("step2", Mode::Intuitionistic, s2, t);

  // phi = forall x1 .. xr (psi -> theta), or forall x1 .. xr theta.
  std::set<std::string> avoid = names_in(s2);
  collect_names(phi, avoid);
  std::vector<Formula> prefix{phi};
  std::vector<std::string> vars;
  while (prefix.back().is(Connective::Forall)) {
    Variable a = fresh_free_var(avoid);
    avoid.insert(a.name);
    vars.push_back(a.name);
    prefix.push_back(instantiate(prefix.back().body(), Term::free(a.name)));
  }
  const Formula body = prefix.back();
  const bool has_psi = body.is(Connective::Imp);
  const Formula theta = has_psi ? body.rhs() : body;

  Formula bt = e_translate(body);
  Derivation strip = b::ax(bt);
  for (std::size_t k = vars.size(); k-- > 0;)
    strip = b::all_l(e_translate(prefix[k]), Term::free(vars[k]), strip);
  Derivation s3 = cut(s2, strip, e_translate(phi));
  if (has_psi) s3 = b::mp(s3, emb.q(body.lhs()));
  record("step3", Mode::Intuitionistic, s3, t);

  Derivation s4 = cut(s3, emb.j(theta), e_translate(theta));
  record("step4", Mode::Intuitionistic, s4, t);

  Derivation s5 = subst_placeholder_deriv(s4, theta, t);
  record("step5", Mode::Intuitionistic, s5, t);

  Derivation out = b::mp(s5, b::imp_r(Formula::imp(theta, theta), b::ax(theta)));
  if (has_psi) out = b::imp_r(body, out);
  for (std::size_t k = vars.size(); k-- > 0;) out = b::all_r(prefix[k], vars[k], out);
  if (!(out.conclusion() == d.conclusion()))
    throw InternalError("barr_transform: output root " + print_sequent(out.conclusion()) +
                        " differs from input root");
  record("output", Mode::Intuitionistic, out, t);
  return trace;
}

namespace {

struct Fit {
  double slope, intercept;
};

Fit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw PreconditionError("growth_report: input sizes are all equal");
  double s = sxy / sxx;
  return {s, my - s * mx};
}

}  // namespace

GrowthFit growth_report(const std::vector<PipelineTrace>& traces) {
  if (traces.size() < 3) throw PreconditionError("growth_report: need at least 3 traces");
  std::vector<const PipelineTrace*> sorted;
  for (const auto& t : traces) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
    return a->input().size().symbol_count < b->input().size().symbol_count;
  });

  std::vector<double> lx;
  for (auto* t : sorted) lx.push_back(std::log(static_cast<double>(t->input().size().symbol_count)));

  auto series = [&](const std::string& step) {
    std::vector<double> ly, ratio;
    for (auto* t : sorted) {
      double in = static_cast<double>(t->input().size().symbol_count);
      double v = static_cast<double>(t->step(step).size.symbol_count);
      ly.push_back(std::log(v));
      ratio.push_back(v / in);
    }
    return std::make_pair(ly, ratio);
  };

  GrowthFit g;
  g.points = sorted.size();
  auto [ly, ratio] = series("output");
  Fit f = least_squares(lx, ly);
  g.slope = f.slope;
  g.intercept = f.intercept;
  g.max_ratio = *std::max_element(ratio.begin(), ratio.end());
  for (std::size_t k = 0; k + 1 < ratio.size(); ++k)
    if (sorted[k]->input().size().symbol_count != sorted[k + 1]->input().size().symbol_count)
      g.max_ratio_growth = std::max(g.max_ratio_growth, ratio[k + 1] / ratio[k]);

  for (const auto& s : sorted.front()->steps) {
    if (s.name == "input") continue;
    auto [sy, sr] = series(s.name);
    g.per_step.push_back(StepGrowth{s.name, least_squares(lx, sy).slope,
                                    *std::max_element(sr.begin(), sr.end())});
  }
  return g;
}

std::string format_growth(const GrowthFit& g) {
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf, "points\t%zu\nslope\t%.4f\nintercept\t%.4f\nmax_ratio\t%.4f\nmax_ratio_growth\t%.4f\n",
                g.points, g.slope, g.intercept, g.max_ratio, g.max_ratio_growth);
  out += buf;
  for (const auto& s : g.per_step) {
    std::snprintf(buf, sizeof buf, "%s_slope\t%.4f\n%s_max_ratio\t%.4f\n", s.name.c_str(), s.slope,
                  s.name.c_str(), s.max_ratio);
    out += buf;
  }
  return out;
}

}  // namespace geoconv
