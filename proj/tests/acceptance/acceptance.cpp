// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <set>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "../support/generators.hpp"
#include "geoconv/build.hpp"
#include "geoconv/classes.hpp"
#include "geoconv/combinators.hpp"
#include "geoconv/harness.hpp"
#include "geoconv/pipeline.hpp"
#include "geoconv/substitution.hpp"
#include "geoconv/translation.hpp"

using namespace geoconv;
using testgen::Rng;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] criterion %d: %s -- %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// ---------------------------------------------------------------------------

void kernel_soundness() {
  auto t0 = Clock::now();
  Rng rng(1);
  std::size_t valid_fail = 0, total_inferences = 0;
  const Mode modes[] = {Mode::Classical, Mode::Intuitionistic, Mode::Minimal};
  for (Mode m : modes) {
    for (int i = 0; i < 1000; ++i) {
      testgen::DerivationOptions o;
      o.steps = 4 + i % 20;
      Derivation d = testgen::random_derivation(rng, m, o);
      total_inferences += d.size().inference_count;
      if (!check(d, m).ok()) ++valid_fail;
    }
  }
  std::size_t mutants = 0, undetected = 0;
  std::map<std::string, int> kinds;
  while (mutants < 1000) {
    Mode m = modes[mutants % 3];
    testgen::DerivationOptions o;
    o.steps = 6 + mutants % 16;
    Derivation d = testgen::random_derivation(rng, m, o);
    auto mu = testgen::mutate(rng, d);
    if (!mu) continue;
    ++mutants;
    ++kinds[mu->kind];
    if (check(mu->derivation, m).ok()) ++undetected;
  }
  double secs = seconds_since(t0);
  std::string mix;
  for (const auto& [k, n] : kinds) mix += (mix.empty() ? "" : ", ") + k + "=" + std::to_string(n);
  report(1, "kernel soundness", valid_fail == 0 && undetected == 0 && secs < 60,
         fmt("3000 random valid derivations (mean %.1f inferences), %zu rejected; 1000 mutants (%s), %zu accepted; %.1f s",
             double(total_inferences) / 3000.0, valid_fail, mix.c_str(), undetected, secs));
}

// ---------------------------------------------------------------------------

Formula quantified_template(Rng& rng, bool universal) {
  testgen::FormulaOptions o{2, false, true, true};
  Formula f = testgen::random_formula(rng, o);
  if (!occurs_free(f, "a")) f = Formula::conj(Formula::atom("P", {Term::free("a")}), f);
  return universal ? forall_over(f, "a") : exists_over(f, "a");
}

void lemma_suite() {
  Rng rng(2);
  testgen::FormulaOptions o{2, false, true, true};
  std::size_t fails = 0, item8_not_minimal = 0;
  std::string first;
  for (int id = 1; id <= kLemmaCount; ++id) {
    for (int k = 0; k < 50; ++k) {
      std::vector<Formula> args;
      if (id == 9 || id == 10)
        args.push_back(quantified_template(rng, id == 9));
      else
        for (std::size_t j = 0; j < lemma_arity(id); ++j) args.push_back(testgen::random_formula(rng, o));
      try {
        Derivation d = lemma(id, args);
        bool ok = check(d, lemma_mode(id)).ok() && d.conclusion() == Sequent{{}, {lemma_statement(id, args)}};
        if (!ok) ++fails;
        if (id == 8 && !check(d, Mode::Minimal).ok()) ++item8_not_minimal;
      } catch (const Error& e) {
        if (fails++ == 0) {
          std::string a;
          for (const auto& f : args) a += " " + print_formula(f);
          first = fmt("; first: item %d on%s: %s", id, a.c_str(), e.what());
        }
      }
    }
  }
  report(2, "lemma suite", fails == 0 && item8_not_minimal >= 1,
         fmt("500 instances, %zu failures; item 8 fails minimal on %zu/50 instances%s", fails, item8_not_minimal,
             first.c_str()));
}

// ---------------------------------------------------------------------------

// All formulas up to nesting depth `depth` over P(t), Q(t), R(t) and bot,
// t ranging over the free variable a and the bound variables in scope.
void enumerate(int depth, int scope, const std::function<void(const Formula&)>& out) {
  auto leaves = [&](const std::function<void(const Formula&)>& f) {
    f(Formula::falsum());
    for (const char* p : {"P", "Q", "R"}) {
      f(Formula::atom(p, {Term::free("a")}));
      for (int i = 0; i < scope; ++i) f(Formula::atom(p, {Term::bound(static_cast<std::uint32_t>(i))}));
    }
  };
  if (depth == 0) {
    leaves(out);
    return;
  }
  std::vector<Formula> sub;
  enumerate(depth - 1, scope, [&](const Formula& f) { sub.push_back(f); });
  for (const auto& f : sub) out(f);
  for (const auto& l : sub)
    for (const auto& r : sub) {
      out(Formula::conj(l, r));
      out(Formula::disj(l, r));
      out(Formula::imp(l, r));
    }
  std::string h = "x" + std::to_string(scope);
  enumerate(depth - 1, scope + 1, [&](const Formula& body) {
    out(Formula::forall(h, body));
    out(Formula::exists(h, body));
  });
}

void embedding_suite() {
  auto t0 = Clock::now();
  std::size_t members[3] = {0, 0, 0}, fails = 0, total = 0;
  std::string first;
  auto test = [&](const Formula& f) {
    ++total;
    ClassMembership c = classify(f);
    auto run = [&](bool member, std::size_t& n, char cls, Derivation (*embed)(const Formula&)) {
      if (!member) return;
      ++n;
      std::string why;
      try {
        CheckReport r = check(embed(f), Mode::Intuitionistic);
        if (!r.ok()) why = r.summary();
      } catch (const Error& e) {
        why = e.what();
      }
      if (!why.empty() && fails++ == 0) first = fmt("; first: %c %s: %s", cls, print_formula(f).c_str(), why.c_str());
    };
    run(c.inQ, members[0], 'Q', embed_Q);
    run(c.inR, members[1], 'R', embed_R);
    run(c.inJ, members[2], 'J', embed_J);
  };
  enumerate(2, 0, test);
  std::size_t exhaustive = total;
  Rng rng(3);
  std::size_t sampled = 0, grammar_mismatch = 0;
  for (int depth = 3; depth <= 5; ++depth)
    for (char cls : {'Q', 'R', 'J'})
      for (int k = 0; k < 2000; ++k) {
        Formula f = testgen::random_member(rng, cls, depth);
        ClassMembership c = classify(f);
        if (!(cls == 'Q' ? c.inQ : cls == 'R' ? c.inR : c.inJ)) ++grammar_mismatch;
        test(f);
        ++sampled;
      }
  report(3, "embedding suite", fails == 0 && grammar_mismatch == 0,
         fmt("exhaustive to depth 2 (%zu formulas) plus %zu sampled class members at depth 3-5; "
             "%zu Q, %zu R, %zu J embeddings checked, %zu failures; %.1f s%s",
             exhaustive, sampled, members[0], members[1], members[2], fails, seconds_since(t0), first.c_str()));
}

// ---------------------------------------------------------------------------
// Brute-force recognizer: class grammars as production tables, matched by
// trying every production.

enum NT { Pos, Geo, ClsQ, ClsR, ClsJ };

struct Production {
  Connective kind;
  std::vector<NT> children;
};

const std::map<NT, std::vector<Production>>& grammar() {
  using C = Connective;
  static const std::map<NT, std::vector<Production>> g = {
      {Pos, {{C::Atom, {}}, {C::Falsum, {}}, {C::And, {Pos, Pos}}, {C::Or, {Pos, Pos}}, {C::Exists, {Pos}}}},
      {Geo, {{C::Atom, {}}, {C::Falsum, {}}, {C::And, {Pos, Pos}}, {C::Or, {Pos, Pos}}, {C::Exists, {Pos}},
             {C::Imp, {Pos, Pos}}, {C::Forall, {Geo}}}},
      {ClsQ, {{C::Atom, {}}, {C::Falsum, {}}, {C::And, {ClsQ, ClsQ}}, {C::Or, {ClsQ, ClsQ}}, {C::Exists, {ClsQ}},
              {C::Forall, {ClsQ}}, {C::Imp, {ClsJ, ClsQ}}}},
      {ClsR, {{C::Falsum, {}}, {C::And, {ClsR, ClsR}}, {C::Or, {ClsR, ClsR}}, {C::Forall, {ClsR}},
              {C::Imp, {ClsJ, ClsR}}}},
      {ClsJ, {{C::Atom, {}}, {C::Falsum, {}}, {C::And, {ClsJ, ClsJ}}, {C::Or, {ClsJ, ClsJ}}, {C::Exists, {ClsJ}},
              {C::Imp, {ClsR, ClsJ}}}},
  };
  return g;
}

bool derives(NT nt, const Formula& f) {
  for (const auto& p : grammar().at(nt)) {
    if (p.kind != f.kind()) continue;
    bool ok = true;
    if (f.is_binary())
      ok = derives(p.children[0], f.lhs()) && derives(p.children[1], f.rhs());
    else if (f.is_quantifier())
      ok = derives(p.children[0], f.body());
    if (ok) return true;
  }
  return false;
}

ClassMembership brute(const Formula& f) {
  return ClassMembership{derives(Pos, f), derives(Geo, f), derives(ClsQ, f), derives(ClsR, f), derives(ClsJ, f)};
}

// Every formula with exactly n connectives and quantifiers over {A, bot}.
void shapes(int n, int level, const std::function<void(const Formula&)>& out) {
  static const Formula a = Formula::atom("A");
  if (n == 0) {
    out(a);
    out(Formula::falsum());
    return;
  }
  std::string h = "x" + std::to_string(level);
  shapes(n - 1, level + 1, [&](const Formula& b) {
    out(Formula::forall(h, b));
    out(Formula::exists(h, b));
  });
  for (int i = 0; i < n; ++i)
    shapes(i, level, [&](const Formula& l) {
      shapes(n - 1 - i, level, [&](const Formula& r) {
        out(Formula::conj(l, r));
        out(Formula::disj(l, r));
        out(Formula::imp(l, r));
      });
    });
}

void classifier_crosscheck() {
  auto t0 = Clock::now();
  const int max_ops = 6;
  std::vector<std::size_t> count(max_ops + 1), bad(max_ops + 1);
  std::vector<std::thread> workers;
  for (int n = 0; n <= max_ops; ++n)
    workers.emplace_back([&, n] {
      shapes(n, 0, [&](const Formula& f) {
        ++count[n];
        if (!(classify(f) == brute(f))) ++bad[n];
      });
    });
  for (auto& w : workers) w.join();
  std::size_t exhaustive = 0, disagreements = 0;
  for (int n = 0; n <= max_ops; ++n) exhaustive += count[n], disagreements += bad[n];

  Rng rng(4);
  std::size_t deep = 0;
  for (int k = 0; k < 10000; ++k) {
    testgen::FormulaOptions o{7 + k % 4, false, true, true};
    Formula f = testgen::random_formula(rng, o);
    if (!(classify(f) == brute(f))) ++disagreements;
    ++deep;
  }
  report(4, "classifier cross-check", disagreements == 0,
         fmt("all %zu shapes with <= %d operators over {atom, bot} plus %zu random formulas of depth 7-10; "
             "%zu disagreements; %.1f s",
             exhaustive, max_ops, deep, disagreements, seconds_since(t0)));
}

// ---------------------------------------------------------------------------

void conservativity() {
  std::size_t cases = 0, fails = 0;
  std::set<std::string> theories;
  std::string failed;
  for (const auto& s : builtin_samples()) {
    ++cases;
    theories.insert(s.theory);
    const Theory& t = builtin_theory(s.theory).theory;
    try {
      PipelineTrace tr = barr_transform(s.proof, t, s.goal);
      bool ok = tr.output().conclusion() == s.proof.conclusion() && check(tr.output(), Mode::Intuitionistic, t).ok();
      if (!ok) ++fails, failed += " " + s.name;
    } catch (const Error& e) {
      ++fails;
      failed += " " + s.name + "(" + e.what() + ")";
    }
  }
  report(5, "end-to-end conservativity", fails == 0 && cases >= 10 && theories.size() >= 4,
         fmt("%zu corpus proofs over %zu theories, %zu failures%s", cases, theories.size(), fails, failed.c_str()));
}

// ---------------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

BenchConfig no_speedup(const std::filesystem::path& scratch) {
  auto t0 = Clock::now();
  BenchConfig cfg{"chain", 2, 50, scratch / "bench_a"};
  BenchResult r = run_bench(cfg);
  double secs = seconds_since(t0);
  const GrowthFit& g = r.fit;
  report(6, "no speedup", g.slope <= 4.0 && g.max_ratio_growth <= 1.5 && secs < 300,
         fmt("chain n=2..50: log-log slope %.3f (limit 4.0), max successive ratio growth %.3f (limit 1.5), "
             "output/input up to %.1f, wall %.1f s",
             g.slope, g.max_ratio_growth, g.max_ratio, secs));
  return cfg;
}

void determinism(const BenchConfig& cfg, const std::filesystem::path& scratch) {
  BenchConfig again = cfg;
  again.output_dir = scratch / "bench_b";
  run_bench(again);
  bool same = true;
  for (const char* f : {"bench.tsv", "growth.tsv"}) same = same && slurp(cfg.output_dir / f) == slurp(again.output_dir / f);
  bool proofs_same = true;
  for (const auto& s : builtin_samples()) {
    const Theory& t = builtin_theory(s.theory).theory;
    proofs_same = proofs_same && print_derivation(barr_transform(s.proof, t, s.goal).output()) ==
                                     print_derivation(barr_transform(s.proof, t, s.goal).output());
  }
  report(8, "determinism", same && proofs_same,
         std::string("bench.tsv and growth.tsv ") + (same ? "byte-identical" : "differ") + " across reruns; " +
             "transformed corpus proofs " + (proofs_same ? "byte-identical" : "differ"));
}

// ---------------------------------------------------------------------------

void substitution_suite() {
  Rng rng(7);
  std::size_t cases = 0, clash_cases = 0, fails = 0;
  const Mode modes[] = {Mode::Classical, Mode::Intuitionistic, Mode::Minimal};
  testgen::FormulaOptions psi_opt{2, false, true, true};
  for (int i = 0; i < 90; ++i) {
    Mode m = modes[i % 3];
    testgen::DerivationOptions o;
    o.steps = 6 + i % 14;
    o.leaves.allow_e = true;
    Derivation d = testgen::random_derivation(rng, m, o);
    Formula psi = testgen::random_formula(rng, psi_opt);
    Derivation out = subst_placeholder_deriv(d, psi);
    ++cases;
    if (out.size().inference_count != d.size().inference_count || !check(out, m).ok()) ++fails;
  }
  for (int i = 0; i < 20; ++i) {
    Derivation d = testgen::clash_derivation(rng, i);
    Formula psi = Formula::conj(Formula::atom("Q", {Term::free("a")}), testgen::random_formula(rng, psi_opt));
    Derivation out = subst_placeholder_deriv(d, psi);
    ++cases;
    ++clash_cases;
    bool eigen_renamed = true;
    std::function<void(const Derivation&)> walk = [&](const Derivation& n) {
      if ((n.rule() == Rule::AllR || n.rule() == Rule::ExL) && n.tag().eigen == "a") eigen_renamed = false;
      for (const auto& p : n.premises()) walk(p);
    };
    walk(out);
    if (!eigen_renamed || out.size().inference_count != d.size().inference_count ||
        !check(out, Mode::Minimal).ok())
      ++fails;
  }
  report(7, "substitution correctness", fails == 0 && cases >= 100 && clash_cases >= 10,
         fmt("%zu cases (%zu eigenvariable clashes), %zu failures", cases, clash_cases, fails));
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path scratch =
      argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::temp_directory_path() / "geoconv_acceptance";
  std::filesystem::create_directories(scratch);
  kernel_soundness();
  lemma_suite();
  embedding_suite();
  classifier_crosscheck();
  conservativity();
  BenchConfig bench = no_speedup(scratch);
  substitution_suite();
  determinism(bench, scratch);
  std::printf("%d criteria failed\n", failures);
  return failures;
}
