#include <gtest/gtest.h>

#include "geoconv/build.hpp"
#include "geoconv/classes.hpp"
#include "geoconv/harness.hpp"
#include "geoconv/pipeline.hpp"
#include "geoconv/translation.hpp"

using namespace geoconv;

TEST(Corpus, TheoriesAreGeometric) {
  ASSERT_GE(builtin_theories().size(), 4u);
  for (const auto& e : builtin_theories()) {
    SCOPED_TRACE(e.name);
    EXPECT_TRUE(validate_theory(e.theory, Requirement::Geometric).ok());
    EXPECT_FALSE(e.sample_goals.empty());
  }
}

TEST(Corpus, StandardAxiomsPresent) {
  auto has = [](const std::string& th, const char* text) {
    const Theory& t = builtin_theory(th).theory;
    Formula f = parse_theory(std::string("(theory probe ") + text + ")").axioms[0];
    return std::find(t.axioms.begin(), t.axioms.end(), f) != t.axioms.end();
  };
  EXPECT_TRUE(has("fields", "(forall x (or (atom eq x zero) (exists y (atom eq (mul x y) one))))"));
  EXPECT_TRUE(has("local-rings",
                  "(forall x (or (exists y (atom eq (mul x y) one)) (exists y (atom eq (mul (sub one x) y) one))))"));
}

TEST(Corpus, SamplesCheckClassically) {
  ASSERT_GE(builtin_samples().size(), 10u);
  std::size_t genuinely_classical = 0;
  for (const auto& s : builtin_samples()) {
    SCOPED_TRACE(s.name);
    const Theory& t = builtin_theory(s.theory).theory;
    CheckReport r = check(s.proof, Mode::Classical, t);
    EXPECT_TRUE(r.ok()) << r.summary();
    EXPECT_EQ(s.proof.conclusion(), (Sequent{{}, {s.goal}}));
    EXPECT_TRUE(classify(s.goal).geometric_implication);
    if (!check(s.proof, Mode::Intuitionistic, t).ok()) ++genuinely_classical;
  }
  EXPECT_GE(genuinely_classical, 5u);
}

TEST(Pipeline, TransformsEverySample) {
  for (const auto& s : builtin_samples()) {
    SCOPED_TRACE(s.name);
    const Theory& t = builtin_theory(s.theory).theory;
    PipelineTrace tr = barr_transform(s.proof, t, s.goal);
    EXPECT_EQ(tr.output().conclusion(), s.proof.conclusion());
    EXPECT_TRUE(check(tr.output(), Mode::Intuitionistic, t).ok());
    EXPECT_EQ(tr.steps.size(), 7u);
    EXPECT_EQ(tr.step("step1").mode, Mode::Minimal);
  }
}

TEST(Pipeline, StepShapes) {
  const SampleProof* s = nullptr;
  for (const auto& x : builtin_samples())
    if (x.name == "dlo-double-density") s = &x;
  ASSERT_NE(s, nullptr);
  PipelineTrace tr = barr_transform(s->proof, builtin_theory(s->theory).theory, s->goal);
  const Sequent& s3 = tr.step("step3").derivation.conclusion();
  const Sequent& s4 = tr.step("step4").derivation.conclusion();
  const Sequent& s5 = tr.step("step5").derivation.conclusion();
  ASSERT_EQ(s3.ante.size(), 1u);
  Formula theta = s4.succ.at(0).lhs().lhs();
  EXPECT_EQ(s4.succ[0], dneg_e(theta));
  EXPECT_EQ(s3.succ.at(0), e_translate(theta));
  EXPECT_EQ(s5.ante, s3.ante);
  EXPECT_EQ(s5.succ.at(0), Formula::imp(Formula::imp(theta, theta), theta));
}

TEST(Pipeline, RejectsNonQTheory) {
  Theory t = parse_theory("(theory bad (forall x (imp (imp (atom P x) bot) (atom Q x))))");
  Formula g = parse_formula("(forall x (atom Q x))");
  Derivation d = build::ax(g);
  EXPECT_THROW(barr_transform(d, t, g), PreconditionError);
}

TEST(Pipeline, RejectsWrongRoot) {
  const auto& s = builtin_samples().front();
  const Theory& t = builtin_theory(s.theory).theory;
  Formula other = parse_formula("(atom Zz)");
  EXPECT_THROW(barr_transform(s.proof, t, other), PreconditionError);
}

TEST(Family, SizesGrowAndCheck) {
  for (const auto& name : family_names()) {
    SCOPED_TRACE(name);
    std::uint64_t prev = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      FamilyInstance fi = gen_family(name, n);
      EXPECT_TRUE(check(fi.proof, Mode::Classical, fi.theory).ok());
      EXPECT_GT(fi.proof.size().inference_count, prev);
      prev = fi.proof.size().inference_count;
    }
  }
  EXPECT_FALSE(check(gen_family("chain", 3).proof, Mode::Intuitionistic, gen_family("chain", 3).theory).ok());
  EXPECT_TRUE(check(gen_family("ladder", 3).proof, Mode::Intuitionistic, gen_family("ladder", 3).theory).ok());
  EXPECT_THROW(gen_family("nope", 3), PreconditionError);
  EXPECT_THROW(gen_family("chain", 0), PreconditionError);
}

TEST(Family, LinearInputSize) {
  auto sz = [](std::size_t n) { return double(gen_family("chain", n).proof.size().inference_count); };
  double d1 = sz(11) - sz(10), d2 = sz(21) - sz(20);
  EXPECT_EQ(d1, d2);
}

TEST(Growth, Errors) {
  FamilyInstance fi = gen_family("chain", 2);
  PipelineTrace t = barr_transform(fi.proof, fi.theory, fi.goal);
  EXPECT_THROW(growth_report({t}), PreconditionError);
  EXPECT_THROW(growth_report({t, t, t}), PreconditionError);
}

TEST(Growth, SmallRange) {
  BenchConfig cfg{"chain", 2, 10, {}};
  BenchResult r = run_bench(cfg);
  EXPECT_EQ(r.rows.size(), 9u);
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    EXPECT_GT(r.rows[i].sizes[0].second.symbol_count, r.rows[i - 1].sizes[0].second.symbol_count);
  EXPECT_GT(r.fit.slope, 0.0);
  EXPECT_EQ(bench_tsv(r), bench_tsv(run_bench(cfg)));
  EXPECT_THROW(run_bench(BenchConfig{"chain", 5, 4, {}}), PreconditionError);
}
