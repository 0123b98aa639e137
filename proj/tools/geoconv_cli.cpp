// geoconv command-line tool.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geoconv/build.hpp"
#include "geoconv/classes.hpp"
#include "geoconv/combinators.hpp"
#include "geoconv/harness.hpp"
#include "geoconv/pipeline.hpp"
#include "geoconv/translation.hpp"

namespace fs = std::filesystem;
using namespace geoconv;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct IoError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  f << text;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

struct Inputs {
  std::string theory_path;
  std::string sig_path;
  std::optional<Theory> theory;
  Signature sig;

  void load() {
    if (!sig_path.empty()) sig = Signature::parse(read_file(sig_path));
    if (!theory_path.empty()) {
      theory = parse_theory(read_file(theory_path), sig_path.empty() ? nullptr : &sig);
      sig = theory_signature(*theory, &sig);
    }
  }

  Formula formula(const std::string& text) const {
    ParseOptions o;
    o.signature = &sig;
    return parse_formula(text, o);
  }

  Derivation derivation(const std::string& path) const { return parse_derivation(read_file(path), &sig); }
};

Mode mode_of(const std::string& s) {
  try {
    return parse_mode(s);
  } catch (const Error& e) {
    throw IoError(e.what());
  }
}

void print_report(const CheckReport& r, Mode m) {
  if (r.ok())
    std::cout << "ok (" << mode_name(m) << ")\n";
  else
    std::cout << r.summary();
}

void print_sizes(const Derivation& d) {
  auto s = d.size();
  std::cerr << "inferences " << s.inference_count << ", symbols " << s.symbol_count << ", height " << s.height
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks sequent-calculus derivations and turns classical proofs of geometric implications "
               "into intuitionistic ones."};
  app.require_subcommand(1);

  Inputs in;
  std::string mode = "classical";
  std::string out_path;
  auto common = [&](CLI::App* sub, bool with_mode) {
    sub->add_option("--theory", in.theory_path, "Theory file")->check(CLI::ExistingFile);
    sub->add_option("--sig", in.sig_path, "Signature file (const/fun/pred declarations)")->check(CLI::ExistingFile);
    if (with_mode) sub->add_option("--mode", mode, "classical | intuitionistic | minimal");
  };

  std::string proof_path;
  auto* check_cmd = app.add_subcommand("check", "Check a derivation file");
  check_cmd->add_option("proof", proof_path, "Derivation file")->required()->check(CLI::ExistingFile);
  common(check_cmd, true);

  std::string formula_text;
  auto* classify_cmd = app.add_subcommand("classify", "Report class memberships of a formula or theory");
  classify_cmd->add_option("formula", formula_text, "Formula in s-expression syntax");
  common(classify_cmd, false);

  auto* translate_cmd = app.add_subcommand("translate", "E-translate a formula or a derivation");
  translate_cmd->add_option("formula", formula_text, "Formula in s-expression syntax");
  translate_cmd->add_option("--proof", proof_path, "Derivation file (requires --theory)")->check(CLI::ExistingFile);
  translate_cmd->add_option("-o,--output", out_path, "Output file");
  common(translate_cmd, false);

  int lemma_id = 0;
  std::vector<std::string> lemma_args;
  auto* lemma_cmd = app.add_subcommand("lemma", "Print the derivation of a lemma instance");
  lemma_cmd->add_option("id", lemma_id, "Item 1-10")->required();
  lemma_cmd->add_option("args", lemma_args, "Formula arguments");
  lemma_cmd->add_option("-o,--output", out_path, "Output file");
  common(lemma_cmd, false);

  std::string embed_class;
  auto* embed_cmd = app.add_subcommand("embed", "Print embed_Q, embed_R or embed_J for a formula");
  embed_cmd->add_option("class", embed_class, "Q, R or J")->required()->check(CLI::IsMember({"Q", "R", "J"}));
  embed_cmd->add_option("formula", formula_text, "Formula")->required();
  embed_cmd->add_option("-o,--output", out_path, "Output file");
  common(embed_cmd, false);

  std::string trace_dir;
  auto* transform_cmd = app.add_subcommand("transform", "Turn a classical proof into an intuitionistic one");
  transform_cmd->add_option("proof", proof_path, "Classical derivation of => goal")->required()->check(CLI::ExistingFile);
  transform_cmd->add_option("theory", in.theory_path, "Theory file")->required()->check(CLI::ExistingFile);
  transform_cmd->add_option("--sig", in.sig_path, "Signature file")->check(CLI::ExistingFile);
  transform_cmd->add_option("--emit-trace", trace_dir, "Directory for step1..step5, output and sizes.tsv");
  transform_cmd->add_option("-o,--output", out_path, "Output file");

  BenchConfig bench;
  std::string bench_dir = "bench_out";
  auto* bench_cmd = app.add_subcommand("bench", "Run the size benchmark over a generated family");
  bench_cmd->add_option("--family", bench.family, "Generator: chain | ladder");
  bench_cmd->add_option("--n-min", bench.n_min, "Smallest n");
  bench_cmd->add_option("--n-max", bench.n_max, "Largest n");
  bench_cmd->add_option("--out", bench_dir, "Output directory");

  std::string corpus_dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Write the built-in theories and sample proofs to a directory");
  corpus_cmd->add_option("dir", corpus_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    in.load();

    if (*check_cmd) {
      Mode m = mode_of(mode);
      Derivation d = in.derivation(proof_path);
      CheckReport r = in.theory ? check(d, m, *in.theory) : check(d, m);
      print_report(r, m);
      return r.ok() ? kOk : kViolation;
    }

    if (*classify_cmd) {
      if (formula_text.empty()) {
        if (!in.theory) throw IoError("classify: give a formula or --theory");
        int rc = kOk;
        for (std::size_t i = 0; i < in.theory->axioms.size(); ++i) {
          ClassMembership c = classify(in.theory->axioms[i]);
          std::cout << i << "\tgeometric=" << c.geometric_implication << "\tQ=" << c.inQ << "\t"
                    << print_formula(in.theory->axioms[i]) << "\n";
          if (!c.inQ) rc = kViolation;
        }
        return rc;
      }
      ClassMembership c = classify(in.formula(formula_text));
      std::cout << "positive\t" << c.positive << "\ngeometric_implication\t" << c.geometric_implication
                << "\nQ\t" << c.inQ << "\nR\t" << c.inR << "\nJ\t" << c.inJ << "\n";
      return kOk;
    }

    if (*translate_cmd) {
      if (!proof_path.empty()) {
        if (!in.theory) throw IoError("translate --proof needs --theory");
        Derivation t = translate_derivation(in.derivation(proof_path), *in.theory);
        print_sizes(t);
        emit(out_path, print_derivation(t));
        return kOk;
      }
      if (formula_text.empty()) throw IoError("translate: give a formula or --proof");
      emit(out_path, print_formula(e_translate(in.formula(formula_text))) + "\n");
      return kOk;
    }

    if (*lemma_cmd) {
      std::vector<Formula> args;
      for (const auto& a : lemma_args) args.push_back(in.formula(a));
      Derivation d = lemma(lemma_id, args);
      build::verify(d, lemma_mode(lemma_id), nullptr, "lemma");
      std::cerr << "statement: " << print_formula(lemma_statement(lemma_id, args)) << "\n";
      emit(out_path, print_derivation(d));
      return kOk;
    }

    if (*embed_cmd) {
      Formula f = in.formula(formula_text);
      Derivation d = embed_class == "Q" ? embed_Q(f) : embed_class == "R" ? embed_R(f) : embed_J(f);
      build::verify(d, Mode::Intuitionistic, nullptr, "embed");
      emit(out_path, print_derivation(d));
      return kOk;
    }

    if (*transform_cmd) {
      Derivation d = in.derivation(proof_path);
      if (d.conclusion().succ.size() != 1 || !d.conclusion().ante.empty())
        throw PreconditionError("transform: root must be => goal");
      PipelineTrace tr = barr_transform(d, *in.theory, d.conclusion().succ[0]);
      if (!trace_dir.empty()) {
        fs::create_directories(trace_dir);
        for (const auto& s : tr.steps)
          if (s.name != "input") write_file(fs::path(trace_dir) / (s.name + ".sexp"), print_derivation(s.derivation));
        write_file(fs::path(trace_dir) / "sizes.tsv", sizes_tsv(tr));
      }
      std::cerr << sizes_tsv(tr);
      emit(out_path, print_derivation(tr.output()));
      return kOk;
    }

    if (*bench_cmd) {
      bench.output_dir = bench_dir;
      auto t0 = std::chrono::steady_clock::now();
      BenchResult r = run_bench(bench);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cout << format_growth(r.fit);
      std::cerr << "wall time " << secs << " s\n";
      return kOk;
    }

    if (*corpus_cmd) {
      fs::path dir(corpus_dir);
      fs::create_directories(dir / "theories");
      fs::create_directories(dir / "proofs");
      for (const auto& e : builtin_theories()) write_file(dir / "theories" / (e.name + ".sexp"), print_theory(e.theory));
      std::string index = "name\ttheory\tgoal\n";
      for (const auto& s : builtin_samples()) {
        write_file(dir / "proofs" / (s.name + ".sexp"), print_derivation(s.proof));
        index += s.name + "\t" + s.theory + "\t" + print_formula(s.goal) + "\n";
      }
      write_file(dir / "index.tsv", index);
      return kOk;
    }
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
