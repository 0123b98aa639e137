#include "geoconv/calculus.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>
#include <unordered_set>

#include "geoconv/sexpr.hpp"

namespace geoconv {

namespace {

constexpr std::array<std::string_view, kRuleCount> kRuleNames = {
    "AxId", "AxBot", "AxTheory", "WeakL", "WeakR", "ContrL", "ContrR",
    "ExchL", "ExchR", "Cut", "AndL", "AndR", "OrL", "OrR",
    "ImpL", "ImpR", "AllL", "AllR", "ExL", "ExR"};

}  // namespace

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Classical:
      return "classical";
    case Mode::Intuitionistic:
      return "intuitionistic";
    case Mode::Minimal:
      return "minimal";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  if (s == "classical") return Mode::Classical;
  if (s == "intuitionistic") return Mode::Intuitionistic;
  if (s == "minimal") return Mode::Minimal;
  throw PreconditionError("unknown mode '" + std::string(s) + "'");
}

std::string_view rule_name(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

std::optional<Rule> rule_from_name(std::string_view s) {
  for (int i = 0; i < kRuleCount; ++i)
    if (kRuleNames[i] == s) return static_cast<Rule>(i);
  return std::nullopt;
}

std::size_t Sequent::symbol_count() const {
  std::size_t n = 0;
  for (const auto& f : ante) n += f.symbol_count();
  for (const auto& f : succ) n += f.symbol_count();
  return n;
}

std::string print_sequent(const Sequent& s) {
  std::string out = "(seq (gamma";
  for (const auto& f : s.ante) out += " " + print_formula(f);
  out += ") (delta";
  for (const auto& f : s.succ) out += " " + print_formula(f);
  out += "))";
  return out;
}

void require_plain_theory(const Theory& t) {
  for (std::size_t i = 0; i < t.axioms.size(); ++i) {
    const auto& a = t.axioms[i];
    if (a.has_placeholder())
      throw PreconditionError("axiom " + std::to_string(i) + " of theory '" + t.name +
                              "' contains E");
    if (!is_sentence(a))
      throw PreconditionError("axiom " + std::to_string(i) + " of theory '" + t.name +
                              "' is not a sentence");
  }
}

Derivation::Derivation(Sequent conclusion, RuleTag tag, std::vector<Derivation> premises) {
  auto n = std::make_shared<Node>();
  n->size.inference_count = 1;
  n->size.symbol_count = conclusion.symbol_count();
  std::uint64_t h = 0;
  for (const auto& p : premises) {
    n->size.inference_count += p.size().inference_count;
    n->size.symbol_count += p.size().symbol_count;
    h = std::max(h, p.size().height);
  }
  n->size.height = h + 1;
  n->conclusion = std::move(conclusion);
  n->tag = std::move(tag);
  n->premises = std::move(premises);
  node_ = std::move(n);
}

std::size_t dag_node_count(const Derivation& d) {
  std::unordered_set<const void*> seen;
  std::vector<const Derivation*> stack{&d};
  while (!stack.empty()) {
    const Derivation* cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur->identity()).second) continue;
    for (const auto& p : cur->premises()) stack.push_back(&p);
  }
  return seen.size();
}

std::string CheckReport::summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations)
    out += v.path + " [" + std::string(rule_name(v.rule)) + "]: " + v.message + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Checker

namespace {

using Seq = std::vector<Formula>;

bool same_range(const Seq& a, std::size_t ai, const Seq& b, std::size_t bi, std::size_t len) {
  if (ai + len > a.size() || bi + len > b.size()) return false;
  for (std::size_t k = 0; k < len; ++k)
    if (!(a[ai + k] == b[bi + k])) return false;
  return true;
}

bool contains(const Seq& s, const Formula& f) {
  return std::any_of(s.begin(), s.end(), [&](const Formula& g) { return g == f; });
}

bool is_permutation_of(const Seq& a, const Seq& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& f : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && b[j] == f) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool free_in_sequent(const Sequent& s, std::string_view a) {
  for (const auto& f : s.ante)
    if (occurs_free(f, a)) return true;
  for (const auto& f : s.succ)
    if (occurs_free(f, a)) return true;
  return false;
}

class Checker {
 public:
  Checker(Mode mode, const Theory& theory, std::vector<Violation>& out)
      : mode_(mode), theory_(theory), out_(out) {}

  void visit(const Derivation& d, std::string& path) {
    if (!visited_.insert(d.identity()).second) return;
    check_formulas(d, path);
    const auto& s = d.conclusion();
    if (mode_ != Mode::Classical && s.succ.size() > 1)
      report(d, path, "succedent has " + std::to_string(s.succ.size()) +
                          " formulas; " + std::string(mode_name(mode_)) +
                          " mode allows at most one");
    if (auto msg = local(d)) report(d, path, *msg);
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
      std::size_t len = path.size();
      path += "." + std::to_string(i);
      visit(d.premises()[i], path);
      path.resize(len);
    }
  }

 private:
  void report(const Derivation& d, const std::string& path, std::string msg) {
    out_.push_back(Violation{path, d.rule(), std::move(msg)});
  }

  void check_formulas(const Derivation& d, const std::string& path) {
    auto one = [&](const Formula& f) {
      if (!wf_seen_.insert(f.identity()).second) return;
      if (auto e = well_formed(f)) report(d, path, "ill-formed formula: " + *e);
    };
    for (const auto& f : d.conclusion().ante) one(f);
    for (const auto& f : d.conclusion().succ) one(f);
  }

  std::optional<std::string> local(const Derivation& d) const {
    const auto& tag = d.tag();
    const auto& A = d.conclusion().ante;
    const auto& S = d.conclusion().succ;
    const auto& P = d.premises();
    auto arity = [&](std::size_t n) -> std::optional<std::string> {
      if (P.size() != n)
        return "expected " + std::to_string(n) + " premise(s), found " + std::to_string(P.size());
      return std::nullopt;
    };
    auto bad = [](const char* what) { return std::optional<std::string>(what); };

    switch (tag.rule) {
      case Rule::AxId: {
        if (auto e = arity(0)) return e;
        for (const auto& f : A)
          if (contains(S, f)) return std::nullopt;
        return bad("no formula occurs on both sides");
      }
      case Rule::AxBot: {
        if (auto e = arity(0)) return e;
        if (mode_ == Mode::Minimal) return bad("AxBot forbidden in minimal");
        if (!contains(A, Formula::falsum())) return bad("no bot in antecedent");
        return std::nullopt;
      }
      case Rule::AxTheory: {
        if (auto e = arity(0)) return e;
        if (tag.axiom >= theory_.axioms.size())
          return "theory has no axiom " + std::to_string(tag.axiom);
        if (S.size() != 1 || !(S[0] == theory_.axioms[tag.axiom]))
          return bad("succedent is not the referenced axiom");
        return std::nullopt;
      }
      case Rule::WeakL: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        if (A.size() != p.ante.size() + 1 || !same_range(A, 1, p.ante, 0, p.ante.size()) ||
            S != p.succ)
          return bad("conclusion is not the premise with one formula prepended on the left");
        return std::nullopt;
      }
      case Rule::WeakR: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        if (S.size() != p.succ.size() + 1 || !same_range(S, 0, p.succ, 0, p.succ.size()) ||
            A != p.ante)
          return bad("conclusion is not the premise with one formula appended on the right");
        return std::nullopt;
      }
      case Rule::ContrL: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        if (p.ante.size() < 2 || !(p.ante[0] == p.ante[1]) || A.size() + 1 != p.ante.size() ||
            !same_range(A, 0, p.ante, 1, A.size()) || S != p.succ)
          return bad("premise antecedent does not start with a duplicated formula");
        return std::nullopt;
      }
      case Rule::ContrR: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        std::size_t n = p.succ.size();
        if (n < 2 || !(p.succ[n - 1] == p.succ[n - 2]) || S.size() + 1 != n ||
            !same_range(S, 0, p.succ, 0, S.size()) || A != p.ante)
          return bad("premise succedent does not end with a duplicated formula");
        return std::nullopt;
      }
      case Rule::ExchL: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        if (!is_permutation_of(A, p.ante) || S != p.succ)
          return bad("antecedent is not a permutation of the premise antecedent");
        return std::nullopt;
      }
      case Rule::ExchR: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        if (!is_permutation_of(S, p.succ) || A != p.ante)
          return bad("succedent is not a permutation of the premise succedent");
        return std::nullopt;
      }
      case Rule::Cut: {
        if (auto e = arity(2)) return e;
        const auto& p1 = P[0].conclusion();
        const auto& p2 = P[1].conclusion();
        if (p1.succ.empty() || p2.ante.empty() || !(p1.succ.back() == p2.ante[0]))
          return bad("cut formulas differ");
        std::size_t la = p1.ante.size(), ra = p2.ante.size() - 1;
        std::size_t ls = p1.succ.size() - 1, rs = p2.succ.size();
        if (A.size() != la + ra || !same_range(A, 0, p1.ante, 0, la) ||
            !same_range(A, la, p2.ante, 1, ra) || S.size() != ls + rs ||
            !same_range(S, 0, p1.succ, 0, ls) || !same_range(S, ls, p2.succ, 0, rs))
          return bad("conclusion is not the concatenation of the premise contexts");
        return std::nullopt;
      }
      case Rule::AndL: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        if (A.empty() || !A[0].is(Connective::And)) return bad("first antecedent formula is not a conjunction");
        if (p.ante.size() != A.size() ||
            !(p.ante[0] == A[0].lhs() || p.ante[0] == A[0].rhs()) ||
            !same_range(A, 1, p.ante, 1, A.size() - 1) || S != p.succ)
          return bad("premise does not match the conjunction");
        return std::nullopt;
      }
      case Rule::AndR: {
        if (auto e = arity(2)) return e;
        if (S.empty() || !S.back().is(Connective::And)) return bad("last succedent formula is not a conjunction");
        std::size_t k = S.size() - 1;
        for (std::size_t i = 0; i < 2; ++i) {
          const auto& p = P[i].conclusion();
          const Formula& part = i == 0 ? S.back().lhs() : S.back().rhs();
          if (p.ante != A || p.succ.size() != S.size() || !same_range(S, 0, p.succ, 0, k) ||
              !(p.succ.back() == part))
            return "premise " + std::to_string(i) + " does not match the conjunction";
        }
        return std::nullopt;
      }
      case Rule::OrL: {
        if (auto e = arity(2)) return e;
        if (A.empty() || !A[0].is(Connective::Or)) return bad("first antecedent formula is not a disjunction");
        for (std::size_t i = 0; i < 2; ++i) {
          const auto& p = P[i].conclusion();
          const Formula& part = i == 0 ? A[0].lhs() : A[0].rhs();
          if (p.succ != S || p.ante.size() != A.size() || !(p.ante[0] == part) ||
              !same_range(A, 1, p.ante, 1, A.size() - 1))
            return "premise " + std::to_string(i) + " does not match the disjunction";
        }
        return std::nullopt;
      }
      case Rule::OrR: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        if (S.empty() || !S.back().is(Connective::Or)) return bad("last succedent formula is not a disjunction");
        if (p.ante != A || p.succ.size() != S.size() ||
            !same_range(S, 0, p.succ, 0, S.size() - 1) ||
            !(p.succ.back() == S.back().lhs() || p.succ.back() == S.back().rhs()))
          return bad("premise does not match the disjunction");
        return std::nullopt;
      }
      case Rule::ImpL: {
        if (auto e = arity(2)) return e;
        if (A.empty() || !A[0].is(Connective::Imp)) return bad("first antecedent formula is not an implication");
        const auto& p1 = P[0].conclusion();
        const auto& p2 = P[1].conclusion();
        if (p1.succ.empty() || !(p1.succ.back() == A[0].lhs()))
          return bad("left premise does not prove the antecedent of the implication");
        if (p2.ante.empty() || !(p2.ante[0] == A[0].rhs()))
          return bad("right premise does not assume the consequent of the implication");
        std::size_t la = p1.ante.size(), ra = p2.ante.size() - 1;
        std::size_t ls = p1.succ.size() - 1, rs = p2.succ.size();
        if (A.size() != 1 + la + ra || !same_range(A, 1, p1.ante, 0, la) ||
            !same_range(A, 1 + la, p2.ante, 1, ra) || S.size() != ls + rs ||
            !same_range(S, 0, p1.succ, 0, ls) || !same_range(S, ls, p2.succ, 0, rs))
          return bad("conclusion is not the concatenation of the premise contexts");
        return std::nullopt;
      }
      case Rule::ImpR: {
        if (auto e = arity(1)) return e;
        const auto& p = P[0].conclusion();
        if (S.empty() || !S.back().is(Connective::Imp)) return bad("last succedent formula is not an implication");
        if (p.ante.size() != A.size() + 1 || !(p.ante[0] == S.back().lhs()) ||
            !same_range(p.ante, 1, A, 0, A.size()) || p.succ.size() != S.size() ||
            !same_range(S, 0, p.succ, 0, S.size() - 1) || !(p.succ.back() == S.back().rhs()))
          return bad("premise does not match the implication");
        return std::nullopt;
      }
      case Rule::AllL:
      case Rule::ExL: {
        if (auto e = arity(1)) return e;
        bool all = tag.rule == Rule::AllL;
        if (A.empty() || !A[0].is(all ? Connective::Forall : Connective::Exists))
          return all ? bad("first antecedent formula is not universal")
                     : bad("first antecedent formula is not existential");
        Term t = Term::free(tag.eigen);
        if (all) {
          if (!tag.term) return bad("missing instantiation term");
          if (tag.term->loose() != 0) return bad("instantiation term is not closed");
          t = *tag.term;
        } else {
          if (tag.eigen.empty()) return bad("missing eigenvariable");
          if (free_in_sequent(d.conclusion(), tag.eigen))
            return "eigenvariable " + tag.eigen + " occurs in conclusion";
        }
        const auto& p = P[0].conclusion();
        if (p.ante.size() != A.size() || !(p.ante[0] == instantiate(A[0].body(), t)) ||
            !same_range(A, 1, p.ante, 1, A.size() - 1) || S != p.succ)
          return bad("premise is not the instance of the quantified formula");
        return std::nullopt;
      }
      case Rule::AllR:
      case Rule::ExR: {
        if (auto e = arity(1)) return e;
        bool all = tag.rule == Rule::AllR;
        if (S.empty() || !S.back().is(all ? Connective::Forall : Connective::Exists))
          return all ? bad("last succedent formula is not universal")
                     : bad("last succedent formula is not existential");
        Term t = Term::free(tag.eigen);
        if (all) {
          if (tag.eigen.empty()) return bad("missing eigenvariable");
          if (free_in_sequent(d.conclusion(), tag.eigen))
            return "eigenvariable " + tag.eigen + " occurs in conclusion";
        } else {
          if (!tag.term) return bad("missing witness term");
          if (tag.term->loose() != 0) return bad("witness term is not closed");
          t = *tag.term;
        }
        const auto& p = P[0].conclusion();
        if (p.succ.size() != S.size() || !(p.succ.back() == instantiate(S.back().body(), t)) ||
            !same_range(S, 0, p.succ, 0, S.size() - 1) || A != p.ante)
          return bad("premise is not the instance of the quantified formula");
        return std::nullopt;
      }
    }
    return bad("unknown rule");
  }

  Mode mode_;
  const Theory& theory_;
  std::vector<Violation>& out_;
  std::unordered_set<const void*> visited_;
  std::unordered_set<const void*> wf_seen_;
};

}  // namespace

CheckReport check(const Derivation& d, Mode mode, const Theory& theory) {
  CheckReport report;
  Checker c(mode, theory, report.violations);
  std::string path = "root";
  c.visit(d, path);
  return report;
}

CheckReport check(const Derivation& d, Mode mode) {
  static const Theory empty{"empty", {}};
  return check(d, mode, empty);
}

// ---------------------------------------------------------------------------
// Structural bookkeeping

namespace {

using Counts = std::unordered_map<Formula, int, FormulaHash>;

Counts count(const Seq& s) {
  Counts c;
  for (const auto& f : s) ++c[f];
  return c;
}

Seq without_one(const Seq& s, const Formula& f) {
  Seq out;
  bool removed = false;
  for (const auto& g : s) {
    if (!removed && g == f) {
      removed = true;
      continue;
    }
    out.push_back(g);
  }
  return out;
}

Derivation exch_l(const Derivation& d, Seq ante) {
  if (ante == d.conclusion().ante) return d;
  return Derivation(Sequent{std::move(ante), d.conclusion().succ}, RuleTag::plain(Rule::ExchL),
                    {d});
}

Derivation exch_r(const Derivation& d, Seq succ) {
  if (succ == d.conclusion().succ) return d;
  return Derivation(Sequent{d.conclusion().ante, std::move(succ)}, RuleTag::plain(Rule::ExchR),
                    {d});
}

Derivation fit_left(Derivation d, const Seq& target) {
  Counts want = count(target);
  Counts have = count(d.conclusion().ante);
  for (auto& [f, n] : have) {
    auto it = want.find(f);
    if (it == want.end())
      throw PreconditionError("structural: antecedent formula " + print_formula(f) +
                              " missing from target");
    while (n > it->second) {
      Seq rest = without_one(without_one(d.conclusion().ante, f), f);
      Seq order{f, f};
      order.insert(order.end(), rest.begin(), rest.end());
      d = exch_l(d, order);
      Seq contracted{f};
      contracted.insert(contracted.end(), rest.begin(), rest.end());
      d = Derivation(Sequent{std::move(contracted), d.conclusion().succ},
                     RuleTag::plain(Rule::ContrL), {d});
      --n;
    }
  }
  for (const auto& [f, n] : want) {
    auto it = have.find(f);
    int k = it == have.end() ? 0 : it->second;
    for (; k < n; ++k) {
      Seq ante{f};
      ante.insert(ante.end(), d.conclusion().ante.begin(), d.conclusion().ante.end());
      d = Derivation(Sequent{std::move(ante), d.conclusion().succ}, RuleTag::plain(Rule::WeakL),
                     {d});
    }
  }
  return exch_l(d, target);
}

Derivation fit_right(Derivation d, const Seq& target) {
  Counts want = count(target);
  Counts have = count(d.conclusion().succ);
  for (auto& [f, n] : have) {
    auto it = want.find(f);
    if (it == want.end())
      throw PreconditionError("structural: succedent formula " + print_formula(f) +
                              " missing from target");
    while (n > it->second) {
      Seq rest = without_one(without_one(d.conclusion().succ, f), f);
      Seq order = rest;
      order.push_back(f);
      order.push_back(f);
      d = exch_r(d, order);
      rest.push_back(f);
      d = Derivation(Sequent{d.conclusion().ante, std::move(rest)}, RuleTag::plain(Rule::ContrR),
                     {d});
      --n;
    }
  }
  for (const auto& [f, n] : want) {
    auto it = have.find(f);
    int k = it == have.end() ? 0 : it->second;
    for (; k < n; ++k) {
      Seq succ = d.conclusion().succ;
      succ.push_back(f);
      d = Derivation(Sequent{d.conclusion().ante, std::move(succ)}, RuleTag::plain(Rule::WeakR),
                     {d});
    }
  }
  return exch_r(d, target);
}

void require_submultiset(const Seq& have, const Seq& want, const char* side) {
  Counts w = count(want);
  for (const auto& [f, n] : count(have)) {
    auto it = w.find(f);
    if (it == w.end() || it->second < n)
      throw PreconditionError(std::string("weaken_to: ") + side + " formula " + print_formula(f) +
                              " is not contained in the target");
  }
}

Seq dedup(const Seq& s) {
  Seq out;
  std::unordered_set<Formula, FormulaHash> seen;
  for (const auto& f : s)
    if (seen.insert(f).second) out.push_back(f);
  return out;
}

Seq remove_all(const Seq& s, const Formula& f) {
  Seq out;
  for (const auto& g : s)
    if (!(g == f)) out.push_back(g);
  return out;
}

}  // namespace

Derivation reshape(const Derivation& d, const std::vector<Formula>& ante,
                   const std::vector<Formula>& succ) {
  return fit_right(fit_left(d, ante), succ);
}

Derivation weaken_to(const Derivation& d, const std::vector<Formula>& ante,
                     const std::vector<Formula>& succ) {
  require_submultiset(d.conclusion().ante, ante, "antecedent");
  require_submultiset(d.conclusion().succ, succ, "succedent");
  return reshape(d, ante, succ);
}

Derivation cut(const Derivation& d1, const Derivation& d2, const Formula& phi) {
  if (!contains(d1.conclusion().succ, phi))
    throw PreconditionError("cut: formula " + print_formula(phi) +
                            " is not in the left succedent");
  if (!contains(d2.conclusion().ante, phi))
    throw PreconditionError("cut: formula " + print_formula(phi) +
                            " is not in the right antecedent");
  Seq a1 = d1.conclusion().ante;
  Seq s1 = remove_all(d1.conclusion().succ, phi);
  Seq a2 = remove_all(d2.conclusion().ante, phi);
  Seq s2 = d2.conclusion().succ;
  Seq s1phi = s1;
  s1phi.push_back(phi);
  Seq phia2{phi};
  phia2.insert(phia2.end(), a2.begin(), a2.end());
  Derivation left = reshape(d1, a1, s1phi);
  Derivation right = reshape(d2, phia2, s2);
  Seq ca = a1;
  ca.insert(ca.end(), a2.begin(), a2.end());
  Seq cs = s1;
  cs.insert(cs.end(), s2.begin(), s2.end());
  Derivation node(Sequent{ca, cs}, RuleTag::plain(Rule::Cut), {left, right});
  return reshape(node, dedup(ca), dedup(cs));
}

Derivation cut(const Derivation& d1, const Derivation& d2) {
  if (d1.conclusion().succ.empty()) throw PreconditionError("cut: left succedent is empty");
  return cut(d1, d2, d1.conclusion().succ.back());
}

namespace {

void term_names(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Bound) return;
  out.insert(t.name());
  for (const auto& a : t.args()) term_names(a, out);
}

void formula_names(const Formula& f, std::set<std::string>& out,
                   std::unordered_set<const void*>& seen) {
  if (!seen.insert(f.identity()).second) return;
  switch (f.kind()) {
    case Connective::Atom:
      for (const auto& a : f.args()) term_names(a, out);
      break;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      formula_names(f.lhs(), out, seen);
      formula_names(f.rhs(), out, seen);
      break;
    case Connective::Forall:
    case Connective::Exists:
      formula_names(f.body(), out, seen);
      break;
    default:
      break;
  }
}

}  // namespace

std::set<std::string> names_in(const Derivation& d) {
  std::set<std::string> out;
  std::unordered_set<const void*> seen_nodes, seen_formulas;
  std::vector<const Derivation*> stack{&d};
  while (!stack.empty()) {
    const Derivation* cur = stack.back();
    stack.pop_back();
    if (!seen_nodes.insert(cur->identity()).second) continue;
    for (const auto& f : cur->conclusion().ante) formula_names(f, out, seen_formulas);
    for (const auto& f : cur->conclusion().succ) formula_names(f, out, seen_formulas);
    if (cur->tag().term) term_names(*cur->tag().term, out);
    if (!cur->tag().eigen.empty()) out.insert(cur->tag().eigen);
    for (const auto& p : cur->premises()) stack.push_back(&p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Files

namespace {

void print_node(const Derivation& d, std::size_t indent, std::string& out) {
  out.append(indent, ' ');
  out += "(node ";
  const auto& tag = d.tag();
  switch (tag.rule) {
    case Rule::AllL:
    case Rule::ExR:
      out += "(" + std::string(rule_name(tag.rule)) + " " +
             (tag.term ? print_term(*tag.term) : std::string("?")) + ")";
      break;
    case Rule::AllR:
    case Rule::ExL:
      out += "(" + std::string(rule_name(tag.rule)) + " " + tag.eigen + ")";
      break;
    case Rule::AxTheory:
      out += "(AxTheory " + std::to_string(tag.axiom) + ")";
      break;
    default:
      out += rule_name(tag.rule);
  }
  out += ' ';
  out += print_sequent(d.conclusion());
  for (const auto& p : d.premises()) {
    out += '\n';
    print_node(p, indent + 2, out);
  }
  out += ')';
}

void collect_symbols(const Term& t, Signature& sig) {
  if (t.kind() != Term::Kind::App) return;
  if (t.args().empty())
    sig.add_constant(t.name());
  else
    sig.add_function(t.name(), t.args().size());
  for (const auto& a : t.args()) collect_symbols(a, sig);
}

void collect_symbols(const Formula& f, Signature& sig) {
  switch (f.kind()) {
    case Connective::Atom:
      sig.add_predicate(f.name(), f.args().size());
      for (const auto& a : f.args()) collect_symbols(a, sig);
      break;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      collect_symbols(f.lhs(), sig);
      collect_symbols(f.rhs(), sig);
      break;
    case Connective::Forall:
    case Connective::Exists:
      collect_symbols(f.body(), sig);
      break;
    default:
      break;
  }
}

Seq read_formulas(const sexpr::Node& n, std::string_view head, FormulaReader& reader) {
  if (!n.headed(head)) sexpr::fail(n, "expected (" + std::string(head) + " ...)");
  Seq out;
  for (std::size_t i = 1; i < n.items.size(); ++i) out.push_back(reader.formula(n.items[i]));
  return out;
}

std::size_t read_index(const sexpr::Node& n) {
  if (n.is_list || n.atom.empty() ||
      !std::all_of(n.atom.begin(), n.atom.end(), [](char c) { return c >= '0' && c <= '9'; }))
    sexpr::fail(n, "expected axiom index");
  return std::stoul(n.atom);
}

Derivation read_node(const sexpr::Node& n, FormulaReader& reader) {
  if (!n.headed("node") || n.items.size() < 3) sexpr::fail(n, "expected (node RULE (seq ...) ...)");
  const auto& r = n.items[1];
  RuleTag tag;
  if (!r.is_list) {
    auto rule = rule_from_name(r.atom);
    if (!rule) sexpr::fail(r, "unknown rule '" + r.atom + "'");
    switch (*rule) {
      case Rule::AllL:
      case Rule::AllR:
      case Rule::ExL:
      case Rule::ExR:
      case Rule::AxTheory:
        sexpr::fail(r, "rule '" + r.atom + "' needs an argument");
      default:
        tag = RuleTag::plain(*rule);
    }
  } else {
    if (r.items.size() != 2 || r.items[0].is_list) sexpr::fail(r, "malformed rule");
    auto rule = rule_from_name(r.items[0].atom);
    if (!rule) sexpr::fail(r.items[0], "unknown rule '" + r.items[0].atom + "'");
    switch (*rule) {
      case Rule::AllL:
      case Rule::ExR:
        tag = RuleTag::with_term(*rule, reader.term(r.items[1]));
        break;
      case Rule::AllR:
      case Rule::ExL:
        tag = RuleTag::with_eigen(*rule, reader.free_variable(r.items[1]));
        break;
      case Rule::AxTheory:
        tag = RuleTag::theory(read_index(r.items[1]));
        break;
      default:
        sexpr::fail(r, "rule '" + r.items[0].atom + "' takes no argument");
    }
  }
  const auto& seq = n.items[2];
  if (!seq.headed("seq") || seq.items.size() != 3) sexpr::fail(seq, "expected (seq (gamma ...) (delta ...))");
  Sequent s{read_formulas(seq.items[1], "gamma", reader), read_formulas(seq.items[2], "delta", reader)};
  std::vector<Derivation> premises;
  for (std::size_t i = 3; i < n.items.size(); ++i) premises.push_back(read_node(n.items[i], reader));
  return Derivation(std::move(s), std::move(tag), std::move(premises));
}

}  // namespace

std::string print_derivation(const Derivation& d) {
  std::string out;
  print_node(d, 0, out);
  out += '\n';
  return out;
}

std::string print_theory(const Theory& t) {
  std::string out = "(theory " + t.name;
  for (const auto& a : t.axioms) out += "\n  " + print_formula(a);
  out += ")\n";
  return out;
}

Signature theory_signature(const Theory& t, const Signature* base) {
  Signature sig = base ? *base : Signature{};
  for (const auto& a : t.axioms) collect_symbols(a, sig);
  return sig;
}

Theory parse_theory(std::string_view text, const Signature* sig) {
  auto n = sexpr::read_one(text);
  if (!n.headed("theory") || n.items.size() < 2 || n.items[1].is_list)
    sexpr::fail(n, "expected (theory NAME formula*)");
  ParseOptions opts;
  opts.signature = sig;
  opts.unbound_as_constants = true;
  FormulaReader reader(opts);
  Theory t{n.items[1].atom, {}};
  for (std::size_t i = 2; i < n.items.size(); ++i) t.axioms.push_back(reader.formula(n.items[i]));
  require_plain_theory(t);
  return t;
}

Derivation parse_derivation(std::string_view text, const Signature* sig) {
  ParseOptions opts;
  opts.signature = sig;
  opts.allow_reserved_names = true;
  FormulaReader reader(opts);
  return read_node(sexpr::read_one(text), reader);
}

}  // namespace geoconv
