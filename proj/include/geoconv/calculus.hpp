// Sequents, rule tags, derivation trees and the three-mode checker.

#ifndef GEOCONV_CALCULUS_HPP
#define GEOCONV_CALCULUS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geoconv/syntax.hpp"

namespace geoconv {

enum class Mode : std::uint8_t { Classical, Intuitionistic, Minimal };

std::string_view mode_name(Mode m);
Mode parse_mode(std::string_view s);

struct Sequent {
  std::vector<Formula> ante;
  std::vector<Formula> succ;

  std::size_t symbol_count() const;
  friend bool operator==(const Sequent&, const Sequent&) = default;
};

std::string print_sequent(const Sequent& s);

enum class Rule : std::uint8_t {
  AxId,
  AxBot,
  AxTheory,
  WeakL,
  WeakR,
  ContrL,
  ContrR,
  ExchL,
  ExchR,
  Cut,
  AndL,
  AndR,
  OrL,
  OrR,
  ImpL,
  ImpR,
  AllL,
  AllR,
  ExL,
  ExR,
};

inline constexpr int kRuleCount = 20;

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view s);

struct RuleTag {
  Rule rule = Rule::AxId;
  std::optional<Term> term;  // AllL, ExR
  std::string eigen;         // AllR, ExL
  std::size_t axiom = 0;     // AxTheory

  static RuleTag plain(Rule r) { return RuleTag{r, std::nullopt, {}, 0}; }
  static RuleTag with_term(Rule r, Term t) { return RuleTag{r, std::move(t), {}, 0}; }
  static RuleTag with_eigen(Rule r, std::string a) { return RuleTag{r, std::nullopt, std::move(a), 0}; }
  static RuleTag theory(std::size_t i) { return RuleTag{Rule::AxTheory, std::nullopt, {}, i}; }
};

struct Theory {
  std::string name;
  std::vector<Formula> axioms;
};

// Throws PreconditionError unless every axiom is an E-free sentence.
void require_plain_theory(const Theory& t);

struct SizeReport {
  std::uint64_t inference_count = 0;
  std::uint64_t symbol_count = 0;
  std::uint64_t height = 0;
};

// Immutable derivation node; subtrees may be shared. Sizes are counted over
// the tree expansion.
class Derivation {
 public:
  Derivation(Sequent conclusion, RuleTag tag, std::vector<Derivation> premises = {});

  const Sequent& conclusion() const { return node_->conclusion; }
  const RuleTag& tag() const { return node_->tag; }
  Rule rule() const { return node_->tag.rule; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const Derivation& premise(std::size_t i) const { return node_->premises.at(i); }
  SizeReport size() const { return node_->size; }
  const void* identity() const { return node_.get(); }

 private:
  struct Node {
    Sequent conclusion;
    RuleTag tag;
    std::vector<Derivation> premises;
    SizeReport size;
  };
  std::shared_ptr<const Node> node_;
};

inline SizeReport size(const Derivation& d) { return d.size(); }

// Number of distinct nodes in the shared representation.
std::size_t dag_node_count(const Derivation& d);

struct Violation {
  std::string path;  // "root", "root.0.1", ...
  Rule rule;
  std::string message;
};

struct CheckReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

CheckReport check(const Derivation& d, Mode mode, const Theory& theory);
CheckReport check(const Derivation& d, Mode mode);

// Adds WeakL/WeakR/ExchL/ExchR nodes so that the conclusion becomes exactly
// `ante` => `succ`. Requires multiset inclusion.
Derivation weaken_to(const Derivation& d, const std::vector<Formula>& ante,
                     const std::vector<Formula>& succ);

// Like `weaken_to` but also contracts: every formula of the current sequent
// must occur in the target.
Derivation reshape(const Derivation& d, const std::vector<Formula>& ante,
                   const std::vector<Formula>& succ);

// Cut on `phi`, which must occur in the succedent of d1 and the antecedent of
// d2. Conclusion is the duplicate-free concatenation of the side contexts.
Derivation cut(const Derivation& d1, const Derivation& d2, const Formula& phi);
Derivation cut(const Derivation& d1, const Derivation& d2);

// Free variable and constant names mentioned anywhere in the tree, including
// rule arguments.
std::set<std::string> names_in(const Derivation& d);

// ---------------------------------------------------------------------------
// File formats

std::string print_derivation(const Derivation& d);
std::string print_theory(const Theory& t);

// Collects the constants occurring in a theory's axioms.
Signature theory_signature(const Theory& t, const Signature* base = nullptr);

Theory parse_theory(std::string_view text, const Signature* sig = nullptr);
Derivation parse_derivation(std::string_view text, const Signature* sig = nullptr);

}  // namespace geoconv

#endif  // GEOCONV_CALCULUS_HPP
