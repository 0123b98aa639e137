// Terms, formulas and the two-namespace variable discipline.
//
// Bound variables are stored as de Bruijn indices; the quantifier keeps the
// user-facing name as a display hint only. Equality and hashing ignore hints,
// so two formulas compare equal iff they are alpha-equivalent.

#ifndef GEOCONV_SYNTAX_HPP
#define GEOCONV_SYNTAX_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <string_view>
#include <vector>

namespace geoconv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation is called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A builder produced something the checker rejects. Never expected.
class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

enum class VarKind : std::uint8_t { Free, Bound };

struct Variable {
  std::string name;
  VarKind kind = VarKind::Free;
  friend bool operator==(const Variable&, const Variable&) = default;
};

class Term {
 public:
  enum class Kind : std::uint8_t { Free, Bound, App };

  static Term free(std::string name);
  static Term bound(std::uint32_t index);
  // Constants are applications with no arguments.
  static Term app(std::string fn, std::vector<Term> args = {});

  Kind kind() const;
  const std::string& name() const;
  std::uint32_t index() const;
  std::span<const Term> args() const;

  std::size_t hash() const;
  std::size_t symbol_count() const;
  // One more than the largest dangling de Bruijn index; 0 for closed terms.
  std::uint32_t loose() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class Connective : std::uint8_t {
  Atom,
  Falsum,
  Placeholder,
  And,
  Or,
  Imp,
  Forall,
  Exists,
};

class Formula {
 public:
  static Formula atom(std::string pred, std::vector<Term> args = {});
  static Formula falsum();
  static Formula placeholder();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  // `body` refers to the new binder through de Bruijn index 0.
  static Formula forall(std::string hint, Formula body);
  static Formula exists(std::string hint, Formula body);

  Connective kind() const;
  bool is(Connective c) const { return kind() == c; }
  bool is_quantifier() const { return is(Connective::Forall) || is(Connective::Exists); }
  bool is_binary() const { return is(Connective::And) || is(Connective::Or) || is(Connective::Imp); }

  // Predicate name for atoms, binder hint for quantifiers.
  const std::string& name() const;
  std::span<const Term> args() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const;

  std::size_t hash() const;
  std::size_t symbol_count() const;
  std::uint32_t loose() const;
  bool has_placeholder() const;
  bool has_falsum() const;
  bool same_node(const Formula& o) const { return node_ == o.node_; }
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Equality that also compares binder hints. Memo tables whose results are
// rebuilt under binders key on this.
bool same_spelling(const Formula& a, const Formula& b);

struct SpellingEq {
  bool operator()(const Formula& a, const Formula& b) const { return same_spelling(a, b); }
};

template <class V>
using SpellingMap = std::unordered_map<Formula, V, FormulaHash, SpellingEq>;

// ¬φ := φ → ⊥ and ¬_E φ := φ → E.
Formula neg(Formula f);
Formula neg_e(Formula f);
Formula dneg_e(Formula f);

// Replace de Bruijn index 0 of a quantifier body by the closed term t.
Formula instantiate(const Formula& body, const Term& t);
// Turn every occurrence of the free variable `name` into the binder index for
// a quantifier wrapped directly around the result.
Formula abstract(const Formula& f, std::string_view name);
// ∀x φ[a:=x], choosing a hint that respects the formation rule.
Formula forall_over(const Formula& f, std::string_view free_name, std::string_view hint = "x");
Formula exists_over(const Formula& f, std::string_view free_name, std::string_view hint = "x");

Term subst_term(const Term& t, std::string_view a, const Term& by);
Formula subst_term(const Formula& f, const Variable& a, const Term& t);
Formula subst_free_var(const Formula& f, std::string_view a, std::string_view c);
Formula subst_placeholder(const Formula& f, const Formula& psi);

void collect_free_vars(const Term& t, std::set<std::string>& out);
void collect_free_vars(const Formula& f, std::set<std::string>& out);
std::set<std::string> free_vars(const Formula& f);
// Free variables plus function and constant symbols.
void collect_names(const Term& t, std::set<std::string>& out);
void collect_names(const Formula& f, std::set<std::string>& out);
bool occurs_free(const Formula& f, std::string_view name);
bool is_sentence(const Formula& f);

// Lowest v<k> not in `avoid`.
Variable fresh_free_var(const std::set<std::string>& avoid);
bool is_reserved_fresh_name(std::string_view s);
bool is_reserved_word(std::string_view s);

// Formation rule: closed in the bound sense, no binder re-used inside its own
// scope, and no free variable spelled like an enclosing binder.
std::optional<std::string> well_formed(const Formula& f);

// Rename binder hints so that `well_formed` holds. Alpha-equivalent output.
Formula repair_hints(const Formula& f);

class Signature {
 public:
  void add_constant(const std::string& name);
  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);

  bool is_constant(const std::string& name) const;
  std::optional<std::size_t> function_arity(const std::string& name) const;
  std::optional<std::size_t> predicate_arity(const std::string& name) const;

  // "fun name arity" / "pred name arity" / "const name", one per line.
  static Signature parse(std::string_view text);
  std::string print() const;

 private:
  std::set<std::string> constants_;
  std::map<std::string, std::size_t> functions_;
  std::map<std::string, std::size_t> predicates_;
};

struct ParseOptions {
  const Signature* signature = nullptr;
  // Machine-written files may mention the fresh-variable namespace.
  bool allow_reserved_names = false;
  // Unbound bare identifiers denote constants (used for sentence-only files).
  bool unbound_as_constants = false;
};

Formula parse_formula(std::string_view text, const ParseOptions& opts = {});
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

}  // namespace geoconv

#endif  // GEOCONV_SYNTAX_HPP
