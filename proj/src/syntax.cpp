#include "geoconv/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "geoconv/sexpr.hpp"

namespace geoconv {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  v *= 0x9E3779B97F4A7C15ull;
  v ^= v >> 29;
  return (h ^ v) * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull;
}

std::size_t hash_str(std::string_view s) { return std::hash<std::string_view>{}(s); }

}  // namespace

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": " +
            msg),
      line_(line),
      column_(column) {}

// ---------------------------------------------------------------------------
// Terms

struct Term::Node {
  Kind kind = Kind::Free;
  std::string name;
  std::uint32_t index = 0;
  std::vector<Term> args;
  std::size_t hash = 0;
  std::size_t size = 1;
  std::uint32_t loose = 0;
};

Term Term::free(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Free;
  n->hash = mix(1, hash_str(name));
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::bound(std::uint32_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bound;
  n->index = index;
  n->hash = mix(2, index);
  n->loose = index + 1;
  return Term(std::move(n));
}

Term Term::app(std::string fn, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->hash = mix(3, hash_str(fn));
  for (const auto& a : args) {
    n->hash = mix(n->hash, a.hash());
    n->size += a.symbol_count();
    n->loose = std::max(n->loose, a.loose());
  }
  n->name = std::move(fn);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
std::uint32_t Term::index() const { return node_->index; }
std::span<const Term> Term::args() const { return node_->args; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::symbol_count() const { return node_->size; }
std::uint32_t Term::loose() const { return node_->loose; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case Term::Kind::Free:
      return x.name == y.name;
    case Term::Kind::Bound:
      return x.index == y.index;
    case Term::Kind::App:
      return x.name == y.name && std::equal(x.args.begin(), x.args.end(), y.args.begin(),
                                            y.args.end());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Formulas

struct Formula::Node {
  Connective kind = Connective::Falsum;
  std::string name;
  std::vector<Term> args;
  Formula lhs{nullptr};
  Formula rhs{nullptr};
  std::size_t hash = 0;
  std::size_t size = 1;
  std::uint32_t loose = 0;
  bool has_e = false;
  bool has_bot = false;
};

Formula Formula::atom(std::string pred, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Connective::Atom;
  n->hash = mix(10, hash_str(pred));
  for (const auto& a : args) {
    n->hash = mix(n->hash, a.hash());
    n->size += a.symbol_count();
    n->loose = std::max(n->loose, a.loose());
  }
  n->name = std::move(pred);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::falsum() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::Falsum;
    n->hash = mix(11, 0);
    n->has_bot = true;
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::placeholder() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::Placeholder;
    n->hash = mix(12, 0);
    n->has_e = true;
    return Formula(std::move(n));
  }();
  return f;
}

namespace {

std::size_t binary_tag(Connective c) { return 20 + static_cast<std::size_t>(c); }

}  // namespace

#define GEOCONV_BINARY(fn, conn)                                     \
  Formula Formula::fn(Formula a, Formula b) {                        \
    auto n = std::make_shared<Node>();                               \
    n->kind = Connective::conn;                                      \
    n->hash = mix(mix(binary_tag(n->kind), a.hash()), b.hash());     \
    n->size = 1 + a.symbol_count() + b.symbol_count();               \
    n->loose = std::max(a.loose(), b.loose());                       \
    n->has_e = a.has_placeholder() || b.has_placeholder();           \
    n->has_bot = a.has_falsum() || b.has_falsum();                   \
    n->lhs = std::move(a);                                           \
    n->rhs = std::move(b);                                           \
    return Formula(std::move(n));                                    \
  }

GEOCONV_BINARY(conj, And)
GEOCONV_BINARY(disj, Or)
GEOCONV_BINARY(imp, Imp)
#undef GEOCONV_BINARY

#define GEOCONV_QUANT(fn, conn)                                      \
  Formula Formula::fn(std::string hint, Formula body) {              \
    auto n = std::make_shared<Node>();                               \
    n->kind = Connective::conn;                                      \
    n->hash = mix(binary_tag(n->kind), body.hash());                 \
    n->size = 1 + body.symbol_count();                               \
    n->loose = body.loose() == 0 ? 0 : body.loose() - 1;             \
    n->has_e = body.has_placeholder();                               \
    n->has_bot = body.has_falsum();                                  \
    n->name = std::move(hint);                                       \
    n->lhs = std::move(body);                                        \
    return Formula(std::move(n));                                    \
  }

GEOCONV_QUANT(forall, Forall)
GEOCONV_QUANT(exists, Exists)
#undef GEOCONV_QUANT

Connective Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
std::span<const Term> Formula::args() const { return node_->args; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
const Formula& Formula::body() const { return node_->lhs; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::symbol_count() const { return node_->size; }
std::uint32_t Formula::loose() const { return node_->loose; }
bool Formula::has_placeholder() const { return node_->has_e; }
bool Formula::has_falsum() const { return node_->has_bot; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size) return false;
  switch (x.kind) {
    case Connective::Atom:
      return x.name == y.name && std::equal(x.args.begin(), x.args.end(), y.args.begin(),
                                            y.args.end());
    case Connective::Falsum:
    case Connective::Placeholder:
      return true;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      return x.lhs == y.lhs && x.rhs == y.rhs;
    case Connective::Forall:
    case Connective::Exists:
      return x.lhs == y.lhs;
  }
  return false;
}

bool same_spelling(const Formula& a, const Formula& b) {
  if (a.same_node(b)) return true;
  if (!(a == b)) return false;
  if (a.is_binary()) return same_spelling(a.lhs(), b.lhs()) && same_spelling(a.rhs(), b.rhs());
  if (a.is_quantifier()) return a.name() == b.name() && same_spelling(a.body(), b.body());
  return true;
}

Formula neg(Formula f) { return Formula::imp(std::move(f), Formula::falsum()); }
Formula neg_e(Formula f) { return Formula::imp(std::move(f), Formula::placeholder()); }
Formula dneg_e(Formula f) { return neg_e(neg_e(std::move(f))); }

// ---------------------------------------------------------------------------
// Generic rebuilding

namespace {

Formula rebuild(const Formula& f, Formula l, Formula r) {
  if (l.same_node(f.lhs()) && (f.is_quantifier() || r.same_node(f.rhs()))) return f;
  switch (f.kind()) {
    case Connective::And:
      return Formula::conj(std::move(l), std::move(r));
    case Connective::Or:
      return Formula::disj(std::move(l), std::move(r));
    case Connective::Imp:
      return Formula::imp(std::move(l), std::move(r));
    case Connective::Forall:
      return Formula::forall(f.name(), std::move(l));
    case Connective::Exists:
      return Formula::exists(f.name(), std::move(l));
    default:
      return f;
  }
}

// Applies `fn(term, depth)` to every argument of every atom.
template <class Fn>
Formula map_atoms(const Formula& f, std::uint32_t depth, const Fn& fn, bool need_loose) {
  switch (f.kind()) {
    case Connective::Atom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      bool changed = false;
      for (const auto& a : f.args()) {
        args.push_back(fn(a, depth));
        changed = changed || !(args.back() == a);
      }
      if (!changed) return f;
      return Formula::atom(f.name(), std::move(args));
    }
    case Connective::Falsum:
    case Connective::Placeholder:
      return f;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp: {
      if (need_loose && f.loose() <= depth) return f;
      return rebuild(f, map_atoms(f.lhs(), depth, fn, need_loose),
                     map_atoms(f.rhs(), depth, fn, need_loose));
    }
    case Connective::Forall:
    case Connective::Exists:
      if (need_loose && f.loose() <= depth) return f;
      return rebuild(f, map_atoms(f.body(), depth + 1, fn, need_loose), f.body());
  }
  return f;
}

Term replace_bound(const Term& t, std::uint32_t depth, const Term& by) {
  if (t.loose() <= depth) return t;
  switch (t.kind()) {
    case Term::Kind::Bound:
      return t.index() == depth ? by : t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(replace_bound(a, depth, by));
      return Term::app(t.name(), std::move(args));
    }
    case Term::Kind::Free:
      return t;
  }
  return t;
}

bool term_mentions_free(const Term& t, std::string_view name) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name;
    case Term::Kind::Bound:
      return false;
    case Term::Kind::App:
      return std::any_of(t.args().begin(), t.args().end(),
                         [&](const Term& a) { return term_mentions_free(a, name); });
  }
  return false;
}

Term replace_free_by_bound(const Term& t, std::string_view name, std::uint32_t depth) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == name ? Term::bound(depth) : t;
    case Term::Kind::Bound:
      return t;
    case Term::Kind::App: {
      if (!term_mentions_free(t, name)) return t;
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(replace_free_by_bound(a, name, depth));
      return Term::app(t.name(), std::move(args));
    }
  }
  return t;
}

}  // namespace

Formula instantiate(const Formula& body, const Term& t) {
  if (t.loose() != 0) throw PreconditionError("instantiate: term contains bound variables");
  return map_atoms(
      body, 0, [&](const Term& a, std::uint32_t d) { return replace_bound(a, d, t); }, true);
}

Formula abstract(const Formula& f, std::string_view name) {
  return map_atoms(
      f, 0,
      [&](const Term& a, std::uint32_t d) { return replace_free_by_bound(a, name, d); }, false);
}

Term subst_term(const Term& t, std::string_view a, const Term& by) {
  switch (t.kind()) {
    case Term::Kind::Free:
      return t.name() == a ? by : t;
    case Term::Kind::Bound:
      return t;
    case Term::Kind::App: {
      if (!term_mentions_free(t, a)) return t;
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& x : t.args()) args.push_back(subst_term(x, a, by));
      return Term::app(t.name(), std::move(args));
    }
  }
  return t;
}

Formula subst_term(const Formula& f, const Variable& a, const Term& t) {
  if (a.kind != VarKind::Free)
    throw PreconditionError("subst_term: '" + a.name + "' is not a free variable");
  if (t.loose() != 0) throw PreconditionError("subst_term: term contains bound variables");
  return map_atoms(
      f, 0, [&](const Term& x, std::uint32_t) { return subst_term(x, a.name, t); }, false);
}

Formula subst_free_var(const Formula& f, std::string_view a, std::string_view c) {
  return subst_term(f, Variable{std::string(a), VarKind::Free}, Term::free(std::string(c)));
}

namespace {

Formula replace_placeholder(const Formula& f, const Formula& psi) {
  if (!f.has_placeholder()) return f;
  switch (f.kind()) {
    case Connective::Placeholder:
      return psi;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      return rebuild(f, replace_placeholder(f.lhs(), psi), replace_placeholder(f.rhs(), psi));
    case Connective::Forall:
    case Connective::Exists:
      return rebuild(f, replace_placeholder(f.body(), psi), f.body());
    default:
      return f;
  }
}

}  // namespace

Formula subst_placeholder(const Formula& f, const Formula& psi) {
  if (psi.loose() != 0)
    throw PreconditionError("subst_placeholder: replacement has dangling bound variables");
  if (psi.is(Connective::Placeholder)) return f;
  return repair_hints(replace_placeholder(f, psi));
}

void collect_free_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Free:
      out.insert(t.name());
      break;
    case Term::Kind::Bound:
      break;
    case Term::Kind::App:
      for (const auto& a : t.args()) collect_free_vars(a, out);
      break;
  }
}

void collect_free_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom:
      for (const auto& a : f.args()) collect_free_vars(a, out);
      break;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      collect_free_vars(f.lhs(), out);
      collect_free_vars(f.rhs(), out);
      break;
    case Connective::Forall:
    case Connective::Exists:
      collect_free_vars(f.body(), out);
      break;
    default:
      break;
  }
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  collect_free_vars(f, out);
  return out;
}

void collect_names(const Term& t, std::set<std::string>& out) {
  if (t.kind() == Term::Kind::Bound) return;
  out.insert(t.name());
  for (const auto& a : t.args()) collect_names(a, out);
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::Atom:
      for (const auto& a : f.args()) collect_names(a, out);
      break;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      collect_names(f.lhs(), out);
      collect_names(f.rhs(), out);
      break;
    case Connective::Forall:
    case Connective::Exists:
      collect_names(f.body(), out);
      break;
    default:
      break;
  }
}

bool occurs_free(const Formula& f, std::string_view name) {
  switch (f.kind()) {
    case Connective::Atom:
      return std::any_of(f.args().begin(), f.args().end(),
                         [&](const Term& a) { return term_mentions_free(a, name); });
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      return occurs_free(f.lhs(), name) || occurs_free(f.rhs(), name);
    case Connective::Forall:
    case Connective::Exists:
      return occurs_free(f.body(), name);
    default:
      return false;
  }
}

bool is_sentence(const Formula& f) { return f.loose() == 0 && free_vars(f).empty(); }

Formula forall_over(const Formula& f, std::string_view free_name, std::string_view hint) {
  return repair_hints(Formula::forall(std::string(hint), abstract(f, free_name)));
}

Formula exists_over(const Formula& f, std::string_view free_name, std::string_view hint) {
  return repair_hints(Formula::exists(std::string(hint), abstract(f, free_name)));
}

bool is_reserved_fresh_name(std::string_view s) {
  if (s.size() < 2 || s[0] != 'v') return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(c) != 0; });
}

bool is_reserved_word(std::string_view s) {
  static const char* const words[] = {"bot", "E", "atom", "and", "or", "imp", "forall", "exists"};
  return std::any_of(std::begin(words), std::end(words),
                     [&](const char* w) { return s == w; });
}

Variable fresh_free_var(const std::set<std::string>& avoid) {
  for (std::size_t k = 0;; ++k) {
    std::string name = "v" + std::to_string(k);
    if (!avoid.count(name)) return Variable{std::move(name), VarKind::Free};
  }
}

// ---------------------------------------------------------------------------
// Formation rule

namespace {

std::optional<std::string> check_terms_wf(std::span<const Term> args,
                                          const std::vector<std::string>& scope) {
  for (const auto& t : args) {
    std::set<std::string> fv;
    collect_free_vars(t, fv);
    for (const auto& v : fv) {
      if (std::find(scope.begin(), scope.end(), v) != scope.end())
        return "free variable '" + v + "' occurs inside the scope of a binder with that name";
    }
  }
  return std::nullopt;
}

std::optional<std::string> wf(const Formula& f, std::vector<std::string>& scope) {
  switch (f.kind()) {
    case Connective::Atom:
      return check_terms_wf(f.args(), scope);
    case Connective::And:
    case Connective::Or:
    case Connective::Imp: {
      if (auto e = wf(f.lhs(), scope)) return e;
      return wf(f.rhs(), scope);
    }
    case Connective::Forall:
    case Connective::Exists: {
      if (std::find(scope.begin(), scope.end(), f.name()) != scope.end())
        return "bound variable '" + f.name() + "' is quantified again inside its own scope";
      scope.push_back(f.name());
      auto e = wf(f.body(), scope);
      scope.pop_back();
      return e;
    }
    default:
      return std::nullopt;
  }
}

void collect_hints(const Formula& f, std::set<std::string>& out) {
  if (f.is_quantifier()) {
    out.insert(f.name());
    collect_hints(f.body(), out);
  } else if (f.is_binary()) {
    collect_hints(f.lhs(), out);
    collect_hints(f.rhs(), out);
  }
}

std::string base_name(const std::string& h) {
  auto pos = h.rfind('_');
  if (pos == std::string::npos || pos + 1 == h.size()) return h;
  for (std::size_t i = pos + 1; i < h.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(h[i]))) return h;
  return h.substr(0, pos);
}

Formula repair(const Formula& f, std::vector<std::string>& scope) {
  switch (f.kind()) {
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      return rebuild(f, repair(f.lhs(), scope), repair(f.rhs(), scope));
    case Connective::Forall:
    case Connective::Exists: {
      std::string hint = f.name();
      bool clash = std::find(scope.begin(), scope.end(), hint) != scope.end() ||
                   occurs_free(f.body(), hint);
      if (clash) {
        std::set<std::string> taken(scope.begin(), scope.end());
        collect_free_vars(f.body(), taken);
        collect_hints(f.body(), taken);
        std::string base = base_name(hint);
        for (std::size_t k = 1;; ++k) {
          std::string cand = base + "_" + std::to_string(k);
          if (!taken.count(cand)) {
            hint = std::move(cand);
            break;
          }
        }
      }
      scope.push_back(hint);
      Formula body = repair(f.body(), scope);
      scope.pop_back();
      if (!clash) return rebuild(f, body, f.body());
      return f.is(Connective::Forall) ? Formula::forall(hint, std::move(body))
                                      : Formula::exists(hint, std::move(body));
    }
    default:
      return f;
  }
}

}  // namespace

std::optional<std::string> well_formed(const Formula& f) {
  if (f.loose() != 0) return std::string("dangling bound variable");
  std::vector<std::string> scope;
  return wf(f, scope);
}

Formula repair_hints(const Formula& f) {
  if (!well_formed(f)) return f;
  std::vector<std::string> scope;
  return repair(f, scope);
}

// ---------------------------------------------------------------------------
// Signature

void Signature::add_constant(const std::string& name) {
  if (is_reserved_word(name)) throw PreconditionError("reserved symbol '" + name + "'");
  constants_.insert(name);
}

void Signature::add_function(const std::string& name, std::size_t arity) {
  if (is_reserved_word(name)) throw PreconditionError("reserved symbol '" + name + "'");
  if (arity == 0) {
    constants_.insert(name);
    return;
  }
  functions_[name] = arity;
}

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  if (is_reserved_word(name)) throw PreconditionError("reserved symbol '" + name + "'");
  predicates_[name] = arity;
}

bool Signature::is_constant(const std::string& name) const { return constants_.count(name) > 0; }

std::optional<std::size_t> Signature::function_arity(const std::string& name) const {
  if (constants_.count(name)) return 0;
  auto it = functions_.find(name);
  if (it == functions_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Signature::predicate_arity(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) return std::nullopt;
  return it->second;
}

Signature Signature::parse(std::string_view text) {
  Signature sig;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kind, name;
    if (!(ls >> kind)) continue;
    if (!(ls >> name)) throw ParseError("missing symbol name", lineno, 1);
    if (kind == "const") {
      sig.add_constant(name);
    } else if (kind == "fun" || kind == "pred") {
      long arity = -1;
      if (!(ls >> arity) || arity < 0) throw ParseError("missing or bad arity", lineno, 1);
      if (kind == "fun")
        sig.add_function(name, static_cast<std::size_t>(arity));
      else
        sig.add_predicate(name, static_cast<std::size_t>(arity));
    } else {
      throw ParseError("unknown declaration '" + kind + "'", lineno, 1);
    }
  }
  return sig;
}

std::string Signature::print() const {
  std::ostringstream out;
  for (const auto& c : constants_) out << "const " << c << "\n";
  for (const auto& [f, n] : functions_) out << "fun " << f << " " << n << "\n";
  for (const auto& [p, n] : predicates_) out << "pred " << p << " " << n << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

void print_term_to(const Term& t, const std::vector<std::string>& scope, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Free:
      out += t.name();
      break;
    case Term::Kind::Bound:
      if (t.index() < scope.size())
        out += scope[scope.size() - 1 - t.index()];
      else
        out += "?" + std::to_string(t.index());
      break;
    case Term::Kind::App:
      if (t.args().empty()) {
        out += t.name();
      } else {
        out += '(';
        out += t.name();
        for (const auto& a : t.args()) {
          out += ' ';
          print_term_to(a, scope, out);
        }
        out += ')';
      }
      break;
  }
}

void print_to(const Formula& f, std::vector<std::string>& scope, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom:
      out += "(atom ";
      out += f.name();
      for (const auto& a : f.args()) {
        out += ' ';
        print_term_to(a, scope, out);
      }
      out += ')';
      break;
    case Connective::Falsum:
      out += "bot";
      break;
    case Connective::Placeholder:
      out += "E";
      break;
    case Connective::And:
    case Connective::Or:
    case Connective::Imp:
      out += f.is(Connective::And) ? "(and " : f.is(Connective::Or) ? "(or " : "(imp ";
      print_to(f.lhs(), scope, out);
      out += ' ';
      print_to(f.rhs(), scope, out);
      out += ')';
      break;
    case Connective::Forall:
    case Connective::Exists:
      out += f.is(Connective::Forall) ? "(forall " : "(exists ";
      out += f.name();
      out += ' ';
      scope.push_back(f.name());
      print_to(f.body(), scope, out);
      scope.pop_back();
      out += ')';
      break;
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  std::vector<std::string> scope;
  print_to(f, scope, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, {}, out);
  return out;
}

// ---------------------------------------------------------------------------
// S-expression reader

namespace sexpr {

[[noreturn]] void fail(const Node& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.column);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip();
    return pos_ >= text_.size();
  }

  Node read() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, col_);
    Node n;
    n.line = line_;
    n.column = col_;
    char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (c == '(') {
      advance();
      n.is_list = true;
      for (;;) {
        skip();
        if (pos_ >= text_.size())
          throw ParseError("unexpected end of input (unbalanced '(' opened at " +
                               std::to_string(n.line) + ":" + std::to_string(n.column) + ")",
                           line_, col_);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        n.items.push_back(read());
      }
      return n;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ';')
      advance();
    n.atom = std::string(text_.substr(start, pos_ - start));
    return n;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

std::vector<Node> read_all(std::string_view text) {
  Reader r(text);
  std::vector<Node> out;
  while (!r.at_end()) out.push_back(r.read());
  return out;
}

Node read_one(std::string_view text) {
  Reader r(text);
  Node n = r.read();
  if (!r.at_end()) {
    Node extra = r.read();
    fail(extra, "trailing input after expression");
  }
  return n;
}

}  // namespace sexpr

// ---------------------------------------------------------------------------
// Formula reader

namespace {

bool valid_ident(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  });
}

}  // namespace

void FormulaReader::check_ident(const sexpr::Node& n) const {
  if (n.is_list) sexpr::fail(n, "expected identifier");
  if (!valid_ident(n.atom)) sexpr::fail(n, "invalid identifier '" + n.atom + "'");
  if (is_reserved_word(n.atom)) sexpr::fail(n, "reserved symbol '" + n.atom + "' used as a name");
  if (!opts_.allow_reserved_names && is_reserved_fresh_name(n.atom))
    sexpr::fail(n, "'" + n.atom + "' belongs to the reserved fresh-variable namespace");
}

void FormulaReader::check_arity(const sexpr::Node& at, std::map<std::string, std::size_t>& seen,
                                const std::string& name, std::size_t arity,
                                bool predicate) const {
  std::optional<std::size_t> declared;
  if (opts_.signature)
    declared = predicate ? opts_.signature->predicate_arity(name)
                         : opts_.signature->function_arity(name);
  if (!declared) {
    auto it = seen.find(name);
    if (it != seen.end()) declared = it->second;
  }
  if (declared && *declared != arity)
    sexpr::fail(at, "arity mismatch for '" + name + "': expected " + std::to_string(*declared) +
                        ", got " + std::to_string(arity));
  seen.emplace(name, arity);
}

Term FormulaReader::term(const sexpr::Node& n) {
  std::vector<std::string> scope;
  return term(n, scope);
}

std::string FormulaReader::free_variable(const sexpr::Node& n) {
  check_ident(n);
  if (opts_.signature && opts_.signature->function_arity(n.atom))
    sexpr::fail(n, "'" + n.atom + "' is a declared constant, not a variable");
  return n.atom;
}

Term FormulaReader::term(const sexpr::Node& n, const std::vector<std::string>& scope) {
  if (!n.is_list) {
    check_ident(n);
    for (std::size_t i = scope.size(); i-- > 0;) {
      if (scope[i] == n.atom) return Term::bound(static_cast<std::uint32_t>(scope.size() - 1 - i));
    }
    if (opts_.unbound_as_constants) return Term::app(n.atom);
    if (opts_.signature && opts_.signature->is_constant(n.atom)) return Term::app(n.atom);
    if (opts_.signature && opts_.signature->function_arity(n.atom))
      sexpr::fail(n, "function '" + n.atom + "' used without arguments");
    return Term::free(n.atom);
  }
  if (n.items.empty()) sexpr::fail(n, "empty term");
  check_ident(n.items[0]);
  const std::string& fn = n.items[0].atom;
  std::vector<Term> args;
  for (std::size_t i = 1; i < n.items.size(); ++i) args.push_back(term(n.items[i], scope));
  check_arity(n, function_arity_, fn, args.size(), false);
  return Term::app(fn, std::move(args));
}

Formula FormulaReader::formula(const sexpr::Node& n) {
  std::vector<std::string> scope;
  return formula(n, scope);
}

Formula FormulaReader::formula(const sexpr::Node& n, std::vector<std::string>& scope) {
  if (!n.is_list) {
    if (n.atom == "bot") return Formula::falsum();
    if (n.atom == "E") return Formula::placeholder();
    sexpr::fail(n, "expected formula, got '" + n.atom + "'");
  }
  if (n.items.empty() || n.items[0].is_list) sexpr::fail(n, "expected formula keyword");
  const std::string& head = n.items[0].atom;
  auto arity = [&](std::size_t k) {
    if (n.items.size() != k + 1)
      sexpr::fail(n, "'" + head + "' takes " + std::to_string(k) + " arguments");
  };
  if (head == "atom") {
    if (n.items.size() < 2) sexpr::fail(n, "atom without predicate");
    check_ident(n.items[1]);
    const std::string& pred = n.items[1].atom;
    std::vector<Term> args;
    for (std::size_t i = 2; i < n.items.size(); ++i) args.push_back(term(n.items[i], scope));
    check_arity(n, predicate_arity_, pred, args.size(), true);
    return Formula::atom(pred, std::move(args));
  }
  if (head == "and" || head == "or" || head == "imp") {
    arity(2);
    Formula a = formula(n.items[1], scope);
    Formula b = formula(n.items[2], scope);
    if (head == "and") return Formula::conj(std::move(a), std::move(b));
    if (head == "or") return Formula::disj(std::move(a), std::move(b));
    return Formula::imp(std::move(a), std::move(b));
  }
  if (head == "forall" || head == "exists") {
    arity(2);
    check_ident(n.items[1]);
    const std::string& x = n.items[1].atom;
    if (std::find(scope.begin(), scope.end(), x) != scope.end())
      sexpr::fail(n.items[1], "bound variable '" + x + "' is already bound in this scope");
    if (opts_.signature && opts_.signature->function_arity(x))
      sexpr::fail(n.items[1], "'" + x + "' is a declared constant");
    scope.push_back(x);
    Formula body = formula(n.items[2], scope);
    scope.pop_back();
    return head == "forall" ? Formula::forall(x, std::move(body))
                            : Formula::exists(x, std::move(body));
  }
  sexpr::fail(n.items[0], "unknown formula keyword '" + head + "'");
}

Formula parse_formula(std::string_view text, const ParseOptions& opts) {
  FormulaReader reader(opts);
  return reader.formula(sexpr::read_one(text));
}

}  // namespace geoconv
