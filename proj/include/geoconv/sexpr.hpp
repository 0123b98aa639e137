// S-expression reader shared by the formula, theory and derivation formats.

#ifndef GEOCONV_SEXPR_HPP
#define GEOCONV_SEXPR_HPP

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "geoconv/syntax.hpp"

namespace geoconv::sexpr {

struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_atom(std::string_view s) const { return !is_list && atom == s; }
  // True for a list whose head atom is `s`.
  bool headed(std::string_view s) const {
    return is_list && !items.empty() && items[0].is_atom(s);
  }
};

std::vector<Node> read_all(std::string_view text);
Node read_one(std::string_view text);

[[noreturn]] void fail(const Node& at, const std::string& msg);

}  // namespace geoconv::sexpr

namespace geoconv {

// Converts S-expressions into terms and formulas. Undeclared symbols get their
// arity fixed at first use, so one reader should be used per file.
class FormulaReader {
 public:
  explicit FormulaReader(ParseOptions opts = {}) : opts_(opts) {}

  Formula formula(const sexpr::Node& n);
  Term term(const sexpr::Node& n);
  // A bare identifier naming a free variable.
  std::string free_variable(const sexpr::Node& n);

 private:
  Formula formula(const sexpr::Node& n, std::vector<std::string>& scope);
  Term term(const sexpr::Node& n, const std::vector<std::string>& scope);
  void check_ident(const sexpr::Node& n) const;
  void check_arity(const sexpr::Node& at, std::map<std::string, std::size_t>& seen,
                   const std::string& name, std::size_t arity, bool predicate) const;

  ParseOptions opts_;
  std::map<std::string, std::size_t> predicate_arity_;
  std::map<std::string, std::size_t> function_arity_;
};

}  // namespace geoconv

#endif  // GEOCONV_SEXPR_HPP
