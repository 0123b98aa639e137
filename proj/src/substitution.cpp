#include "geoconv/substitution.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace geoconv {

namespace {

using Renaming = std::vector<std::pair<std::string, std::string>>;  // sorted by source

Formula rename(Formula f, const Renaming& r) {
  for (const auto& [a, c] : r) f = subst_free_var(f, a, c);
  return f;
}

Term rename(Term t, const Renaming& r) {
  for (const auto& [a, c] : r) t = subst_term(t, a, Term::free(c));
  return t;
}

std::string rename(const std::string& v, const Renaming& r) {
  for (const auto& [a, c] : r)
    if (a == v) return c;
  return v;
}

Sequent map_sequent(const Sequent& s, const Renaming& r, const Formula* psi) {
  Sequent out;
  out.ante.reserve(s.ante.size());
  out.succ.reserve(s.succ.size());
  for (const auto& f : s.ante) {
    Formula g = rename(f, r);
    out.ante.push_back(psi ? subst_placeholder(g, *psi) : g);
  }
  for (const auto& f : s.succ) {
    Formula g = rename(f, r);
    out.succ.push_back(psi ? subst_placeholder(g, *psi) : g);
  }
  return out;
}

class PlaceholderSubst {
 public:
  PlaceholderSubst(const Derivation& d, const Formula& psi) : psi_(psi), avoid_(names_in(d)) {
    collect_names(psi, avoid_);
  }

  Derivation run(const Derivation& d, const Renaming& outer) {
    Renaming r = restrict(d, outer);
    Key key{d.identity(), r};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    RuleTag tag = d.tag();
    std::vector<Derivation> prem;
    prem.reserve(d.premises().size());
    if (tag.rule == Rule::AllR || tag.rule == Rule::ExL) {
      std::string c = fresh();
      Renaming inner = r;
      std::erase_if(inner, [&](const auto& p) { return p.first == tag.eigen; });
      inner.emplace_back(tag.eigen, c);
      std::sort(inner.begin(), inner.end());
      tag.eigen = c;
      prem.push_back(run(d.premise(0), inner));
    } else {
      if (tag.term) tag.term = rename(*tag.term, r);
      for (const auto& p : d.premises()) prem.push_back(run(p, r));
    }
    Derivation out(map_sequent(d.conclusion(), r, &psi_), std::move(tag), std::move(prem));
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  using Key = std::pair<const void*, Renaming>;

  // Only the variables free in the conclusion matter for this node.
  Renaming restrict(const Derivation& d, const Renaming& r) {
    if (r.empty()) return r;
    const std::set<std::string>& fv = free_in(d);
    Renaming out;
    for (const auto& p : r)
      if (fv.count(p.first)) out.push_back(p);
    return out;
  }

  const std::set<std::string>& free_in(const Derivation& d) {
    auto it = fv_.find(d.identity());
    if (it != fv_.end()) return it->second;
    std::set<std::string> s;
    for (const auto& f : d.conclusion().ante) collect_free_vars(f, s);
    for (const auto& f : d.conclusion().succ) collect_free_vars(f, s);
    if (d.tag().term) collect_free_vars(*d.tag().term, s);
    return fv_.emplace(d.identity(), std::move(s)).first->second;
  }

  std::string fresh() {
    for (;;) {
      std::string name = "v" + std::to_string(next_++);
      if (avoid_.insert(name).second) return name;
    }
  }

  Formula psi_;
  std::set<std::string> avoid_;
  std::size_t next_ = 0;
  std::map<Key, Derivation> memo_;
  std::unordered_map<const void*, std::set<std::string>> fv_;
};

}  // namespace

Derivation subst_var_deriv(const Derivation& d, const std::string& a, const std::string& c) {
  std::set<std::string> names = names_in(d);
  if (names.count(c)) throw PreconditionError("subst_var_deriv: variable " + c + " occurs in the derivation");
  if (!names.count(a) || a == c) return d;
  Renaming r{{a, c}};
  std::unordered_map<const void*, Derivation> memo;
  auto go = [&](auto& self, const Derivation& n) -> Derivation {
    auto it = memo.find(n.identity());
    if (it != memo.end()) return it->second;
    RuleTag tag = n.tag();
    if (tag.term) tag.term = rename(*tag.term, r);
    if (!tag.eigen.empty()) tag.eigen = rename(tag.eigen, r);
    std::vector<Derivation> prem;
    for (const auto& p : n.premises()) prem.push_back(self(self, p));
    Derivation out(map_sequent(n.conclusion(), r, nullptr), std::move(tag), std::move(prem));
    memo.emplace(n.identity(), out);
    return out;
  };
  return go(go, d);
}

Derivation subst_placeholder_deriv(const Derivation& d, const Formula& psi) {
  if (psi.is(Connective::Placeholder)) return d;
  PlaceholderSubst s(d, psi);
  return s.run(d, {});
}

Derivation subst_placeholder_deriv(const Derivation& d, const Formula& psi, const Theory& t) {
  require_plain_theory(t);
  return subst_placeholder_deriv(d, psi);
}

}  // namespace geoconv
