#include "isg/filters.hpp"

#include "isg/error.hpp"

namespace isg {

std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::all: return "all";
    case FilterKind::ultra: return "ultra";
    case FilterKind::tight: return "tight";
    case FilterKind::completely_prime: return "completely-prime";
  }
  return "all";
}

bool FilterFamily::contains_min(ElementId m) const {
  for (const auto& f : filters)
    if (f.min == m) return true;
  return false;
}

ElementSet FilterFamily::mins(std::size_t universe) const {
  ElementSet out(universe);
  for (const auto& f : filters) out.insert(f.min);
  return out;
}

PrincipalFilter principal_filter(const FiniteInverseSemigroup& s, ElementId m) {
  const ElementSet& up = s.up(m);
  if (up.count() == s.size()) throw Error(ErrorKind::InvalidArgument, "↑" + s.name(m) + " is the whole semigroup");
  return {m, up};
}

bool is_filter(const FiniteInverseSemigroup& s, const ElementSet& a) {
  if (a.empty() || a.count() == s.size()) return false;
  if (!(s.up_set(a) == a)) return false;
  for (auto x : a)
    for (auto y : a)
      if (!(s.down(x) & s.down(y)).intersects(a)) return false;
  return true;
}

bool is_idempotent_filter(const FiniteInverseSemigroup& s, const ElementSet& a) {
  const ElementSet& e = s.idempotents();
  if (a.empty() || !a.is_subset_of(e) || a == e) return false;
  if (!((s.up_set(a) & e) == a)) return false;
  for (auto x : a)
    for (auto y : a)
      if (!a.contains(s.mul(x, y))) return false;
  return true;
}

std::optional<ElementId> minimum(const FiniteInverseSemigroup& s, const ElementSet& a) {
  for (auto m : a)
    if (a.is_subset_of(s.up(m))) return m;
  return std::nullopt;
}

FilterFamily enumerate_filters(const FiniteInverseSemigroup& s) {
  FilterFamily out;
  for (ElementId m = 0; m < s.size(); ++m)
    if (s.up(m).count() != s.size()) out.filters.push_back({m, s.up(m)});
  return out;
}

FilterFamily ultrafilters(const FiniteInverseSemigroup& s) {
  const auto all = enumerate_filters(s);
  FilterFamily out{FilterKind::ultra, {}};
  for (const auto& f : all.filters) {
    bool maximal = true;
    for (const auto& g : all.filters)
      if (g.min != f.min && f.carrier.is_subset_of(g.carrier)) maximal = false;
    if (maximal) out.filters.push_back(f);
  }
  return out;
}

bool is_completely_prime(const Pseudogroup& p, ElementId m) {
  if (m == p.zero()) return false;
  ElementSet below = p.semigroup().down(m);
  below.erase(m);
  return p.join(below) != m;
}

bool is_completely_prime(const Pseudogroup& p, const PrincipalFilter& f) { return is_completely_prime(p, f.min); }

FilterFamily completely_prime_filters(const Pseudogroup& p) {
  FilterFamily out{FilterKind::completely_prime, {}};
  for (const auto& f : enumerate_filters(p.semigroup()).filters)
    if (is_completely_prime(p, f)) out.filters.push_back(f);
  return out;
}

PrincipalFilter germ(const FiniteInverseSemigroup& s, const ElementSet& f, ElementId x) {
  if (!is_idempotent_filter(s, f)) throw Error(ErrorKind::InvalidArgument, s.format(f) + " is not a filter of E(S)");
  if (!f.contains(s.ran(x))) {
    throw Error(ErrorKind::DomainMismatch, s.name(x) + s.name(s.inv(x)) + " = " + s.name(s.ran(x)) + " is not in " + s.format(f));
  }
  ElementSet out(s.size());
  for (ElementId t = 0; t < s.size(); ++t) {
    if (!f.contains(s.ran(t))) continue;
    for (auto e : f)
      if (s.mul(e, t) == s.mul(e, x)) {
        out.insert(t);
        break;
      }
  }
  auto m = minimum(s, out);
  if (!m) throw Error(ErrorKind::InvalidArgument, "germ " + s.format(out) + " has no minimum");
  return {*m, out};
}

ElementSet germ_base_filter(const FiniteInverseSemigroup& s, const Quotient& q, const PrincipalFilter& a) {
  const auto& sv = *q.semigroup;
  ElementSet products(sv.size());
  for (auto x : a.carrier)
    for (auto y : a.carrier) products.insert(sv.mul(x, sv.inv(y)));
  const ElementSet target = sv.up_set(products) & sv.idempotents();
  ElementSet out(s.size());
  for (ElementId x = 0; x < s.size(); ++x)
    if (target.contains(q.to_quotient[x])) out.insert(x);
  return out;
}

}  // namespace isg
