#include "isg/pseudogroup.hpp"

#include <cstdint>

#include "isg/error.hpp"

namespace isg {

std::optional<LawViolation> pseudogroup_violation(const FiniteInverseSemigroup& s) {
  if (!s.zero()) return LawViolation{"has-zero", "no zero element"};
  if (!s.identity()) return LawViolation{"has-identity", "no identity element"};
  const std::size_t n = s.size();

  std::vector<std::optional<ElementId>> joins(n * n);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a; b < n; ++b) {
      if (!s.compatible(a, b)) continue;
      auto j = s.join(ElementSet(n, {a, b}));
      if (!j) return LawViolation{"compatible-join", s.name(a) + " and " + s.name(b) + " are compatible but have no join"};
      joins[a * n + b] = joins[b * n + a] = j;
    }

  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b) {
      const auto j = joins[a * n + b];
      if (!j) continue;
      for (ElementId c = 0; c < n; ++c) {
        if (s.compatible(c, a) && s.compatible(c, b) && !s.compatible(c, *j)) {
          return LawViolation{"join-compatibility", s.name(c) + " is compatible with " + s.name(a) + " and " +
                                                        s.name(b) + " but not with their join " + s.name(*j)};
        }
      }
      for (ElementId x = 0; x < n; ++x) {
        const auto left = joins[s.mul(x, a) * n + s.mul(x, b)];
        if (!left || *left != s.mul(x, *j)) {
          return LawViolation{"left-distributivity",
                              s.name(x) + "(" + s.name(a) + " v " + s.name(b) + ") != " + s.name(x) + s.name(a) +
                                  " v " + s.name(x) + s.name(b)};
        }
        const auto right = joins[s.mul(a, x) * n + s.mul(b, x)];
        if (!right || *right != s.mul(*j, x)) {
          return LawViolation{"right-distributivity",
                              "(" + s.name(a) + " v " + s.name(b) + ")" + s.name(x) + " != " + s.name(a) + s.name(x) +
                                  " v " + s.name(b) + s.name(x)};
        }
      }
    }
  return std::nullopt;
}

Pseudogroup::Pseudogroup(SemigroupPtr s) : s_(std::move(s)) {
  if (auto bad = pseudogroup_violation(*s_)) throw Error(ErrorKind::NotAPseudogroup, bad->law + ": " + bad->witness);
}

ElementId Pseudogroup::join(const ElementSet& compatible) const {
  if (compatible.empty()) return zero();
  auto j = s_->join(compatible);
  if (!j) throw Error(ErrorKind::InvalidArgument, "no join for " + s_->format(compatible));
  return *j;
}

ElementId Pseudogroup::join(ElementId a, ElementId b) const { return join(ElementSet(size(), {a, b})); }

std::optional<std::string> pseudogroup_hom_violation(const Pseudogroup& from, const Pseudogroup& to,
                                                     const ElementMap& f) {
  if (auto bad = homomorphism_violation(from.semigroup(), to.semigroup(), f)) return bad;
  const auto& s = from.semigroup();
  for (ElementId a = 0; a < s.size(); ++a)
    for (ElementId b = a + 1; b < s.size(); ++b) {
      if (!s.compatible(a, b)) continue;
      const ElementId j = from.join(a, b);
      if (f[j] != to.join(f[a], f[b])) {
        return "f(" + s.name(a) + " v " + s.name(b) + ") = " + to.semigroup().name(f[j]) + " is not the join of the images";
      }
    }
  return std::nullopt;
}

std::optional<LawViolation> nucleus_violation(const FiniteInverseSemigroup& s, const ElementMap& nu) {
  const std::size_t n = s.size();
  if (nu.size() != n) return LawViolation{"domain", "map has wrong size"};
  for (auto v : nu)
    if (v >= n) return LawViolation{"domain", "map value out of range"};
  for (ElementId a = 0; a < n; ++a)
    if (!s.leq(a, nu[a])) return LawViolation{"N1", s.name(a) + " is not below nu(" + s.name(a) + ") = " + s.name(nu[a])};
  for (ElementId a = 0; a < n; ++a)
    for (auto b : s.up(a))
      if (!s.leq(nu[a], nu[b])) {
        return LawViolation{"N2", s.name(a) + " <= " + s.name(b) + " but nu(" + s.name(a) + ") = " + s.name(nu[a]) +
                                      " is not below nu(" + s.name(b) + ") = " + s.name(nu[b])};
      }
  for (ElementId a = 0; a < n; ++a)
    if (nu[nu[a]] != nu[a]) return LawViolation{"N3", "nu(nu(" + s.name(a) + ")) != nu(" + s.name(a) + ")"};
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (!s.leq(s.mul(nu[a], nu[b]), nu[s.mul(a, b)])) {
        return LawViolation{"N4", "nu(" + s.name(a) + ")nu(" + s.name(b) + ") is not below nu(" + s.name(a) + s.name(b) + ")"};
      }
  return std::nullopt;
}

Quotient apply_nucleus_quotient(const FiniteInverseSemigroup& s, const ElementMap& nu) {
  if (auto bad = nucleus_violation(s, nu)) throw Error(ErrorKind::NucleusAxiomFails, bad->law + ": " + bad->witness);
  Quotient q;
  std::vector<std::optional<ElementId>> index(s.size());
  for (ElementId a = 0; a < s.size(); ++a) {
    if (nu[a] == a) {
      index[a] = q.to_parent.size();
      q.to_parent.push_back(a);
    }
  }
  q.to_quotient.resize(s.size());
  for (ElementId a = 0; a < s.size(); ++a) q.to_quotient[a] = *index[nu[a]];

  SemigroupTable t;
  const std::size_t m = q.to_parent.size();
  t.mul.assign(m, std::vector<ElementId>(m));
  for (ElementId i = 0; i < m; ++i) {
    t.names.push_back(s.name(q.to_parent[i]));
    for (ElementId j = 0; j < m; ++j) t.mul[i][j] = q.to_quotient[s.mul(q.to_parent[i], q.to_parent[j])];
  }
  q.semigroup = FiniteInverseSemigroup::make(std::move(t));
  return q;
}

std::vector<ElementMap> enumerate_nuclei(const FiniteInverseSemigroup& s, std::size_t cap) {
  const std::size_t n = s.size();
  if (n > cap || n >= 63) {
    throw Error(ErrorKind::SizeLimit, "nucleus enumeration needs |S| <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
  std::vector<ElementMap> out;
  ElementMap nu(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet fixed(n);
    for (ElementId b = 0; b < n; ++b)
      if (mask >> b & 1) fixed.insert(b);
    bool ok = true;
    for (ElementId a = 0; a < n && ok; ++a) {
      const ElementSet above = fixed & s.up(a);
      ok = false;
      for (auto m : above)
        if (above.is_subset_of(s.up(m))) {
          nu[a] = m;
          ok    = true;
          break;
        }
    }
    if (ok && !nucleus_violation(s, nu)) out.push_back(nu);
  }
  return out;
}

}  // namespace isg
