#include "isg/semigroup.hpp"

#include <sstream>

#include "isg/error.hpp"

namespace isg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NotInverseSemigroup: return "NotInverseSemigroup";
    case ErrorKind::ZeroViolation: return "ZeroViolation";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotDownSet: return "NotDownSet";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::ConjugationClosureFails: return "ConjugationClosureFails";
    case ErrorKind::NoZero: return "NoZero";
    case ErrorKind::NotHomomorphism: return "NotHomomorphism";
    case ErrorKind::NotIdempotentPure: return "NotIdempotentPure";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotAPseudogroup: return "NotAPseudogroup";
    case ErrorKind::CompatibilityLost: return "CompatibilityLost";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NucleusAxiomFails: return "NucleusAxiomFails";
    case ErrorKind::NotGenerating: return "NotGenerating";
    case ErrorKind::NotEtale: return "NotEtale";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::NotT1Sober: return "NotT1Sober";
    case ErrorKind::NotAGroupoid: return "NotAGroupoid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

FiniteInverseSemigroup FiniteInverseSemigroup::validate(SemigroupTable table, ValidateOptions opts) {
  const std::size_t n = table.names.size();
  if (n == 0) throw Error(ErrorKind::ValidationError, "semigroup has no elements");

  FiniteInverseSemigroup s;
  s.names_ = std::move(table.names);
  for (ElementId i = 0; i < n; ++i) {
    if (s.names_[i].empty()) throw Error(ErrorKind::ValidationError, "element " + std::to_string(i) + " has an empty name");
    if (!s.index_.emplace(s.names_[i], i).second) {
      throw Error(ErrorKind::ValidationError, "duplicate element name '" + s.names_[i] + "'");
    }
  }

  if (table.mul.size() != n) throw Error(ErrorKind::ValidationError, "multiplication table is not square");
  s.mul_.reserve(n * n);
  for (ElementId i = 0; i < n; ++i) {
    if (table.mul[i].size() != n) {
      throw Error(ErrorKind::ValidationError, "row '" + s.names_[i] + "' of the multiplication table has wrong length");
    }
    for (ElementId j = 0; j < n; ++j) {
      if (table.mul[i][j] >= n) throw Error(ErrorKind::ValidationError, "table entry out of range");
      s.mul_.push_back(table.mul[i][j]);
    }
  }

  if (opts.check_associativity) {
    for (ElementId i = 0; i < n; ++i)
      for (ElementId j = 0; j < n; ++j) {
        const ElementId ij = s.mul(i, j);
        for (ElementId k = 0; k < n; ++k) {
          if (s.mul(ij, k) != s.mul(i, s.mul(j, k))) {
            throw Error(ErrorKind::NonAssociative,
                        "(" + s.names_[i] + "*" + s.names_[j] + ")*" + s.names_[k] + " != " + s.names_[i] + "*(" +
                            s.names_[j] + "*" + s.names_[k] + ")");
          }
        }
      }
  }

  // Unique inverse: exactly one y with xyx = x and yxy = y.
  s.inv_.assign(n, 0);
  for (ElementId x = 0; x < n; ++x) {
    std::vector<ElementId> candidates;
    for (ElementId y = 0; y < n; ++y) {
      if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y) candidates.push_back(y);
    }
    if (candidates.size() != 1) {
      std::string w = "element '" + s.names_[x] + "' has " + std::to_string(candidates.size()) + " inverses";
      if (!candidates.empty()) {
        w += " (";
        for (std::size_t c = 0; c < candidates.size(); ++c) w += (c ? ", " : "") + s.names_[candidates[c]];
        w += ")";
      }
      throw Error(ErrorKind::NotInverseSemigroup, w);
    }
    s.inv_[x] = candidates.front();
  }

  auto absorbs = [&](ElementId z) -> std::optional<ElementId> {
    for (ElementId x = 0; x < n; ++x)
      if (s.mul(z, x) != z || s.mul(x, z) != z) return x;
    return std::nullopt;
  };
  auto neutral = [&](ElementId e) -> std::optional<ElementId> {
    for (ElementId x = 0; x < n; ++x)
      if (s.mul(e, x) != x || s.mul(x, e) != x) return x;
    return std::nullopt;
  };

  if (table.zero) {
    if (*table.zero >= n) throw Error(ErrorKind::ZeroViolation, "declared zero is not an element");
    if (auto bad = absorbs(*table.zero)) {
      throw Error(ErrorKind::ZeroViolation, "declared zero '" + s.names_[*table.zero] + "' does not absorb '" + s.names_[*bad] + "'");
    }
    s.zero_ = table.zero;
  } else {
    for (ElementId z = 0; z < n && !s.zero_; ++z)
      if (!absorbs(z)) s.zero_ = z;
  }
  if (table.identity) {
    if (*table.identity >= n) throw Error(ErrorKind::IdentityViolation, "declared identity is not an element");
    if (auto bad = neutral(*table.identity)) {
      throw Error(ErrorKind::IdentityViolation,
                  "declared identity '" + s.names_[*table.identity] + "' does not fix '" + s.names_[*bad] + "'");
    }
    s.identity_ = table.identity;
  } else {
    for (ElementId e = 0; e < n && !s.identity_; ++e)
      if (!neutral(e)) s.identity_ = e;
  }

  s.idempotents_ = ElementSet(n);
  for (ElementId x = 0; x < n; ++x)
    if (s.mul(x, x) == x) s.idempotents_.insert(x);

  s.up_.assign(n, ElementSet(n));
  s.down_.assign(n, ElementSet(n));
  for (ElementId x = 0; x < n; ++x) {
    const ElementId d = s.dom(x);
    for (ElementId y = 0; y < n; ++y) {
      if (s.mul(y, d) == x) {
        s.up_[x].insert(y);
        s.down_[y].insert(x);
      }
    }
  }
  return s;
}

SemigroupPtr FiniteInverseSemigroup::make(SemigroupTable table, ValidateOptions opts) {
  return std::make_shared<const FiniteInverseSemigroup>(validate(std::move(table), opts));
}

std::optional<ElementId> FiniteInverseSemigroup::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId FiniteInverseSemigroup::at(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::InvalidArgument, "unknown element '" + std::string(name) + "'");
}

ElementSet FiniteInverseSemigroup::up_set(const ElementSet& a) const {
  ElementSet out(size());
  for (auto x : a) out |= up_[x];
  return out;
}

ElementSet FiniteInverseSemigroup::down_set(const ElementSet& a) const {
  ElementSet out(size());
  for (auto x : a) out |= down_[x];
  return out;
}

bool FiniteInverseSemigroup::is_compatible(const ElementSet& a) const {
  for (auto x : a)
    for (auto y : a)
      if (y > x && !compatible(x, y)) return false;
  return true;
}

ElementSet FiniteInverseSemigroup::set_of(std::initializer_list<std::string_view> names) const {
  ElementSet out(size());
  for (auto nm : names) out.insert(at(nm));
  return out;
}

ElementSet FiniteInverseSemigroup::product(const ElementSet& a, const ElementSet& b) const {
  ElementSet out(size());
  for (auto x : a)
    for (auto y : b) out.insert(mul(x, y));
  return out;
}

ElementSet FiniteInverseSemigroup::left_translate(ElementId b, const ElementSet& x) const {
  ElementSet out(size());
  for (auto e : x) out.insert(mul(b, e));
  return out;
}

ElementSet FiniteInverseSemigroup::right_translate(const ElementSet& x, ElementId b) const {
  ElementSet out(size());
  for (auto e : x) out.insert(mul(e, b));
  return out;
}

ElementSet FiniteInverseSemigroup::inverse(const ElementSet& x) const {
  ElementSet out(size());
  for (auto e : x) out.insert(inv_[e]);
  return out;
}

std::optional<ElementId> FiniteInverseSemigroup::join(const ElementSet& a) const {
  ElementSet bounds = all();
  for (auto x : a) bounds &= up_[x];
  for (auto j : bounds)
    if (bounds.is_subset_of(up_[j])) return j;
  return std::nullopt;
}

std::string FiniteInverseSemigroup::format(const ElementSet& a) const {
  std::string out = "{";
  bool first = true;
  for (auto x : a) {
    if (!first) out += ", ";
    out += names_[x];
    first = false;
  }
  return out + "}";
}

SemigroupTable FiniteInverseSemigroup::table() const {
  SemigroupTable t;
  t.names = names_;
  t.mul.assign(size(), std::vector<ElementId>(size()));
  for (ElementId i = 0; i < size(); ++i)
    for (ElementId j = 0; j < size(); ++j) t.mul[i][j] = mul(i, j);
  t.zero     = zero_;
  t.identity = identity_;
  return t;
}

std::optional<std::string> homomorphism_violation(const FiniteInverseSemigroup& from,
                                                  const FiniteInverseSemigroup& to, const ElementMap& f) {
  if (f.size() != from.size()) return "map has " + std::to_string(f.size()) + " entries, expected " + std::to_string(from.size());
  for (auto v : f)
    if (v >= to.size()) return std::string("map value out of range");
  for (ElementId x = 0; x < from.size(); ++x)
    for (ElementId y = 0; y < from.size(); ++y) {
      if (f[from.mul(x, y)] != to.mul(f[x], f[y])) {
        return "f(" + from.name(x) + "*" + from.name(y) + ") = " + to.name(f[from.mul(x, y)]) + " but f(" +
               from.name(x) + ")*f(" + from.name(y) + ") = " + to.name(to.mul(f[x], f[y]));
      }
    }
  return std::nullopt;
}

bool is_idempotent_pure(const FiniteInverseSemigroup& from, const FiniteInverseSemigroup& to, const ElementMap& f) {
  for (ElementId s = 0; s < from.size(); ++s)
    if (to.is_idempotent(f[s]) && !from.is_idempotent(s)) return false;
  return true;
}

ElementSet Subsemigroup::lift(const ElementSet& sub_set) const {
  ElementSet out(carrier.universe());
  for (auto x : sub_set) out.insert(to_parent[x]);
  return out;
}

ElementSet Subsemigroup::lower(const ElementSet& parent_set) const {
  ElementSet out(to_parent.size());
  for (auto x : parent_set)
    if (from_parent[x]) out.insert(*from_parent[x]);
  return out;
}

Subsemigroup subsemigroup(const FiniteInverseSemigroup& parent, const ElementSet& carrier) {
  Subsemigroup sub;
  sub.carrier = carrier;
  sub.from_parent.assign(parent.size(), std::nullopt);
  for (auto x : carrier) {
    sub.from_parent[x] = sub.to_parent.size();
    sub.to_parent.push_back(x);
  }
  const std::size_t m = sub.to_parent.size();
  SemigroupTable t;
  t.mul.assign(m, std::vector<ElementId>(m));
  for (ElementId i = 0; i < m; ++i) {
    t.names.push_back(parent.name(sub.to_parent[i]));
    if (!carrier.contains(parent.inv(sub.to_parent[i]))) {
      throw Error(ErrorKind::ValidationError, "subset not closed under inverse at '" + parent.name(sub.to_parent[i]) + "'");
    }
    for (ElementId j = 0; j < m; ++j) {
      const ElementId p = parent.mul(sub.to_parent[i], sub.to_parent[j]);
      if (!sub.from_parent[p]) {
        throw Error(ErrorKind::ValidationError, "subset not closed under product: " + parent.name(sub.to_parent[i]) + "*" +
                                                    parent.name(sub.to_parent[j]));
      }
      t.mul[i][j] = *sub.from_parent[p];
    }
  }
  sub.semigroup = FiniteInverseSemigroup::make(std::move(t), {.check_associativity = false});
  return sub;
}

Subsemigroup idempotent_subsemigroup(const FiniteInverseSemigroup& parent) {
  return subsemigroup(parent, parent.idempotents());
}

}  // namespace isg
