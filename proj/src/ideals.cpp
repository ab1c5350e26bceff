#include "isg/ideals.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "isg/error.hpp"

namespace isg {

bool is_compatible_ideal(const FiniteInverseSemigroup& s, const ElementSet& a) {
  return s.down_set(a) == a && s.is_compatible(a);
}

IdealSemigroup IdealSemigroup::build(SemigroupPtr s, IdealOptions opts) {
  IdealSemigroup c;
  c.base_             = std::move(s);
  const auto& base    = *c.base_;
  const std::size_t n = base.size();

  std::vector<ElementSet> compat(n, ElementSet(n));
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y)
      if (base.compatible(x, y)) compat[x].insert(y);

  // Linear extension of the natural order: deciding x after everything below it.
  std::vector<ElementId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return base.down(a).count() < base.down(b).count(); });

  std::size_t nodes = 0;
  ElementSet cur(n);
  std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
    if (++nodes > opts.candidate_cap) {
      throw Error(ErrorKind::SizeLimit, "compatible ideal search exceeded " + std::to_string(opts.candidate_cap) + " nodes");
    }
    if (pos == n) {
      c.carriers_.push_back(cur);
      return;
    }
    const ElementId x = order[pos];
    if (!base.is_zero(x)) dfs(pos + 1);
    ElementSet strictly_below = base.down(x);
    strictly_below.erase(x);
    if (strictly_below.is_subset_of(cur) && cur.is_subset_of(compat[x])) {
      cur.insert(x);
      dfs(pos + 1);
      cur.erase(x);
    }
  };
  dfs(0);
  std::sort(c.carriers_.begin(), c.carriers_.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });

  const std::size_t m = c.carriers_.size();
  for (ElementId i = 0; i < m; ++i) c.index_.emplace(c.carriers_[i], i);

  SemigroupTable t;
  t.mul.assign(m, std::vector<ElementId>(m));
  for (ElementId i = 0; i < m; ++i) {
    t.names.push_back(base.format(c.carriers_[i]));
    for (ElementId j = 0; j < m; ++j) {
      const ElementSet prod = base.down_set(base.product(c.carriers_[i], c.carriers_[j]));
      auto k                = c.find(prod);
      if (!k) {
        throw Error(ErrorKind::ValidationError, "product of " + base.format(c.carriers_[i]) + " and " +
                                                    base.format(c.carriers_[j]) + " is not a compatible ideal");
      }
      t.mul[i][j] = *k;
    }
  }
  c.ideals_ = FiniteInverseSemigroup::make(std::move(t));

  c.principal_.resize(n);
  for (ElementId a = 0; a < n; ++a) c.principal_[a] = c.index_of(base.down(a));
  return c;
}

std::optional<ElementId> IdealSemigroup::find(const ElementSet& carrier) const {
  auto it = index_.find(carrier);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId IdealSemigroup::index_of(const ElementSet& carrier) const {
  if (auto i = find(carrier)) return *i;
  throw Error(ErrorKind::InvalidArgument, base_->format(carrier) + " is not a compatible ideal");
}

bool is_closed(const Coverage& cov, const ElementSet& a) {
  for (ElementId x = 0; x < cov.base().size(); ++x) {
    if (a.contains(x)) continue;
    for (const auto& c : cov.covers(x))
      if (c.is_subset_of(a)) return false;
    if (cov.includes_join_covers() && cov.join_pseudogroup()->join(a & cov.base().down(x)) == x) return false;
  }
  return true;
}

namespace {

std::vector<std::vector<ElementSet>> all_minimal_covers(const Coverage& cov) {
  std::vector<std::vector<ElementSet>> out;
  for (ElementId a = 0; a < cov.base().size(); ++a) out.push_back(minimal_covers(cov, a));
  return out;
}

// Least down-closed set above `start` closed under the coverage. When
// `require_compatible` is set, throws as soon as it stops being compatible.
ElementSet close_down(const Coverage& cov, const std::vector<std::vector<ElementSet>>& minimal, ElementSet cur,
                      bool require_compatible) {
  const auto& s = cov.base();
  cur           = s.down_set(cur);
  bool changed  = true;
  while (changed) {
    changed = false;
    for (ElementId x = 0; x < s.size(); ++x) {
      if (cur.contains(x) || !has_cover_inside(cov, minimal[x], x, cur)) continue;
      if (require_compatible) {
        for (auto y : cur)
          for (auto z : s.down(x))
            if (!s.compatible(y, z)) {
              throw Error(ErrorKind::CompatibilityLost, "closure adds " + s.name(x) + " to " + s.format(cur) + " but " +
                                                            s.name(z) + " and " + s.name(y) + " are not compatible");
            }
      }
      cur |= s.down(x);
      changed = true;
    }
  }
  return cur;
}

}  // namespace

ElementSet coverage_closure(const Coverage& cov, const ElementSet& a) {
  return close_down(cov, all_minimal_covers(cov), a, false);
}

ElementMap nucleus_from_coverage(const IdealSemigroup& c, const Coverage& cov) {
  if (!(cov.base() == c.base())) throw Error(ErrorKind::BaseMismatch, "coverage and ideals live on different semigroups");
  const auto minimal = all_minimal_covers(cov);
  ElementMap nu(c.size());
  for (ElementId i = 0; i < c.size(); ++i) nu[i] = c.index_of(close_down(cov, minimal, c.carrier(i), true));
  return nu;
}

std::optional<ElementId> UniversalPseudogroup::find(const ElementSet& carrier) const {
  auto i = ideals.find(carrier);
  if (!i || nucleus[*i] != *i) return std::nullopt;
  return quotient.to_quotient[*i];
}

UniversalPseudogroup universal_pseudogroup(const Coverage& cov, IdealOptions opts) {
  UniversalPseudogroup u{IdealSemigroup::build(cov.base_ptr(), opts), {}, {}, std::nullopt, {}};
  u.nucleus  = nucleus_from_coverage(u.ideals, cov);
  u.quotient = apply_nucleus_quotient(*u.ideals.semigroup(), u.nucleus);
  u.pseudogroup.emplace(u.quotient.semigroup);
  u.pi.resize(cov.base().size());
  for (ElementId a = 0; a < cov.base().size(); ++a) u.pi[a] = u.quotient.to_quotient[u.ideals.principal(a)];
  return u;
}

std::size_t count_extensions(const Pseudogroup& from, const Pseudogroup& to,
                             const std::vector<std::optional<ElementId>>& fixed, std::size_t stop_at) {
  const auto& p       = from.semigroup();
  const auto& t       = to.semigroup();
  const std::size_t n = p.size();

  // compatible pairs and their joins
  std::vector<std::vector<std::pair<ElementId, ElementId>>> joins_of(n);  // (a, b) with a v b = key
  std::vector<std::vector<std::pair<ElementId, ElementId>>> joins_with(n);  // (b, a v b) for key a
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (p.compatible(a, b)) {
        const ElementId j = from.join(a, b);
        joins_of[j].push_back({a, b});
        joins_with[a].push_back({b, j});
        joins_with[b].push_back({a, j});
      }

  std::vector<ElementId> order;
  for (ElementId x = 0; x < n; ++x)
    if (fixed[x]) order.push_back(x);
  std::vector<ElementId> rest;
  for (ElementId x = 0; x < n; ++x)
    if (!fixed[x]) rest.push_back(x);
  std::stable_sort(rest.begin(), rest.end(), [&](ElementId a, ElementId b) { return p.down(a).count() < p.down(b).count(); });
  order.insert(order.end(), rest.begin(), rest.end());

  std::vector<std::optional<ElementId>> f(n);
  auto consistent = [&](ElementId x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!f[y]) continue;
      if (auto xy = f[p.mul(x, y)]; xy && *xy != t.mul(*f[x], *f[y])) return false;
      if (auto yx = f[p.mul(y, x)]; yx && *yx != t.mul(*f[y], *f[x])) return false;
    }
    for (ElementId u = 0; u < n; ++u) {
      if (!f[u]) continue;
      for (ElementId v = 0; v < n; ++v)
        if (f[v] && p.mul(u, v) == x && *f[x] != t.mul(*f[u], *f[v])) return false;
    }
    for (auto [a, b] : joins_of[x])
      if (f[a] && f[b] && *f[x] != to.join(*f[a], *f[b])) return false;
    for (auto [b, j] : joins_with[x])
      if (f[b] && f[j] && (!t.compatible(*f[x], *f[b]) || *f[j] != to.join(*f[x], *f[b]))) return false;
    return true;
  };

  std::size_t found = 0;
  std::function<void(std::size_t)> go = [&](std::size_t pos) {
    if (found >= stop_at) return;
    if (pos == n) {
      ++found;
      return;
    }
    const ElementId x = order[pos];
    if (fixed[x]) {
      f[x] = fixed[x];
      if (consistent(x)) go(pos + 1);
      f[x].reset();
      return;
    }
    for (ElementId v = 0; v < t.size(); ++v) {
      f[x] = v;
      if (consistent(x)) go(pos + 1);
    }
    f[x].reset();
  };
  go(0);
  return found;
}

UniversalPropertyReport verify_universal_property(const UniversalPseudogroup& u, const Coverage& cov,
                                                  const Pseudogroup& target, const ElementMap& theta,
                                                  UniversalPropertyOptions opts) {
  const auto ctj = is_cover_to_join(cov, target, theta);
  if (!ctj.cover_to_join) throw Error(ErrorKind::PreconditionFailed, "theta is not cover-to-join: " + ctj.witness);
  if (!ctj.idempotent_pure) throw Error(ErrorKind::PreconditionFailed, "theta is not idempotent-pure");

  const auto& s = cov.base();
  const auto& p = u.semigroup();
  const auto& t = target.semigroup();
  UniversalPropertyReport rep;
  rep.factor.resize(p.size());
  for (ElementId i = 0; i < p.size(); ++i) {
    ElementSet img(t.size());
    for (auto a : u.carrier(i)) img.insert(theta[a]);
    rep.factor[i] = target.join(img);
  }

  if (auto bad = pseudogroup_hom_violation(u.p(), target, rep.factor)) {
    rep.witness = *bad;
  } else {
    rep.homomorphism = true;
  }
  rep.factors = true;
  for (ElementId a = 0; a < s.size(); ++a)
    if (rep.factor[u.pi[a]] != theta[a]) {
      rep.factors = false;
      rep.witness = "factor(pi(" + s.name(a) + ")) != theta(" + s.name(a) + ")";
    }
  rep.idempotent_pure = is_idempotent_pure(p, t, rep.factor);

  rep.unique_by_generation = true;
  for (ElementId i = 0; i < p.size(); ++i) {
    ElementSet pis(p.size());
    for (auto a : u.carrier(i)) pis.insert(u.pi[a]);
    if (u.p().join(pis) != i) {
      rep.unique_by_generation = false;
      rep.witness              = p.name(i) + " is not the join of the pi-images of its members";
    }
  }

  if (p.size() <= opts.exhaustive_limit) {
    std::vector<std::optional<ElementId>> fixed(p.size());
    bool clash = false;
    for (ElementId a = 0; a < s.size(); ++a) {
      if (fixed[u.pi[a]] && *fixed[u.pi[a]] != theta[a]) clash = true;
      fixed[u.pi[a]] = theta[a];
    }
    rep.factorizations = clash ? 0 : count_extensions(u.p(), target, fixed, 2);
  }
  return rep;
}

GeneratedCoverage generated_coverage(const Pseudogroup& p, const ElementSet& carrier, GeneratedOptions opts) {
  const auto& ps = p.semigroup();
  auto sub       = subsemigroup(ps, carrier);
  for (ElementId x = 0; x < ps.size(); ++x)
    if (p.join(carrier & ps.down(x)) != x) {
      throw Error(ErrorKind::NotGenerating, ps.name(x) + " is not a join of elements of " + ps.format(carrier));
    }
  Coverage cov(sub.semigroup);
  for (ElementId i = 0; i < sub.to_parent.size(); ++i) {
    const ElementId a = sub.to_parent[i];
    const auto below  = (carrier & ps.down(a)).to_vector();
    if (below.size() > opts.max_down_set) {
      throw Error(ErrorKind::SizeLimit, "↓" + ps.name(a) + " has " + std::to_string(below.size()) + " generators");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << below.size()); ++mask) {
      ElementSet x(ps.size());
      for (std::size_t k = 0; k < below.size(); ++k)
        if (mask >> k & 1) x.insert(below[k]);
      if (p.join(x) == a) cov.add(i, sub.lower(x));
    }
  }
  return {std::move(sub), std::move(cov)};
}

ReconstructionReport verify_reconstruction(const Pseudogroup& p, const GeneratedCoverage& g,
                                           const UniversalPseudogroup& u) {
  ReconstructionReport rep;
  const auto& q = u.semigroup();
  rep.phi.resize(q.size());
  ElementSet hit(p.size());
  for (ElementId i = 0; i < q.size(); ++i) {
    rep.phi[i] = p.join(g.sub.lift(u.carrier(i)));
    hit.insert(rep.phi[i]);
  }
  rep.bijective = q.size() == p.size() && hit.count() == p.size();
  if (!rep.bijective) rep.witness = std::to_string(q.size()) + " ideals map onto " + std::to_string(hit.count()) + " of " +
                                    std::to_string(p.size()) + " elements";
  if (auto bad = pseudogroup_hom_violation(u.p(), p, rep.phi)) {
    rep.witness = *bad;
  } else {
    rep.pseudogroup_hom = true;
  }
  return rep;
}

}  // namespace isg
