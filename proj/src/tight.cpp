#include "isg/tight.hpp"

#include <algorithm>

#include "isg/error.hpp"

namespace isg {

namespace {

void require_semilattice_with_zero(const FiniteInverseSemigroup& e) {
  if (!e.is_semilattice()) throw Error(ErrorKind::InvalidArgument, "expected a semilattice");
  if (!e.zero()) throw Error(ErrorKind::NoZero, "tight filters need a zero");
}

}  // namespace

FilterFamily tight_filters(const SemigroupPtr& e) {
  require_semilattice_with_zero(*e);
  const auto cov = tight_coverage(e);
  std::vector<std::vector<ElementSet>> minimal;
  for (ElementId a = 0; a < e->size(); ++a) minimal.push_back(minimal_covers(cov, a));

  FilterFamily out{FilterKind::tight, {}};
  for (const auto& f : enumerate_filters(*e).filters) {
    bool tight = true;
    for (auto a : f.carrier)
      for (const auto& z : minimal[a])
        if (!z.intersects(f.carrier)) tight = false;
    if (tight) out.filters.push_back(f);
  }
  return out;
}

FilterFamily tight_filters_by_closure(const SemigroupPtr& e) {
  require_semilattice_with_zero(*e);
  const auto all = enumerate_filters(*e);
  std::vector<ElementSet> carriers;
  for (const auto& f : all.filters) carriers.push_back(f.carrier);
  const auto patch = FiniteTopology::from_subbasis(carriers.size(), patch_subbasis(*e, carriers, false));

  ElementSet ultra(carriers.size());
  for (const auto& u : ultrafilters(*e).filters)
    for (std::size_t i = 0; i < carriers.size(); ++i)
      if (carriers[i] == u.carrier) ultra.insert(i);

  FilterFamily out{FilterKind::tight, {}};
  for (auto i : patch.closure(ultra)) out.filters.push_back(all.filters[i]);
  return out;
}

FilterFamily tight_filters_by_coverage(const SemigroupPtr& e) {
  require_semilattice_with_zero(*e);
  const auto all = enumerate_filters(*e);
  std::vector<ElementSet> carriers;
  for (const auto& f : all.filters) carriers.push_back(f.carrier);
  const auto patch = FiniteTopology::from_subbasis(carriers.size(), patch_subbasis(*e, carriers, true));
  const auto frame = frame_of_opens(patch);
  Pseudogroup fp(frame.semigroup);

  ElementMap theta;
  for (ElementId x = 0; x < e->size(); ++x) {
    ElementSet u(carriers.size());
    for (std::size_t i = 0; i < carriers.size(); ++i)
      if (carriers[i].contains(x)) u.insert(i);
    theta.push_back(frame.index_of(u));
  }
  const auto induced = induced_coverage(tight_coverage(e), fp, theta);

  FilterFamily out{FilterKind::tight, {}};
  for (auto i : subspace_from_coverage(patch, frame, induced)) out.filters.push_back(all.filters[i]);
  return out;
}

FilterGroupoid tight_groupoid(const SemigroupPtr& s) {
  if (!s->zero()) throw Error(ErrorKind::NoZero, "the tight groupoid needs a zero");
  const auto l   = filter_groupoid(s, {FilterTopology::patch, false});
  const auto sub = idempotent_subsemigroup(*s);
  const auto tf  = tight_filters(sub.semigroup);

  ElementSet units(l.carriers.size());
  for (Arrow a = 0; a < l.carriers.size(); ++a) {
    if (!l.groupoid.is_unit(a)) continue;
    // a unit is ↑e for an idempotent e; its trace on E(S) is ↑e there
    for (auto e : l.carriers[a] & s->idempotents())
      if (s->up(e) == l.carriers[a] && tf.contains_min(*sub.from_parent[e])) units.insert(a);
  }
  return reduce(l, units);
}

TightSpace tau_e(const SemigroupPtr& e) {
  TightSpace t;
  t.points = tight_filters(e);
  std::vector<std::string> names;
  for (const auto& f : t.points.filters) names.push_back("↑" + e->name(f.min));
  for (ElementId x = 0; x < e->size(); ++x) {
    ElementSet v(t.points.size());
    for (std::size_t i = 0; i < t.points.size(); ++i)
      if (t.points.filters[i].carrier.contains(x)) v.insert(i);
    t.v.push_back(v);
  }
  t.space = FiniteTopology::from_subbasis(t.points.size(), t.v, names);
  return t;
}

ElementMap tight_opens_map(const TightSpace& t, const FrameOfOpens& opens) {
  ElementMap out;
  for (const auto& v : t.v) out.push_back(opens.index_of(v));
  return out;
}

ElementMap tight_representation(const FilterGroupoid& tight, const Bisections& b) {
  ElementMap out;
  for (ElementId s = 0; s < tight.base->size(); ++s) out.push_back(b.index_of(tight.basic_open(s)));
  return out;
}

ElementSet tight_nucleus_direct(const FiniteInverseSemigroup& e, ElementId top) {
  ElementSet out(e.size());
  for (ElementId g = 0; g < e.size(); ++g)
    if (is_tight_cover(e, g, e.down(g) & e.down(top))) out.insert(g);
  return out;
}

TightFrameIso tight_frame_iso(const SemigroupPtr& e) {
  TightFrameIso r;
  r.frame         = universal_pseudogroup(tight_coverage(e));
  r.space         = tau_e(e);
  r.opens         = frame_of_opens(r.space.space);
  const auto& p   = r.frame.semigroup();
  const auto& o   = *r.opens.semigroup;
  auto note       = [&](bool& flag, bool value, const std::string& what) {
    if (!value && flag) r.witness = what;
    flag = flag && value;
  };

  for (ElementId i = 0; i < p.size(); ++i) {
    ElementSet u(r.space.points.size());
    for (auto x : r.frame.carrier(i)) u |= r.space.v[x];
    r.iso.push_back(r.opens.index_of(u));
  }
  std::vector<ElementId> sorted = r.iso;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = p.size() == o.size() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!r.bijective) r.witness = std::to_string(p.size()) + " frame elements against " + std::to_string(o.size()) + " opens";

  r.preserves_meets = r.preserves_joins = true;
  for (ElementId i = 0; i < p.size(); ++i)
    for (ElementId j = 0; j < p.size(); ++j) {
      note(r.preserves_meets, r.iso[p.mul(i, j)] == o.mul(r.iso[i], r.iso[j]), "meet of " + p.name(i) + " and " + p.name(j));
      const ElementId pj = r.frame.p().join(i, j);
      const ElementId oj = r.opens.index_of(r.opens.opens[r.iso[i]] | r.opens.opens[r.iso[j]]);
      note(r.preserves_joins, r.iso[pj] == oj, "join of " + p.name(i) + " and " + p.name(j));
    }
  note(r.preserves_joins, r.opens.opens[r.iso[r.frame.p().zero()]].empty(), "bottom is not sent to the empty set");

  r.direct_formula_agrees = true;
  for (ElementId x = 0; x < e->size(); ++x) {
    const auto& generic = r.frame.ideals.carrier(r.frame.nucleus[r.frame.ideals.principal(x)]);
    note(r.direct_formula_agrees, generic == tight_nucleus_direct(*e, x), "tight nucleus of ↓" + e->name(x));
  }
  return r;
}

}  // namespace isg
