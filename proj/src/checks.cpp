#include "isg/checks.hpp"

#include <optional>
#include <set>

#include "isg/error.hpp"
#include "isg/filters.hpp"
#include "isg/groupoid.hpp"
#include "isg/ideals.hpp"
#include "isg/tight.hpp"

namespace isg {

void SuiteReport::check(bool passed, const std::string& what) {
  ++cases;
  if (!passed) failures.push_back(what);
}

void SuiteReport::merge(const SuiteReport& other) {
  cases += other.cases;
  for (const auto& f : other.failures) failures.push_back(other.name + ": " + f);
}

namespace {

std::optional<Pseudogroup> as_pseudogroup(const SemigroupPtr& s) {
  try {
    return Pseudogroup(s);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::set<ElementSet> carriers_of(const FilterFamily& f) {
  std::set<ElementSet> out;
  for (const auto& x : f.filters) out.insert(x.carrier);
  return out;
}

}  // namespace

SuiteReport germ_suite(const SemigroupPtr& sp) {
  const auto& s = *sp;
  SuiteReport rep{"germs", 0, {}};
  const auto sub     = idempotent_subsemigroup(s);
  const auto whole   = as_pseudogroup(sp);
  const auto eframe  = whole ? as_pseudogroup(sub.semigroup) : std::nullopt;
  const auto& idems  = s.idempotents();

  for (const auto& base : enumerate_filters(*sub.semigroup).filters) {
    const ElementSet f = sub.lift(base.carrier);
    const std::string at = "F = " + s.format(f);
    for (ElementId x = 0; x < s.size(); ++x) {
      if (!f.contains(s.ran(x))) continue;
      const std::string where = at + ", s = " + s.name(x);
      const auto g = germ(s, f, x);

      for (auto e : f) rep.check(g.carrier.contains(s.mul(e, x)), "(i) " + where + ", f = " + s.name(e));

      ElementSet ranges(s.size());
      for (auto t : g.carrier) ranges.insert(s.ran(t));
      rep.check((s.up_set(ranges) & idems) == f, "(ii) " + where);

      rep.check(is_filter(s, g.carrier), "(iii) " + where);

      for (auto r : g.carrier) rep.check(germ(s, f, r).carrier == g.carrier, "(iv) " + where + ", r = " + s.name(r));

      if (eframe && is_completely_prime(*eframe, base.min))
        rep.check(is_completely_prime(*whole, g.min), "(v) " + where);
    }
  }

  for (const auto& a : enumerate_filters(s).filters) {
    const ElementSet f = s.up_set(s.product(a.carrier, s.inverse(a.carrier))) & idems;
    // without a zero this can be all of E(S), which is not a filter there
    if (!is_idempotent_filter(s, f)) continue;
    for (auto x : a.carrier)
      rep.check(germ(s, f, x).carrier == a.carrier, "germ of a filter at its range, A = ↑" + s.name(a.min) + ", a = " + s.name(x));
  }
  return rep;
}

SuiteReport nucleus_suite(const Coverage& cov) {
  SuiteReport rep{"nucleus", 0, {}};
  const auto c  = IdealSemigroup::build(cov.base_ptr());
  const auto& cs = *c.semigroup();
  ElementMap nu;
  try {
    nu = nucleus_from_coverage(c, cov);
  } catch (const Error& e) {
    rep.check(false, e.what());
    return rep;
  }

  const auto v = nucleus_violation(cs, nu);
  rep.check(!v, v ? v->law + ": " + v->witness : "");

  std::vector<ElementId> closed;
  for (ElementId i = 0; i < c.size(); ++i)
    if (is_closed(cov, c.carrier(i))) closed.push_back(i);
  for (ElementId i = 0; i < c.size(); ++i) {
    ElementSet meet = cov.base().all();
    for (auto j : closed)
      if (c.carrier(i).is_subset_of(c.carrier(j))) meet &= c.carrier(j);
    rep.check(c.carrier(nu[i]) == meet, "least closed ideal above " + cov.base().format(c.carrier(i)));
  }

  if (!v) {
    const auto q = apply_nucleus_quotient(cs, nu);
    for (ElementId i = 0; i < c.size(); ++i)
      if (q.semigroup->is_idempotent(q.to_quotient[i]))
        rep.check(cs.is_idempotent(i), "idempotent-pure at " + cov.base().format(c.carrier(i)));
  }
  return rep;
}

SuiteReport embedding_suite(const Pseudogroup& p, std::size_t nucleus_cap) {
  SuiteReport rep{"embedding", 0, {}};
  for (const auto& nu : enumerate_nuclei(p.semigroup(), nucleus_cap)) {
    const auto e = nucleus_embedding(p, nu);
    std::string fixed;
    for (ElementId x = 0; x < p.size(); ++x)
      if (nu[x] == x) fixed += (fixed.empty() ? "" : ",") + p.semigroup().name(x);
    rep.check(e.ok(), "nucleus fixing {" + fixed + "}: " + e.witness);
  }
  return rep;
}

SuiteReport tight_suite(const SemigroupPtr& e) {
  SuiteReport rep{"tight", 0, {}};
  const auto tf        = tight_filters(e);
  const auto by_covers = carriers_of(tf);
  rep.check(carriers_of(tight_filters_by_closure(e)) == by_covers, "patch closure of the ultrafilters");
  rep.check(carriers_of(tight_filters_by_coverage(e)) == by_covers, "points kept by the induced coverage");
  rep.check(carriers_of(ultrafilters(*e)) == by_covers, "ultrafilters");

  const auto t   = tau_e(e);
  const auto cov = tight_coverage(e);
  for (ElementId a = 0; a < e->size(); ++a)
    for (const auto& z : minimal_covers(cov, a)) {
      ElementSet u(t.points.size());
      for (auto x : z) u |= t.v[x];
      rep.check(u == t.v[a], "V_" + e->name(a) + " against the cover " + e->format(z));
    }

  const auto u = universal_pseudogroup(cov);
  for (ElementId p = 0; p < u.semigroup().size(); ++p) {
    const auto& ideal = u.carrier(p);
    for (ElementId x = 0; x < e->size(); ++x) {
      if (ideal.contains(x)) continue;
      bool found = false;
      for (const auto& f : tf.filters)
        if (f.carrier.contains(x) && !f.carrier.intersects(ideal)) found = true;
      rep.check(found, "no tight filter through " + e->name(x) + " avoiding " + e->format(ideal));
    }
  }

  const auto iso = tight_frame_iso(e);
  rep.check(iso.ok(), "frame isomorphism: " + iso.witness);
  const auto sober = check_sober(space_groupoid(t.space));
  rep.check(sober.ok(), "sobriety of the tight space: " + sober.witness);
  return rep;
}

}  // namespace isg
