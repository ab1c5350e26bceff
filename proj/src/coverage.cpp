#include "isg/coverage.hpp"

#include <algorithm>
#include <deque>

#include "isg/error.hpp"

namespace isg {

Coverage::Coverage(SemigroupPtr base) : base_(std::move(base)), covers_(base_->size()) {}

bool Coverage::add(ElementId a, ElementSet x) {
  if (!x.is_subset_of(base_->down(a))) {
    throw Error(ErrorKind::NotDownSet, base_->format(x) + " is not inside ↓" + base_->name(a));
  }
  return covers_[a].insert(std::move(x)).second;
}

bool Coverage::contains(ElementId a, const ElementSet& x) const {
  return covers_[a].count(x) != 0 || is_join_cover(a, x);
}

std::size_t Coverage::total() const {
  std::size_t n = 0;
  for (const auto& c : covers_) n += c.size();
  return n;
}

void Coverage::include_join_covers(const Pseudogroup& p) {
  if (!(p.semigroup() == *base_)) throw Error(ErrorKind::BaseMismatch, "join covers come from a different pseudogroup");
  joins_ = p;
}

bool Coverage::is_join_cover(ElementId a, const ElementSet& x) const {
  if (!joins_ || !x.is_subset_of(base_->down(a)) || !base_->is_compatible(x)) return false;
  return joins_->join(x) == a;
}

bool operator==(const Coverage& a, const Coverage& b) {
  return *a.base_ == *b.base_ && a.covers_ == b.covers_ && a.joins_.has_value() == b.joins_.has_value();
}

Coverage close_coverage(const SemigroupPtr& s, const std::vector<CoverSeed>& seeds) {
  Coverage cov(s);
  std::deque<CoverSeed> work;
  for (const auto& seed : seeds)
    if (cov.add(seed.of, seed.cover)) work.push_back(seed);
  while (!work.empty()) {
    const CoverSeed cur = std::move(work.front());
    work.pop_front();
    for (ElementId b = 0; b < s->size(); ++b) {
      CoverSeed left{s->mul(b, cur.of), s->left_translate(b, cur.cover)};
      if (cov.add(left.of, left.cover)) work.push_back(std::move(left));
      CoverSeed right{s->mul(cur.of, b), s->right_translate(cur.cover, b)};
      if (cov.add(right.of, right.cover)) work.push_back(std::move(right));
    }
  }
  return cov;
}

namespace {

void record(CoverageReport& r, std::string axiom, std::string witness) {
  for (const auto& f : r.failures)
    if (f.law == axiom) return;
  r.failures.push_back({std::move(axiom), std::move(witness)});
}

}  // namespace

CoverageReport check_axioms(const Coverage& cov, AxiomOptions opts) {
  const auto& s = cov.base();
  const std::size_t n = s.size();
  CoverageReport rep;

  // When every family is closed under supersets inside ↓a, each axiom holds
  // for all covers as soon as it holds for the minimal ones.
  bool upward = true;
  for (ElementId a = 0; a < n && upward; ++a)
    for (const auto& x : cov.covers(a)) {
      for (auto y : s.down(a) - x) {
        ElementSet bigger = x;
        bigger.insert(y);
        if (!cov.contains(a, bigger)) {
          upward = false;
          break;
        }
      }
      if (!upward) break;
    }
  std::vector<std::vector<ElementSet>> gens(n);
  for (ElementId a = 0; a < n; ++a)
    gens[a] = upward ? minimal_covers(cov, a) : std::vector<ElementSet>(cov.covers(a).begin(), cov.covers(a).end());

  for (ElementId a = 0; a < n; ++a)
    for (const auto& x : gens[a]) {
      for (ElementId b = 0; b < n; ++b) {
        if (!cov.contains(s.mul(b, a), s.left_translate(b, x))) {
          record(rep, "coverage", s.name(b) + s.format(x) + " is not a cover of " + s.name(s.mul(b, a)));
        }
        if (!cov.contains(s.mul(a, b), s.right_translate(x, b))) {
          record(rep, "coverage", s.format(x) + s.name(b) + " is not a cover of " + s.name(s.mul(a, b)));
        }
      }
    }

  for (ElementId a = 0; a < n; ++a)
    if (!cov.contains(a, ElementSet::singleton(n, a))) record(rep, "R", "{" + s.name(a) + "} is not a cover of " + s.name(a));

  for (ElementId a = 0; a < n; ++a)
    for (const auto& x : gens[a])
      if (!cov.contains(s.inv(a), s.inverse(x))) {
        record(rep, "I", s.format(s.inverse(x)) + " is not a cover of " + s.name(s.inv(a)));
      }

  for (ElementId a = 0; a < n; ++a)
    for (const auto& x : gens[a])
      for (ElementId b = 0; b < n; ++b)
        for (const auto& y : gens[b])
          if (!cov.contains(s.mul(a, b), s.product(x, y))) {
            record(rep, "MS", s.format(s.product(x, y)) + " is not a cover of " + s.name(s.mul(a, b)));
          }

  // T: all unions of one cover per member of X, built incrementally with
  // deduplication.
  for (ElementId a = 0; a < n; ++a)
    for (const auto& x : gens[a]) {
      std::set<ElementSet> unions{ElementSet(n)};
      bool dead = false;
      for (auto xi : x) {
        const auto& ci = gens[xi];
        if (ci.empty()) {
          dead = true;  // no choice of X_i exists
          break;
        }
        std::set<ElementSet> next;
        for (const auto& u : unions)
          for (const auto& y : ci) {
            next.insert(u | y);
            if (next.size() > opts.transitivity_budget) {
              throw Error(ErrorKind::SizeLimit, "axiom T for " + s.format(x) + " in C(" + s.name(a) + ") exceeds the budget");
            }
          }
        unions = std::move(next);
      }
      if (dead) continue;
      for (const auto& u : unions)
        if (!cov.contains(a, u)) {
          record(rep, "T", s.format(u) + " is not a cover of " + s.name(a) + " (from " + s.format(x) + ")");
          break;
        }
    }

  for (const auto& f : rep.failures) {
    rep.is_strong = false;
    if (f.law == "coverage") rep.is_coverage = false;
  }
  return rep;
}

Coverage coverage_union(const Coverage& a, const Coverage& b) {
  if (!(a.base() == b.base())) throw Error(ErrorKind::BaseMismatch, "coverages live on different semigroups");
  Coverage out = a;
  for (ElementId x = 0; x < b.base().size(); ++x)
    for (const auto& c : b.covers(x)) out.add(x, c);
  if (!out.includes_join_covers() && b.includes_join_covers()) out.include_join_covers(*b.join_pseudogroup());
  return out;
}

IdempotentCoverage restrict_to_idempotents(const Coverage& cov) {
  auto sub = idempotent_subsemigroup(cov.base());
  Coverage out(sub.semigroup);
  for (auto e : cov.base().idempotents())
    for (const auto& x : cov.covers(e)) out.add(*sub.from_parent[e], sub.lower(x));
  return {std::move(sub), std::move(out)};
}

Coverage extend_from_idempotents(const SemigroupPtr& s, const IdempotentCoverage& d) {
  const auto& sub = d.idempotents;
  if (sub.to_parent.size() != s->idempotents().count() || !(sub.carrier == s->idempotents())) {
    throw Error(ErrorKind::BaseMismatch, "coverage is not on the idempotents of this semigroup");
  }
  for (ElementId e = 0; e < sub.to_parent.size(); ++e)
    for (const auto& x : d.coverage.covers(e)) {
      const ElementSet lifted = sub.lift(x);
      for (ElementId t = 0; t < s->size(); ++t) {
        const ElementId conj = s->mul(t, sub.to_parent[e], s->inv(t));
        const ElementSet image = s->right_translate(s->left_translate(t, lifted), s->inv(t));
        if (!d.coverage.covers(*sub.from_parent[conj]).count(sub.lower(image))) {
          throw Error(ErrorKind::ConjugationClosureFails, s->name(t) + s->format(lifted) + s->name(s->inv(t)) +
                                                              " is not a cover of " + s->name(conj));
        }
      }
    }
  Coverage out(s);
  for (ElementId t = 0; t < s->size(); ++t) {
    for (const auto& x : d.coverage.covers(*sub.from_parent[s->dom(t)])) out.add(t, s->left_translate(t, sub.lift(x)));
    for (const auto& x : d.coverage.covers(*sub.from_parent[s->ran(t)])) out.add(t, s->right_translate(sub.lift(x), t));
  }
  return out;
}

bool is_tight_cover(const FiniteInverseSemigroup& s, ElementId a, const ElementSet& z) {
  if (!s.zero()) throw Error(ErrorKind::NoZero, "tight covers need a zero");
  if (!z.is_subset_of(s.down(a))) return false;
  const ElementSet zero = ElementSet::singleton(s.size(), *s.zero());
  for (auto t : s.down(a)) {
    if (s.is_zero(t)) continue;
    bool met = false;
    for (auto y : z)
      if (!((s.down(t) & s.down(y)) == zero)) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

bool is_tight_cover_semilattice(const FiniteInverseSemigroup& s, ElementId a, const ElementSet& z) {
  if (!s.zero()) throw Error(ErrorKind::NoZero, "tight covers need a zero");
  if (!z.is_subset_of(s.down(a))) return false;
  for (auto b : s.down(a)) {
    if (s.is_zero(b)) continue;
    bool met = false;
    for (auto y : z)
      if (!s.is_zero(s.mul(b, y))) met = true;
    if (!met) return false;
  }
  return true;
}

Coverage tight_coverage(const SemigroupPtr& s, TightOptions opts) {
  if (!s->zero()) throw Error(ErrorKind::NoZero, "tight coverage needs a zero");
  const std::size_t n = s->size();
  const ElementSet zero = ElementSet::singleton(n, *s->zero());
  Coverage cov(s);
  for (ElementId a = 0; a < n; ++a) {
    const auto below = s->down(a).to_vector();
    const std::size_t k = below.size();
    if (k > opts.max_down_set) {
      throw Error(ErrorKind::SizeLimit, "↓" + s->name(a) + " has " + std::to_string(k) + " elements, cap is " +
                                            std::to_string(opts.max_down_set));
    }
    // For every nonzero t <= a, the positions z in ↓a that meet t nontrivially.
    std::vector<std::uint64_t> meets;
    for (auto t : below) {
      if (s->is_zero(t)) continue;
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (!((s->down(t) & s->down(below[i])) == zero)) m |= std::uint64_t{1} << i;
      meets.push_back(m);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      if (!std::all_of(meets.begin(), meets.end(), [&](std::uint64_t m) { return (m & mask) != 0; })) continue;
      ElementSet z(n);
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) z.insert(below[i]);
      cov.add(a, std::move(z));
    }
  }
  return cov;
}

std::vector<ElementSet> minimal_covers(const Coverage& cov, ElementId a) {
  std::vector<ElementSet> all(cov.covers(a).begin(), cov.covers(a).end());
  std::sort(all.begin(), all.end(), [](const ElementSet& x, const ElementSet& y) { return x.count() < y.count(); });
  std::vector<ElementSet> out;
  for (const auto& x : all) {
    bool minimal = true;
    for (const auto& m : out)
      if (m.is_subset_of(x)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(x);
  }
  return out;
}

bool has_cover_inside(const Coverage& cov, const std::vector<ElementSet>& minimal, ElementId a,
                      const ElementSet& inside) {
  for (const auto& x : minimal)
    if (x.is_subset_of(inside)) return true;
  if (cov.includes_join_covers()) {
    // Some join decomposition of a lies inside iff everything inside below a joins to a.
    const ElementSet below = inside & cov.base().down(a);
    return cov.join_pseudogroup()->join(below) == a;
  }
  return false;
}

namespace {

void require_homomorphism(const Coverage& cov, const Pseudogroup& target, const ElementMap& theta) {
  if (auto bad = homomorphism_violation(cov.base(), target.semigroup(), theta)) throw Error(ErrorKind::NotHomomorphism, *bad);
}

ElementSet image(const ElementMap& theta, const ElementSet& x, std::size_t universe) {
  ElementSet out(universe);
  for (auto e : x) out.insert(theta[e]);
  return out;
}

}  // namespace

CoverToJoinReport is_cover_to_join(const Coverage& cov, const Pseudogroup& target, const ElementMap& theta) {
  require_homomorphism(cov, target, theta);
  const auto& s = cov.base();
  const auto& t = target.semigroup();
  CoverToJoinReport rep;
  rep.idempotent_pure = is_idempotent_pure(s, t, theta);
  for (ElementId a = 0; a < s.size() && rep.cover_to_join; ++a)
    for (const auto& x : cov.covers(a)) {
      const ElementSet img = image(theta, x, t.size());
      if (!t.is_compatible(img) || target.join(img) != theta[a]) {
        rep.cover_to_join = false;
        rep.witness = "theta" + s.format(x) + " does not join to theta(" + s.name(a) + ") = " + t.name(theta[a]);
        break;
      }
    }
  return rep;
}

Coverage induced_coverage(const Coverage& cov, const Pseudogroup& target, const ElementMap& theta) {
  require_homomorphism(cov, target, theta);
  const auto& s = cov.base();
  const auto& p = target.semigroup();
  if (!is_idempotent_pure(s, p, theta)) throw Error(ErrorKind::NotIdempotentPure, "theta is not idempotent-pure");

  Coverage out(target.ptr());
  out.include_join_covers(target);
  const bool commutative = p.is_semilattice();
  for (ElementId a = 0; a < s.size(); ++a)
    for (const auto& x : cov.covers(a)) {
      const ElementSet img = image(theta, x, p.size());
      // left translates first, then right translates of each distinct one
      std::set<std::pair<ElementId, ElementSet>> left;
      if (commutative) {
        left.emplace(theta[a], img);
      } else {
        for (ElementId q = 0; q < p.size(); ++q) left.emplace(p.mul(q, theta[a]), p.left_translate(q, img));
      }
      for (const auto& [of, y] : left)
        for (ElementId r = 0; r < p.size(); ++r) out.add(p.mul(of, r), p.right_translate(y, r));
    }
  return out;
}

}  // namespace isg
