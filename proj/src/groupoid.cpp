#include "isg/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_set>

#include "isg/error.hpp"
#include "isg/ideals.hpp"

namespace isg {

namespace {

constexpr Arrow none = static_cast<Arrow>(-1);

bool by_size(const ElementSet& a, const ElementSet& b) { return a.count() != b.count() ? a.count() < b.count() : a < b; }

}  // namespace

std::optional<LawViolation> groupoid_violation(const GroupoidData& g) {
  const std::size_t n = g.names.size();
  if (g.d.size() != n || g.r.size() != n || g.inv.size() != n || g.mul.size() != n * n || g.topology.size() != n) {
    return LawViolation{"composable", "table sizes do not match the number of arrows"};
  }
  for (Arrow a = 0; a < n; ++a)
    if (g.d[a] >= n || g.r[a] >= n || g.inv[a] >= n) return LawViolation{"composable", "arrow " + g.names[a] + " points outside the table"};
  auto nm  = [&](Arrow a) { return g.names[a]; };
  auto mul = [&](Arrow a, Arrow b) { return *g.mul[a * n + b]; };

  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = 0; b < n; ++b) {
      const bool defined = g.mul[a * n + b].has_value();
      if (defined != (g.d[a] == g.r[b])) {
        return LawViolation{"composable", nm(a) + nm(b) + (defined ? " is defined but d != r" : " is undefined but d = r")};
      }
      if (defined && *g.mul[a * n + b] >= n) return LawViolation{"composable", nm(a) + nm(b) + " is out of range"};
    }

  for (Arrow a = 0; a < n; ++a) {
    const Arrow u = g.d[a], v = g.r[a];
    if (g.d[u] != u || g.r[u] != u || g.d[v] != v || g.r[v] != v) return LawViolation{"units", "d or r of " + nm(a) + " is not a unit"};
    if (mul(a, u) != a || mul(v, a) != a) return LawViolation{"units", nm(a) + " is not fixed by its units"};
    const Arrow i = g.inv[a];
    if (g.inv[i] != a || g.d[i] != v || g.r[i] != u) return LawViolation{"inverse", "inverse of " + nm(a) + " has the wrong ends"};
    if (mul(a, i) != v || mul(i, a) != u) return LawViolation{"inverse", nm(a) + " times its inverse is not a unit"};
  }
  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = 0; b < n; ++b) {
      if (g.d[a] != g.r[b]) continue;
      const Arrow ab = mul(a, b);
      if (g.d[ab] != g.d[b] || g.r[ab] != g.r[a]) return LawViolation{"composable", nm(a) + nm(b) + " has the wrong ends"};
      for (Arrow c = 0; c < n; ++c)
        if (g.d[b] == g.r[c] && mul(ab, c) != mul(a, mul(b, c))) {
          return LawViolation{"associativity", "(" + nm(a) + nm(b) + ")" + nm(c) + " != " + nm(a) + "(" + nm(b) + nm(c) + ")"};
        }
    }

  const auto& t = g.topology;
  for (Arrow a = 0; a < n; ++a) {
    for (auto x : t.neighbourhood(a))
      if (!t.neighbourhood(g.inv[a]).contains(g.inv[x])) return LawViolation{"continuity", "inversion at " + nm(a)};
    for (Arrow b = 0; b < n; ++b) {
      if (g.d[a] != g.r[b]) continue;
      const auto& target = t.neighbourhood(mul(a, b));
      for (auto x : t.neighbourhood(a))
        for (auto y : t.neighbourhood(b))
          if (g.d[x] == g.r[y] && !target.contains(mul(x, y))) {
            return LawViolation{"continuity", "product at (" + nm(a) + ", " + nm(b) + ")"};
          }
    }
  }
  for (const auto* end : {&g.d, &g.r}) {
    for (Arrow a = 0; a < n; ++a) {
      ElementSet seen(n);
      for (auto x : t.neighbourhood(a)) {
        const Arrow e = (*end)[x];
        if (seen.contains(e)) return LawViolation{"etale", "d or r is not injective near " + nm(a)};
        seen.insert(e);
        if (!t.neighbourhood((*end)[a]).contains(e)) return LawViolation{"etale", "d or r is not continuous at " + nm(a)};
      }
      if (!t.is_open(seen)) return LawViolation{"etale", "d or r is not open at " + nm(a)};
    }
  }
  return std::nullopt;
}

FiniteGroupoid FiniteGroupoid::make(GroupoidData data) {
  if (auto v = groupoid_violation(data)) {
    const bool topological = v->law == "continuity" || v->law == "etale";
    throw Error(topological ? ErrorKind::NotEtale : ErrorKind::NotAGroupoid, v->law + ": " + v->witness);
  }
  FiniteGroupoid g;
  g.g_ = std::move(data);
  return g;
}

std::optional<Arrow> FiniteGroupoid::find(const std::string& name) const {
  auto it = std::find(g_.names.begin(), g_.names.end(), name);
  if (it == g_.names.end()) return std::nullopt;
  return static_cast<Arrow>(it - g_.names.begin());
}

Arrow FiniteGroupoid::at(const std::string& name) const {
  if (auto a = find(name)) return *a;
  throw Error(ErrorKind::InvalidArgument, "no arrow named " + name);
}

Arrow FiniteGroupoid::mul(Arrow a, Arrow b) const {
  const auto& m = g_.mul[a * size() + b];
  if (!m) throw Error(ErrorKind::InvalidArgument, name(a) + " and " + name(b) + " are not composable");
  return *m;
}

ElementSet FiniteGroupoid::units() const {
  ElementSet out(size());
  for (Arrow a = 0; a < size(); ++a)
    if (is_unit(a)) out.insert(a);
  return out;
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  GroupoidData g;
  const std::size_t m = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.names.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      g.d.push_back(j * n + j);
      g.r.push_back(i * n + i);
      g.inv.push_back(j * n + i);
    }
  g.mul.assign(m * m, std::nullopt);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g.mul[(i * n + j) * m + (j * n + k)] = i * n + k;
  g.topology = FiniteTopology::discrete(m, g.names);
  return FiniteGroupoid::make(std::move(g));
}

FiniteGroupoid space_groupoid(const FiniteTopology& t) {
  GroupoidData g;
  const std::size_t n = t.size();
  g.names             = t.names();
  g.mul.assign(n * n, std::nullopt);
  for (Arrow a = 0; a < n; ++a) {
    g.d.push_back(a);
    g.r.push_back(a);
    g.inv.push_back(a);
    g.mul[a * n + a] = a;
  }
  g.topology = t;
  return FiniteGroupoid::make(std::move(g));
}

std::optional<std::vector<Arrow>> find_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.units().count() != b.units().count()) return std::nullopt;
  // units first, so that d and r of every later arrow are already placed
  std::vector<Arrow> order;
  for (Arrow x = 0; x < n; ++x)
    if (a.is_unit(x)) order.push_back(x);
  for (Arrow x = 0; x < n; ++x)
    if (!a.is_unit(x)) order.push_back(x);

  std::vector<Arrow> phi(n, none);
  std::vector<bool> used(n, false);
  auto consistent = [&](Arrow x) {
    const Arrow y = phi[x];
    if (a.is_unit(x) != b.is_unit(y)) return false;
    if (a.topology().neighbourhood(x).count() != b.topology().neighbourhood(y).count()) return false;
    if (phi[a.d(x)] != none && phi[a.d(x)] != b.d(y)) return false;
    if (phi[a.r(x)] != none && phi[a.r(x)] != b.r(y)) return false;
    if (phi[a.inv(x)] != none && phi[a.inv(x)] != b.inv(y)) return false;
    for (Arrow z = 0; z < n; ++z) {
      if (phi[z] == none) continue;
      if (a.composable(x, z) != b.composable(y, phi[z]) || a.composable(z, x) != b.composable(phi[z], y)) return false;
      if (a.composable(x, z) && phi[a.mul(x, z)] != none && phi[a.mul(x, z)] != b.mul(y, phi[z])) return false;
      if (a.composable(z, x) && phi[a.mul(z, x)] != none && phi[a.mul(z, x)] != b.mul(phi[z], y)) return false;
      if (a.topology().neighbourhood(x).contains(z) != b.topology().neighbourhood(y).contains(phi[z])) return false;
      if (a.topology().neighbourhood(z).contains(x) != b.topology().neighbourhood(phi[z]).contains(y)) return false;
    }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == n) return true;
    const Arrow x = order[k];
    for (Arrow y = 0; y < n; ++y) {
      if (used[y]) continue;
      phi[x] = y;
      if (consistent(x)) {
        used[y] = true;
        if (place(k + 1)) return true;
        used[y] = false;
      }
      phi[x] = none;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return phi;
}

std::vector<std::size_t> canonical_form(const FiniteGroupoid& g, std::size_t cap) {
  const std::size_t n = g.size();
  std::vector<Arrow> units, others;
  for (Arrow x = 0; x < n; ++x) (g.is_unit(x) ? units : others).push_back(x);

  std::vector<std::size_t> best;
  std::size_t tried = 0;
  auto encode = [&](const std::vector<Arrow>& order) {
    std::vector<std::size_t> label(n);
    for (std::size_t i = 0; i < n; ++i) label[order[i]] = i;
    std::vector<std::size_t> code;
    code.reserve(3 * n + n * n + n * n);
    for (auto x : order) {
      code.push_back(label[g.d(x)]);
      code.push_back(label[g.r(x)]);
      code.push_back(label[g.inv(x)]);
    }
    for (auto x : order)
      for (auto y : order) code.push_back(g.composable(x, y) ? label[g.mul(x, y)] : n);
    for (auto x : order)
      for (auto y : order) code.push_back(g.topology().neighbourhood(x).contains(y) ? 1 : 0);
    if (best.empty() || code < best) best = std::move(code);
  };

  std::sort(units.begin(), units.end());
  do {
    std::vector<std::size_t> unit_label(n, 0);
    for (std::size_t i = 0; i < units.size(); ++i) unit_label[units[i]] = i;
    // arrows grouped by (range, source) label; every order inside a group is tried
    auto rest = others;
    std::sort(rest.begin(), rest.end(), [&](Arrow x, Arrow y) {
      return std::pair(unit_label[g.r(x)], unit_label[g.d(x)]) < std::pair(unit_label[g.r(y)], unit_label[g.d(y)]) ||
             (std::pair(unit_label[g.r(x)], unit_label[g.d(x)]) == std::pair(unit_label[g.r(y)], unit_label[g.d(y)]) &&
              x < y);
    });
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < rest.size();) {
      std::size_t j = i;
      while (j < rest.size() && g.r(rest[j]) == g.r(rest[i]) && g.d(rest[j]) == g.d(rest[i])) ++j;
      groups.emplace_back(i, j);
      i = j;
    }
    std::function<void(std::size_t)> permute = [&](std::size_t k) {
      if (k == groups.size()) {
        if (++tried > cap) throw Error(ErrorKind::SizeLimit, "canonical labeling exceeds the relabeling cap");
        auto order = units;
        order.insert(order.end(), rest.begin(), rest.end());
        encode(order);
        return;
      }
      auto first = rest.begin() + static_cast<std::ptrdiff_t>(groups[k].first);
      auto last  = rest.begin() + static_cast<std::ptrdiff_t>(groups[k].second);
      std::sort(first, last);
      do permute(k + 1);
      while (std::next_permutation(first, last));
    };
    permute(0);
  } while (std::next_permutation(units.begin(), units.end()));
  return best;
}

// ----- groupoids of filters -----

std::optional<Arrow> FilterGroupoid::find(const ElementSet& carrier) const {
  for (Arrow a = 0; a < carriers.size(); ++a)
    if (carriers[a] == carrier) return a;
  return std::nullopt;
}

ElementSet FilterGroupoid::basic_open(ElementId s) const {
  ElementSet out(carriers.size());
  for (Arrow a = 0; a < carriers.size(); ++a)
    if (carriers[a].contains(s)) out.insert(a);
  return out;
}

std::vector<ElementSet> patch_subbasis(const FiniteInverseSemigroup& s, const std::vector<ElementSet>& carriers,
                                       bool maximal_only) {
  const std::size_t n = carriers.size();
  auto u              = [&](ElementId x) {
    ElementSet out(n);
    for (Arrow a = 0; a < n; ++a)
      if (carriers[a].contains(x)) out.insert(a);
    return out;
  };
  std::vector<ElementSet> sub;
  for (ElementId x = 0; x < s.size(); ++x) {
    const ElementSet ux = u(x);
    sub.push_back(ux);
    ElementSet below = s.down(x);
    below.erase(x);
    for (auto t : below) {
      if (maximal_only) {
        ElementSet above = s.up(t) & below;
        if (above.count() > 1) continue;
      }
      sub.push_back(ux - u(t));
    }
  }
  return sub;
}

FilterGroupoid groupoid_on_filters(const SemigroupPtr& sp, std::vector<ElementSet> carriers, FilterTopology topology) {
  const auto& s       = *sp;
  const std::size_t n = carriers.size();
  FilterGroupoid fg{sp, std::move(carriers), {}};
  const auto& cs = fg.carriers;
  auto index     = [&](const ElementSet& c, const std::string& what) {
    if (auto a = fg.find(c)) return *a;
    throw Error(ErrorKind::NotAGroupoid, what + " = " + s.format(c) + " is not in the family");
  };

  GroupoidData g;
  for (const auto& c : cs) {
    std::string label = s.format(c);
    if (c == s.all()) {
      label = "S";
    } else {
      for (auto m : c)
        if (s.up(m) == c) label = "↑" + s.name(m);
    }
    g.names.push_back(label);
  }
  for (Arrow a = 0; a < n; ++a) {
    const ElementSet ainv = s.inverse(cs[a]);
    g.d.push_back(index(s.up_set(s.product(ainv, cs[a])), "d(" + s.format(cs[a]) + ")"));
    g.r.push_back(index(s.up_set(s.product(cs[a], ainv)), "r(" + s.format(cs[a]) + ")"));
    g.inv.push_back(index(ainv, "inverse of " + s.format(cs[a])));
  }
  g.mul.assign(n * n, std::nullopt);
  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = 0; b < n; ++b)
      if (g.d[a] == g.r[b]) g.mul[a * n + b] = index(s.up_set(s.product(cs[a], cs[b])), "product");

  std::vector<ElementSet> sub;
  if (topology == FilterTopology::tau) {
    for (ElementId x = 0; x < s.size(); ++x) sub.push_back(fg.basic_open(x));
  } else {
    sub = patch_subbasis(s, cs, true);
  }
  g.topology  = FiniteTopology::from_subbasis(n, sub, g.names);
  fg.groupoid = FiniteGroupoid::make(std::move(g));
  return fg;
}

FilterGroupoid filter_groupoid(const SemigroupPtr& s, FilterGroupoidOptions opts) {
  if (!s->zero() && !opts.adjoin_improper) throw Error(ErrorKind::NoZero, "L(S) needs a zero; pass adjoin-improper to add S itself");
  std::vector<ElementSet> carriers;
  for (const auto& f : enumerate_filters(*s).filters) carriers.push_back(f.carrier);
  if (!s->zero() && opts.adjoin_improper) carriers.push_back(s->all());
  return groupoid_on_filters(s, std::move(carriers), opts.topology);
}

FilterGroupoid completely_prime_groupoid(const Pseudogroup& p) {
  std::vector<ElementSet> carriers;
  for (const auto& f : completely_prime_filters(p).filters) carriers.push_back(f.carrier);
  return groupoid_on_filters(p.ptr(), std::move(carriers), FilterTopology::tau);
}

// ----- bisections -----

std::optional<ElementId> Bisections::find(const ElementSet& carrier) const {
  auto it = std::lower_bound(carriers.begin(), carriers.end(), carrier, by_size);
  if (it == carriers.end() || !(*it == carrier)) return std::nullopt;
  return static_cast<ElementId>(it - carriers.begin());
}

ElementId Bisections::index_of(const ElementSet& carrier) const {
  if (auto i = find(carrier)) return *i;
  throw Error(ErrorKind::InvalidArgument, "not an open bisection");
}

Bisections bisections(const FiniteGroupoid& g, std::size_t cap) {
  const std::size_t n = g.size();
  const auto& t       = g.topology();
  auto injective      = [&](const ElementSet& u) {
    ElementSet ds(n), rs(n);
    for (auto a : u) {
      if (ds.contains(g.d(a)) || rs.contains(g.r(a))) return false;
      ds.insert(g.d(a));
      rs.insert(g.r(a));
    }
    return true;
  };
  // Every open bisection is a union of least neighbourhoods, each partial
  // union again a bisection, so growing from ∅ reaches all of them.
  std::unordered_set<ElementSet, ElementSetHash> seen{ElementSet(n)};
  std::deque<ElementSet> work{ElementSet(n)};
  Bisections b;
  while (!work.empty()) {
    auto u = std::move(work.front());
    work.pop_front();
    b.carriers.push_back(u);
    for (Arrow a = 0; a < n; ++a) {
      if (u.contains(a)) continue;
      auto v = u | t.neighbourhood(a);
      if (!injective(v) || !seen.insert(v).second) continue;
      if (seen.size() > cap) throw Error(ErrorKind::SizeLimit, "more than " + std::to_string(cap) + " open bisections");
      work.push_back(std::move(v));
    }
  }
  std::sort(b.carriers.begin(), b.carriers.end(), by_size);

  SemigroupTable table;
  for (const auto& c : b.carriers) table.names.push_back(g.format(c));
  const std::size_t m = b.carriers.size();
  table.mul.assign(m, std::vector<ElementId>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ElementSet prod(n);
      for (auto x : b.carriers[i])
        for (auto y : b.carriers[j])
          if (g.composable(x, y)) prod.insert(g.mul(x, y));
      table.mul[i][j] = b.index_of(prod);
    }
  b.semigroup = FiniteInverseSemigroup::make(std::move(table), ValidateOptions{m <= 64});
  b.pseudogroup.emplace(b.semigroup);
  return b;
}

std::vector<ElementId> eta(const FiniteGroupoid& g, const Bisections& b) {
  std::vector<ElementId> out;
  for (Arrow a = 0; a < g.size(); ++a) out.push_back(b.index_of(g.topology().neighbourhood(a)));
  return out;
}

SobrietyReport check_sober(const FiniteGroupoid& g) {
  SobrietyReport rep;
  const auto b  = bisections(g);
  const auto e  = eta(g, b);
  const auto cp = completely_prime_filters(*b.pseudogroup);

  std::vector<ElementId> sorted = e;
  std::sort(sorted.begin(), sorted.end());
  rep.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!rep.injective) rep.witness = "two arrows have the same least open bisection";

  rep.surjective = true;
  for (const auto& f : cp.filters)
    if (!std::binary_search(sorted.begin(), sorted.end(), f.min)) {
      rep.surjective = false;
      rep.witness    = "completely prime filter ↑" + b.semigroup->name(f.min) + " is not of the form eta(g)";
    }
  for (auto m : e)
    if (!cp.contains_min(m)) {
      rep.surjective = false;
      rep.witness    = "↑" + b.semigroup->name(m) + " is not completely prime";
    }

  // eta^-1(U_A) = A, so eta is a homeomorphism iff the open bisections
  // generate the topology of G.
  if (rep.injective && rep.surjective) {
    rep.homeomorphism = FiniteTopology::from_subbasis(g.size(), b.carriers) == g.topology();
    if (!rep.homeomorphism) rep.witness = "open bisections do not generate the topology";
  }
  return rep;
}

Spectrum spectrum(const Pseudogroup& frame) {
  if (!frame.is_frame()) throw Error(ErrorKind::NotAFrame, "the pseudogroup has non-idempotent elements");
  const auto& s = frame.semigroup();
  Spectrum sp{completely_prime_filters(frame), {}};
  std::vector<std::string> names;
  for (const auto& f : sp.points.filters) names.push_back("↑" + s.name(f.min));
  std::vector<ElementSet> sub;
  for (ElementId a = 0; a < s.size(); ++a) {
    ElementSet v(sp.points.size());
    for (std::size_t i = 0; i < sp.points.size(); ++i)
      if (sp.points.filters[i].carrier.contains(a)) v.insert(i);
    sub.push_back(v);
  }
  sp.space = FiniteTopology::from_subbasis(sp.points.size(), sub, names);
  return sp;
}

// ----- embedding -----

EmbeddingReport nucleus_embedding(const Pseudogroup& p, const ElementMap& nu) {
  auto q = apply_nucleus_quotient(p.semigroup(), nu);
  Pseudogroup pn(q.semigroup);
  EmbeddingReport rep;
  rep.source   = completely_prime_groupoid(pn);
  rep.target   = completely_prime_groupoid(p);
  rep.quotient = std::move(q);
  const auto& src = rep.source.groupoid;
  const auto& tgt = rep.target.groupoid;
  const auto& s   = p.semigroup();

  rep.lands_in_target = true;
  for (Arrow a = 0; a < src.size(); ++a) {
    ElementSet pre(s.size());
    for (ElementId x = 0; x < s.size(); ++x)
      if (rep.source.carriers[a].contains(rep.quotient.to_quotient[x])) pre.insert(x);
    auto t = rep.target.find(pre);
    if (!t) {
      rep.lands_in_target = false;
      rep.witness         = "preimage of " + src.name(a) + " is not a completely prime filter";
      return rep;
    }
    rep.phi.push_back(*t);
  }

  ElementSet image(tgt.size());
  for (auto t : rep.phi) image.insert(t);
  rep.injective = image.count() == src.size();
  if (!rep.injective) rep.witness = "two arrows have the same preimage";

  rep.functorial = rep.preserves_inverse = true;
  for (Arrow a = 0; a < src.size(); ++a) {
    if (rep.phi[src.inv(a)] != tgt.inv(rep.phi[a])) {
      rep.preserves_inverse = false;
      rep.witness           = "inverse of " + src.name(a);
    }
    for (Arrow b = 0; b < src.size(); ++b) {
      const bool c = src.composable(a, b);
      if (c != tgt.composable(rep.phi[a], rep.phi[b])) {
        rep.functorial = false;
        rep.witness    = "composability of (" + src.name(a) + ", " + src.name(b) + ")";
      } else if (c && rep.phi[src.mul(a, b)] != tgt.mul(rep.phi[a], rep.phi[b])) {
        rep.functorial = false;
        rep.witness    = "product of (" + src.name(a) + ", " + src.name(b) + ")";
      }
    }
  }

  rep.continuous = is_continuous(src.topology(), tgt.topology(), rep.phi);
  if (!rep.continuous) rep.witness = "preimage map is not continuous";

  rep.open_onto_image = true;
  for (Arrow a = 0; a < src.size(); ++a) {
    ElementSet img(tgt.size());
    for (auto x : src.topology().neighbourhood(a)) img.insert(rep.phi[x]);
    if (!((tgt.topology().saturate(img) & image) == img)) {
      rep.open_onto_image = false;
      rep.witness         = "image of the neighbourhood of " + src.name(a) + " is not open in the image";
    }
  }

  rep.r_closed = true;
  for (Arrow x = 0; x < tgt.size(); ++x)
    if (image.contains(x) != image.contains(tgt.r(x))) {
      rep.r_closed = false;
      rep.witness  = tgt.name(x) + " and its range disagree on membership in the image";
    }
  return rep;
}

// ----- subspaces and reductions -----

ElementSet saturated_points(const FiniteTopology& x, const FrameOfOpens& basis, const Coverage& cov) {
  if (!(cov.base() == *basis.semigroup)) throw Error(ErrorKind::BaseMismatch, "coverage is not on the basis");
  const auto frame = frame_of_opens(x);
  Pseudogroup fp(frame.semigroup);
  ElementMap theta;
  for (const auto& u : basis.opens) theta.push_back(frame.index_of(u));
  const auto induced = induced_coverage(cov, fp, theta);

  ElementSet out = ElementSet::full(x.size());
  for (ElementId u = 0; u < frame.opens.size(); ++u) {
    ElementSet nu(x.size());
    for (auto v : coverage_closure(induced, frame.semigroup->down(u))) nu |= frame.opens[v];
    out -= nu - frame.opens[u];
  }
  return out;
}

ElementSet subspace_from_coverage(const FiniteTopology& x, const FrameOfOpens& basis, const Coverage& cov) {
  if (!(cov.base() == *basis.semigroup)) throw Error(ErrorKind::BaseMismatch, "coverage is not on the basis");
  for (const auto& u : basis.opens)
    if (!x.is_open(u)) throw Error(ErrorKind::InvalidArgument, x.format(u) + " is not open");
  if (!x.is_t1()) {
    if (!x.is_t0()) throw Error(ErrorKind::NotT1Sober, "the space is not sober");
    return saturated_points(x, basis, cov);
  }
  ElementSet out = ElementSet::full(x.size());
  for (ElementId u = 0; u < basis.opens.size(); ++u)
    for (const auto& z : cov.covers(u)) {
      ElementSet reached(x.size());
      for (auto v : z) reached |= basis.opens[v];
      out -= basis.opens[u] - reached;
    }
  // join covers exclude nothing: their members already union to U
  return out;
}

Reduction reduce(const FiniteGroupoid& g, const ElementSet& units) {
  Reduction red;
  std::vector<Arrow> index(g.size(), none);
  for (Arrow a = 0; a < g.size(); ++a) {
    if (!units.contains(g.d(a)) || !units.contains(g.r(a))) continue;
    index[a] = red.to_parent.size();
    red.to_parent.push_back(a);
  }
  const std::size_t n = red.to_parent.size();
  GroupoidData data;
  data.mul.assign(n * n, std::nullopt);
  for (auto a : red.to_parent) {
    data.names.push_back(g.name(a));
    data.d.push_back(index[g.d(a)]);
    data.r.push_back(index[g.r(a)]);
    data.inv.push_back(index[g.inv(a)]);
  }
  for (Arrow i = 0; i < n; ++i)
    for (Arrow j = 0; j < n; ++j)
      if (data.d[i] == data.r[j]) data.mul[i * n + j] = index[g.mul(red.to_parent[i], red.to_parent[j])];
  data.topology = g.topology().subspace(red.to_parent);
  red.groupoid  = FiniteGroupoid::make(std::move(data));
  return red;
}

FilterGroupoid reduce(const FilterGroupoid& g, const ElementSet& units) {
  auto red = reduce(g.groupoid, units);
  FilterGroupoid out{g.base, {}, std::move(red.groupoid)};
  for (auto a : red.to_parent) out.carriers.push_back(g.carriers[a]);
  return out;
}

}  // namespace isg
