#include "catch_amalgamated.hpp"

#include "catalogue.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/groupoid.hpp"
#include "oracles.hpp"

using namespace isg;

namespace {

std::vector<std::string> arrow_names(const FiniteGroupoid& g, const ElementSet& a) {
  std::vector<std::string> out;
  for (auto x : a) out.push_back(g.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

ElementMap identity_map(std::size_t n) {
  ElementMap out(n);
  for (ElementId x = 0; x < n; ++x) out[x] = x;
  return out;
}

}  // namespace

TEST_CASE("finite topologies") {
  // Sierpinski space: {∅, {1}, {0, 1}}
  auto s = FiniteTopology::from_subbasis(2, {ElementSet(2, {1})});
  CHECK(s.opens().size() == 3);
  CHECK(s.is_t0());
  CHECK_FALSE(s.is_t1());
  CHECK(s.is_open(ElementSet(2, {1})));
  CHECK_FALSE(s.is_open(ElementSet(2, {0})));
  CHECK(s.closure(ElementSet(2, {1})) == ElementSet::full(2));
  CHECK(s.interior(ElementSet(2, {0})).empty());

  auto d = FiniteTopology::discrete(3);
  CHECK(d.opens().size() == 8);
  CHECK(d.is_t1());
  auto i = FiniteTopology::indiscrete(2);
  CHECK(i.opens().size() == 2);
  CHECK_FALSE(i.is_t0());

  // opens are exactly the unions of finite intersections of the subbasis
  auto t = FiniteTopology::from_subbasis(4, {ElementSet(4, {0, 1}), ElementSet(4, {1, 2}), ElementSet(4, {3})});
  std::set<ElementSet> generated;
  test::for_each_subset(4, [&](const ElementSet& u) {
    bool union_of_basics = true;
    for (auto x : u) {
      ElementSet basic = ElementSet::full(4);
      for (const auto& b : t.subbasis())
        if (b.contains(x)) basic &= b;
      if (!basic.is_subset_of(u)) union_of_basics = false;
    }
    if (union_of_basics) generated.insert(u);
  });
  auto opens = t.opens();
  CHECK(std::set<ElementSet>(opens.begin(), opens.end()) == generated);

  CHECK(is_continuous(d, s, {0, 1, 1}));
  CHECK_FALSE(is_continuous(s, d, {0, 1}));
  CHECK(is_open_map(s, s, {0, 1}));

  auto f = frame_of_opens(t);
  CHECK(f.semigroup->size() == opens.size());
  Pseudogroup frame(f.semigroup);
  CHECK(frame.is_frame());
  CHECK_THROWS_AS(FiniteTopology::discrete(3, {"a"}), Error);
}

TEST_CASE("groupoid laws are checked") {
  auto pair = pair_groupoid(2);
  CHECK(pair.size() == 4);
  CHECK(pair.units().count() == 2);
  CHECK(pair.mul(pair.at("(1,2)"), pair.at("(2,1)")) == pair.at("(1,1)"));
  CHECK_THROWS_AS(pair.mul(pair.at("(1,2)"), pair.at("(1,2)")), Error);

  auto data = pair.data();
  data.mul[pair.at("(1,2)") * 4 + pair.at("(2,1)")] = pair.at("(2,2)");
  auto v = groupoid_violation(data);
  REQUIRE(v);
  try {
    FiniteGroupoid::make(data);
    FAIL("expected NotAGroupoid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroupoid);
  }

  auto coarse     = pair.data();
  coarse.topology = FiniteTopology::indiscrete(4, coarse.names);
  try {
    FiniteGroupoid::make(coarse);
    FAIL("expected NotEtale");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEtale);
  }
}

TEST_CASE("filter groupoid of I2") {
  auto i2 = symmetric_inverse(2);
  auto l  = filter_groupoid(i2);
  const auto& g = l.groupoid;
  CHECK(g.size() == 6);
  CHECK(arrow_names(g, g.units()) == std::vector<std::string>{"↑e1", "↑e2", "↑id"});
  CHECK(g.d(g.at("↑t12")) == g.at("↑e1"));
  CHECK(g.r(g.at("↑t12")) == g.at("↑e2"));
  CHECK(g.mul(g.at("↑t12"), g.at("↑t21")) == g.at("↑e2"));
  CHECK_FALSE(g.composable(g.at("↑t12"), g.at("↑t12")));
  CHECK(g.mul(g.at("↑s21"), g.at("↑s21")) == g.at("↑id"));

  auto patch = filter_groupoid(i2, {FilterTopology::patch, false});
  CHECK(patch.groupoid.topology().is_discrete());
  CHECK_FALSE(g.topology().is_discrete());
}

TEST_CASE("filter groupoid of E4") {
  auto e4 = powerset_semilattice(2);
  auto l  = filter_groupoid(e4);
  CHECK(l.groupoid.size() == 3);
  CHECK(l.groupoid.units().count() == 3);
  auto p = filter_groupoid(e4, {FilterTopology::patch, false});
  CHECK(p.groupoid.topology().is_discrete());
  CHECK_THROWS_AS(filter_groupoid(cyclic_group(2)), Error);
  auto z2 = filter_groupoid(cyclic_group(2), {FilterTopology::tau, true});
  CHECK(z2.groupoid.size() == 3);
}

TEST_CASE("principal product agrees with the subset product") {
  for (auto& [name, s] : test::fixtures_up_to(34)) {
    if (!s->zero()) continue;
    INFO(name);
    test::TableOracle oracle{*s};
    auto l = filter_groupoid(s);
    const auto& g = l.groupoid;
    for (Arrow a = 0; a < g.size(); ++a)
      for (Arrow b = 0; b < g.size(); ++b) {
        if (!g.composable(a, b)) continue;
        ElementSet up(s->size());
        for (auto x : l.carriers[a])
          for (auto y : l.carriers[b])
            for (ElementId z = 0; z < s->size(); ++z)
              if (s->size() <= 8 ? oracle.leq(s->mul(x, y), z) : s->leq(s->mul(x, y), z)) up.insert(z);
        CHECK(l.carriers[g.mul(a, b)] == up);
      }
    // both patch subbases give the same topology
    CHECK(FiniteTopology::from_subbasis(l.carriers.size(), patch_subbasis(*s, l.carriers, true)) ==
          FiniteTopology::from_subbasis(l.carriers.size(), patch_subbasis(*s, l.carriers, false)));
  }
}

TEST_CASE("bisections") {
  auto pair = pair_groupoid(2);
  auto b    = bisections(pair);
  // subsets with d and r injective, all open in the discrete topology
  std::size_t expected = 0;
  test::for_each_subset(pair.size(), [&](const ElementSet& u) {
    std::set<Arrow> ds, rs;
    for (auto a : u) {
      ds.insert(pair.d(a));
      rs.insert(pair.r(a));
    }
    if (ds.size() == u.count() && rs.size() == u.count()) ++expected;
  });
  CHECK(expected == 7);
  CHECK(b.carriers.size() == expected);
  REQUIRE(b.pseudogroup);
  CHECK(b.semigroup->idempotents().count() == 4);

  // a space as a groupoid of units: bisections are the open sets
  auto sierpinski = FiniteTopology::from_subbasis(2, {ElementSet(2, {1})});
  auto sb         = bisections(space_groupoid(sierpinski));
  CHECK(sb.carriers.size() == 3);

  // U_s for s21 in L(I2) with the patch topology
  auto l   = filter_groupoid(symmetric_inverse(2), {FilterTopology::patch, false});
  auto lb  = bisections(l.groupoid);
  auto us  = l.basic_open(l.base->at("s21"));
  CHECK(lb.find(us).has_value());
}

TEST_CASE("sobriety") {
  CHECK(is_sober(pair_groupoid(2)));
  CHECK_FALSE(is_sober(space_groupoid(FiniteTopology::indiscrete(2))));
  CHECK(is_sober(space_groupoid(FiniteTopology::from_subbasis(2, {ElementSet(2, {1})}))));
  auto rep = check_sober(space_groupoid(FiniteTopology::indiscrete(2)));
  CHECK_FALSE(rep.injective);
  CHECK_FALSE(rep.witness.empty());
  CHECK(is_sober(filter_groupoid(symmetric_inverse(2)).groupoid));
}

TEST_CASE("spectra of finite frames") {
  auto four = spectrum(Pseudogroup(powerset_semilattice(2)));
  CHECK(four.points.size() == 2);
  CHECK(four.space.is_discrete());
  auto two = spectrum(Pseudogroup(chain_semilattice(2)));
  CHECK(two.points.size() == 1);
  auto three = spectrum(Pseudogroup(chain_semilattice(3)));
  CHECK(three.points.size() == 2);
  CHECK(three.space.opens().size() == 3);
  CHECK(three.space.is_t0());
  CHECK_THROWS_AS(spectrum(Pseudogroup(symmetric_inverse(2))), Error);
}

TEST_CASE("completely prime groupoid of I2") {
  auto g = completely_prime_groupoid(Pseudogroup(symmetric_inverse(2)));
  CHECK(g.groupoid.size() == 4);
  CHECK(find_isomorphism(g.groupoid, pair_groupoid(2)).has_value());
  CHECK_FALSE(find_isomorphism(pair_groupoid(2), space_groupoid(FiniteTopology::discrete(4))).has_value());
}

TEST_CASE("canonical forms decide isomorphism") {
  std::vector<FiniteGroupoid> gs = {
      pair_groupoid(2),
      pair_groupoid(3),
      space_groupoid(FiniteTopology::discrete(4)),
      space_groupoid(FiniteTopology::from_subbasis(2, {ElementSet(2, {1})})),
      space_groupoid(FiniteTopology::from_subbasis(2, {ElementSet(2, {0})})),
      space_groupoid(FiniteTopology::indiscrete(2)),
      filter_groupoid(symmetric_inverse(2)).groupoid,
      filter_groupoid(symmetric_inverse(2), {FilterTopology::patch, false}).groupoid,
      completely_prime_groupoid(Pseudogroup(symmetric_inverse(2))).groupoid,
      filter_groupoid(cyclic_group(3), {FilterTopology::tau, true}).groupoid,
  };
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) {
      INFO(i << " " << j);
      CHECK((canonical_form(gs[i]) == canonical_form(gs[j])) == find_isomorphism(gs[i], gs[j]).has_value());
    }
  // the two Sierpinski labelings are the same space
  CHECK(canonical_form(gs[3]) == canonical_form(gs[4]));
  CHECK(canonical_form(gs[0]) == canonical_form(gs[8]));
}

TEST_CASE("reductions") {
  auto l = filter_groupoid(symmetric_inverse(2));
  const auto& g = l.groupoid;
  CHECK(reduce(g, g.units()).groupoid.size() == g.size());
  CHECK(reduce(g, ElementSet(g.size())).groupoid.size() == 0);
  auto two = reduce(l, ElementSet(g.size(), {g.at("↑e1"), g.at("↑e2")}));
  CHECK(two.groupoid.size() == 4);
  auto patch = filter_groupoid(symmetric_inverse(2), {FilterTopology::patch, false});
  auto red   = reduce(patch, ElementSet(6, {patch.groupoid.at("↑e1"), patch.groupoid.at("↑e2")}));
  CHECK(find_isomorphism(red.groupoid, pair_groupoid(2)).has_value());
}

TEST_CASE("nucleus embeddings") {
  for (auto spec : {"powerset_semilattice(2)", "chain_semilattice(4)", "symmetric_inverse(2)", "powerset_semilattice(3)"}) {
    INFO(spec);
    Pseudogroup p(make_fixture(spec));
    auto id  = nucleus_embedding(p, identity_map(p.size()));
    CHECK(id.ok());
    CHECK(id.source.groupoid.size() == id.target.groupoid.size());
    for (const auto& nu : enumerate_nuclei(p.semigroup())) {
      auto rep = nucleus_embedding(p, nu);
      INFO(rep.witness);
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("subspaces from coverages") {
  auto x     = FiniteTopology::discrete(3);
  auto frame = frame_of_opens(x);
  Coverage none(frame.semigroup);
  CHECK(subspace_from_coverage(x, frame, none) == ElementSet::full(3));

  Coverage one(frame.semigroup);
  const auto u = frame.index_of(ElementSet(3, {0, 1}));
  one.add(u, ElementSet(frame.opens.size(), {frame.index_of(ElementSet(3))}));
  CHECK(subspace_from_coverage(x, frame, one) == ElementSet(3, {2}));

  auto indiscrete = FiniteTopology::indiscrete(2);
  CHECK_THROWS_AS(subspace_from_coverage(indiscrete, frame_of_opens(indiscrete), Coverage(frame_of_opens(indiscrete).semigroup)), Error);

  // Sierpinski space is sober but not T1
  auto s      = FiniteTopology::from_subbasis(2, {ElementSet(2, {1})});
  auto sframe = frame_of_opens(s);
  Coverage drop(sframe.semigroup);
  drop.add(sframe.index_of(ElementSet(2, {1})), ElementSet(sframe.opens.size(), {sframe.index_of(ElementSet(2))}));
  CHECK(subspace_from_coverage(s, sframe, drop) == ElementSet(2, {0}));
}
