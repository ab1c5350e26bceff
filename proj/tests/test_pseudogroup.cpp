#include "catch_amalgamated.hpp"

#include <set>

#include "catalogue.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/ideals.hpp"
#include "isg/pseudogroup.hpp"
#include "oracles.hpp"

using namespace isg;

namespace {

// Subset-by-subset check of the pseudogroup laws.
bool oracle_pseudogroup(const test::TableOracle& o) {
  const auto& s = o.s;
  if (!s.zero() || !s.identity()) return false;
  bool ok = true;
  test::for_each_subset(o.n(), [&](const ElementSet& a) {
    if (!ok || a.empty() || !o.compatible(a)) return;
    auto j = o.join(a);
    if (!j) {
      ok = false;
      return;
    }
    for (ElementId x = 0; x < o.n(); ++x) {
      ElementSet left(o.n()), right(o.n());
      for (auto y : a) {
        left.insert(s.mul(x, y));
        right.insert(s.mul(y, x));
      }
      if (o.join(left) != s.mul(x, *j) || o.join(right) != s.mul(*j, x)) ok = false;
    }
  });
  return ok;
}

std::set<ElementMap> oracle_nuclei(const test::TableOracle& o) {
  const auto& s = o.s;
  std::set<ElementMap> out;
  ElementMap nu(o.n());
  auto check = [&] {
    for (ElementId a = 0; a < o.n(); ++a) {
      if (nu[nu[a]] != nu[a]) return false;
      for (ElementId b = 0; b < o.n(); ++b) {
        if (o.leq(a, b) && !o.leq(nu[a], nu[b])) return false;
        if (!o.leq(s.mul(nu[a], nu[b]), nu[s.mul(a, b)])) return false;
      }
    }
    return true;
  };
  std::function<void(ElementId)> go = [&](ElementId a) {
    if (a == o.n()) {
      if (check()) out.insert(nu);
      return;
    }
    for (ElementId v = 0; v < o.n(); ++v)
      if (o.leq(a, v)) {
        nu[a] = v;
        go(a + 1);
      }
  };
  go(0);
  return out;
}

}  // namespace

TEST_CASE("pseudogroup laws agree with the subset oracle") {
  for (auto& [name, s] : test::fixtures_up_to(8)) {
    INFO(name);
    test::TableOracle oracle{*s};
    const bool expected = oracle_pseudogroup(oracle);
    const auto v        = pseudogroup_violation(*s);
    CHECK(!v.has_value() == expected);
    if (expected) {
      Pseudogroup p(s);
      test::for_each_subset(s->size(), [&](const ElementSet& a) {
        if (a.empty() || !oracle.compatible(a)) return;
        CHECK(p.join(a) == *oracle.join(a));
      });
    } else {
      CHECK_THROWS_AS(Pseudogroup(s), Error);
    }
  }
}

TEST_CASE("named pseudogroups") {
  CHECK_FALSE(pseudogroup_violation(*symmetric_inverse(2)));
  CHECK_FALSE(pseudogroup_violation(*symmetric_inverse(3)));
  CHECK_FALSE(pseudogroup_violation(*powerset_semilattice(2)));
  CHECK_FALSE(pseudogroup_violation(*chain_semilattice(4)));
  auto z2 = pseudogroup_violation(*cyclic_group(2));
  REQUIRE(z2);
  CHECK(z2->law == "has-zero");

  Pseudogroup e4(powerset_semilattice(2));
  CHECK(e4.is_frame());
  CHECK(e4.join(e4.semigroup().empty_set()) == e4.zero());
  CHECK(e4.join(e4.semigroup().at("a"), e4.semigroup().at("b")) == e4.identity());

  Pseudogroup i2(symmetric_inverse(2));
  CHECK_FALSE(i2.is_frame());
  const auto& s = i2.semigroup();
  CHECK(i2.join(s.at("t12"), s.at("t21")) == s.at("s21"));
  try {
    i2.join(s.at("e1"), s.at("t12"));
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
  try {
    Pseudogroup(cyclic_group(2));
    FAIL("expected NotAPseudogroup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAPseudogroup);
  }
}

TEST_CASE("compatible ideals of I2 form a pseudogroup") {
  auto c = IdealSemigroup::build(symmetric_inverse(2));
  CHECK(c.size() == 9);
  CHECK_FALSE(pseudogroup_violation(*c.semigroup()));
}

TEST_CASE("pseudogroup homomorphisms") {
  Pseudogroup i2(symmetric_inverse(2));
  const auto& s = i2.semigroup();
  ElementMap id(s.size()), zero(s.size(), s.at("0"));
  for (ElementId x = 0; x < s.size(); ++x) id[x] = x;
  CHECK_FALSE(pseudogroup_hom_violation(i2, i2, id));
  CHECK_FALSE(pseudogroup_hom_violation(i2, i2, zero));
  auto swapped = id;
  std::swap(swapped[s.at("e1")], swapped[s.at("t12")]);
  CHECK(pseudogroup_hom_violation(i2, i2, swapped));

  // conjugation by the swap is an automorphism
  ElementMap conj(s.size());
  for (ElementId x = 0; x < s.size(); ++x) conj[x] = s.mul(s.at("s21"), x, s.at("s21"));
  CHECK_FALSE(pseudogroup_hom_violation(i2, i2, conj));
}

TEST_CASE("nucleus enumeration agrees with brute force") {
  for (auto& [name, s] : test::fixtures_up_to(7)) {
    INFO(name);
    test::TableOracle oracle{*s};
    const auto expected = oracle_nuclei(oracle);
    const auto got      = enumerate_nuclei(*s);
    CHECK(std::set<ElementMap>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
    for (const auto& nu : got) CHECK_FALSE(nucleus_violation(*s, nu));
  }
}

TEST_CASE("nucleus violations are named") {
  auto e4       = powerset_semilattice(2);
  const auto& s = *e4;
  ElementMap nu(s.size());
  for (ElementId x = 0; x < s.size(); ++x) nu[x] = x == s.at("0") ? x : s.at("1");
  auto v = nucleus_violation(s, nu);
  REQUIRE(v);
  CHECK(v->law == "N4");

  ElementMap shrink(s.size());
  for (ElementId x = 0; x < s.size(); ++x) shrink[x] = s.at("0");
  v = nucleus_violation(s, shrink);
  REQUIRE(v);
  CHECK(v->law == "N1");
  try {
    apply_nucleus_quotient(s, shrink);
    FAIL("expected NucleusAxiomFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NucleusAxiomFails);
  }
  CHECK_THROWS_AS(enumerate_nuclei(*symmetric_inverse(3)), Error);
}

TEST_CASE("nucleus quotients") {
  auto e4       = powerset_semilattice(2);
  const auto& s = *e4;
  ElementMap top(s.size(), s.at("1"));
  auto q = apply_nucleus_quotient(s, top);
  CHECK(q.semigroup->size() == 1);

  for (auto& [name, f] : test::fixtures_up_to(7)) {
    INFO(name);
    for (const auto& nu : enumerate_nuclei(*f)) {
      auto quotient = apply_nucleus_quotient(*f, nu);
      std::set<ElementId> fixed(nu.begin(), nu.end());
      CHECK(quotient.semigroup->size() == fixed.size());
      for (ElementId a = 0; a < f->size(); ++a) {
        CHECK(quotient.to_parent[quotient.to_quotient[a]] == nu[a]);
        for (ElementId b = 0; b < f->size(); ++b)
          CHECK(quotient.to_quotient[nu[f->mul(a, b)]] ==
                quotient.semigroup->mul(quotient.to_quotient[a], quotient.to_quotient[b]));
      }
    }
  }
}
