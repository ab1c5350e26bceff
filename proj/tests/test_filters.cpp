#include "catch_amalgamated.hpp"

#include "catalogue.hpp"
#include "isg/error.hpp"
#include "isg/filters.hpp"
#include "isg/fixtures.hpp"
#include "oracles.hpp"
#include "partial_maps.hpp"

using namespace isg;

namespace {

std::vector<std::string> min_names(const FiniteInverseSemigroup& s, const FilterFamily& f) {
  std::vector<std::string> out;
  for (const auto& x : f.filters) out.push_back(s.name(x.min));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("filters agree with the subset definition on small fixtures") {
  for (auto& [name, s] : test::fixtures_up_to(8)) {
    INFO(name);
    test::TableOracle oracle{*s};
    std::set<ElementSet> expected;
    test::for_each_subset(s->size(), [&](const ElementSet& a) {
      if (oracle.is_filter(a)) expected.insert(a);
    });
    std::set<ElementSet> got;
    for (const auto& f : enumerate_filters(*s).filters) {
      CHECK(f.carrier == s->up(f.min));
      CHECK(is_filter(*s, f.carrier));
      got.insert(f.carrier);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("filter counts of the named fixtures") {
  auto e4 = powerset_semilattice(2);
  CHECK(min_names(*e4, enumerate_filters(*e4)) == std::vector<std::string>{"1", "a", "b"});
  auto i2 = symmetric_inverse(2);
  CHECK(min_names(*i2, enumerate_filters(*i2)) ==
        std::vector<std::string>{"e1", "e2", "id", "s21", "t12", "t21"});
  CHECK(enumerate_filters(*cyclic_group(2)).size() == 2);
  CHECK(enumerate_filters(*cyclic_group(1)).size() == 0);
}

TEST_CASE("ultrafilters") {
  auto e4 = powerset_semilattice(2);
  CHECK(min_names(*e4, ultrafilters(*e4)) == std::vector<std::string>{"a", "b"});
  auto c3 = chain_semilattice(3);
  CHECK(min_names(*c3, ultrafilters(*c3)) == std::vector<std::string>{"c1"});
  auto i2 = symmetric_inverse(2);
  auto e  = idempotent_subsemigroup(*i2);
  CHECK(min_names(*e.semigroup, ultrafilters(*e.semigroup)) == std::vector<std::string>{"e1", "e2"});
  // maximal filters against the subset oracle
  for (auto& [name, s] : test::fixtures_up_to(8)) {
    INFO(name);
    auto all = enumerate_filters(*s);
    for (const auto& f : ultrafilters(*s).filters)
      for (const auto& g : all.filters)
        if (f.carrier.is_subset_of(g.carrier)) CHECK(f.min == g.min);
  }
}

TEST_CASE("completely prime filters agree with the compatible-subset definition") {
  for (auto spec : {"powerset_semilattice(2)", "powerset_semilattice(3)", "chain_semilattice(4)",
                    "symmetric_inverse(2)", "symmetric_inverse(1)"}) {
    INFO(spec);
    auto s = make_fixture(spec);
    Pseudogroup p(s);
    test::TableOracle oracle{*s};
    for (const auto& f : enumerate_filters(*s).filters) {
      bool prime = true;
      test::for_each_subset(s->size(), [&](const ElementSet& a) {
        if (a.empty() || !oracle.compatible(a)) return;
        auto j = oracle.join(a);
        if (j && f.carrier.contains(*j) && !a.intersects(f.carrier)) prime = false;
      });
      CHECK(is_completely_prime(p, f) == prime);
    }
  }
}

TEST_CASE("completely prime examples") {
  auto e4 = powerset_semilattice(2);  // opens of the 2-point discrete space
  Pseudogroup frame(e4);
  CHECK(is_completely_prime(frame, principal_filter(*e4, e4->at("a"))));
  CHECK_FALSE(is_completely_prime(frame, principal_filter(*e4, e4->at("1"))));
  auto i2 = symmetric_inverse(2);
  Pseudogroup bis(i2);
  CHECK_FALSE(is_completely_prime(bis, principal_filter(*i2, i2->at("s21"))));
  CHECK(is_completely_prime(bis, principal_filter(*i2, i2->at("t12"))));
  CHECK(min_names(*i2, completely_prime_filters(bis)) == std::vector<std::string>{"e1", "e2", "t12", "t21"});
  CHECK_THROWS_AS(Pseudogroup(cyclic_group(3)), Error);
}

TEST_CASE("germs") {
  auto i2    = symmetric_inverse(2);
  auto model = test::i2_model();
  const ElementSet f = i2->set_of({"e1", "id"});
  auto g             = germ(*i2, f, i2->at("t21"));
  // oracle: t with t t^-1 in F and e t = e s for some e in F, on partial maps
  ElementSet expected(i2->size());
  for (ElementId t = 0; t < i2->size(); ++t) {
    const auto& mt = model.at(i2->name(t));
    if (!f.contains(i2->ran(t))) continue;
    for (auto e : f)
      if (model.at(i2->name(e)).compose(mt) == model.at(i2->name(e)).compose(model.at("t21"))) expected.insert(t);
  }
  CHECK(g.carrier == expected);
  CHECK(g.carrier == i2->set_of({"t21", "s21"}));
  CHECK(i2->name(g.min) == "t21");

  // semilattice: germ of s ∈ F at F is F
  auto e4 = powerset_semilattice(2);
  const ElementSet fa = e4->set_of({"a", "1"});
  CHECK(germ(*e4, fa, e4->at("a")).carrier == fa);
  CHECK(germ(*e4, fa, e4->at("1")).carrier == fa);

  try {
    germ(*i2, f, i2->at("t12"));
    FAIL("expected DomainMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainMismatch);
  }
  CHECK_THROWS_AS(germ(*i2, i2->set_of({"e1", "e2"}), i2->at("e1")), Error);
}

TEST_CASE("germ base filter for the identity nucleus") {
  auto i2 = symmetric_inverse(2);
  ElementMap id(i2->size());
  for (ElementId x = 0; x < i2->size(); ++x) id[x] = x;
  auto q = apply_nucleus_quotient(*i2, id);
  // A = ↑t12 in S_nu = S
  auto a  = principal_filter(*q.semigroup, q.semigroup->at("t12"));
  auto fa = germ_base_filter(*i2, q, a);
  CHECK(fa == i2->set_of({"e2", "id"}));
}
