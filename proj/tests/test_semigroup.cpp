#include "catch_amalgamated.hpp"

#include "catalogue.hpp"
#include "isg/error.hpp"
#include "isg/fixtures.hpp"
#include "isg/semigroup.hpp"
#include "partial_maps.hpp"

using namespace isg;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an isg::Error");
  return ErrorKind::InvalidArgument;
}

SemigroupTable z2_table() {
  SemigroupTable t;
  t.names = {"e", "g"};
  t.mul   = {{0, 1}, {1, 0}};
  return t;
}

}  // namespace

TEST_CASE("validate accepts the two-element group") {
  auto s = FiniteInverseSemigroup::validate(z2_table());
  CHECK(s.size() == 2);
  CHECK(s.inv(0) == 0);
  CHECK(s.inv(1) == 1);
  CHECK(s.identity() == ElementId{0});
  CHECK_FALSE(s.zero());
  CHECK(s.idempotents() == s.set_of({"e"}));
}

TEST_CASE("validate rejects a left-zero semigroup") {
  SemigroupTable t;
  t.names = {"a", "b"};
  t.mul   = {{0, 0}, {1, 1}};
  CHECK(kind_of([&] { FiniteInverseSemigroup::validate(t); }) == ErrorKind::NotInverseSemigroup);
}

TEST_CASE("validate reports the first non-associative triple") {
  SemigroupTable t;
  t.names = {"x", "y"};
  t.mul   = {{1, 0}, {0, 0}};
  CHECK(kind_of([&] { FiniteInverseSemigroup::validate(t); }) == ErrorKind::NonAssociative);
}

TEST_CASE("declared zero and identity are checked") {
  auto t = z2_table();
  t.zero = 1;
  CHECK(kind_of([&] { FiniteInverseSemigroup::validate(t); }) == ErrorKind::ZeroViolation);
  t.zero     = std::nullopt;
  t.identity = 1;
  CHECK(kind_of([&] { FiniteInverseSemigroup::validate(t); }) == ErrorKind::IdentityViolation);
}

TEST_CASE("malformed tables are validation errors") {
  SemigroupTable t;
  t.names = {"a", "a"};
  t.mul   = {{0, 0}, {0, 0}};
  CHECK(kind_of([&] { FiniteInverseSemigroup::validate(t); }) == ErrorKind::ValidationError);
  t.names = {"a", "b"};
  t.mul   = {{0, 0}};
  CHECK(kind_of([&] { FiniteInverseSemigroup::validate(t); }) == ErrorKind::ValidationError);
}

TEST_CASE("I2 matches the partial-bijection model") {
  auto s     = symmetric_inverse(2);
  auto model = test::i2_model();
  REQUIRE(s->size() == 7);
  for (ElementId x = 0; x < s->size(); ++x) {
    const auto& fx = model.at(s->name(x));
    CHECK(s->name(s->inv(x)) != "");
    CHECK(model.at(s->name(s->inv(x))) == fx.inverse());
    CHECK(s->is_idempotent(x) == fx.idempotent());
    for (ElementId y = 0; y < s->size(); ++y) {
      const auto& fy = model.at(s->name(y));
      CHECK(model.at(s->name(s->mul(x, y))) == fx.compose(fy));
      CHECK(s->leq(x, y) == fx.restricts(fy));
    }
  }
  // Full re-validation including all 343 associativity triples.
  CHECK_NOTHROW(FiniteInverseSemigroup::validate(s->table()));
  CHECK(s->zero() == s->find("0"));
  CHECK(s->identity() == s->find("id"));
}

TEST_CASE("idempotents of the small fixtures") {
  CHECK(cyclic_group(2)->idempotents().count() == 1);
  auto i2 = symmetric_inverse(2);
  CHECK(i2->idempotents() == i2->set_of({"0", "e1", "e2", "id"}));
  auto e4 = powerset_semilattice(2);
  CHECK(e4->idempotents().count() == 4);
  // E(S) = {x^-1 x}
  for (auto& [name, s] : test::fixtures_up_to(64)) {
    ElementSet doms(s->size());
    for (ElementId x = 0; x < s->size(); ++x) doms.insert(s->dom(x));
    CHECK(doms == s->idempotents());
  }
}

TEST_CASE("natural order examples") {
  auto i2 = symmetric_inverse(2);
  CHECK(i2->leq(i2->at("e1"), i2->at("id")));
  CHECK(i2->leq(i2->at("t12"), i2->at("s21")));
  CHECK_FALSE(i2->leq(i2->at("t12"), i2->at("id")));
  for (ElementId x = 0; x < i2->size(); ++x) CHECK(i2->leq(x, x));
}

TEST_CASE("compatibility decided against the partial-map model") {
  auto i2    = symmetric_inverse(2);
  auto model = test::i2_model();
  auto oracle = [&](const std::string& a, const std::string& b) {
    const auto& x = model.at(a);
    const auto& y = model.at(b);
    return x.inverse().compose(y).idempotent() && x.compose(y.inverse()).idempotent();
  };
  for (ElementId x = 0; x < i2->size(); ++x) {
    CHECK(i2->compatible(x, x));
    for (ElementId y = 0; y < i2->size(); ++y) CHECK(i2->compatible(x, y) == oracle(i2->name(x), i2->name(y)));
  }
  // t12 and t21 have disjoint domains and ranges; their union is s21.
  CHECK(i2->compatible(i2->at("t12"), i2->at("t21")));
  CHECK_FALSE(i2->compatible(i2->at("e1"), i2->at("t12")));
}

TEST_CASE("down and up sets") {
  auto e4 = powerset_semilattice(2);
  CHECK(e4->down_set(e4->set_of({"1"})) == e4->all());
  CHECK(e4->down_set(e4->empty_set()).empty());
  auto i2 = symmetric_inverse(2);
  CHECK(i2->up_set(i2->set_of({"e1"})) == i2->set_of({"e1", "id"}));
}

TEST_CASE("fixture sizes") {
  CHECK(symmetric_inverse(2)->size() == 7);
  CHECK(symmetric_inverse(3)->size() == 34);
  CHECK(symmetric_inverse(4)->size() == 209);
  CHECK(symmetric_inverse_order(3) == 34);
  CHECK(powerset_semilattice(2)->size() == 4);
  CHECK(powerset_semilattice(2)->names() == std::vector<std::string>{"0", "a", "b", "1"});
  CHECK(chain_semilattice(3)->names() == std::vector<std::string>{"0", "c1", "c2"});
  CHECK(make_fixture("cyclic_group(5)")->size() == 5);
  CHECK(kind_of([] { symmetric_inverse(6); }) == ErrorKind::SizeLimit);
  CHECK(kind_of([] { symmetric_inverse(3, {.size_cap = 10}); }) == ErrorKind::SizeLimit);
  CHECK(kind_of([] { make_fixture("nope(3)"); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { make_fixture("chain_semilattice(x)"); }) == ErrorKind::InvalidArgument);
  // generated tables survive the full associativity scan
  for (auto spec : {"symmetric_inverse(3)", "powerset_semilattice(3)", "cyclic_group(6)", "chain_semilattice(5)"}) {
    CHECK_NOTHROW(FiniteInverseSemigroup::validate(make_fixture(spec)->table()));
  }
}

TEST_CASE("order and idempotent invariants hold on every small fixture") {
  for (auto& [name, sp] : test::fixtures_up_to(64)) {
    INFO(name);
    const auto& s       = *sp;
    const std::size_t n = s.size();
    bool ok             = true;
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y) {
        if (s.leq(x, y) && s.leq(y, x) && x != y) ok = false;
        if (s.leq(x, y)) {
          if (!s.leq(s.inv(x), s.inv(y))) ok = false;
          for (ElementId z = 0; z < n; ++z) {
            if (!s.leq(s.mul(z, x), s.mul(z, y)) || !s.leq(s.mul(x, z), s.mul(y, z))) ok = false;
            if (s.leq(y, z) && !s.leq(x, z)) ok = false;
          }
        }
      }
    CHECK(ok);

    const auto& e = s.idempotents();
    for (auto a : e)
      for (auto b : e) {
        const ElementId ab = s.mul(a, b);
        CHECK(e.contains(ab));
        CHECK(ab == s.mul(b, a));
        // ab is the meet of a and b in E(S)
        const ElementSet lower = s.down(a) & s.down(b) & e;
        CHECK(lower == (s.down(ab) & e));
      }
  }
}

TEST_CASE("sets with a join are compatible") {
  for (auto& [name, sp] : test::fixtures_up_to(8)) {
    INFO(name);
    const auto& s = *sp;
    for (std::size_t mask = 1; mask < (std::size_t{1} << s.size()); ++mask) {
      ElementSet a(s.size());
      for (ElementId i = 0; i < s.size(); ++i)
        if (mask >> i & 1) a.insert(i);
      if (s.join(a)) CHECK(s.is_compatible(a));
    }
  }
}

TEST_CASE("subsemigroups") {
  auto i2 = symmetric_inverse(2);
  auto e  = idempotent_subsemigroup(*i2);
  CHECK(e.semigroup->size() == 4);
  CHECK(e.semigroup->is_semilattice());
  CHECK(e.semigroup->zero() == e.semigroup->find("0"));
  CHECK(kind_of([&] { subsemigroup(*i2, i2->set_of({"t12"})); }) == ErrorKind::ValidationError);
  auto round = e.lower(e.lift(e.semigroup->all()));
  CHECK(round == e.semigroup->all());
}
