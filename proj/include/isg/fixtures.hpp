#pragma once

#include <cstddef>
#include <string_view>

#include "isg/semigroup.hpp"

namespace isg {

struct FixtureOptions {
  std::size_t size_cap = 4096;
};

// Partial bijections of {1..n} under (fg)(x) = f(g(x)). Names: "0" for the
// empty map, "id", "e<dom>" for other idempotents, "t<i><j>" for i -> j,
// "s<images>" for the other permutations and "p<images>" (with '_' for
// undefined points) for the remaining partial maps.
SemigroupPtr symmetric_inverse(std::size_t n, FixtureOptions opts = {});

// Subsets of an n-set under intersection: "0", "1" and letter words.
SemigroupPtr powerset_semilattice(std::size_t n, FixtureOptions opts = {});

// Z_n written multiplicatively: "e", "g", "g2", ...
SemigroupPtr cyclic_group(std::size_t n, FixtureOptions opts = {});

// 0 < c1 < ... < c(n-1) under minimum.
SemigroupPtr chain_semilattice(std::size_t n, FixtureOptions opts = {});

// Parses "symmetric_inverse(3)", "powerset_semilattice(2)", ...
SemigroupPtr make_fixture(std::string_view spec, FixtureOptions opts = {});

// Number of partial bijections of an n-set.
std::size_t symmetric_inverse_order(std::size_t n);

}  // namespace isg
