#pragma once

#include <string>
#include <utility>
#include <vector>

#include "isg/fixtures.hpp"

namespace isg::test {

struct NamedFixture {
  std::string name;
  SemigroupPtr s;
};

inline std::vector<NamedFixture> fixtures_up_to(std::size_t max_size) {
  const char* specs[] = {
      "symmetric_inverse(1)", "symmetric_inverse(2)", "symmetric_inverse(3)", "powerset_semilattice(1)",
      "powerset_semilattice(2)", "powerset_semilattice(3)", "powerset_semilattice(4)", "cyclic_group(1)",
      "cyclic_group(2)", "cyclic_group(3)", "cyclic_group(4)", "cyclic_group(5)", "cyclic_group(6)",
      "cyclic_group(8)", "chain_semilattice(1)", "chain_semilattice(2)", "chain_semilattice(3)",
      "chain_semilattice(4)", "chain_semilattice(5)", "chain_semilattice(8)",
  };
  std::vector<NamedFixture> out;
  for (auto spec : specs) {
    auto s = make_fixture(spec);
    if (s->size() <= max_size) out.push_back({spec, s});
  }
  return out;
}

// Semilattices with zero used by the tight-filter suites.
inline std::vector<NamedFixture> semilattice_fixtures() {
  return {{"powerset_semilattice(2)", powerset_semilattice(2)},
          {"chain_semilattice(3)", chain_semilattice(3)},
          {"chain_semilattice(4)", chain_semilattice(4)},
          {"powerset_semilattice(3)", powerset_semilattice(3)}};
}

}  // namespace isg::test
