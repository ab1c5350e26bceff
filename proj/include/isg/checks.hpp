#pragma once

// Property suites shared by the command line tool and the acceptance run.
// Each suite counts the individual cases it checked and keeps one line per
// failure naming the offending input.

#include <cstddef>
#include <string>
#include <vector>

#include "isg/coverage.hpp"
#include "isg/pseudogroup.hpp"
#include "isg/semigroup.hpp"

namespace isg {

struct SuiteReport {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void check(bool passed, const std::string& what);
  void merge(const SuiteReport& other);
};

// Germs at every filter F of E(S) and every s with ss^-1 in F:
//   fs in germ for f in F; F recovered from the ranges of the germ; the germ
//   is a filter; any member gives the same germ; completely prime germs over
//   completely prime F when S is a pseudogroup; and germ_F a = A for every
//   filter A of S with F = ↑(AA^-1) in E(S).
SuiteReport germ_suite(const SemigroupPtr& s);

// Nucleus of a coverage on C(S): nucleus laws, fixpoint equal to the
// intersection of the closed ideals above, idempotent-pure quotient map.
SuiteReport nucleus_suite(const Coverage& cov);

// Groupoid embedding for every nucleus of a pseudogroup.
SuiteReport embedding_suite(const Pseudogroup& p, std::size_t nucleus_cap = 16);

// Tight filters three ways, unions of basic opens over tight covers,
// filters avoiding closed ideals, the frame isomorphism, sobriety of the
// tight space and tfilt recovered from the induced coverage.
SuiteReport tight_suite(const SemigroupPtr& e);

}  // namespace isg
