#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isg/pseudogroup.hpp"
#include "isg/semigroup.hpp"

namespace isg {

// Per-element families of coverings: every X ∈ covers(a) lies in ↓a.
// On a pseudogroup the coverage may additionally include every join
// decomposition of every element ("join covers"); those are tested on
// demand instead of being listed, since there are exponentially many.
class Coverage {
 public:
  explicit Coverage(SemigroupPtr base);

  const FiniteInverseSemigroup& base() const { return *base_; }
  const SemigroupPtr& base_ptr() const { return base_; }

  const std::set<ElementSet>& covers(ElementId a) const { return covers_[a]; }
  // Throws NotDownSet when x is not inside ↓a. Returns true if new.
  bool add(ElementId a, ElementSet x);
  bool contains(ElementId a, const ElementSet& x) const;
  std::size_t total() const;
  bool empty() const { return total() == 0 && !joins_; }

  void include_join_covers(const Pseudogroup& p);
  bool includes_join_covers() const { return joins_.has_value(); }
  const std::optional<Pseudogroup>& join_pseudogroup() const { return joins_; }
  // x ⊆ ↓a compatible with join a.
  bool is_join_cover(ElementId a, const ElementSet& x) const;

  friend bool operator==(const Coverage& a, const Coverage& b);

 private:
  SemigroupPtr base_;
  std::vector<std::set<ElementSet>> covers_;
  std::optional<Pseudogroup> joins_;
};

struct CoverSeed {
  ElementId of;
  ElementSet cover;
};

// Least family closed under left and right translation containing the seeds.
Coverage close_coverage(const SemigroupPtr& s, const std::vector<CoverSeed>& seeds);

struct CoverageReport {
  bool is_coverage = true;
  bool is_strong   = true;
  std::vector<LawViolation> failures;  // axiom name and witness
};

struct AxiomOptions {
  // Largest number of partial unions explored per (a, X) by the T check;
  // SizeLimit beyond it.
  std::size_t transitivity_budget = 1u << 20;
};

CoverageReport check_axioms(const Coverage& cov, AxiomOptions opts = {});

// Elementwise union; throws BaseMismatch when the bases differ.
Coverage coverage_union(const Coverage& a, const Coverage& b);

// A coverage on E(S), carried by the idempotent subsemigroup.
struct IdempotentCoverage {
  Subsemigroup idempotents;
  Coverage coverage;
};

IdempotentCoverage restrict_to_idempotents(const Coverage& cov);

// D~(s) = {sX | X ∈ D(s^-1 s)} ∪ {Xs | X ∈ D(ss^-1)}. Throws
// ConjugationClosureFails(s, e, X) when sXs^-1 ∉ D(ses^-1).
Coverage extend_from_idempotents(const SemigroupPtr& s, const IdempotentCoverage& d);

// Z ⊆ ↓a such that every 0 != t <= a has z ∈ Z with ↓t ∩ ↓z != {0}.
bool is_tight_cover(const FiniteInverseSemigroup& s, ElementId a, const ElementSet& z);
// Semilattice form: every 0 != b <= a has z ∈ Z with bz != 0.
bool is_tight_cover_semilattice(const FiniteInverseSemigroup& s, ElementId a, const ElementSet& z);

struct TightOptions {
  std::size_t max_down_set = 20;  // SizeLimit when |↓a| exceeds it
};

// All tight covers of every element. Throws NoZero.
Coverage tight_coverage(const SemigroupPtr& s, TightOptions opts = {});

// Covers of a that are minimal under inclusion.
std::vector<ElementSet> minimal_covers(const Coverage& cov, ElementId a);

// True when some cover of a lies inside `inside` (join covers included).
bool has_cover_inside(const Coverage& cov, const std::vector<ElementSet>& minimal, ElementId a,
                      const ElementSet& inside);

struct CoverToJoinReport {
  bool cover_to_join = true;
  bool idempotent_pure = true;
  std::string witness;
};

// theta(a) = ∨ theta(X) for every X ∈ C(a). Throws NotHomomorphism.
CoverToJoinReport is_cover_to_join(const Coverage& cov, const Pseudogroup& target, const ElementMap& theta);

// Coverage on P induced by theta: S -> P and C: every join decomposition
// plus q theta(X) r ∈ D(q theta(a) r) for X ∈ C(a), q, r ∈ P.
// Throws NotIdempotentPure and NotHomomorphism.
Coverage induced_coverage(const Coverage& cov, const Pseudogroup& target, const ElementMap& theta);

}  // namespace isg
