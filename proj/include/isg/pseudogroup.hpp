#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isg/semigroup.hpp"

namespace isg {

// A law that failed, with a concrete witness.
struct LawViolation {
  std::string law;
  std::string witness;
};

// Pseudogroup laws for a finite inverse semigroup: 0 and 1 exist, every
// compatible pair has a join, that join stays compatible with everything
// compatible with both parts, and products distribute over it on both
// sides. By induction these give joins and distributivity for every
// nonempty compatible subset.
std::optional<LawViolation> pseudogroup_violation(const FiniteInverseSemigroup& s);

// A finite inverse semigroup that passed the pseudogroup laws.
class Pseudogroup {
 public:
  explicit Pseudogroup(SemigroupPtr s);  // throws NotAPseudogroup

  const FiniteInverseSemigroup& semigroup() const { return *s_; }
  const SemigroupPtr& ptr() const { return s_; }
  std::size_t size() const { return s_->size(); }
  ElementId zero() const { return *s_->zero(); }
  ElementId identity() const { return *s_->identity(); }

  // Join of a compatible subset; the empty join is 0.
  ElementId join(const ElementSet& compatible) const;
  ElementId join(ElementId a, ElementId b) const;

  bool is_frame() const { return s_->is_semilattice(); }

 private:
  SemigroupPtr s_;
};

// Semigroup homomorphism that also preserves joins of compatible pairs.
std::optional<std::string> pseudogroup_hom_violation(const Pseudogroup& from, const Pseudogroup& to,
                                                     const ElementMap& f);

// ----- nuclei -----

// Checks N1 (inflationary), N2 (monotone), N3 (idempotent) and
// N4 (nu(a) nu(b) <= nu(ab)).
std::optional<LawViolation> nucleus_violation(const FiniteInverseSemigroup& s, const ElementMap& nu);

// Fixed points of a nucleus with the product a . b = nu(ab).
struct Quotient {
  SemigroupPtr semigroup;
  ElementMap to_quotient;          // a -> nu(a), as an index of the quotient
  std::vector<ElementId> to_parent;  // quotient element -> fixed point in the parent
};

// Throws NucleusAxiomFails when nu is not a nucleus.
Quotient apply_nucleus_quotient(const FiniteInverseSemigroup& s, const ElementMap& nu);

// Every nucleus on s. A nucleus is determined by its fixed-point set Q:
// nu(a) = min(Q ∩ ↑a), so the search runs over subsets of s. Throws
// SizeLimit when |s| exceeds the cap.
std::vector<ElementMap> enumerate_nuclei(const FiniteInverseSemigroup& s, std::size_t cap = 16);

}  // namespace isg
