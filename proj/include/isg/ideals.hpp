#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "isg/coverage.hpp"
#include "isg/pseudogroup.hpp"
#include "isg/semigroup.hpp"

namespace isg {

struct IdealOptions {
  std::size_t candidate_cap = std::size_t{1} << 20;  // search nodes before SizeLimit
};

// C(S): the compatible order ideals of S under I·J = ↓(IJ), as an inverse
// semigroup in its own right. When S has a zero every ideal contains it and
// {0} is the bottom; otherwise the empty ideal is the bottom.
class IdealSemigroup {
 public:
  static IdealSemigroup build(SemigroupPtr s, IdealOptions opts = {});

  const FiniteInverseSemigroup& base() const { return *base_; }
  const SemigroupPtr& base_ptr() const { return base_; }
  const SemigroupPtr& semigroup() const { return ideals_; }
  std::size_t size() const { return carriers_.size(); }

  const ElementSet& carrier(ElementId i) const { return carriers_[i]; }
  std::optional<ElementId> find(const ElementSet& carrier) const;
  ElementId index_of(const ElementSet& carrier) const;  // throws InvalidArgument
  // ↓a
  ElementId principal(ElementId a) const { return principal_[a]; }

 private:
  SemigroupPtr base_;
  SemigroupPtr ideals_;
  std::vector<ElementSet> carriers_;
  std::unordered_map<ElementSet, ElementId, ElementSetHash> index_;
  std::vector<ElementId> principal_;
};

bool is_compatible_ideal(const FiniteInverseSemigroup& s, const ElementSet& a);

// A ⊆ S with: X ⊆ A and X ∈ C(a) imply a ∈ A.
bool is_closed(const Coverage& cov, const ElementSet& a);

// Least C-closed compatible ideal above each ideal, as a map on C(S).
// Throws CompatibilityLost when the closure of some ideal stops being
// compatible.
ElementMap nucleus_from_coverage(const IdealSemigroup& c, const Coverage& cov);

// Closure of a single subset under the same rule.
ElementSet coverage_closure(const Coverage& cov, const ElementSet& a);

// P_C(S): the C-closed compatible ideals with I . J = nu(IJ), and
// pi(a) = nu(↓a).
struct UniversalPseudogroup {
  IdealSemigroup ideals;
  ElementMap nucleus;  // on C(S)
  Quotient quotient;   // C(S) -> P_C(S)
  std::optional<Pseudogroup> pseudogroup;
  ElementMap pi;       // S -> P_C(S)

  const FiniteInverseSemigroup& semigroup() const { return *quotient.semigroup; }
  const Pseudogroup& p() const { return *pseudogroup; }
  const ElementSet& carrier(ElementId p) const { return ideals.carrier(quotient.to_parent[p]); }
  std::optional<ElementId> find(const ElementSet& carrier) const;
};

UniversalPseudogroup universal_pseudogroup(const Coverage& cov, IdealOptions opts = {});

struct UniversalPropertyReport {
  ElementMap factor;  // P_C(S) -> T
  bool homomorphism    = false;
  bool factors         = false;  // theta = factor ∘ pi
  bool idempotent_pure = false;
  std::optional<std::size_t> factorizations;  // exhaustive count, when searched
  bool unique_by_generation = false;          // ∨ pi(I) = I for every I
  std::string witness;

  bool ok() const {
    return homomorphism && factors && idempotent_pure && unique_by_generation &&
           (!factorizations || *factorizations == 1);
  }
};

struct UniversalPropertyOptions {
  std::size_t exhaustive_limit = 64;  // |P_C(S)| up to which uniqueness is searched
};

// theta~(nu(A)) = ∨ theta(A). Throws PreconditionFailed when theta is not
// cover-to-join or not idempotent-pure.
UniversalPropertyReport verify_universal_property(const UniversalPseudogroup& u, const Coverage& cov,
                                                  const Pseudogroup& target, const ElementMap& theta,
                                                  UniversalPropertyOptions opts = {});

// Number of pseudogroup homomorphisms P -> T that agree with `fixed` where
// it is set, stopping at `stop_at`.
std::size_t count_extensions(const Pseudogroup& from, const Pseudogroup& to,
                             const std::vector<std::optional<ElementId>>& fixed, std::size_t stop_at = 2);

// Coverage on a generating inverse subsemigroup S of P: X ∈ C'(a) iff X ⊆ S
// is compatible and a = ∨X in P.
struct GeneratedCoverage {
  Subsemigroup sub;
  Coverage coverage;
};

struct GeneratedOptions {
  std::size_t max_down_set = 20;
};

// Throws NotGenerating when some element of P is not a join of elements of S.
GeneratedCoverage generated_coverage(const Pseudogroup& p, const ElementSet& carrier, GeneratedOptions opts = {});

struct ReconstructionReport {
  ElementMap phi;  // P_C'(S) -> P, I -> ∨I
  bool bijective = false;
  bool pseudogroup_hom = false;
  std::string witness;
  bool ok() const { return bijective && pseudogroup_hom; }
};

ReconstructionReport verify_reconstruction(const Pseudogroup& p, const GeneratedCoverage& g,
                                           const UniversalPseudogroup& u);

}  // namespace isg
