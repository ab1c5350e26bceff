#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "isg/pseudogroup.hpp"
#include "isg/semigroup.hpp"

namespace isg {

// A filter of a finite inverse semigroup. Finite down-directed sets have a
// minimum, so every filter is ↑min; the carrier is kept for set operations.
struct PrincipalFilter {
  ElementId min;
  ElementSet carrier;

  friend bool operator==(const PrincipalFilter& a, const PrincipalFilter& b) { return a.min == b.min; }
};

enum class FilterKind { all, ultra, tight, completely_prime };

std::string_view to_string(FilterKind kind);

struct FilterFamily {
  FilterKind kind = FilterKind::all;
  std::vector<PrincipalFilter> filters;

  std::size_t size() const { return filters.size(); }
  bool contains_min(ElementId m) const;
  ElementSet mins(std::size_t universe) const;
};

// ↑m; throws InvalidArgument when ↑m is all of S.
PrincipalFilter principal_filter(const FiniteInverseSemigroup& s, ElementId m);

// Subset test against the filter definition: nonempty, proper, up-closed,
// down-directed. Used to validate germs and by the test oracles.
bool is_filter(const FiniteInverseSemigroup& s, const ElementSet& candidate);

// Same definition relative to the idempotents: F ⊆ E(S), nonempty,
// F != E(S), up-closed in E(S), closed under products.
bool is_idempotent_filter(const FiniteInverseSemigroup& s, const ElementSet& candidate);

// Minimum of a set in the natural order, if it has one.
std::optional<ElementId> minimum(const FiniteInverseSemigroup& s, const ElementSet& a);

// All proper principal up-sets ↑m.
FilterFamily enumerate_filters(const FiniteInverseSemigroup& s);

// Filters maximal under inclusion.
FilterFamily ultrafilters(const FiniteInverseSemigroup& s);

// ↑m is completely prime iff m != 0 and the join of ↓m \ {m} is not m:
// in a pseudogroup any compatible A with ∨A >= m gives m = ∨{a m^-1 m}.
bool is_completely_prime(const Pseudogroup& p, const PrincipalFilter& f);
bool is_completely_prime(const Pseudogroup& p, ElementId min);
FilterFamily completely_prime_filters(const Pseudogroup& p);

// {t | tt^-1 ∈ F and ft = fs for some f ∈ F} for a filter F of E(S) given
// as a subset of S. Throws DomainMismatch when ss^-1 ∉ F and InvalidArgument
// when F is not a filter of E(S).
PrincipalFilter germ(const FiniteInverseSemigroup& s, const ElementSet& f, ElementId x);

// F_A = nu^-1(↑(A·A^-1) ∩ E(S_nu)) for a filter A of the quotient S_nu.
// Returned as a subset of S (a filter of E(S)).
ElementSet germ_base_filter(const FiniteInverseSemigroup& s, const Quotient& q, const PrincipalFilter& a);

}  // namespace isg
