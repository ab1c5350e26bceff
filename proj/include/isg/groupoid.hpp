#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isg/coverage.hpp"
#include "isg/filters.hpp"
#include "isg/pseudogroup.hpp"
#include "isg/semigroup.hpp"
#include "isg/topology.hpp"

namespace isg {

using Arrow = std::size_t;

// Raw groupoid tables before validation. mul[g * n + h] is set exactly when
// d(g) = r(h).
struct GroupoidData {
  std::vector<std::string> names;
  std::vector<Arrow> d, r, inv;
  std::vector<std::optional<Arrow>> mul;
  FiniteTopology topology;
};

// Checks the groupoid laws (laws "composable", "associativity", "units",
// "inverse"), continuity of product and inverse ("continuity") and that d
// and r are local homeomorphisms ("etale").
std::optional<LawViolation> groupoid_violation(const GroupoidData& g);

// A finite étale groupoid with an explicit topology on its arrows.
class FiniteGroupoid {
 public:
  FiniteGroupoid() = default;
  // Throws NotAGroupoid or NotEtale.
  static FiniteGroupoid make(GroupoidData data);

  std::size_t size() const { return g_.names.size(); }
  const std::string& name(Arrow a) const { return g_.names[a]; }
  const std::vector<std::string>& names() const { return g_.names; }
  std::optional<Arrow> find(const std::string& name) const;
  Arrow at(const std::string& name) const;
  std::string format(const ElementSet& arrows) const { return g_.topology.format(arrows); }

  Arrow d(Arrow a) const { return g_.d[a]; }
  Arrow r(Arrow a) const { return g_.r[a]; }
  Arrow inv(Arrow a) const { return g_.inv[a]; }
  bool composable(Arrow a, Arrow b) const { return g_.d[a] == g_.r[b]; }
  Arrow mul(Arrow a, Arrow b) const;  // throws InvalidArgument when not composable
  bool is_unit(Arrow a) const { return g_.d[a] == a; }
  ElementSet units() const;

  const FiniteTopology& topology() const { return g_.topology; }
  const GroupoidData& data() const { return g_; }

 private:
  GroupoidData g_;
};

// n points, one arrow (i, j) for each ordered pair, discrete.
FiniteGroupoid pair_groupoid(std::size_t n);
// A space as a groupoid of units.
FiniteGroupoid space_groupoid(const FiniteTopology& t);

// Arrow bijection preserving d, r, products and the topology.
std::optional<std::vector<Arrow>> find_isomorphism(const FiniteGroupoid& a, const FiniteGroupoid& b);

// Lexicographically least encoding of the tables (d, r, inverse, product,
// neighbourhoods) over all relabelings that put units first and order the
// other arrows by (range, source). Equal forms iff isomorphic. SizeLimit
// beyond `cap` relabelings.
std::vector<std::size_t> canonical_form(const FiniteGroupoid& g, std::size_t cap = std::size_t{1} << 20);

// ----- groupoids of filters -----

enum class FilterTopology { tau, patch };

struct FilterGroupoidOptions {
  FilterTopology topology = FilterTopology::tau;
  bool adjoin_improper     = false;  // allow S without zero; the whole of S becomes an arrow
};

// A groupoid whose arrows are filters of a semigroup: d(A) = ↑(A^-1 A),
// r(A) = ↑(A A^-1), A * B = ↑(AB).
struct FilterGroupoid {
  SemigroupPtr base;
  std::vector<ElementSet> carriers;
  FiniteGroupoid groupoid;

  std::optional<Arrow> find(const ElementSet& carrier) const;
  // {A | s ∈ A}
  ElementSet basic_open(ElementId s) const;
};

// L(S). Throws NoZero unless adjoin_improper is set.
FilterGroupoid filter_groupoid(const SemigroupPtr& s, FilterGroupoidOptions opts = {});

// Groupoid on a chosen family of filters, which must be closed under d, r,
// inverses and products. Topology generated by the U_s, or the patch sets
// U_s minus U_t for t < s.
FilterGroupoid groupoid_on_filters(const SemigroupPtr& s, std::vector<ElementSet> carriers, FilterTopology topology);

// Subbasis of the patch topology using either every t < s or only the
// maximal ones.
std::vector<ElementSet> patch_subbasis(const FiniteInverseSemigroup& s, const std::vector<ElementSet>& carriers,
                                       bool maximal_only);

// G(P): completely prime filters of a pseudogroup with the U_a topology.
FilterGroupoid completely_prime_groupoid(const Pseudogroup& p);

// ----- bisections and sobriety -----

struct Bisections {
  SemigroupPtr semigroup;
  std::vector<ElementSet> carriers;
  std::optional<Pseudogroup> pseudogroup;

  std::optional<ElementId> find(const ElementSet& carrier) const;
  ElementId index_of(const ElementSet& carrier) const;  // throws InvalidArgument
};

// Open sets on which d and r are injective, under setwise product.
// SizeLimit beyond `cap` bisections.
Bisections bisections(const FiniteGroupoid& g, std::size_t cap = std::size_t{1} << 12);

// eta(g) = {A | g ∈ A}, given by its least member.
std::vector<ElementId> eta(const FiniteGroupoid& g, const Bisections& b);

struct SobrietyReport {
  bool injective    = false;
  bool surjective   = false;  // onto the completely prime filters of Bis(G)
  bool homeomorphism = false;
  std::string witness;
  bool ok() const { return injective && surjective && homeomorphism; }
};

SobrietyReport check_sober(const FiniteGroupoid& g);
inline bool is_sober(const FiniteGroupoid& g) { return check_sober(g).ok(); }

// ----- spectra -----

struct Spectrum {
  FilterFamily points;  // completely prime filters
  FiniteTopology space;  // generated by V_a = {xi | a ∈ xi}
};

// Throws NotAFrame when the pseudogroup has non-idempotent elements.
Spectrum spectrum(const Pseudogroup& frame);

// ----- embedding from a nucleus -----

struct EmbeddingReport {
  FilterGroupoid source;  // G(P_nu)
  FilterGroupoid target;  // G(P)
  Quotient quotient;
  std::vector<Arrow> phi;
  bool lands_in_target   = false;
  bool injective         = false;
  bool functorial        = false;  // composability both ways and products
  bool preserves_inverse = false;
  bool continuous        = false;
  bool open_onto_image   = false;
  bool r_closed          = false;  // X ∈ image iff r(X) ∈ image
  std::string witness;

  bool ok() const {
    return lands_in_target && injective && functorial && preserves_inverse && continuous && open_onto_image && r_closed;
  }
};

// Phi(A) = nu^-1(A). Throws NucleusAxiomFails.
EmbeddingReport nucleus_embedding(const Pseudogroup& p, const ElementMap& nu);

// ----- subspaces and reductions -----

// Points x such that for every basic U and Z ∈ C(U), x outside every member
// of Z forces x outside U. The basis must be closed under intersection and
// carries the coverage. Non-T1 sober spaces use the equivalent test on the
// frame of opens: x ∈ nu(U) implies x ∈ U. Throws NotT1Sober otherwise.
ElementSet subspace_from_coverage(const FiniteTopology& x, const FrameOfOpens& basis, const Coverage& cov);

// The same set computed on the frame of opens regardless of T1.
ElementSet saturated_points(const FiniteTopology& x, const FrameOfOpens& basis, const Coverage& cov);

struct Reduction {
  FiniteGroupoid groupoid;
  std::vector<Arrow> to_parent;
};

// Arrows with source and target in `units`, with the subspace topology.
Reduction reduce(const FiniteGroupoid& g, const ElementSet& units);
FilterGroupoid reduce(const FilterGroupoid& g, const ElementSet& units);

}  // namespace isg
