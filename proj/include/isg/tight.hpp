#pragma once

#include <string>
#include <vector>

#include "isg/coverage.hpp"
#include "isg/filters.hpp"
#include "isg/groupoid.hpp"
#include "isg/ideals.hpp"
#include "isg/topology.hpp"

namespace isg {

// Filters of a semilattice with zero that meet every tight cover of each
// of their members. Throws NoZero, or InvalidArgument when e is not a
// semilattice.
FilterFamily tight_filters(const SemigroupPtr& e);

// Closure of the ultrafilters in filt(E) under the patch topology.
FilterFamily tight_filters_by_closure(const SemigroupPtr& e);

// Points of filt(E), patch topology, that survive the coverage induced on
// its frame of opens by e -> U_e and the tight coverage.
FilterFamily tight_filters_by_coverage(const SemigroupPtr& e);

// L(S) with the patch topology, reduced to the units whose idempotent
// filter is tight.
FilterGroupoid tight_groupoid(const SemigroupPtr& s);

// tfilt(E) with the topology generated by V_e = {xi | e ∈ xi}.
struct TightSpace {
  FilterFamily points;
  FiniteTopology space;
  std::vector<ElementSet> v;  // V_e, indexed by e
};

TightSpace tau_e(const SemigroupPtr& e);

// e -> V_e into the frame of opens of the tight space.
ElementMap tight_opens_map(const TightSpace& t, const FrameOfOpens& opens);

// s -> {tight arrows containing s} into the bisections of the tight groupoid.
ElementMap tight_representation(const FilterGroupoid& tight, const Bisections& b);

// The tight nucleus on ↓e directly: g such that ↓g ∩ ↓e is a tight cover of g.
ElementSet tight_nucleus_direct(const FiniteInverseSemigroup& e, ElementId top);

// The frame of the tight coverage against the opens of the tight space,
// matched by I -> ∪_{x ∈ I} V_x.
struct TightFrameIso {
  UniversalPseudogroup frame;
  TightSpace space;
  FrameOfOpens opens;
  ElementMap iso;
  bool bijective             = false;
  bool preserves_meets       = false;
  bool preserves_joins       = false;
  bool direct_formula_agrees = false;
  std::string witness;

  bool ok() const { return bijective && preserves_meets && preserves_joins && direct_formula_agrees; }
};

TightFrameIso tight_frame_iso(const SemigroupPtr& e);

}  // namespace isg
