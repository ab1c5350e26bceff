#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "isg/element_set.hpp"
#include "isg/semigroup.hpp"

namespace isg {

// A topology on points 0..n-1. Every point of a finite space has a least
// open neighbourhood, and a set is open iff it contains the least
// neighbourhood of each of its points, so those n sets are all we store.
class FiniteTopology {
 public:
  FiniteTopology() = default;

  // Topology generated by a subbasis (finite intersections, then unions).
  static FiniteTopology from_subbasis(std::size_t points, const std::vector<ElementSet>& subbasis,
                                      std::vector<std::string> names = {});
  static FiniteTopology discrete(std::size_t points, std::vector<std::string> names = {});
  static FiniteTopology indiscrete(std::size_t points, std::vector<std::string> names = {});

  std::size_t size() const { return nbhd_.size(); }
  const std::string& name(std::size_t x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::string format(const ElementSet& a) const;

  const ElementSet& neighbourhood(std::size_t x) const { return nbhd_[x]; }
  const std::vector<ElementSet>& subbasis() const { return subbasis_; }

  bool is_open(const ElementSet& u) const;
  ElementSet interior(const ElementSet& a) const;
  ElementSet closure(const ElementSet& a) const;
  // Least open set containing a.
  ElementSet saturate(const ElementSet& a) const;

  // Every open set, smallest first; SizeLimit beyond `cap`.
  std::vector<ElementSet> opens(std::size_t cap = std::size_t{1} << 16) const;

  bool is_t0() const;
  bool is_t1() const;
  bool is_discrete() const;

  // Subspace on the listed points, reindexed in that order.
  FiniteTopology subspace(const std::vector<std::size_t>& points) const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) { return a.nbhd_ == b.nbhd_; }

 private:
  std::vector<ElementSet> nbhd_;
  std::vector<ElementSet> subbasis_;
  std::vector<std::string> names_;
};

// Preimages of opens are open: f(N(x)) ⊆ N(f(x)) for every x.
bool is_continuous(const FiniteTopology& from, const FiniteTopology& to, const std::vector<std::size_t>& f);

// Image of every open set is open.
bool is_open_map(const FiniteTopology& from, const FiniteTopology& to, const std::vector<std::size_t>& f);

// The frame of open sets as an idempotent pseudogroup (product is
// intersection), with the open set behind each element.
struct FrameOfOpens {
  SemigroupPtr semigroup;
  std::vector<ElementSet> opens;

  std::optional<ElementId> find(const ElementSet& open) const;
  ElementId index_of(const ElementSet& open) const;  // throws InvalidArgument
};

FrameOfOpens frame_of_opens(const FiniteTopology& t, std::size_t cap = std::size_t{1} << 12);

}  // namespace isg
