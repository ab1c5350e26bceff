#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "isg/element_set.hpp"

namespace isg {

// Raw multiplication table as read from a file or produced by a generator.
struct SemigroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<ElementId>> mul;
  std::optional<ElementId> zero;      // declared zero; checked when present
  std::optional<ElementId> identity;  // declared identity; checked when present
};

struct ValidateOptions {
  // Generated fixtures that are associative by construction may skip the
  // O(n^3) scan.
  bool check_associativity = true;
};

class FiniteInverseSemigroup;
using SemigroupPtr = std::shared_ptr<const FiniteInverseSemigroup>;

// A validated finite inverse semigroup: multiplication table, inverse map,
// detected zero and identity, idempotents and the natural partial order
// (x <= y iff x = y x^-1 x) precomputed as bit rows. Immutable once built.
class FiniteInverseSemigroup {
 public:
  static FiniteInverseSemigroup validate(SemigroupTable table, ValidateOptions opts = {});
  static SemigroupPtr make(SemigroupTable table, ValidateOptions opts = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(ElementId x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(std::string_view name) const;
  ElementId at(std::string_view name) const;

  ElementId mul(ElementId x, ElementId y) const { return mul_[x * size() + y]; }
  ElementId mul(ElementId x, ElementId y, ElementId z) const { return mul(mul(x, y), z); }
  ElementId inv(ElementId x) const { return inv_[x]; }
  // x^-1 x and x x^-1
  ElementId dom(ElementId x) const { return mul(inv_[x], x); }
  ElementId ran(ElementId x) const { return mul(x, inv_[x]); }

  std::optional<ElementId> zero() const { return zero_; }
  std::optional<ElementId> identity() const { return identity_; }
  bool is_zero(ElementId x) const { return zero_ && *zero_ == x; }

  bool is_idempotent(ElementId x) const { return idempotents_.contains(x); }
  const ElementSet& idempotents() const { return idempotents_; }
  bool is_semilattice() const { return idempotents_.count() == size(); }

  bool leq(ElementId x, ElementId y) const { return up_[x].contains(y); }
  const ElementSet& up(ElementId x) const { return up_[x]; }
  const ElementSet& down(ElementId x) const { return down_[x]; }
  ElementSet up_set(const ElementSet& a) const;
  ElementSet down_set(const ElementSet& a) const;

  bool compatible(ElementId x, ElementId y) const {
    return is_idempotent(mul(inv_[x], y)) && is_idempotent(mul(x, inv_[y]));
  }
  bool is_compatible(const ElementSet& a) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }
  ElementSet set_of(std::initializer_list<std::string_view> names) const;
  ElementSet product(const ElementSet& a, const ElementSet& b) const;
  ElementSet left_translate(ElementId b, const ElementSet& x) const;
  ElementSet right_translate(const ElementSet& x, ElementId b) const;
  ElementSet inverse(const ElementSet& x) const;

  // Least upper bound in the natural partial order; for the empty set this
  // is the minimum of S when one exists.
  std::optional<ElementId> join(const ElementSet& a) const;

  std::string format(const ElementSet& a) const;
  SemigroupTable table() const;

  friend bool operator==(const FiniteInverseSemigroup& a, const FiniteInverseSemigroup& b) {
    return a.names_ == b.names_ && a.mul_ == b.mul_;
  }

 private:
  FiniteInverseSemigroup() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ElementId> index_;
  std::vector<ElementId> mul_;
  std::vector<ElementId> inv_;
  std::optional<ElementId> zero_;
  std::optional<ElementId> identity_;
  ElementSet idempotents_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

// A map between the element sets of two finite semigroups.
using ElementMap = std::vector<ElementId>;

// Returns a description of the first pair (x, y) with f(xy) != f(x)f(y).
std::optional<std::string> homomorphism_violation(const FiniteInverseSemigroup& from,
                                                  const FiniteInverseSemigroup& to,
                                                  const ElementMap& f);

// f(s) idempotent implies s idempotent.
bool is_idempotent_pure(const FiniteInverseSemigroup& from, const FiniteInverseSemigroup& to,
                        const ElementMap& f);

// Inverse subsemigroup carried by a subset of a parent semigroup.
struct Subsemigroup {
  SemigroupPtr semigroup;
  std::vector<ElementId> to_parent;
  std::vector<std::optional<ElementId>> from_parent;
  ElementSet carrier;

  ElementSet lift(const ElementSet& sub_set) const;
  ElementSet lower(const ElementSet& parent_set) const;
};

// Throws ValidationError when the carrier is not closed under product and inverse.
Subsemigroup subsemigroup(const FiniteInverseSemigroup& parent, const ElementSet& carrier);
Subsemigroup idempotent_subsemigroup(const FiniteInverseSemigroup& parent);

}  // namespace isg
