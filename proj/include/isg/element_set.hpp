#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace isg {

// Dense index of an element inside its owning structure.
using ElementId = std::size_t;

// Fixed-universe bitset. Every subset used by the toolkit (subsets of a
// semigroup, filter families, open sets, bisections) is one of these.
class ElementSet {
  using Bits = boost::dynamic_bitset<std::uint64_t>;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type        = ElementId;
    using difference_type   = std::ptrdiff_t;
    using pointer           = const ElementId*;
    using reference         = ElementId;

    const_iterator() = default;
    const_iterator(const Bits* bits, std::size_t pos) : bits_(bits), pos_(pos) {}

    ElementId operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = bits_->find_next(pos_);
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    const Bits* bits_ = nullptr;
    std::size_t pos_  = Bits::npos;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<ElementId> members) : bits_(universe) {
    for (auto m : members) bits_.set(m);
  }
  ElementSet(std::size_t universe, const std::vector<ElementId>& members) : bits_(universe) {
    for (auto m : members) bits_.set(m);
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    s.bits_.set();
    return s;
  }
  static ElementSet singleton(std::size_t universe, ElementId x) { return ElementSet(universe, {x}); }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(ElementId x) const { return x < bits_.size() && bits_.test(x); }
  void insert(ElementId x) { bits_.set(x); }
  void erase(ElementId x) { bits_.reset(x); }

  bool is_subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const ElementSet& other) const { return bits_.intersects(other.bits_); }

  std::optional<ElementId> first() const {
    auto p = bits_.find_first();
    if (p == Bits::npos) return std::nullopt;
    return p;
  }

  ElementSet& operator|=(const ElementSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    ElementSet c(*this);
    c.bits_.flip();
    return c;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.bits_ == b.bits_; }
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.bits_ < b.bits_; }

  const_iterator begin() const { return {&bits_, bits_.find_first()}; }
  const_iterator end() const { return {&bits_, Bits::npos}; }

  std::vector<ElementId> to_vector() const { return {begin(), end()}; }

  std::size_t hash() const {
    std::size_t h = bits_.size();
    boost::to_block_range(bits_, HashSink{&h});
    return h;
  }

 private:
  struct HashSink {
    std::size_t* h;
    using iterator_category = std::output_iterator_tag;
    using value_type        = void;
    using difference_type   = std::ptrdiff_t;
    using pointer           = void;
    using reference         = void;
    HashSink& operator*() { return *this; }
    HashSink& operator++() { return *this; }
    HashSink operator++(int) { return *this; }
    HashSink& operator=(std::uint64_t block) {
      *h ^= std::hash<std::uint64_t>{}(block) + 0x9e3779b97f4a7c15ULL + (*h << 6) + (*h >> 2);
      return *this;
    }
  };

  Bits bits_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace isg
