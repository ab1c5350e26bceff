#include "isg/topology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "isg/error.hpp"

namespace isg {

namespace {

std::vector<std::string> default_names(std::size_t n, std::vector<std::string> names) {
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  if (names.size() != n) throw Error(ErrorKind::InvalidArgument, "point names do not match the number of points");
  return names;
}

}  // namespace

FiniteTopology FiniteTopology::from_subbasis(std::size_t points, const std::vector<ElementSet>& subbasis,
                                             std::vector<std::string> names) {
  FiniteTopology t;
  t.names_    = default_names(points, std::move(names));
  t.subbasis_ = subbasis;
  // N(x) is the intersection of the subbasic sets through x.
  t.nbhd_.assign(points, ElementSet::full(points));
  for (const auto& u : subbasis) {
    if (u.universe() != points) throw Error(ErrorKind::InvalidArgument, "subbasic set over the wrong point set");
    for (auto x : u) t.nbhd_[x] &= u;
  }
  return t;
}

FiniteTopology FiniteTopology::discrete(std::size_t points, std::vector<std::string> names) {
  std::vector<ElementSet> sub;
  for (std::size_t x = 0; x < points; ++x) sub.push_back(ElementSet::singleton(points, x));
  return from_subbasis(points, sub, std::move(names));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t points, std::vector<std::string> names) {
  return from_subbasis(points, {}, std::move(names));
}

std::string FiniteTopology::format(const ElementSet& a) const {
  std::string out = "{";
  bool first      = true;
  for (auto x : a) {
    if (!first) out += ", ";
    out += names_[x];
    first = false;
  }
  return out + "}";
}

bool FiniteTopology::is_open(const ElementSet& u) const {
  for (auto x : u)
    if (!nbhd_[x].is_subset_of(u)) return false;
  return true;
}

ElementSet FiniteTopology::interior(const ElementSet& a) const {
  ElementSet out(size());
  for (auto x : a)
    if (nbhd_[x].is_subset_of(a)) out.insert(x);
  return out;
}

ElementSet FiniteTopology::closure(const ElementSet& a) const {
  ElementSet out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (nbhd_[x].intersects(a)) out.insert(x);
  return out;
}

ElementSet FiniteTopology::saturate(const ElementSet& a) const {
  ElementSet out(size());
  for (auto x : a) out |= nbhd_[x];
  return out;
}

std::vector<ElementSet> FiniteTopology::opens(std::size_t cap) const {
  // Unions of least neighbourhoods, grown breadth first.
  std::unordered_set<ElementSet, ElementSetHash> seen{ElementSet(size())};
  std::deque<ElementSet> work{ElementSet(size())};
  std::vector<ElementSet> out;
  while (!work.empty()) {
    auto u = std::move(work.front());
    work.pop_front();
    out.push_back(u);
    for (std::size_t x = 0; x < size(); ++x) {
      if (u.contains(x)) continue;
      auto v = u | nbhd_[x];
      if (seen.insert(v).second) {
        if (seen.size() > cap) throw Error(ErrorKind::SizeLimit, "more than " + std::to_string(cap) + " open sets");
        work.push_back(std::move(v));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  return out;
}

bool FiniteTopology::is_t0() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (nbhd_[x] == nbhd_[y]) return false;
  return true;
}

bool FiniteTopology::is_t1() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (nbhd_[x].count() != 1) return false;
  return true;
}

bool FiniteTopology::is_discrete() const { return is_t1(); }

FiniteTopology FiniteTopology::subspace(const std::vector<std::size_t>& points) const {
  std::vector<std::optional<std::size_t>> index(size());
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = i;
  auto restrict = [&](const ElementSet& u) {
    ElementSet out(points.size());
    for (auto x : u)
      if (index[x]) out.insert(*index[x]);
    return out;
  };
  FiniteTopology t;
  for (auto p : points) {
    t.nbhd_.push_back(restrict(nbhd_[p]));
    t.names_.push_back(names_[p]);
  }
  for (const auto& u : subbasis_) t.subbasis_.push_back(restrict(u));
  return t;
}

bool is_continuous(const FiniteTopology& from, const FiniteTopology& to, const std::vector<std::size_t>& f) {
  for (std::size_t x = 0; x < from.size(); ++x)
    for (auto y : from.neighbourhood(x))
      if (!to.neighbourhood(f[x]).contains(f[y])) return false;
  return true;
}

bool is_open_map(const FiniteTopology& from, const FiniteTopology& to, const std::vector<std::size_t>& f) {
  // Every open set is a union of least neighbourhoods, so those suffice.
  for (std::size_t x = 0; x < from.size(); ++x) {
    ElementSet image(to.size());
    for (auto y : from.neighbourhood(x)) image.insert(f[y]);
    if (!to.is_open(image)) return false;
  }
  return true;
}

std::optional<ElementId> FrameOfOpens::find(const ElementSet& open) const {
  auto it = std::lower_bound(opens.begin(), opens.end(), open, [](const ElementSet& a, const ElementSet& b) {
    return a.count() != b.count() ? a.count() < b.count() : a < b;
  });
  if (it == opens.end() || !(*it == open)) return std::nullopt;
  return static_cast<ElementId>(it - opens.begin());
}

ElementId FrameOfOpens::index_of(const ElementSet& open) const {
  if (auto i = find(open)) return *i;
  throw Error(ErrorKind::InvalidArgument, "not an open set");
}

FrameOfOpens frame_of_opens(const FiniteTopology& t, std::size_t cap) {
  FrameOfOpens f;
  f.opens = t.opens(cap);
  SemigroupTable table;
  for (const auto& u : f.opens) table.names.push_back(t.format(u));
  table.mul.assign(f.opens.size(), std::vector<ElementId>(f.opens.size()));
  for (std::size_t i = 0; i < f.opens.size(); ++i)
    for (std::size_t j = i; j < f.opens.size(); ++j) table.mul[i][j] = table.mul[j][i] = f.index_of(f.opens[i] & f.opens[j]);
  f.semigroup = FiniteInverseSemigroup::make(std::move(table), ValidateOptions{false});
  return f;
}

}  // namespace isg
