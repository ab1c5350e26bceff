#include "isg/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <string>
#include <tuple>

#include "isg/error.hpp"

namespace isg {

namespace {

constexpr int kUndefined = -1;
using PartialMap = std::vector<int>;

void check_cap(std::size_t count, const FixtureOptions& opts, std::string_view what) {
  if (count > opts.size_cap) {
    throw Error(ErrorKind::SizeLimit, std::string(what) + " has " + std::to_string(count) + " elements, cap is " +
                                          std::to_string(opts.size_cap));
  }
}

void enumerate_partial(std::size_t n, std::size_t point, PartialMap& current, std::vector<bool>& used,
                       std::vector<PartialMap>& out) {
  if (point == n) {
    out.push_back(current);
    return;
  }
  current[point] = kUndefined;
  enumerate_partial(n, point + 1, current, used, out);
  for (std::size_t img = 0; img < n; ++img) {
    if (used[img]) continue;
    used[img]        = true;
    current[point]   = static_cast<int>(img);
    enumerate_partial(n, point + 1, current, used, out);
    used[img] = false;
  }
  current[point] = kUndefined;
}

std::string partial_name(const PartialMap& f) {
  const std::size_t n = f.size();
  std::size_t rank = 0;
  bool idempotent  = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] != kUndefined) {
      ++rank;
      if (f[i] != static_cast<int>(i)) idempotent = false;
    }
  }
  if (rank == 0) return "0";
  if (idempotent) {
    if (rank == n) return "id";
    std::string name = "e";
    for (std::size_t i = 0; i < n; ++i)
      if (f[i] != kUndefined) name += std::to_string(i + 1);
    return name;
  }
  if (rank == 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (f[i] != kUndefined) return "t" + std::to_string(i + 1) + std::to_string(f[i] + 1);
  }
  std::string name = rank == n ? "s" : "p";
  for (std::size_t i = 0; i < n; ++i) name += f[i] == kUndefined ? std::string("_") : std::to_string(f[i] + 1);
  return name;
}

}  // namespace

std::size_t symmetric_inverse_order(std::size_t n) {
  // sum_k C(n,k)^2 k!
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    std::size_t binom = 1;
    for (std::size_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= i;
    total += binom * binom * fact;
  }
  return total;
}

SemigroupPtr symmetric_inverse(std::size_t n, FixtureOptions opts) {
  if (n == 0 || n > 9) throw Error(ErrorKind::InvalidArgument, "symmetric_inverse(n) needs 1 <= n <= 9");
  check_cap(symmetric_inverse_order(n), opts, "symmetric_inverse(" + std::to_string(n) + ")");

  std::vector<PartialMap> maps;
  PartialMap current(n, kUndefined);
  std::vector<bool> used(n, false);
  enumerate_partial(n, 0, current, used, maps);

  auto key = [](const PartialMap& f) {
    int rank = 0, moved = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] != kUndefined) ++rank;
      if (f[i] != kUndefined && f[i] != static_cast<int>(i)) ++moved;
    }
    return std::make_tuple(rank, moved != 0, f);
  };
  std::sort(maps.begin(), maps.end(), [&](const PartialMap& a, const PartialMap& b) { return key(a) < key(b); });

  std::map<PartialMap, ElementId> index;
  for (ElementId i = 0; i < maps.size(); ++i) index.emplace(maps[i], i);

  SemigroupTable t;
  t.mul.assign(maps.size(), std::vector<ElementId>(maps.size()));
  for (ElementId i = 0; i < maps.size(); ++i) {
    t.names.push_back(partial_name(maps[i]));
    for (ElementId j = 0; j < maps.size(); ++j) {
      PartialMap fg(n, kUndefined);
      for (std::size_t x = 0; x < n; ++x) {
        const int gx = maps[j][x];
        fg[x]        = gx == kUndefined ? kUndefined : maps[i][gx];
      }
      t.mul[i][j] = index.at(fg);
    }
  }
  return FiniteInverseSemigroup::make(std::move(t), {.check_associativity = false});
}

SemigroupPtr powerset_semilattice(std::size_t n, FixtureOptions opts) {
  if (n == 0 || n > 26) throw Error(ErrorKind::InvalidArgument, "powerset_semilattice(n) needs 1 <= n <= 26");
  if (n >= 63 || (std::size_t{1} << n) > opts.size_cap) {
    throw Error(ErrorKind::SizeLimit, "powerset_semilattice(" + std::to_string(n) + ") exceeds the size cap");
  }
  const std::size_t m = std::size_t{1} << n;
  SemigroupTable t;
  t.mul.assign(m, std::vector<ElementId>(m));
  for (std::size_t mask = 0; mask < m; ++mask) {
    std::string name;
    if (mask == 0) {
      name = "0";
    } else if (mask == m - 1) {
      name = "1";
    } else {
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (std::size_t{1} << b)) name += static_cast<char>('a' + b);
    }
    t.names.push_back(name);
    for (std::size_t other = 0; other < m; ++other) t.mul[mask][other] = mask & other;
  }
  return FiniteInverseSemigroup::make(std::move(t), {.check_associativity = false});
}

SemigroupPtr cyclic_group(std::size_t n, FixtureOptions opts) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic_group(n) needs n >= 1");
  check_cap(n, opts, "cyclic_group(" + std::to_string(n) + ")");
  SemigroupTable t;
  t.mul.assign(n, std::vector<ElementId>(n));
  for (std::size_t i = 0; i < n; ++i) {
    t.names.push_back(i == 0 ? "e" : i == 1 ? "g" : "g" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) t.mul[i][j] = (i + j) % n;
  }
  return FiniteInverseSemigroup::make(std::move(t), {.check_associativity = false});
}

SemigroupPtr chain_semilattice(std::size_t n, FixtureOptions opts) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "chain_semilattice(n) needs n >= 1");
  check_cap(n, opts, "chain_semilattice(" + std::to_string(n) + ")");
  SemigroupTable t;
  t.mul.assign(n, std::vector<ElementId>(n));
  for (std::size_t i = 0; i < n; ++i) {
    t.names.push_back(i == 0 ? "0" : "c" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) t.mul[i][j] = std::min(i, j);
  }
  return FiniteInverseSemigroup::make(std::move(t), {.check_associativity = false});
}

SemigroupPtr make_fixture(std::string_view spec, FixtureOptions opts) {
  const auto open  = spec.find('(');
  const auto close = spec.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open || close + 1 != spec.size()) {
    throw Error(ErrorKind::InvalidArgument, "fixture must look like name(n): '" + std::string(spec) + "'");
  }
  const auto name = spec.substr(0, open);
  const auto arg  = spec.substr(open + 1, close - open - 1);
  std::size_t n   = 0;
  auto [ptr, ec]  = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc() || ptr != arg.data() + arg.size()) {
    throw Error(ErrorKind::InvalidArgument, "bad fixture argument '" + std::string(arg) + "'");
  }
  if (name == "symmetric_inverse") return symmetric_inverse(n, opts);
  if (name == "powerset_semilattice") return powerset_semilattice(n, opts);
  if (name == "cyclic_group") return cyclic_group(n, opts);
  if (name == "chain_semilattice") return chain_semilattice(n, opts);
  throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + std::string(name) + "'");
}

}  // namespace isg
