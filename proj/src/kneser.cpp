#include "kchroma/kneser.hpp"

#include <string>

#include "kchroma/error.hpp"

namespace kchroma {

namespace {

void require_nk(unsigned n, unsigned k) {
  if (k < 1 || k > n || n > kMaxGround) {
    throw Error(Errc::invalid_argument, "need 1 <= k <= n <= 62, got n=" + std::to_string(n) +
                                            " k=" + std::to_string(k));
  }
}

std::uint64_t next_combination(std::uint64_t x) noexcept {
  // Gosper's hack: next larger integer with the same popcount.
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

KSubset KSubset::make(std::uint64_t mask, unsigned n) {
  if (n > kMaxGround) throw Error(Errc::invalid_argument, "ground size exceeds 62");
  if (mask >> n) throw Error(Errc::invalid_argument, "mask has bits outside the ground set");
  const auto k = static_cast<unsigned>(std::popcount(mask));
  if (k < 1) throw Error(Errc::invalid_argument, "empty subset");
  return KSubset{mask, n, k};
}

GraphSpec GraphSpec::kneser(unsigned n, unsigned k) {
  GraphSpec s{n, k, GraphVariant::kneser, 0};
  s.validate();
  return s;
}

GraphSpec GraphSpec::kneser_square(unsigned n, unsigned k) {
  GraphSpec s{n, k, GraphVariant::kneser_square, 0};
  s.validate();
  return s;
}

GraphSpec GraphSpec::johnson_power(unsigned n, unsigned k, unsigned m) {
  GraphSpec s{n, k, GraphVariant::johnson_power, m};
  s.validate();
  return s;
}

void GraphSpec::validate() const {
  require_nk(n, k);
  switch (variant) {
    case GraphVariant::kneser:
    case GraphVariant::kneser_square:
      if (n < 2 * k) throw Error(Errc::invalid_argument, "Kneser graphs need n >= 2k");
      break;
    case GraphVariant::johnson_power:
      if (m < 1 || m > k) throw Error(Errc::invalid_argument, "Johnson power needs 1 <= m <= k");
      break;
  }
}

PairRule PairRule::for_graph(const GraphSpec& spec) {
  spec.validate();
  PairRule rule;
  const int n = static_cast<int>(spec.n);
  const int k = static_cast<int>(spec.k);
  switch (spec.variant) {
    case GraphVariant::kneser:
      rule.allow(0);
      break;
    case GraphVariant::kneser_square:
      // Distance <= 2 in K(n,k): disjoint, or a common disjoint k-set fits
      // into the complement of A u B, i.e. |A n B| >= 3k - n.
      rule.allow(0);
      for (int i = 1; i < k; ++i) {
        if (i >= 3 * k - n) rule.allow(static_cast<unsigned>(i));
      }
      break;
    case GraphVariant::johnson_power:
      for (int i = k - static_cast<int>(spec.m); i < k; ++i) {
        if (i >= 0) rule.allow(static_cast<unsigned>(i));
      }
      break;
  }
  return rule;
}

PairRule PairRule::distance2(unsigned n, unsigned k) {
  require_nk(n, k);
  if (n <= 2 * k) throw Error(Errc::invalid_argument, "distance-2 relation needs n > 2k");
  PairRule rule;
  const int r = static_cast<int>(n - 2 * k);
  for (int i = static_cast<int>(k) - r; i < static_cast<int>(k); ++i) {
    if (i >= 0) rule.allow(static_cast<unsigned>(i));
  }
  return rule;
}

std::uint64_t binomial(unsigned n, unsigned k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  __extension__ unsigned __int128 acc = 1;
  for (unsigned i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<std::uint64_t> enumerate_masks(unsigned n, unsigned k) {
  require_nk(n, k);
  const std::uint64_t count = binomial(n, k);
  if (count > kMaxVertices) {
    throw Error(Errc::too_large, "C(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                                     std::to_string(count) + " exceeds 200000 vertices");
  }
  std::vector<std::uint64_t> out;
  out.reserve(count);
  std::uint64_t x = (std::uint64_t{1} << k) - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(x);
    if (i + 1 < count) x = next_combination(x);
  }
  return out;
}

std::vector<KSubset> enumerate_vertices(unsigned n, unsigned k) {
  const auto masks = enumerate_masks(n, k);
  std::vector<KSubset> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(KSubset{m, n, k});
  return out;
}

bool adjacent(const GraphSpec& spec, const KSubset& a, const KSubset& b) {
  if (a.n != spec.n || b.n != spec.n || a.k != spec.k || b.k != spec.k) {
    throw Error(Errc::invalid_argument, "subsets do not match the graph parameters");
  }
  if (a.mask == b.mask) return false;
  return PairRule::for_graph(spec).related(a.mask, b.mask);
}

bool distance2_related(unsigned n, unsigned k, const KSubset& a, const KSubset& b) {
  if (a.mask == b.mask) return false;
  return PairRule::distance2(n, k).related(a.mask, b.mask);
}

std::uint64_t degree_check(const GraphSpec& spec) {
  spec.validate();
  if (binomial(spec.n, spec.k) > 20'000) {
    throw Error(Errc::too_large, "degree scan limited to 20000 vertices");
  }
  const auto masks = enumerate_masks(spec.n, spec.k);
  const PairRule rule = PairRule::for_graph(spec);
  std::vector<std::uint64_t> degree(masks.size(), 0);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if (rule.related(masks[i], masks[j])) {
        ++degree[i];
        ++degree[j];
      }
    }
  }
  for (std::size_t i = 1; i < degree.size(); ++i) {
    if (degree[i] != degree[0]) {
      throw Error(Errc::not_regular, "vertex " + std::to_string(i) + " has degree " +
                                         std::to_string(degree[i]) + ", vertex 0 has " +
                                         std::to_string(degree[0]));
    }
  }
  return degree.empty() ? 0 : degree[0];
}

}  // namespace kchroma
