#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace kchroma {

inline constexpr unsigned kMaxGround = 62;
inline constexpr std::uint64_t kMaxVertices = 200'000;

/// Vertex of K(n,k): a k-subset of ground positions {0..n-1} as a bitmask.
struct KSubset {
  std::uint64_t mask = 0;
  unsigned n = 0;
  unsigned k = 0;

  /// Validates popcount and range; throws Errc::invalid_argument.
  static KSubset make(std::uint64_t mask, unsigned n);

  friend bool operator==(const KSubset&, const KSubset&) = default;
};

enum class GraphVariant { kneser, kneser_square, johnson_power };

struct GraphSpec {
  unsigned n = 0;
  unsigned k = 0;
  GraphVariant variant = GraphVariant::kneser;
  unsigned m = 0;  // johnson_power only

  static GraphSpec kneser(unsigned n, unsigned k);
  static GraphSpec kneser_square(unsigned n, unsigned k);
  static GraphSpec johnson_power(unsigned n, unsigned k, unsigned m);

  /// Throws Errc::invalid_argument when n, k, m break the variant's range.
  void validate() const;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

/// Adjacency of two distinct k-subsets depends only on |A n B|, so every
/// predicate here reduces to a lookup on the intersection size.
class PairRule {
 public:
  PairRule() = default;

  bool related(unsigned intersection) const noexcept {
    return intersection < 64 && ((bits_ >> intersection) & 1u);
  }
  bool related(std::uint64_t a, std::uint64_t b) const noexcept {
    return related(static_cast<unsigned>(std::popcount(a & b)));
  }

  static PairRule for_graph(const GraphSpec& spec);
  /// Pairs with a common neighbour in K(n,k): k-(n-2k) <= |A n B| <= k-1.
  static PairRule distance2(unsigned n, unsigned k);

 private:
  void allow(unsigned intersection) noexcept { bits_ |= std::uint64_t{1} << intersection; }
  std::uint64_t bits_ = 0;  // bit i set: pairs meeting in i positions are related
};

std::uint64_t binomial(unsigned n, unsigned k) noexcept;

/// All k-subsets of {0..n-1} in ascending mask order. Throws Errc::too_large
/// when C(n,k) exceeds kMaxVertices, Errc::invalid_argument on bad n, k.
std::vector<KSubset> enumerate_vertices(unsigned n, unsigned k);
/// Same order, masks only.
std::vector<std::uint64_t> enumerate_masks(unsigned n, unsigned k);

inline unsigned intersect_size(const KSubset& a, const KSubset& b) noexcept {
  return static_cast<unsigned>(std::popcount(a.mask & b.mask));
}

bool adjacent(const GraphSpec& spec, const KSubset& a, const KSubset& b);

/// Requires n > 2k and a != b.
bool distance2_related(unsigned n, unsigned k, const KSubset& a, const KSubset& b);

/// Scans every vertex (C(n,k) <= 2*10^4) and returns the common degree.
/// Throws Errc::not_regular if degrees differ, Errc::too_large past the cap.
std::uint64_t degree_check(const GraphSpec& spec);

}  // namespace kchroma
