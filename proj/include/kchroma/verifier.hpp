#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kchroma/coloring.hpp"
#include "kchroma/kneser.hpp"

namespace kchroma {

enum class Property {
  square_proper,    // adjacency in K^2(n,k)
  injective,        // common neighbour in K(n,k)
  johnson_m_proper, // adjacency in J^m(n,k), colors truncated to m entries
};

std::string_view to_string(Property p) noexcept;
Property property_from_string(std::string_view s);

struct Violation {
  std::size_t first = 0;   // vertex indices, first < second
  std::size_t second = 0;
  std::uint64_t first_mask = 0;
  std::uint64_t second_mask = 0;
  std::uint64_t first_color = 0;
  std::uint64_t second_color = 0;
  unsigned intersection = 0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  GraphSpec spec;
  GroundSet ground;
  Property property = Property::square_proper;
  unsigned color_entries = 0;  // length of the color vectors compared
  bool passed = false;
  std::optional<Violation> violation;
  std::uint64_t violating_pairs = 0;
  std::size_t distinct_colors = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t related_pairs = 0;  // pairs satisfying the property's predicate
  double elapsed_seconds = 0.0;
};

/// Predicate that the property checks, over vertices of K(n,k).
PairRule rule_for_property(const GraphSpec& spec, Property property);

/// Graph whose proper colorings the property describes. square_proper and
/// injective use kneser_square / kneser with n = |X|; johnson_m_proper needs m.
GraphSpec graph_for_property(unsigned n, unsigned k, Property property, unsigned m = 0);

/// Colors every vertex with f truncated to r entries (m entries for
/// johnson_m_proper) and scans all unordered pairs. The first violation in
/// (smaller index, larger index) order is recorded. Output is identical for
/// every worker count. Throws Errc::too_large past 2*10^5 vertices.
VerificationReport verify_coloring(const GraphSpec& spec, const GroundSet& x, unsigned r,
                                   Property property, unsigned workers = 1);

/// Pair scan over a precomputed table (for instance one read back from an
/// exported file). masks and colors are parallel arrays in vertex order.
VerificationReport verify_table(const GraphSpec& spec, const GroundSet& x, unsigned color_entries,
                                Property property, std::span<const std::uint64_t> masks,
                                std::span<const std::uint64_t> colors, unsigned workers = 1);

/// Recomputes both colors (definition-level evaluation when k <= 12) and the
/// predicate for the recorded pair. With `table_colors` the colors are read
/// from that table instead, for colorings that did not come from the
/// ground set. Throws Errc::invalid_argument for a passing report.
bool recheck_violation(const VerificationReport& report, std::span<const std::uint64_t> table_colors = {});

/// Exact chromatic number by DSATUR branch and bound; C(n,k) <= 60.
unsigned exact_chromatic(const GraphSpec& spec);

/// First-fit coloring along `order` (ascending vertex index when empty);
/// C(n,k) <= 2*10^4.
unsigned greedy_chromatic(const GraphSpec& spec, std::span<const std::size_t> order = {});

}  // namespace kchroma
