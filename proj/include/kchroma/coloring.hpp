#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kchroma/esym.hpp"
#include "kchroma/gf.hpp"
#include "kchroma/kneser.hpp"

namespace kchroma {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Prime search

enum class PrimeMode {
  bertrand98,  // n <= p <= 9(n+3)/8, n >= 2
  ln2,         // n <= p <= (1 + 1/(2 ln^2 n)) n, n >= 3275
};

/// Smallest prime p >= n. Throws Errc::no_prime_in_interval if p lies beyond
/// the mode's upper end (that would contradict the interval theorem), and
/// Errc::invalid_argument when n is below the mode's threshold.
std::uint64_t find_prime_in_interval(std::uint64_t n, PrimeMode mode);

// ---------------------------------------------------------------------------
// Ground sets

enum class Construction {
  full_field,                      // X = GF(2^t), 2k+r = 2^t
  field_minus_zero,                // X = GF(2^t) \ {0}, 2k+r = 2^t - 1
  field_minus_subfield,            // X = GF(2^t) \ GF(2^t'), 2k+r = 2^t - 2^t'
  field_minus_subfield_plus_zero,  // X = (GF(2^t) \ GF(2^t')) u {0}
  prime_prefix,                    // X = {0..2k+r-1} in GF(p), p from bertrand98
  explicit_elements,
};

struct GroundSetRequest {
  Construction construction = Construction::full_field;
  unsigned t_prime = 0;  // subfield constructions only
};

struct GroundSet {
  Field field;
  std::vector<Element> elements;
  Construction construction = Construction::explicit_elements;
  unsigned t_prime = 0;

  std::size_t size() const noexcept { return elements.size(); }
};

/// Warning text when (k, r) lies outside 1 <= r <= k-2 but inside
/// r <= k-1; std::nullopt when no warning applies. Throws
/// Errc::invalid_argument outside 1 <= r <= k-1.
std::optional<std::string> parameter_range_warning(unsigned k, unsigned r);

/// Builds the 2k+r element ground set for a construction. Errors:
/// Errc::arithmetic_mismatch (2k+r not of the required form),
/// Errc::not_a_subfield_degree, Errc::subfield_too_small.
GroundSet build_ground_set(unsigned k, unsigned r, GroundSetRequest request);

/// Arbitrary distinct elements of `field`; throws Errc::duplicate_element.
GroundSet make_explicit_ground_set(const Field& field, std::vector<Element> elements);

/// e_{2m+1}(X) == 0 for every 2m+1 <= r.
bool check_ground_set(const GroundSet& x, unsigned r);

// ---------------------------------------------------------------------------
// The coloring A -> (e_1(A), ..., e_r(A))

struct ColorVector {
  std::vector<Element> entries;
  std::uint64_t index = 0;  // sum entries[i] * |F|^i

  static ColorVector from_entries(const Field& field, std::vector<Element> entries);
  static ColorVector from_index(const Field& field, std::uint64_t index, unsigned r);

  friend bool operator==(const ColorVector& a, const ColorVector& b) { return a.entries == b.entries; }
};

/// |F|^r, the size of the color space. Throws Errc::too_large past 2^63.
std::uint64_t color_space_size(const Field& field, unsigned r);

/// Color of the vertex whose set bits index into x.elements.
ColorVector color_vertex(const GroundSet& x, std::uint64_t mask, unsigned r);

struct ColoringTable {
  GroundSet ground;
  unsigned k = 0;
  unsigned r = 0;
  std::vector<std::uint64_t> masks;   // vertex order
  std::vector<std::uint64_t> colors;  // ColorVector::index per vertex
  std::size_t distinct_colors = 0;
};

/// Colors every k-subset of the ground set. Output is identical for any
/// worker count. Throws Errc::too_large past 2*10^5 vertices.
ColoringTable color_all(const GroundSet& x, unsigned k, unsigned r, unsigned workers = 1);

std::size_t count_distinct(std::span<const std::uint64_t> colors);

// ---------------------------------------------------------------------------
// Bound calculators

struct SubfieldBound {
  bool plus_zero = false;  // false: 2k+r = 2^t - 2^t'; true: 2k+r = 2^t - 2^t' + 1
  unsigned t = 0;
  unsigned t_prime = 0;
  Rational upper;
};

struct NamedBound {
  std::string formula;
  Rational upper;
  bool applicable = true;  // stated hypothesis on k holds
};

struct FamilyBound {
  unsigned n = 0;  // 2k+1 = (2^n - 1)p + s with p >= 1, n >= 2
  Rational upper;
};

struct BoundsReport {
  unsigned k = 0;
  unsigned r = 0;
  Rational clique_lower;    // C(k+2r, r)
  Rational trivial_upper;   // C(k+r, r)^2
  Rational thm1_upper;      // 2 (9k/4 + 9(r+3)/8)^r
  bool thm1_applicable = false;  // 1 <= r <= k-2
  Rational injective_upper; // (9k/4 + 9(r+3)/8)^r, bounds chi_i of K(2k+r,k)
  std::optional<Rational> thm2a_upper;  // 2k+r = 2^t
  std::optional<Rational> thm2b_upper;  // 2k+r = 2^t - 1
  std::vector<SubfieldBound> cor3_uppers;
  std::vector<NamedBound> r1_bounds;    // r == 1 only
  std::vector<FamilyBound> r1_family;   // r == 1 only
  BigInt best_upper;
  std::string best_source;
};

/// Requires k >= 2 and 1 <= r <= k-1.
BoundsReport bounds_report(unsigned k, unsigned r);

/// Every way to write n as 2^t - 2^t' (+1) with t <= 16, t' | t and
/// 2^t' >= r+2, i.e. every subfield-complement ground set of size n.
std::vector<SubfieldBound> subfield_decompositions(unsigned n, unsigned r);

// ---------------------------------------------------------------------------

/// The C(k+2r, r) k-subsets of {0..2k+r-1} containing {0..k-r-1}; pairwise
/// adjacency in K^2(2k+r, k) is checked before returning
/// (Errc::not_a_clique otherwise).
std::vector<KSubset> clique_witness(unsigned k, unsigned r);

std::string_view to_string(Construction c) noexcept;
Construction construction_from_string(std::string_view s);
std::string_view to_string(PrimeMode m) noexcept;

}  // namespace kchroma
