#include "kchroma/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "kchroma/error.hpp"
#include "parallel.hpp"

namespace kchroma {

namespace {

constexpr unsigned kNoPower = ~0u;

unsigned exact_log2(std::uint64_t v) noexcept {
  return (v != 0 && std::has_single_bit(v)) ? static_cast<unsigned>(std::countr_zero(v)) : kNoPower;
}

Rational rpow(const Rational& base, unsigned e) {
  Rational acc = 1;
  for (unsigned i = 0; i < e; ++i) acc *= base;
  return acc;
}

Rational rat(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

std::string str(unsigned v) { return std::to_string(v); }

std::vector<Element> iota_elements(Element from, Element to) {
  std::vector<Element> out;
  out.reserve(to - from);
  for (Element a = from; a < to; ++a) out.push_back(a);
  return out;
}

GroundSet subfield_ground_set(unsigned k, unsigned r, unsigned n, unsigned t_prime, bool plus_zero) {
  if (t_prime == 0) {
    for (const auto& d : subfield_decompositions(n, r)) {
      if (d.plus_zero == plus_zero) return subfield_ground_set(k, r, n, d.t_prime, plus_zero);
    }
    throw Error(Errc::arithmetic_mismatch,
                "2k+r=" + str(n) + " has no decomposition 2^t - 2^t'" + (plus_zero ? " + 1" : "") +
                    " with 2^t' >= r+2");
  }
  if (t_prime > Field::kMaxBinaryDegree || (1u << t_prime) < r + 2) {
    throw Error(Errc::subfield_too_small,
                "2^" + str(t_prime) + " < r+2 = " + str(r + 2));
  }
  const std::uint64_t full = std::uint64_t{n} + (1u << t_prime) - (plus_zero ? 1 : 0);
  const unsigned t = exact_log2(full);
  if (t == kNoPower || t > Field::kMaxBinaryDegree || t <= t_prime) {
    throw Error(Errc::arithmetic_mismatch, "2k+r=" + str(n) + " is not 2^t - 2^" + str(t_prime) +
                                               (plus_zero ? " + 1" : "") + " for any t <= 16");
  }
  if (t % t_prime != 0) {
    throw Error(Errc::not_a_subfield_degree,
                "GF(2^" + str(t_prime) + ") is not a subfield of GF(2^" + str(t) + ")");
  }
  GroundSet x{Field::binary(t), {}, plus_zero ? Construction::field_minus_subfield_plus_zero
                                              : Construction::field_minus_subfield,
              t_prime};
  const auto sub = x.field.subfield_elements(t_prime);
  for (Element a = 0; a < x.field.order(); ++a) {
    const bool in_sub = std::binary_search(sub.begin(), sub.end(), a);
    if (!in_sub || (plus_zero && a == 0)) x.elements.push_back(a);
  }
  return x;
}

}  // namespace

std::string_view to_string(Construction c) noexcept {
  switch (c) {
    case Construction::full_field: return "full_field";
    case Construction::field_minus_zero: return "field_minus_zero";
    case Construction::field_minus_subfield: return "field_minus_subfield";
    case Construction::field_minus_subfield_plus_zero: return "field_minus_subfield_plus_zero";
    case Construction::prime_prefix: return "prime_prefix";
    case Construction::explicit_elements: return "explicit";
  }
  return "unknown";
}

Construction construction_from_string(std::string_view s) {
  std::string norm(s);
  std::replace(norm.begin(), norm.end(), '-', '_');
  for (auto c : {Construction::full_field, Construction::field_minus_zero,
                 Construction::field_minus_subfield, Construction::field_minus_subfield_plus_zero,
                 Construction::prime_prefix, Construction::explicit_elements}) {
    if (to_string(c) == norm) return c;
  }
  throw Error(Errc::invalid_argument, "unknown construction '" + std::string(s) + "'");
}

std::string_view to_string(PrimeMode m) noexcept {
  return m == PrimeMode::bertrand98 ? "bertrand98" : "ln2";
}

std::uint64_t find_prime_in_interval(std::uint64_t n, PrimeMode mode) {
  if (mode == PrimeMode::bertrand98) {
    if (n < 2) throw Error(Errc::invalid_argument, "bertrand98 mode needs n >= 2");
    if (n > (std::numeric_limits<std::uint64_t>::max() - 27) / 9) {
      throw Error(Errc::too_large, "n too large for exact interval arithmetic");
    }
    // p <= 9(n+3)/8  <=>  8p <= 9(n+3)
    const std::uint64_t hi = 9 * (n + 3) / 8;
    for (std::uint64_t p = n; p <= hi; ++p) {
      if (is_prime(p)) return p;
    }
    throw Error(Errc::no_prime_in_interval,
                "no prime in [" + std::to_string(n) + ", 9(n+3)/8]");
  }
  if (n < 3275) throw Error(Errc::invalid_argument, "ln2 mode needs n >= 3275");
  const long double ln = std::log(static_cast<long double>(n));
  const long double hi = static_cast<long double>(n) * (1.0L + 1.0L / (2.0L * ln * ln));
  for (std::uint64_t p = n; static_cast<long double>(p) <= hi; ++p) {
    if (is_prime(p)) return p;
  }
  throw Error(Errc::no_prime_in_interval,
              "no prime in [" + std::to_string(n) + ", (1 + 1/(2 ln^2 n)) n]");
}

std::optional<std::string> parameter_range_warning(unsigned k, unsigned r) {
  if (k < 2 || r < 1 || r + 1 > k) {
    throw Error(Errc::invalid_argument,
                "need k >= 2 and 1 <= r <= k-1, got k=" + str(k) + " r=" + str(r));
  }
  if (r + 2 > k) {
    return "r = k-1 lies outside 1 <= r <= k-2; results are certified only by verification";
  }
  return std::nullopt;
}

GroundSet build_ground_set(unsigned k, unsigned r, GroundSetRequest request) {
  parameter_range_warning(k, r);
  const unsigned n = 2 * k + r;
  switch (request.construction) {
    case Construction::full_field: {
      const unsigned t = exact_log2(n);
      if (t == kNoPower || t > Field::kMaxBinaryDegree) {
        throw Error(Errc::arithmetic_mismatch, "2k+r=" + str(n) + " is not a power of two");
      }
      return GroundSet{Field::binary(t), iota_elements(0, n), request.construction, 0};
    }
    case Construction::field_minus_zero: {
      const unsigned t = exact_log2(n + 1);
      if (t == kNoPower || t > Field::kMaxBinaryDegree) {
        throw Error(Errc::arithmetic_mismatch, "2k+r=" + str(n) + " is not 2^t - 1");
      }
      return GroundSet{Field::binary(t), iota_elements(1, n + 1), request.construction, 0};
    }
    case Construction::field_minus_subfield:
      return subfield_ground_set(k, r, n, request.t_prime, false);
    case Construction::field_minus_subfield_plus_zero:
      return subfield_ground_set(k, r, n, request.t_prime, true);
    case Construction::prime_prefix: {
      const auto p = find_prime_in_interval(n, PrimeMode::bertrand98);
      return GroundSet{Field::prime(p), iota_elements(0, n), request.construction, 0};
    }
    case Construction::explicit_elements:
      break;
  }
  throw Error(Errc::invalid_argument, "explicit ground sets are built with make_explicit_ground_set");
}

GroundSet make_explicit_ground_set(const Field& field, std::vector<Element> elements) {
  esym_prefix(field, elements, 1);  // validates range and distinctness
  if (elements.size() > kMaxGround) throw Error(Errc::invalid_argument, "ground set exceeds 62 elements");
  return GroundSet{field, std::move(elements), Construction::explicit_elements, 0};
}

bool check_ground_set(const GroundSet& x, unsigned r) {
  const auto e = esym_prefix(x.field, x.elements, std::max(r, 1u));
  for (unsigned i = 1; i <= r; i += 2) {
    if (e[i - 1] != x.field.zero()) return false;
  }
  return true;
}

std::uint64_t color_space_size(const Field& field, unsigned r) {
  __extension__ unsigned __int128 acc = 1;
  for (unsigned i = 0; i < r; ++i) {
    acc *= field.order();
    if (acc > (std::uint64_t{1} << 63)) {
      throw Error(Errc::too_large, "color space |F|^r exceeds 2^63");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

ColorVector ColorVector::from_entries(const Field& field, std::vector<Element> entries) {
  color_space_size(field, static_cast<unsigned>(entries.size()));
  std::uint64_t index = 0;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (!field.contains(*it)) throw Error(Errc::invalid_argument, "color entry outside field");
    index = index * field.order() + *it;
  }
  return ColorVector{std::move(entries), index};
}

ColorVector ColorVector::from_index(const Field& field, std::uint64_t index, unsigned r) {
  if (index >= color_space_size(field, r)) {
    throw Error(Errc::invalid_argument, "color index outside |F|^r");
  }
  std::vector<Element> entries(r);
  const std::uint64_t q = index;
  for (auto& e : entries) {
    e = static_cast<Element>(index % field.order());
    index /= field.order();
  }
  return ColorVector{std::move(entries), q};
}

ColorVector color_vertex(const GroundSet& x, std::uint64_t mask, unsigned r) {
  if (r == 0) throw Error(Errc::invalid_argument, "r must be >= 1");
  if (x.size() < 64 && (mask >> x.size())) {
    throw Error(Errc::invalid_argument, "mask addresses positions beyond the ground set");
  }
  std::vector<Element> members;
  for (std::uint64_t m = mask; m; m &= m - 1) members.push_back(x.elements[std::countr_zero(m)]);
  std::vector<Element> e(r);
  esym_prefix_into(x.field, members, e);
  return ColorVector::from_entries(x.field, std::move(e));
}

std::size_t count_distinct(std::span<const std::uint64_t> colors) {
  std::vector<std::uint64_t> sorted(colors.begin(), colors.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

ColoringTable color_all(const GroundSet& x, unsigned k, unsigned r, unsigned workers) {
  if (r == 0) throw Error(Errc::invalid_argument, "r must be >= 1");
  const std::uint64_t q = x.field.order();
  color_space_size(x.field, r);
  ColoringTable table{x, k, r, enumerate_masks(static_cast<unsigned>(x.size()), k), {}, 0};
  table.colors.resize(table.masks.size());

  detail::for_each_block(table.masks.size(), 4096, workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<Element> members;
    std::vector<Element> e(r);
    members.reserve(k);
    for (std::size_t v = begin; v < end; ++v) {
      members.clear();
      for (std::uint64_t m = table.masks[v]; m; m &= m - 1) {
        members.push_back(x.elements[std::countr_zero(m)]);
      }
      esym_prefix_into(x.field, members, e);
      std::uint64_t index = 0;
      for (auto it = e.rbegin(); it != e.rend(); ++it) index = index * q + *it;
      table.colors[v] = index;
    }
  });
  table.distinct_colors = count_distinct(table.colors);
  return table;
}

std::vector<SubfieldBound> subfield_decompositions(unsigned n, unsigned r) {
  std::vector<SubfieldBound> out;
  for (unsigned t = 1; t <= Field::kMaxBinaryDegree; ++t) {
    for (unsigned tp = 1; tp < t; ++tp) {
      if (t % tp != 0 || (1u << tp) < r + 2) continue;
      const unsigned base = (1u << t) - (1u << tp);
      for (bool plus_zero : {false, true}) {
        if (base + (plus_zero ? 1u : 0u) != n) continue;
        out.push_back({plus_zero, t, tp, rpow(rat(n + (1u << tp)), r)});
      }
    }
  }
  return out;
}

BoundsReport bounds_report(unsigned k, unsigned r) {
  parameter_range_warning(k, r);
  const unsigned n = 2 * k + r;
  BoundsReport rep;
  rep.k = k;
  rep.r = r;
  rep.clique_lower = rat(static_cast<std::int64_t>(binomial(k + 2 * r, r)));
  const Rational deg = rat(static_cast<std::int64_t>(binomial(k + r, r)));
  rep.trivial_upper = deg * deg;
  const Rational base = rat(9 * k, 4) + rat(9 * (r + 3), 8);
  rep.injective_upper = rpow(base, r);
  rep.thm1_upper = 2 * rep.injective_upper;
  rep.thm1_applicable = r + 2 <= k;
  if (exact_log2(n) != kNoPower) rep.thm2a_upper = rpow(rat(n), r);
  if (exact_log2(n + 1) != kNoPower) rep.thm2b_upper = rpow(rat(n + 1), r);
  rep.cor3_uppers = subfield_decompositions(n, r);

  if (r == 1) {
    const std::int64_t kk = k;
    rep.r1_bounds = {
        {"4k+2", rat(4 * kk + 2), k >= 2},
        {"3k+2", rat(3 * kk + 2), k >= 3},
        {"8k/3+20/3", rat(8 * kk, 3) + rat(20, 3), k >= 2},
        {"32k/15+32", rat(32 * kk, 15) + 32, k >= 7},
    };
    // 2k+1 = (2^m - 1)p + s with p >= 1 needs 2^m - 1 <= 2k+1.
    for (unsigned m = 2; m < 32 && (std::int64_t{1} << m) - 1 <= 2 * kk + 1; ++m) {
      const std::int64_t pm = std::int64_t{1} << m;
      rep.r1_family.push_back({m, rat(2 * pm * kk, pm - 1) + rat(pm * (2 * pm - 3), pm - 1)});
    }
  }

  // Minimum over every upper bound whose hypotheses hold.
  std::vector<std::pair<std::string, Rational>> candidates;
  if (k >= 3) candidates.emplace_back("trivial_upper", rep.trivial_upper);
  if (rep.thm1_applicable) candidates.emplace_back("thm1_upper", rep.thm1_upper);
  if (rep.thm2a_upper) candidates.emplace_back("thm2a_upper", *rep.thm2a_upper);
  if (rep.thm2b_upper) candidates.emplace_back("thm2b_upper", *rep.thm2b_upper);
  for (const auto& c : rep.cor3_uppers) {
    candidates.emplace_back(std::string(c.plus_zero ? "cor3_ii" : "cor3_i") + "(t=" + str(c.t) +
                                ",t'=" + str(c.t_prime) + ")",
                            c.upper);
  }
  for (const auto& b : rep.r1_bounds) {
    if (b.applicable) candidates.emplace_back("r1:" + b.formula, b.upper);
  }
  for (const auto& f : rep.r1_family) candidates.emplace_back("r1_family(n=" + str(f.n) + ")", f.upper);

  const auto best = std::min_element(candidates.begin(), candidates.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  rep.best_upper = numerator(best->second) / denominator(best->second);
  rep.best_source = best->first;
  return rep;
}

std::vector<KSubset> clique_witness(unsigned k, unsigned r) {
  if (r < 1 || r + 1 > k) throw Error(Errc::invalid_argument, "clique witness needs 1 <= r <= k-1");
  const unsigned n = 2 * k + r;
  if (binomial(k + 2 * r, r) > 100'000) throw Error(Errc::too_large, "C(k+2r, r) exceeds 10^5");
  if (n > kMaxGround) throw Error(Errc::invalid_argument, "2k+r exceeds 62");

  // Fixed core {0..k-r-1}; choose the remaining r members among the other
  // k+2r positions.
  const unsigned core = k - r;
  const std::uint64_t core_mask = (std::uint64_t{1} << core) - 1;
  std::vector<KSubset> out;
  for (auto free : enumerate_masks(k + 2 * r, r)) {
    out.push_back(KSubset{core_mask | (free << core), n, k});
  }

  const PairRule rule = PairRule::for_graph(GraphSpec::kneser_square(n, k));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (!rule.related(out[i].mask, out[j].mask)) {
        throw Error(Errc::not_a_clique, "witness vertices " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are not adjacent");
      }
    }
  }
  return out;
}

}  // namespace kchroma
