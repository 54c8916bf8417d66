#include "kchroma/esym.hpp"

#include <algorithm>
#include <string>

#include "kchroma/error.hpp"

namespace kchroma {

namespace {

constexpr std::size_t kNaiveLimit = 12;

void require_valid(const Field& field, std::span<const Element> z) {
  for (auto a : z) {
    if (!field.contains(a)) {
      throw Error(Errc::invalid_argument, "element " + std::to_string(a) + " outside field");
    }
  }
}

void require_distinct(std::span<const Element> z) {
  std::vector<Element> sorted(z.begin(), z.end());
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(Errc::duplicate_element, "element " + std::to_string(*dup) + " repeated");
  }
}

// Sum over i-subsets of z[from..] of the product, times `prefix`.
Element subset_sum(const Field& f, std::span<const Element> z, std::size_t from, unsigned i,
                   Element prefix) {
  if (i == 0) return prefix;
  Element acc = 0;
  for (std::size_t j = from; j + i <= z.size(); ++j) {
    acc = f.add(acc, subset_sum(f, z, j + 1, i - 1, f.mul(prefix, z[j])));
  }
  return acc;
}

}  // namespace

void esym_prefix_into(const Field& field, std::span<const Element> z, std::span<Element> out) noexcept {
  // out[i-1] holds E_i; E_0 = 1 is implicit. Update from high to low index so
  // each step reads the previous element's E_{i-1}.
  std::fill(out.begin(), out.end(), Element{0});
  const std::size_t r = out.size();
  std::size_t seen = 0;
  for (auto a : z) {
    ++seen;
    for (std::size_t i = std::min(seen, r); i >= 2; --i) {
      out[i - 1] = field.add(out[i - 1], field.mul(a, out[i - 2]));
    }
    if (r >= 1) out[0] = field.add(out[0], a);
  }
}

ESymVector esym_prefix(const Field& field, std::span<const Element> z, unsigned r) {
  if (r == 0) throw Error(Errc::invalid_argument, "truncation order r must be >= 1");
  require_valid(field, z);
  require_distinct(z);
  ESymVector out(r);
  esym_prefix_into(field, z, out);
  return out;
}

Element esym_naive(const Field& field, std::span<const Element> z, unsigned i) {
  if (z.size() > kNaiveLimit) {
    throw Error(Errc::set_too_large,
                "naive evaluation limited to 12 elements, got " + std::to_string(z.size()));
  }
  require_valid(field, z);
  if (i > z.size()) return field.zero();
  return subset_sum(field, z, 0, i, field.one());
}

bool esym_union_check(const Field& field, std::span<const Element> x, std::span<const Element> y,
                      unsigned r) {
  for (auto a : x) {
    if (std::find(y.begin(), y.end(), a) != y.end()) {
      throw Error(Errc::not_disjoint, "element " + std::to_string(a) + " in both sets");
    }
  }
  std::vector<Element> joined(x.begin(), x.end());
  joined.insert(joined.end(), y.begin(), y.end());
  if (joined.size() > kNaiveLimit) {
    throw Error(Errc::set_too_large, "union exceeds the naive evaluation limit");
  }
  require_distinct(x);
  require_distinct(y);

  const ESymVector fast = esym_prefix(field, joined, r);
  for (unsigned i = 1; i <= r; ++i) {
    Element rhs = 0;
    for (unsigned s = 0; s <= i; ++s) {
      rhs = field.add(rhs, field.mul(esym_naive(field, x, s), esym_naive(field, y, i - s)));
    }
    const Element lhs = esym_naive(field, joined, i);
    if (lhs != rhs || fast[i - 1] != lhs) return false;
  }
  return true;
}

}  // namespace kchroma
