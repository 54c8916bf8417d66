#pragma once

#include <span>
#include <vector>

#include "kchroma/gf.hpp"

namespace kchroma {

/// (e_1(Z), ..., e_r(Z)); entries past |Z| are zero.
using ESymVector = std::vector<Element>;

/// Incremental evaluation, O(|Z| * r). Throws Errc::duplicate_element if Z
/// repeats an element and Errc::invalid_argument if r == 0 or an element is
/// outside the field.
ESymVector esym_prefix(const Field& field, std::span<const Element> z, unsigned r);

/// Same recurrence without validation; callers guarantee distinct, valid
/// elements and out.size() == r.
void esym_prefix_into(const Field& field, std::span<const Element> z, std::span<Element> out) noexcept;

/// e_i(Z) straight from the definition: the sum of products over all
/// i-element subsets. Exponential; |Z| <= 12 enforced (Errc::set_too_large).
Element esym_naive(const Field& field, std::span<const Element> z, unsigned i);

/// Checks e_i(X u Y) = sum_{s=0..i} e_s(X) e_{i-s}(Y) for 1 <= i <= r, with
/// both sides taken from esym_naive. Throws Errc::not_disjoint if X and Y
/// share an element.
bool esym_union_check(const Field& field, std::span<const Element> x, std::span<const Element> y,
                      unsigned r);

}  // namespace kchroma
