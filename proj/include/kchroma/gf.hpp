#pragma once

#include <cstdint>
#include <vector>

namespace kchroma {

/// Integer-encoded field element. Prime fields store the residue; binary
/// fields store polynomial coefficients little-endian (constant term = bit 0).
using Element = std::uint32_t;

enum class FieldKind { prime, binary };

/// GF(p) or GF(2^t). Immutable after construction, cheap to copy.
///
/// Binary fields are built over the smallest irreducible polynomial of degree
/// t (compared as an integer) whose constant term is 1, so every
/// implementation agrees on the element encoding.
class Field {
 public:
  static constexpr unsigned kMaxBinaryDegree = 16;

  /// GF(2) as a prime field.
  Field() : Field(FieldKind::prime, 2, 1, 2) {}

  /// Throws Errc::not_prime when p is composite or p < 2.
  static Field prime(std::uint64_t p);
  /// Throws Errc::degree_out_of_range unless 1 <= t <= 16.
  static Field binary(unsigned t);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t characteristic() const noexcept { return kind_ == FieldKind::prime ? order_ : 2; }
  /// Extension degree t over the prime field (1 for prime fields).
  unsigned degree() const noexcept { return degree_; }
  /// Binary: bit-encoded reduction polynomial (x^3+x+1 -> 11). Prime: p.
  std::uint32_t modulus() const noexcept { return modulus_; }

  bool contains(Element a) const noexcept { return a < order_; }
  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  Element add(Element a, Element b) const noexcept {
    if (kind_ == FieldKind::binary) return a ^ b;
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= order_ ? s - order_ : s);
  }
  Element neg(Element a) const noexcept {
    if (kind_ == FieldKind::binary || a == 0) return a;
    return order_ - a;
  }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element mul(Element a, Element b) const noexcept {
    if (kind_ == FieldKind::prime) return static_cast<Element>(std::uint64_t{a} * b % order_);
    return clmul_reduce(a, b);
  }
  Element pow(Element a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse via a^(|F|-2). Throws Errc::invalid_argument for 0.
  Element inv(Element a) const;

  /// Elements of the subfield GF(2^t_prime), i.e. the fixed points of
  /// a -> a^(2^t_prime), in ascending encoding. Throws
  /// Errc::not_a_subfield_degree unless t_prime divides degree().
  std::vector<Element> subfield_elements(unsigned t_prime) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(FieldKind kind, std::uint32_t order, unsigned degree, std::uint32_t modulus)
      : kind_(kind), order_(order), degree_(degree), modulus_(modulus) {}

  Element clmul_reduce(Element a, Element b) const noexcept;

  FieldKind kind_;
  std::uint32_t order_;
  unsigned degree_;
  std::uint32_t modulus_;
};

/// Trial-division irreducibility over GF(2) for a bit-encoded polynomial.
bool gf2_poly_irreducible(std::uint64_t poly);

/// Smallest degree-t irreducible with nonzero constant term.
std::uint32_t canonical_binary_modulus(unsigned t);

bool is_prime(std::uint64_t n) noexcept;

}  // namespace kchroma
