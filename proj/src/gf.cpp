#include "kchroma/gf.hpp"

#include <array>
#include <bit>
#include <limits>
#include <string>

#include "kchroma/error.hpp"

namespace kchroma {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_prime: return "NotPrime";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::not_a_subfield_degree: return "NotASubfieldDegree";
    case Errc::duplicate_element: return "DuplicateElement";
    case Errc::set_too_large: return "SetTooLarge";
    case Errc::not_disjoint: return "NotDisjoint";
    case Errc::too_large: return "TooLarge";
    case Errc::not_regular: return "NotRegular";
    case Errc::no_prime_in_interval: return "NoPrimeInInterval";
    case Errc::arithmetic_mismatch: return "ArithmeticMismatch";
    case Errc::subfield_too_small: return "SubfieldTooSmall";
    case Errc::not_a_clique: return "NotAClique";
  }
  return "Unknown";
}

// Deterministic Miller-Rabin; this base set is exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool gf2_poly_irreducible(std::uint64_t poly) {
  const int deg = poly_degree(poly);
  if (deg < 1) return false;
  // Every monic divisor candidate of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    for (std::uint64_t q = std::uint64_t{1} << d; q < (std::uint64_t{1} << (d + 1)); ++q) {
      if (poly_mod(poly, q) == 0) return false;
    }
  }
  return true;
}

std::uint32_t canonical_binary_modulus(unsigned t) {
  if (t < 1 || t > Field::kMaxBinaryDegree) {
    throw Error(Errc::degree_out_of_range, "binary field degree " + std::to_string(t) + " outside [1, 16]");
  }
  // Odd candidates only: a zero constant term means x divides the polynomial.
  for (std::uint32_t cand = (1u << t) | 1u; cand < (2u << t); cand += 2) {
    if (gf2_poly_irreducible(cand)) return cand;
  }
  throw Error(Errc::degree_out_of_range, "no irreducible polynomial found");  // unreachable
}

Field Field::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::too_large, "prime modulus " + std::to_string(p) + " exceeds 32 bits");
  }
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  return Field(FieldKind::prime, static_cast<std::uint32_t>(p), 1, static_cast<std::uint32_t>(p));
}

Field Field::binary(unsigned t) {
  const std::uint32_t modulus = canonical_binary_modulus(t);
  return Field(FieldKind::binary, 1u << t, t, modulus);
}

Element Field::clmul_reduce(Element a, Element b) const noexcept {
  const std::uint32_t top = order_;  // x^t
  std::uint32_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_;
  }
  return acc;
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Element Field::inv(Element a) const {
  if (a == 0) throw Error(Errc::invalid_argument, "zero has no multiplicative inverse");
  return pow(a, std::uint64_t{order_} - 2);
}

std::vector<Element> Field::subfield_elements(unsigned t_prime) const {
  if (kind_ != FieldKind::binary) {
    throw Error(Errc::not_a_subfield_degree, "subfields are only extracted from binary fields");
  }
  if (t_prime < 1 || degree_ % t_prime != 0) {
    throw Error(Errc::not_a_subfield_degree,
                std::to_string(t_prime) + " does not divide " + std::to_string(degree_));
  }
  const std::uint64_t frob = std::uint64_t{1} << t_prime;
  std::vector<Element> out;
  out.reserve(frob);
  for (Element a = 0; a < order_; ++a) {
    if (pow(a, frob) == a) out.push_back(a);
  }
  return out;
}

}  // namespace kchroma
