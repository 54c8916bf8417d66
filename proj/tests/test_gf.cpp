#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "kchroma/error.hpp"
#include "kchroma/gf.hpp"

using namespace kchroma;

namespace {

std::vector<Field> small_fields() {
  std::vector<Field> out;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31, 61, 127, 251}) out.push_back(Field::prime(p));
  for (unsigned t = 1; t <= 8; ++t) out.push_back(Field::binary(t));
  return out;
}

}  // namespace

TEST_CASE("prime field construction", "[gf]") {
  const Field f = Field::prime(11);
  CHECK(f.kind() == FieldKind::prime);
  CHECK(f.order() == 11);
  CHECK(Field::prime(2).order() == 2);
  CHECK_THROWS_MATCHES(Field::prime(8), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Errc::not_prime;
                       }));
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK_THROWS_AS(Field::prime(0), Error);
}

TEST_CASE("binary field uses the canonical modulus", "[gf]") {
  // Expected moduli from an exhaustive reducibility search (test oracle).
  CHECK(Field::binary(1).modulus() == 0b11);
  CHECK(Field::binary(2).modulus() == 0b111);
  CHECK(Field::binary(3).modulus() == 0b1011);
  CHECK(Field::binary(4).modulus() == 0b10011);
  CHECK(Field::binary(5).modulus() == 0b100101);
  CHECK(Field::binary(8).modulus() == 283);
  CHECK(Field::binary(3).order() == 8);
  CHECK(Field::binary(16).order() == 65536);
  for (unsigned t : {0u, 17u}) {
    try {
      Field::binary(t);
      FAIL("expected DegreeOutOfRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::degree_out_of_range);
    }
  }
}

TEST_CASE("irreducibility test agrees with root and factor search", "[gf]") {
  CHECK(gf2_poly_irreducible(0b111));      // x^2+x+1
  CHECK_FALSE(gf2_poly_irreducible(0b101)); // (x+1)^2
  CHECK_FALSE(gf2_poly_irreducible(0b10101));  // (x^2+x+1)^2
  CHECK(gf2_poly_irreducible(0b11001));    // x^4+x^3+1
  // Degree 4 has exactly 3 irreducibles.
  int count = 0;
  for (std::uint64_t p = 16; p < 32; ++p) count += gf2_poly_irreducible(p);
  CHECK(count == 3);
}

TEST_CASE("add, mul, neg, sub examples", "[gf]") {
  const Field f5 = Field::prime(5);
  CHECK(f5.add(3, 4) == 2);
  CHECK(f5.mul(3, 4) == 2);
  CHECK(f5.sub(1, 3) == 3);
  CHECK(f5.neg(0) == 0);

  const Field f8 = Field::binary(3);
  CHECK(f8.add(0b011, 0b101) == 0b110);
  CHECK(f8.mul(0b010, 0b100) == 0b011);  // x * x^2 = x^3 = x + 1
  CHECK(f8.neg(0b101) == 0b101);
  for (Element a = 0; a < 8; ++a) {
    CHECK(f8.add(a, a) == 0);
    CHECK(f8.pow(a, 8) == a);
    CHECK(f8.mul(a, 1) == a);
  }
}

TEST_CASE("field axioms hold exhaustively up to order 256", "[gf][property]") {
  for (const Field& f : small_fields()) {
    CAPTURE(f.order(), f.modulus());
    const Element q = f.order();
    // Pairwise axioms exhaustively; associativity/distributivity on a sampled
    // third operand to keep the runtime down for order 256.
    std::mt19937 rng(f.order());
    for (Element a = 0; a < q; ++a) {
      if (a != 0) {
        const Element ai = f.inv(a);
        CHECK(f.mul(a, ai) == 1);
        int inverses = 0;
        for (Element b = 0; b < q; ++b) inverses += f.mul(a, b) == 1;
        CHECK(inverses == 1);
      }
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.add(a, 0) == a);
      for (Element b = 0; b < q; ++b) {
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        REQUIRE(f.contains(f.mul(a, b)));
        const Element c = rng() % q;
        REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    CHECK_THROWS_AS(f.inv(0), Error);
  }
}

TEST_CASE("binary fields: Frobenius and vanishing element sum", "[gf][property]") {
  for (unsigned t = 1; t <= 8; ++t) {
    const Field f = Field::binary(t);
    Element sum = 0;
    for (Element a = 0; a < f.order(); ++a) {
      sum = f.add(sum, a);
      for (Element b = 0; b < f.order(); ++b) {
        const Element s = f.add(a, b);
        REQUIRE(f.mul(s, s) == f.add(f.mul(a, a), f.mul(b, b)));
      }
    }
    if (t > 1) CHECK(sum == 0);
  }
  // GF(2) = {0, 1} sums to 1; the vanishing needs |F| > 2.
  CHECK(Field::binary(1).add(0, 1) == 1);
}

TEST_CASE("subfield extraction", "[gf]") {
  const Field f16 = Field::binary(4);
  const auto gf4 = f16.subfield_elements(2);
  // Fixed points of a -> a^4 found by an independent exhaustive scan.
  CHECK(gf4 == std::vector<Element>{0, 1, 6, 7});
  CHECK(f16.subfield_elements(1) == std::vector<Element>{0, 1});
  CHECK(f16.subfield_elements(4).size() == 16);
  try {
    f16.subfield_elements(3);
    FAIL("expected NotASubfieldDegree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_subfield_degree);
  }
  CHECK_THROWS_AS(Field::prime(7).subfield_elements(1), Error);

  for (unsigned t : {2u, 4u, 6u, 8u}) {
    const Field f = Field::binary(t);
    for (unsigned tp = 1; tp <= t; ++tp) {
      if (t % tp) continue;
      const auto sub = f.subfield_elements(tp);
      REQUIRE(sub.size() == (std::size_t{1} << tp));
      auto in = [&](Element x) { return std::binary_search(sub.begin(), sub.end(), x); };
      for (auto a : sub) {
        if (a) CHECK(in(f.inv(a)));
        for (auto b : sub) {
          REQUIRE(in(f.add(a, b)));
          REQUIRE(in(f.mul(a, b)));
        }
      }
    }
  }
}

TEST_CASE("Miller-Rabin agrees with a sieve", "[gf]") {
  constexpr std::size_t limit = 200'000;
  std::vector<bool> composite(limit, false);
  composite[0] = composite[1] = true;
  for (std::size_t i = 2; i * i < limit; ++i) {
    if (!composite[i]) {
      for (std::size_t j = i * i; j < limit; j += i) composite[j] = true;
    }
  }
  for (std::size_t n = 0; n < limit; ++n) REQUIRE(is_prime(n) == !composite[n]);
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(18446744073709551557ULL));
}
