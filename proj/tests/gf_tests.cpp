#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "hermit2p/gf.hpp"

using hermit2p::Elem;
using hermit2p::Field;
using hermit2p::FieldElement;

TEST_CASE("fixed moduli for the supported code fields") {
  CHECK(Field::get(2, 2).modulus() == std::vector<unsigned>{1, 1, 1});
  CHECK(Field::get(3, 2).modulus() == std::vector<unsigned>{2, 2, 1});
  CHECK(Field::get(2, 4).modulus() == std::vector<unsigned>{1, 1, 0, 0, 1});
  CHECK(Field::get(2, 6).modulus() == std::vector<unsigned>{1, 1, 0, 1, 1, 0, 1});
  CHECK(Field::of_order(4).order() == 4);
  CHECK(Field::of_order(9).order() == 9);
  CHECK(Field::of_order(16).order() == 16);
  CHECK(Field::of_order(64).order() == 64);
}

TEST_CASE("GF(4): omega * omega = omega^2") {
  const Field& f = Field::get(2, 2);
  // x has encoding 2; x^2 = x + 1 has encoding 3 under x^2 + x + 1.
  CHECK(f.mul(2, 2) == 3);
  CHECK(f.add(2, 3) == 1);
  CHECK(f.mul(2, 3) == 1);
}

TEST_CASE("GF(9): (x+1)^2 reduces to 2 under x^2 + 2x + 2") {
  const Field& f = Field::get(3, 2);
  CHECK(f.mul(4, 4) == 2);
  // x * x = x^2 = -2x - 2 = x + 1, encoding 4.
  CHECK(f.mul(3, 3) == 4);
}

TEST_CASE("GF(16): x^4 = x + 1") {
  const Field& f = Field::get(2, 4);
  CHECK(f.pow(2, 4) == 3);
}

TEST_CASE("table multiplication matches polynomial multiplication") {
  for (unsigned order : {4u, 9u, 16u, 64u}) {
    const Field& f = Field::of_order(order);
    for (std::uint32_t a = 0; a < order; ++a)
      for (std::uint32_t b = 0; b < order; ++b)
        CHECK(f.mul(Elem(a), Elem(b)) == f.mul_slow(Elem(a), Elem(b)));
  }
}

TEST_CASE("field axioms hold exhaustively on small orders") {
  for (unsigned order : {4u, 9u, 16u}) {
    const Field& f = Field::of_order(order);
    for (std::uint32_t a = 0; a < order; ++a) {
      CHECK(f.add(Elem(a), 0) == a);
      CHECK(f.mul(Elem(a), 1) == a);
      CHECK(f.add(Elem(a), f.neg(Elem(a))) == 0);
      if (a) CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);
      for (std::uint32_t b = 0; b < order; ++b) {
        CHECK(f.add(Elem(a), Elem(b)) == f.add(Elem(b), Elem(a)));
        CHECK(f.mul(Elem(a), Elem(b)) == f.mul(Elem(b), Elem(a)));
        for (std::uint32_t c = 0; c < order; ++c) {
          CHECK(f.add(f.add(Elem(a), Elem(b)), Elem(c)) ==
                f.add(Elem(a), f.add(Elem(b), Elem(c))));
          CHECK(f.mul(f.mul(Elem(a), Elem(b)), Elem(c)) ==
                f.mul(Elem(a), f.mul(Elem(b), Elem(c))));
          CHECK(f.mul(Elem(a), f.add(Elem(b), Elem(c))) ==
                f.add(f.mul(Elem(a), Elem(b)), f.mul(Elem(a), Elem(c))));
        }
      }
    }
  }
}

TEST_CASE("conjugation is the q-power Frobenius and an involution") {
  struct Case {
    unsigned order, q;
  } cases[] = {{4, 2}, {9, 3}, {16, 4}, {64, 8}};
  for (auto [order, q] : cases) {
    const Field& f = Field::of_order(order);
    for (std::uint32_t a = 0; a < order; ++a) {
      Elem c = f.conjugate(Elem(a), q);
      CHECK(c == f.pow(Elem(a), q));
      CHECK(f.conjugate(c, q) == a);
      for (std::uint32_t b = 0; b < order; ++b) {
        CHECK(f.conjugate(f.add(Elem(a), Elem(b)), q) ==
              f.add(f.conjugate(Elem(a), q), f.conjugate(Elem(b), q)));
        CHECK(f.conjugate(f.mul(Elem(a), Elem(b)), q) ==
              f.mul(f.conjugate(Elem(a), q), f.conjugate(Elem(b), q)));
      }
    }
    // Fixed points of conjugation are exactly the q subfield elements.
    unsigned fixed = 0;
    for (std::uint32_t a = 0; a < order; ++a)
      if (f.in_subfield(Elem(a), q)) ++fixed;
    CHECK(fixed == q);
  }
  CHECK_THROWS_AS(Field::of_order(16).conjugate(3, 3), std::invalid_argument);
}

TEST_CASE("division and powers") {
  const Field& f = Field::get(2, 6);
  for (std::uint32_t a = 1; a < 64; ++a) {
    CHECK(f.div(1, Elem(a)) == f.inv(Elem(a)));
    CHECK(f.pow(Elem(a), -1) == f.inv(Elem(a)));
    CHECK(f.pow(Elem(a), 63) == 1);
    CHECK(f.pow(Elem(a), 0) == 1);
    CHECK(f.mul(f.pow(Elem(a), 5), f.pow(Elem(a), -5)) == 1);
  }
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(0, 3) == 0);
  CHECK_THROWS_AS(f.div(5, 0), std::domain_error);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.pow(0, -2), std::domain_error);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 17), std::invalid_argument);  // 2^17 > 2^16
  // x^2 + 1 = (x+1)^2 over GF(2).
  CHECK_THROWS_AS(Field(2, 2, {1, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 2, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field(2, 2, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("deterministic modulus search for orders outside the fixed table") {
  const Field& f = Field::get(2, 7);
  CHECK(f.order() == 128);
  const Field& again = Field::get(2, 7);
  CHECK(f.modulus() == again.modulus());
  // Smallest irreducible degree-7 polynomial over GF(2) is x^7 + x + 1.
  CHECK(f.modulus() == std::vector<unsigned>{1, 1, 0, 0, 0, 0, 0, 1});
  for (std::uint32_t a = 1; a < 128; ++a)
    CHECK(f.mul(Elem(a), f.inv(Elem(a))) == 1);

  const Field& f25 = Field::of_order(25);
  CHECK(f25.characteristic() == 5);
  for (std::uint32_t a = 0; a < 25; ++a)
    for (std::uint32_t b = 0; b < 25; ++b)
      CHECK(f25.mul(Elem(a), Elem(b)) == f25.mul_slow(Elem(a), Elem(b)));
}

TEST_CASE("coefficient codec round trips") {
  const Field& f = Field::get(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a) {
    auto coeffs = f.coefficients(Elem(a));
    CHECK(coeffs.size() == 2);
    CHECK(f.from_coefficients(coeffs) == a);
  }
  CHECK(f.coefficients(7) == std::vector<unsigned>{1, 2});
  CHECK_THROWS_AS(f.element(9), std::invalid_argument);
  CHECK(f.element(8) == 8);
  std::vector<unsigned> bad{3, 0};
  CHECK_THROWS_AS(f.from_coefficients(bad), std::invalid_argument);
}

TEST_CASE("field element wrapper checks specs") {
  const Field& f4 = Field::get(2, 2);
  const Field& f9 = Field::get(3, 2);
  FieldElement a(f4, 2), b(f4, 3);
  CHECK((a * b).value() == 1);
  CHECK((a + b).value() == 1);
  CHECK((a / b).value() == f4.div(2, 3));
  CHECK((a - a).value() == 0);
  FieldElement c(f9, 2);
  CHECK_THROWS_AS((void)(a + c), std::invalid_argument);
  CHECK_THROWS_AS(FieldElement(f4, 4), std::invalid_argument);
  CHECK(a == FieldElement(f4, 2));
  CHECK_FALSE(a == b);
}
