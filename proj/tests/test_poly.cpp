#include <doctest.h>

#include <stdexcept>

#include "jsuper/poly.hpp"
#include "jsuper/rational.hpp"
#include "jsuper/rng.hpp"
#include "jsuper/textio.hpp"

using namespace jsuper;

namespace {

Poly random_poly(Rng& rng, int max_deg) {
  std::vector<Rat> c(static_cast<size_t>(max_deg) + 1);
  for (auto& v : c) v = Rat(rng.uniform_int(-4, 4));
  return Poly(std::move(c));
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(Rat(6, -4) == Rat(-3, 2));
  CHECK(Rat(6, -4).den() == 2);
  CHECK(Rat(6, -4).num() == -3);
  CHECK(Rat(0, 7) == Rat());
  CHECK(Rat(0, 7).den() == 1);
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(-8, 2).str() == "-4");
  CHECK(Rat::from_string("-10/15") == Rat(-2, 3));
  CHECK(Rat::from_string("7") == Rat(7));
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::from_string("zebra"), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is a field") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    Rat a(rng.uniform_int(-30, 30), rng.uniform_int(1, 12));
    Rat b(rng.uniform_int(-30, 30), rng.uniform_int(1, 12));
    Rat c(rng.uniform_int(-30, 30), rng.uniform_int(1, 12));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("polynomial canonical form trims trailing zeros") {
  Poly p({Rat(1), Rat(2), Rat(0), Rat(0)});
  CHECK(p.degree() == 1);
  CHECK(Poly().degree() == std::nullopt);
  CHECK((Poly({Rat(3)}) - Poly({Rat(3)})).is_zero());
  CHECK(Poly({Rat(0), Rat(0)}).is_zero());
}

TEST_CASE("polynomial product matches a hand convolution") {
  Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    Poly a = random_poly(rng, 6), b = random_poly(rng, 5);
    Poly prod = a * b;
    for (int k = 0; k <= 11; ++k) {
      Rat want;
      for (int i = 0; i <= k; ++i) want += a.coeff(i) * b.coeff(k - i);
      CHECK(prod.coeff(k) == want);
    }
  }
}

TEST_CASE("division identity a = q b + r with deg r < deg b") {
  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    Poly a = random_poly(rng, 7);
    Poly b;
    while (b.is_zero()) b = random_poly(rng, 3);
    auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
  }
  CHECK_THROWS_AS(divmod(Poly(Rat(1)), Poly()), std::invalid_argument);
}

TEST_CASE("gcd divides both arguments and is monic") {
  Rng rng(14);
  for (int t = 0; t < 40; ++t) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 4);
    if (a.is_zero() && b.is_zero()) continue;
    Poly g = gcd(a, b);
    CHECK(g.leading() == Rat(1));
    if (!a.is_zero()) CHECK(divmod(a, g).second.is_zero());
    if (!b.is_zero()) CHECK(divmod(b, g).second.is_zero());
  }
  // common factor is recovered up to scaling
  Poly f({Rat(1), Rat(1)});  // 1 + y
  Poly g = gcd(f * Poly({Rat(2), Rat(0), Rat(2)}), f * Poly({Rat(0), Rat(4)}));
  CHECK(divmod(g, f).second.is_zero());
}

TEST_CASE("parity split is exact and exhaustive") {
  Rng rng(15);
  for (int t = 0; t < 40; ++t) {
    Poly a = random_poly(rng, 9);
    auto [ev, od] = a.parity_split();
    CHECK(ev + od == a);
    CHECK(ev.even_support_only());
    CHECK(od.odd_support_only());
  }
  CHECK(Poly().even_support_only());
  CHECK(Poly().odd_support_only());
}

TEST_CASE("derivative follows the Leibniz rule") {
  Rng rng(16);
  for (int t = 0; t < 40; ++t) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 5);
    CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
  }
  CHECK(Poly(Rat(5)).derivative().is_zero());
}

TEST_CASE("polynomial text round-trips through the parser") {
  Rng rng(17);
  CHECK(Poly({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}).str() == "1 + y^4");
  CHECK(Poly({Rat(0), Rat(0), Rat(0), Rat(-2)}).str() == "-2*y^3");
  CHECK(Poly({Rat(0), Rat(1, 2)}).str() == "1/2*y");
  CHECK(Poly().str() == "0");
  for (int t = 0; t < 60; ++t) {
    Poly a = random_poly(rng, 8);
    CHECK(parse_poly(a.str()) == a);
  }
  CHECK(parse_poly("y^2 - y^2").is_zero());
  CHECK_THROWS_AS(parse_poly("x + y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("y +"), std::invalid_argument);
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  Rng rng(18);
  for (int t = 0; t < 40; ++t) {
    Poly a = random_poly(rng, 5), b = random_poly(rng, 5);
    Rat at(rng.uniform_int(-5, 5), rng.uniform_int(1, 4));
    CHECK((a * b).eval(at) == a.eval(at) * b.eval(at));
    CHECK((a + b).eval(at) == a.eval(at) + b.eval(at));
  }
}
