#include <doctest.h>

#include "field_model.hpp"

using namespace asw;

TEST_CASE("Fq arithmetic") {
  Fq f2(2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.mul(1, 1) == 1);
  Fq f4(4);
  for (unsigned x = 1; x < 4; ++x) CHECK(f4.mul(x, f4.inv(x)) == 1);
  CHECK(f4.pow(2, 4) == f4.mul(f4.mul(2, 2), f4.mul(2, 2)));
  Fq f9(9);
  for (unsigned x = 1; x < 9; ++x) CHECK(f9.mul(x, f9.inv(x)) == 1);
  CHECK_THROWS_AS(Fq(6), Error);
  CHECK_THROWS_AS(Fq(8), Error);  // only q = p and q = p^2 are supported
}

TEST_CASE("polynomial arithmetic") {
  Fq F(2);
  Poly t = poly_x();
  Poly t2_t_1 = poly_trim({1, 1, 1});
  CHECK(poly_irreducible(F, t2_t_1));
  CHECK_FALSE(poly_irreducible(F, poly_trim({1, 0, 1})));  // (T+1)^2
  CHECK(poly_gcd(F, poly_trim({0, 1, 1}), t) == t);
  auto [quo, rem] = poly_divmod(F, poly_trim({1, 1, 1}), t);
  CHECK(quo == poly_trim({1, 1}));
  CHECK(rem == poly_constant(1));
  CHECK(poly_to_string(t2_t_1) == "T^2+T+1");
  CHECK(poly_parse(F, "T^2+T+1") == t2_t_1);
  CHECK(poly_parse(F, "T^3+1") == poly_trim({1, 0, 0, 1}));
}

TEST_CASE("monic irreducibles") {
  Fq F(2);
  CHECK(monic_irreducibles(F, 1).size() == 2);
  CHECK(monic_irreducibles(F, 2).size() == 1);
  CHECK(monic_irreducibles(F, 3).size() == 2);
  CHECK(monic_irreducibles(F, 4).size() == 3);
  Fq F3(3);
  CHECK(monic_irreducibles(F3, 2).size() == 3);
}

TEST_CASE("place counts") {
  CHECK(place_count(2, 1) == 3);
  CHECK(place_count(2, 2) == 1);
  CHECK(place_count(2, 4) == 3);
  CHECK(place_count(3, 1) == 4);
  CHECK(place_count(4, 1) == 5);
  // finite-place degree identity: sum_{d|n} d pi_fin(d) = q^n
  for (unsigned q : {2u, 3u})
    for (int n = 1; n <= 12; ++n) {
      Int total = 0;
      for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Int fin = place_count(q, d) - (d == 1 ? 1 : 0);
        total += d * fin;
      }
      CHECK(total == pow_ui(q, (unsigned long)n));
    }
}

TEST_CASE("zeta series") {
  CHECK(zeta_series(2, 2).c == std::vector<Int>{1, 3, 7});
  CHECK(zeta_series(3, 1).c == std::vector<Int>{1, 4});
  CHECK(zeta_series(5, 0).c == std::vector<Int>{1});
  // Euler product identity over places
  for (unsigned q : {2u, 3u, 4u}) {
    int N = 30;
    SeriesT prod;
    prod.c.assign((std::size_t)N + 1, 0);
    prod.c[0] = 1;
    for (int d = 1; d <= N; ++d) {
      // (1 - t^d)^{-1} truncated
      SeriesT geo;
      geo.c.assign((std::size_t)N + 1, 0);
      for (int k = 0; k * d <= N; ++k) geo.c[(size_t)(k * d)] = 1;
      Int count = place_count(q, d);
      prod = mul_trunc(prod, pow_trunc(geo, count.get_ui(), N), N);
    }
    CHECK(prod == zeta_series(q, N));
  }
}

TEST_CASE("divisors") {
  Fq F(2);
  PlaceDesc pT{false, poly_x()};
  PlaceDesc pinf{true, {}};
  DivisorDesc d = make_divisor({{pT, 2}, {pinf, 3}});
  CHECK(d.degree() == 5);
  CHECK(d.squareful());
  CHECK_FALSE(d.trivial());
  CHECK_FALSE(make_divisor({{pT, 1}}).squareful());
  CHECK(make_divisor({}).trivial());
  CHECK_THROWS_AS(make_divisor({{pT, 0}}), Error);
  CHECK_THROWS_AS(make_divisor({{pT, 1}, {pT, 1}}), Error);
}
