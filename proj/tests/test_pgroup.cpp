#include <doctest.h>

#include "pgroup.hpp"
#include "test_util.hpp"

using namespace asw;

TEST_CASE("make_group canonicalizes and validates") {
  GroupDesc g = make_group(2, {1, 2});
  CHECK(g.type == std::vector<int>{2, 1});
  CHECK(g.order() == 8);
  CHECK(g.order_log() == 3);
  CHECK(make_group(2, {}).trivial());
  CHECK_THROWS_WITH_AS(make_group(4, {1}), doctest::Contains("prime"), Error);
  CHECK_THROWS_AS(make_group(2, {0}), Error);
  CHECK_THROWS_AS(make_group(2, {-1}), Error);
}

TEST_CASE("p_multiple") {
  GroupDesc g = make_group(2, {2, 1});
  CHECK(p_multiple(g, 1) == make_group(2, {1}));
  CHECK(p_multiple(g, 2).trivial());
  CHECK(p_multiple(g, 0) == g);
}

TEST_CASE("signature is the conjugate partition") {
  CHECK(signature(make_group(2, {2, 1})).ranks == std::vector<int>{2, 1});
  CHECK(signature(make_group(2, {1, 1, 1})).ranks == std::vector<int>{3});
  CHECK(signature(make_group(2, {})).ranks.empty());
  CHECK(group_from_signature(2, signature(make_group(2, {3, 2, 2, 1}))) ==
        make_group(2, {3, 2, 2, 1}));
}

TEST_CASE("invariant tables") {
  SUBCASE("Z/2") {
    InvariantReport r = invariants(make_group(2, {1}));
    CHECK(r.alpha == 1);
    CHECK(r.beta == 1);
    CHECK(r.m_tilde == 1);
    CHECK(r.a_p == 1);
    CHECK(r.d_p == 1);
    CHECK(r.delta == 0);
    CHECK(r.f == 0);
  }
  SUBCASE("(Z/2)^2") {
    InvariantReport r = invariants(make_group(2, {1, 1}));
    CHECK(r.alpha == Rational(3, 2));
    CHECK(r.f == 1);
    CHECK(r.beta == 1);
    CHECK(r.m_tilde == 3);
    CHECK(r.a_p == Rational(1, 2));
    CHECK(r.d_p == Rational(3, 4));
    CHECK(r.delta == 0);
  }
  SUBCASE("Z/4") {
    InvariantReport r = invariants(make_group(2, {2}));
    CHECK(r.alpha == 1);
    CHECK(r.beta == 3);
    CHECK(r.m_tilde == Rational(5, 2));
    CHECK(r.a_p == Rational(2, 5));
    CHECK(r.d_p == Rational(1, 2));
    CHECK(r.delta == Rational(2, 7));
    CHECK(r.f == 0);
  }
  SUBCASE("Z/4 x Z/2") {
    InvariantReport r = invariants(make_group(2, {2, 1}));
    CHECK(r.alpha == Rational(3, 2));
    CHECK(r.f == 1);
    CHECK(r.beta == 2);
    CHECK(r.m_tilde == Rational(13, 2));
    CHECK(r.a_p == Rational(3, 13));
    CHECK(r.d_p == Rational(3, 8));
    CHECK(r.delta == Rational(2, 15));
  }
  CHECK_THROWS_AS(invariants(make_group(2, {})), Error);
}

TEST_CASE("weights") {
  CHECK(weight(2, 1, 1) == 0);
  CHECK(weight(2, 1, 4) == 2);
  CHECK(weight(2, 2, 4) == 1);
  CHECK(weight(3, 1, 0) == 0);
  CHECK(weight(5, 3, 0) == 0);
}

TEST_CASE("epsilon single") {
  // eps(p^e) = 0 for any G
  for (unsigned p : {2u, 3u})
    for (const GroupDesc& g : testutil::all_groups(p, 4, 3, 3)) {
      if (g.trivial()) continue;
      long pe = 1;
      for (int i = 0; i < g.exponent(); ++i) pe *= p;
      if (pe < 2) continue;
      CHECK(epsilon_single(g, pe) == 0);
    }
  CHECK(epsilon_single(make_group(2, {1, 1}), 2) == 0);
  CHECK(epsilon_single(make_group(2, {1, 1}), 3) == Rational(1, 2));
  CHECK_THROWS_AS(epsilon_single(make_group(2, {1}), 1), Error);
}

TEST_CASE("epsilon multi") {
  CHECK(epsilon_multi(make_group(2, {1}), {1, 1}) == Rational(1, 2));
  // hand evaluation: alpha = 3/2, weights w_i(1) = 0, so eps = 3/2 - 1/2 = 1
  CHECK(epsilon_multi(make_group(2, {1, 1}), {1, 1}) == 1);
  Rational v = epsilon_multi(make_group(2, {2}), {3, 3});
  CHECK(v > Rational(1, 8));
  // by hand: alpha = 1, w_1(3) = w_2(3) = 1, so eps = 1 - (1+4)/6 = 1/6
  CHECK(v == Rational(1, 6));
  CHECK_THROWS_AS(epsilon_multi(make_group(2, {1}), {1}), Error);
  CHECK_THROWS_AS(epsilon_multi(make_group(2, {1}), {1, 2}), Error);
}

TEST_CASE("alpha gap") {
  CHECK(alpha_gap_exceptional(make_group(2, {2}), make_group(2, {1})));
  CHECK(alpha_p(make_group(2, {2})) == alpha_p(make_group(2, {1})));
  CHECK_FALSE(alpha_gap_exceptional(make_group(2, {1, 1}), make_group(2, {1})));
  CHECK(alpha_p(make_group(2, {1, 1})) - alpha_p(make_group(2, {1})) ==
        Rational(1, 2));
  // r_2(G)=1 drops to r_2(H)=0 with r_1 equal: the exceptional case, and the
  // alpha values agree exactly
  CHECK(alpha_gap_exceptional(make_group(2, {2, 1}), make_group(2, {1, 1})));
  CHECK(alpha_p(make_group(2, {2, 1})) == alpha_p(make_group(2, {1, 1})));
  CHECK_THROWS_AS(alpha_gap_exceptional(make_group(2, {1}), make_group(2, {1})),
                  Error);
  CHECK_THROWS_AS(
      alpha_gap_exceptional(make_group(2, {1}), make_group(2, {1, 1})), Error);
}

TEST_CASE("invariant properties over group families") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (const GroupDesc& g : testutil::all_groups(p, 6, 4, 4)) {
      Signature s = signature(g);
      CHECK(s.sum() == g.order_log());
      for (int i = 2; i <= s.length(); ++i) CHECK(s.rank(i - 1) >= s.rank(i));
      if (g.trivial()) continue;
      InvariantReport r = invariants(g);
      CHECK(r.a_p * r.m_tilde == r.alpha);
      CHECK((r.alpha == 1) == g.cyclic());
      if (!g.cyclic()) {
        Rational lb = 1 + Rational(p - 1) / pow_ui(p, (unsigned long)r.e);
        lb.canonicalize();
        CHECK(r.alpha >= lb);
      }
      if (g.order() > 1) {
        Rational cap(p_multiple(g, 1).order() - 1, g.order() - 1);
        cap.canonicalize();
        CHECK(r.delta <= cap);
        CHECK(r.delta >= 0);
      }
    }
  }
}
