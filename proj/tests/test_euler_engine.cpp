#include <doctest.h>

#include <cmath>
#include <map>

#include "delsarte.hpp"
#include "euler_engine.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace asw;

TEST_CASE("u values and b values") {
  Signature z2 = signature(make_group(2, {1}));
  Signature z4 = signature(make_group(2, {2}));
  CHECK(u_value(z2, 2, 2) == qp_monomial(1));
  CHECK(u_value(z2, 2, 0) == qp_monomial(0));
  CHECK(u_value(z4, 2, 4) == qp_monomial(3));
  CHECK(b_local(z2, 2, 0) == qp_monomial(0));
  CHECK(b_local(z2, 2, 1) == QhatPoly{});
  CHECK(b_local(z4, 2, 1) == QhatPoly{});
  CHECK(b_local(z2, 2, 2) == QhatPoly{-1, 1});
  CHECK(b_local(z2, 2, 3) == QhatPoly{});
  CHECK(qp_to_string(QhatPoly{-1, 1}) == "q-1");
}

TEST_CASE("local factor for Z/2 matches the closed form") {
  Signature z2 = signature(make_group(2, {1}));
  LocalFactor lf = local_factor(z2, 2, 8);
  CHECK(lf.identity_ok);
  // phi = (1-u^2)/(1-qhat u^2): coefficients 1, 0, q-1, 0, q^2-q, ...
  CHECK(lf.phi.coeff[0] == qp_monomial(0));
  CHECK(lf.phi.coeff[1] == QhatPoly{});
  CHECK(lf.phi.coeff[2] == QhatPoly{-1, 1});
  CHECK(lf.phi.coeff[3] == QhatPoly{});
  CHECK(lf.phi.coeff[4] == QhatPoly{0, -1, 1});
  // lambda = (1 - qhat u^2)^{-1}, psi = 1 - u^2
  CHECK(lf.lambda.coeff[2] == qp_monomial(1));
  CHECK(lf.lambda.coeff[4] == qp_monomial(2));
  CHECK(lf.psi.coeff[0] == qp_monomial(0));
  CHECK(lf.psi.coeff[2] == QhatPoly{-1});
  CHECK(lf.psi.coeff[1] == QhatPoly{});
  CHECK_THROWS_AS(local_factor(z2, 2, 1), Error);
}

TEST_CASE("local identity across small groups") {
  for (unsigned p : {2u, 3u})
    for (const GroupDesc& g : testutil::all_groups(p, 4, 3, 3)) {
      if (g.trivial()) continue;
      long pe = 1;
      for (int i = 0; i < g.exponent(); ++i) pe *= p;
      LocalFactor lf = local_factor(signature(g), p, (int)(2 * pe) + 3);
      CHECK(lf.identity_ok);
      CHECK(lf.phi.coeff[0] == qp_monomial(0));
      CHECK(lf.lambda.coeff[0] == qp_monomial(0));
      CHECK(lf.psi.coeff[0] == qp_monomial(0));
    }
}

TEST_CASE("lambda factor relation when the top rank drops") {
  // For H with r_i(H) = r_i(G) below e and r_e(H) = 0:
  // Lambda_G = Lambda_H * prod_{l=p^{e-1}+1}^{p^e} (1 - qhat^{c_l} u^l)^{-1}
  for (const GroupDesc& g : {make_group(2, {2}), make_group(2, {2, 1}),
                             make_group(3, {2}), make_group(2, {3, 1})}) {
    unsigned p = g.p;
    Signature sg = signature(g);
    Signature sh = sg;
    sh.ranks.pop_back();
    long pe = 1;
    for (int i = 0; i < g.exponent(); ++i) pe *= p;
    int M = (int)(2 * pe);
    SeriesUQ lg = local_factor(sg, p, M).lambda;
    SeriesUQ lh = local_factor(sh, p, M).lambda;
    // divide lambda_G by the extra zeta factors; the remainder must be lambda_H
    SeriesUQ red = lg;
    for (long l = pe / p + 1; l <= pe; ++l)
      for (long n = M; n >= l; --n)
        red.coeff[(size_t)n] = qp_sub(
            red.coeff[(size_t)n],
            qp_shift(red.coeff[(size_t)(n - l)], u_exponent(sg, p, l)));
    CHECK(red == lh);
  }
}

TEST_CASE("psi exponent check") {
  CHECK(psi_exponent_check(signature(make_group(2, {1})), 2, 8));
  CHECK(psi_exponent_check(signature(make_group(2, {1, 1})), 2, 8));
  CHECK(psi_exponent_check(signature(make_group(2, {2})), 2, 12));
  CHECK(psi_exponent_check(signature(make_group(3, {1, 1})), 3, 8));
  CHECK_THROWS_AS(psi_exponent_check(signature(make_group(2, {2})), 2, 4), Error);
}

TEST_CASE("global series examples") {
  GroupDesc z2 = make_group(2, {1});
  CHECK(global_series(2, z2, 4).c == std::vector<Int>{1, 0, 6, 0, 24});
  SeriesT s8 = global_series(2, z2, 8);
  CHECK(s8.c[6] == 96);
  CHECK(s8.c[8] == 384);
  CHECK(global_series(2, make_group(2, {2}), 0).c == std::vector<Int>{1});
  CHECK(global_series(3, make_group(3, {1}), 0).c == std::vector<Int>{1});
  CHECK(global_series(2, make_group(2, {1, 1}), 0).c == std::vector<Int>{0});
  CHECK_THROWS_AS(global_series(3, z2, 4), Error);
  CHECK_THROWS_AS(global_series(2, make_group(2, {}), 4), Error);
  CHECK_THROWS_AS(global_series(2, z2, 100), Error);
  CHECK_THROWS_AS(global_series(16, make_group(2, {1}), 4), Error);
}

TEST_CASE("count function") {
  GroupDesc z2 = make_group(2, {1});
  CHECK(count_function(2, z2, 4) == 31);
  CHECK(count_function(2, z2, 6) == 127);
  CHECK(count_function(2, z2, 1) == 1);
  SeriesT s = global_series(2, z2, 4);
  CHECK(count_function(s, 0) == 1);
  CHECK_THROWS_AS(count_function(s, 9), Error);
}

TEST_CASE("global series via independent divisor enumeration") {
  // Dual route: sum the multiplicative coefficient c_m over all effective
  // divisors of degree n instead of expanding the Euler product.
  struct Case {
    unsigned q;
    GroupDesc g;
    int n;
  };
  for (const Case& c : {Case{2, make_group(2, {2}), 6},
                        Case{3, make_group(3, {1}), 4},
                        Case{2, make_group(2, {1, 1}), 6}}) {
    SeriesT engine = global_series(c.q, c.g, c.n);

    SignaturePoly wpoly = global_weight_polynomial(c.g);
    std::map<Signature, Rational> weights;
    for (const auto& [mono, coef] : wpoly.terms()) weights[Signature{mono}] += coef;

    std::vector<Rational> acc((std::size_t)c.n + 1, Rational(0));
    for (const DivisorDesc& m : effective_divisors(c.q, c.n, 2)) {
      for (const auto& [sig, w] : weights) {
        Rational term = w;
        for (const auto& [v, e] : m.entries) {
          Int norm = pow_ui(c.q, (unsigned long)v.degree());
          term *= Rational(qp_eval(b_local(sig, c.g.p, e), norm));
        }
        acc[(size_t)m.degree()] += term;
      }
    }
    for (int n = 0; n <= c.n; ++n) {
      Rational v = acc[(size_t)n];
      v.canonicalize();
      CHECK(v == Rational(engine.c[(size_t)n]));
    }
  }
}

TEST_CASE("asymptotic diagnostic") {
  DiagnosticReport rep = asymptotic_diagnostic(2, make_group(2, {1}), 20);
  CHECK(rep.period == 2);
  CHECK(rep.alpha == 1);
  CHECK(rep.beta == 1);
  REQUIRE(rep.rows.size() == 2);
  // even n: C = 2^{n+1} - 1, so rho_n = 2 - 2^{-n} exactly
  for (std::size_t i = 0; i < rep.rows[0].ns.size(); ++i) {
    int n = rep.rows[0].ns[i];
    CHECK(rep.rows[0].counts[i] == pow_ui(2, (unsigned long)n + 1) - 1);
    CHECK(rep.rows[0].rho[i] ==
          doctest::Approx(2.0 - std::ldexp(1.0, -n)).epsilon(1e-12));
  }
  // odd n: C(q^n) = C(q^{n-1}), rho tends to 1
  const DiagnosticRow& odd = rep.rows[1];
  CHECK(odd.ns.back() == 19);
  CHECK(odd.counts.back() == pow_ui(2, 19) - 1);
  CHECK(odd.rho.back() == doctest::Approx(1.0).epsilon(1e-4));
  CHECK_THROWS_AS(asymptotic_diagnostic(2, make_group(2, {1}), 6), Error);
}
