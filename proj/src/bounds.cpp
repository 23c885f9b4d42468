#include "bounds.hpp"

namespace asw {

Int disc_exponent_bound(const GroupDesc& g, long f_exp) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "bounds need a nontrivial group");
  if (f_exp < 0) fail(ErrorCode::OutOfRange, "conductor exponent must be >= 0");
  Int total = 0;
  Int pi = 1;  // p^i
  for (int i = 0; i < g.exponent(); ++i) {
    Int ceil_term = (f_exp + pi - 1) / pi;
    total += ceil_term * (p_multiple(g, i).order() - p_multiple(g, i + 1).order());
    pi *= g.p;
  }
  return total;
}

Int disc_norm_bound_deg(const GroupDesc& g,
                        const std::vector<std::pair<int, int>>& conductor) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "bounds need a nontrivial group");
  long deg_f = 0, deg_sqfree = 0;
  for (const auto& [d, e] : conductor) {
    if (d < 1) fail(ErrorCode::InvalidArgument, "place degrees must be >= 1");
    if (e < 2) fail(ErrorCode::NonSquarefulConductor, "conductor exponents must be >= 2");
    deg_f += (long)d * e;
    deg_sqfree += d;
  }
  InvariantReport inv = invariants(g);
  Rational bound = inv.m_tilde * deg_f +
                   Rational(p_multiple(g, 1).order() - 1) * deg_sqfree;
  bound.canonicalize();
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return out;
}

ExponentSummary exponent_summary(const GroupDesc& g) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "bounds need a nontrivial group");
  InvariantReport inv = invariants(g);
  ExponentSummary s;
  s.conjecture = inv.a_p;
  s.lower = inv.a_p * (Rational(1) - inv.delta);
  s.lower.canonicalize();
  s.upper = inv.d_p;
  check(s.lower <= s.conjecture && s.conjecture <= s.upper && s.upper <= inv.alpha,
        "exponent ordering lower <= conjecture <= upper <= alpha");
  return s;
}

SeriesT z_series_cyclic_p(unsigned q, unsigned p, int N,
                          const GlobalSeriesOptions& opt) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "p must be prime");
  if (N < 0) fail(ErrorCode::TruncationTooSmall, "truncation must be >= 0");
  int stretch = (int)p - 1;
  SeriesT cond = global_series(q, make_group(p, {1}), N / stretch, opt);
  SeriesT out;
  out.c.assign((std::size_t)N + 1, 0);
  for (int n = 0; n <= cond.trunc(); ++n) out.c[(size_t)(n * stretch)] = cond.c[(size_t)n];
  return out;
}

}  // namespace asw
