#include "euler_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "delsarte.hpp"

namespace asw {

namespace {

QhatPoly qp_trim(QhatPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

long pe_of(const Signature& sig, unsigned p) {
  long pe = 1;
  for (int i = 0; i < sig.length(); ++i) pe *= p;
  return pe;
}

}  // namespace

QhatPoly qp_monomial(long exponent) {
  QhatPoly a((std::size_t)exponent + 1, 0);
  a.back() = 1;
  return a;
}

QhatPoly qp_add(const QhatPoly& a, const QhatPoly& b) {
  QhatPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return qp_trim(std::move(r));
}

QhatPoly qp_sub(const QhatPoly& a, const QhatPoly& b) {
  QhatPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return qp_trim(std::move(r));
}

bool qp_zero(const QhatPoly& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
}

QhatPoly qp_shift(const QhatPoly& a, long k) {
  if (qp_zero(a)) return {};
  QhatPoly r((std::size_t)k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Int qp_eval(const QhatPoly& a, const Int& value) {
  Int acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * value + *it;
  return acc;
}

std::string qp_to_string(const QhatPoly& a) {
  if (qp_zero(a)) return "0";
  std::string s;
  for (long i = (long)a.size() - 1; i >= 0; --i) {
    if (a[(size_t)i] == 0) continue;
    Int c = a[(size_t)i];
    if (!s.empty()) s += c >= 0 ? "+" : "";
    if (i == 0 || (c != 1 && c != -1))
      s += c.get_str();
    else if (c == -1)
      s += "-";
    if (i >= 1) {
      if (i != 0 && (c != 1 && c != -1)) s += "*";
      s += "q";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

long u_exponent(const Signature& h, unsigned p, long m) {
  long e = 0;
  for (int i = 1; i <= h.length(); ++i) e += h.rank(i) * weight(p, i, m);
  return e;
}

QhatPoly u_value(const Signature& h, unsigned p, long m) {
  if (m < 0) fail(ErrorCode::OutOfRange, "u_value: m must be >= 0");
  return qp_monomial(u_exponent(h, p, m));
}

QhatPoly b_local(const Signature& h, unsigned p, long m) {
  if (m < 0) fail(ErrorCode::OutOfRange, "b_local: m must be >= 0");
  if (m == 0) return qp_monomial(0);
  return qp_sub(u_value(h, p, m), u_value(h, p, m - 1));
}

namespace {

SeriesUQ one_series(int M) {
  SeriesUQ s;
  s.coeff.assign((std::size_t)M + 1, {});
  s.coeff[0] = qp_monomial(0);
  return s;
}

// in place: s *= (1 - qhat^c u^l)
void mul_binomial(SeriesUQ& s, long c, long l) {
  for (long n = s.trunc(); n >= l; --n)
    s.coeff[(size_t)n] =
        qp_sub(s.coeff[(size_t)n], qp_shift(s.coeff[(size_t)(n - l)], c));
}

// in place: s *= (1 - qhat^c u^l)^{-1}
void mul_binomial_inverse(SeriesUQ& s, long c, long l) {
  for (long n = l; n <= s.trunc(); ++n)
    s.coeff[(size_t)n] =
        qp_add(s.coeff[(size_t)n], qp_shift(s.coeff[(size_t)(n - l)], c));
}

SeriesUQ mul_series(const SeriesUQ& a, const SeriesUQ& b, int M) {
  SeriesUQ r;
  r.coeff.assign((std::size_t)M + 1, {});
  for (int i = 0; i <= std::min(M, a.trunc()); ++i) {
    if (qp_zero(a.coeff[(size_t)i])) continue;
    for (int j = 0; j <= std::min(M - i, b.trunc()); ++j) {
      if (qp_zero(b.coeff[(size_t)j])) continue;
      QhatPoly prod((a.coeff[(size_t)i].size() + b.coeff[(size_t)j].size()) - 1, 0);
      for (std::size_t x = 0; x < a.coeff[(size_t)i].size(); ++x)
        for (std::size_t y = 0; y < b.coeff[(size_t)j].size(); ++y)
          prod[x + y] += a.coeff[(size_t)i][x] * b.coeff[(size_t)j][y];
      r.coeff[(size_t)(i + j)] = qp_add(r.coeff[(size_t)(i + j)], prod);
    }
  }
  return r;
}

}  // namespace

LocalFactor local_factor(const Signature& sig, unsigned p, int M) {
  long pe = pe_of(sig, p);
  if (M < pe) fail(ErrorCode::TruncationTooSmall, "local_factor needs M >= p^e");

  LocalFactor lf;
  lf.phi.coeff.reserve((std::size_t)M + 1);
  for (long m = 0; m <= M; ++m) lf.phi.coeff.push_back(b_local(sig, p, m));

  // crucial identity B_{k p^e + l} = U_{p^e}^k B_l
  long cpe = u_exponent(sig, p, pe);
  for (long l = 1; l <= pe; ++l)
    for (long k = 1; k * pe + l <= M; ++k)
      check(lf.phi.coeff[(size_t)(k * pe + l)] ==
                qp_trim(qp_shift(lf.phi.coeff[(size_t)l], k * cpe)),
            "crucial identity B_{kp^e+l} = U_{p^e}^k B_l failed");

  lf.lambda = one_series(M);
  for (long l = 2; l <= pe; ++l)
    mul_binomial_inverse(lf.lambda, u_exponent(sig, p, l), l);

  lf.psi = one_series(M);
  for (long l = 1; l <= pe - 1; ++l) {
    long c = u_exponent(sig, p, l);
    if (l <= M)
      lf.psi.coeff[(size_t)l] = qp_add(lf.psi.coeff[(size_t)l], qp_monomial(c));
  }
  for (long l = 1; l <= pe - 1; ++l) mul_binomial(lf.psi, u_exponent(sig, p, l), l);

  // phi * prod_{l=2}^{p^e} (1 - U_l) == psi is the identity phi == lambda*psi
  // with the lambda factors cleared; cheap for large truncations.
  SeriesUQ lhs = lf.phi;
  for (long l = 2; l <= pe; ++l) mul_binomial(lhs, u_exponent(sig, p, l), l);
  lf.identity_ok = lhs == lf.psi;
  if (pe <= 9)  // small enough for the direct convolution as well
    lf.identity_ok = lf.identity_ok && mul_series(lf.lambda, lf.psi, M) == lf.phi;
  return lf;
}

bool psi_exponent_check(const Signature& sig, unsigned p, int M) {
  long pe = pe_of(sig, p);
  if (M < 2 * pe) fail(ErrorCode::TruncationTooSmall, "psi_exponent_check needs M >= 2p^e");
  SeriesUQ psi = local_factor(sig, p, M).psi;

  GroupDesc g = group_from_signature(p, sig);
  if (g.trivial()) return true;
  Rational bound = alpha_p(g) - Rational(1, 2 * pe);
  bound.canonicalize();

  if (!qp_zero(psi.coeff.size() > 1 ? psi.coeff[1] : QhatPoly{})) return false;
  for (long l = 1; l <= psi.trunc(); ++l) {
    const QhatPoly& c = psi.coeff[(size_t)l];
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] == 0) continue;
      Rational slope(1 + (long)a, l);
      slope.canonicalize();
      if (!(slope < bound)) return false;
    }
  }
  return true;
}

namespace {

void validate_global_args(unsigned q, const GroupDesc& g, int N,
                          const GlobalSeriesOptions& opt) {
  unsigned p = 0;
  if (!is_prime_power(q, &p)) fail(ErrorCode::InvalidArgument, "q must be a prime power");
  if (p != g.p)
    fail(ErrorCode::MismatchedCharacteristic,
         "q must be a power of the group prime p");
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "global series needs a nontrivial group");
  if (N < 0) fail(ErrorCode::OutOfRange, "truncation must be >= 0");
  if (N > opt.max_trunc || q > opt.max_q)
    fail(ErrorCode::TruncationTooLarge, "global series resource guard exceeded");
}

SeriesT pow_trunc_big(const SeriesT& a, Int e, int n) {
  SeriesT r;
  r.c.assign((std::size_t)n + 1, 0);
  r.c[0] = 1;
  SeriesT base = a;
  base.c.resize((std::size_t)n + 1);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul_trunc(r, base, n);
    e /= 2;
    if (e > 0) base = mul_trunc(base, base, n);
  }
  return r;
}

}  // namespace

SeriesT global_series(unsigned q, const GroupDesc& g, int N,
                      const GlobalSeriesOptions& opt) {
  validate_global_args(q, g, N, opt);

  // weights e_H |pH| aggregated by the signature of H
  SignaturePoly wpoly = global_weight_polynomial(g);
  std::map<Signature, Rational> weights;
  for (const auto& [mono, coef] : wpoly.terms()) weights[Signature{mono}] += coef;

  std::vector<Rational> acc((std::size_t)N + 1, Rational(0));
  for (const auto& [sig, w] : weights) {
    if (w == 0) continue;
    // local phi coefficients b_H(p^m), symbolic in the residue norm
    std::vector<QhatPoly> b((std::size_t)N + 1);
    for (long m = 0; m <= N; ++m) b[(size_t)m] = b_local(sig, g.p, m);

    SeriesT phi_sig;
    phi_sig.c.assign((std::size_t)N + 1, 0);
    phi_sig.c[0] = 1;
    for (int d = 1; 2 * d <= N; ++d) {
      Int qd = pow_ui(q, (unsigned long)d);
      SeriesT local;
      local.c.assign((std::size_t)N + 1, 0);
      for (long m = 0; m * d <= N; ++m)
        local.c[(size_t)(m * d)] = qp_eval(b[(size_t)m], qd);
      phi_sig = mul_trunc(phi_sig, pow_trunc_big(local, place_count(q, d), N), N);
    }
    for (int n = 0; n <= N; ++n) acc[(size_t)n] += w * Rational(phi_sig.c[(size_t)n]);
  }

  SeriesT out;
  out.c.reserve((std::size_t)N + 1);
  for (int n = 0; n <= N; ++n) {
    Rational c = acc[(size_t)n];
    c.canonicalize();
    check(c.get_den() == 1, "global coefficient must be an integer");
    check(c >= 0, "global coefficient must be nonnegative");
    out.c.push_back(c.get_num());
  }
  if (N >= 0) check(out.c[0] == (g.cyclic() ? 1 : 0), "c_0 must equal [G cyclic]");
  if (N >= 1) check(out.c[1] == 0, "c_1 must vanish");
  return out;
}

Int count_function(const SeriesT& series, int n) {
  if (n < 0 || n > series.trunc())
    fail(ErrorCode::TruncationTooSmall, "count_function: n exceeds the truncation");
  Int s = 0;
  for (int k = 0; k <= n; ++k) s += series.c[(size_t)k];
  return s;
}

Int count_function(unsigned q, const GroupDesc& g, int n,
                   const GlobalSeriesOptions& opt) {
  return count_function(global_series(q, g, n, opt), n);
}

DiagnosticReport asymptotic_diagnostic(unsigned q, const GroupDesc& g, int N,
                                       const GlobalSeriesOptions& opt) {
  SeriesT series = global_series(q, g, N, opt);
  InvariantReport inv = invariants(g);

  std::vector<int> support;
  for (int n = 1; n <= N; ++n)
    if (series.c[(size_t)n] != 0) support.push_back(n);
  if (support.size() < 8)
    fail(ErrorCode::InsufficientData,
         "need at least 8 nonzero coefficients for the diagnostic");

  int period = 0;
  for (std::size_t i = 1; i < support.size(); ++i)
    period = std::gcd(period, support[i] - support[i - 1]);
  if (period == 0) period = 1;

  DiagnosticReport rep;
  rep.period = period;
  rep.alpha = inv.alpha;
  rep.beta = inv.beta;

  double logq = std::log((double)q);
  double alpha = mpq_get_d(inv.alpha.get_mpq_t());
  double beta1 = mpz_get_d(inv.beta.get_mpz_t()) - 1.0;

  for (int residue = 0; residue < period; ++residue) {
    DiagnosticRow row;
    row.residue = residue;
    for (int n = 1; n <= N; ++n) {
      if (n % period != residue) continue;
      row.ns.push_back(n);
      row.counts.push_back(count_function(series, n));
      const Int& C = row.counts.back();
      if (C == 0) {
        row.rho.push_back(0.0);
        row.plain_ratio.push_back(0.0);
        continue;
      }
      double logC = std::log(mpz_get_d(C.get_mpz_t()));
      double plain = std::exp(logC - alpha * n * logq);
      row.plain_ratio.push_back(plain);
      row.rho.push_back(std::exp(logC - alpha * n * logq - beta1 * std::log((double)n)));
    }

    auto window_mean = [&](int lo, int hi) {  // mean rho over (lo, hi]
      double sum = 0.0;
      int cnt = 0;
      for (std::size_t i = 0; i < row.ns.size(); ++i)
        if (row.ns[i] > lo && row.ns[i] <= hi) {
          sum += row.rho[i];
          ++cnt;
        }
      return cnt > 0 ? sum / cnt : 0.0;
    };
    row.window_prev = window_mean(N / 4, N / 2);
    row.window_last = window_mean(N / 2, N);
    row.rel_change = row.window_prev > 0.0
                         ? std::abs(row.window_last - row.window_prev) / row.window_prev
                         : 0.0;
    row.plain_ratio_nondecreasing = true;
    for (std::size_t i = 1; i < row.plain_ratio.size(); ++i)
      if (row.plain_ratio[i] < row.plain_ratio[i - 1] - 1e-12)
        row.plain_ratio_nondecreasing = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace asw
