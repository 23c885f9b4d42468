#pragma once

#include <string>
#include <vector>

#include "field_model.hpp"
#include "pgroup.hpp"
#include "series.hpp"

namespace asw {

/// Integer polynomial in the formal symbol q-hat (dense, ascending).
using QhatPoly = std::vector<Int>;

QhatPoly qp_monomial(long exponent);
QhatPoly qp_add(const QhatPoly& a, const QhatPoly& b);
QhatPoly qp_sub(const QhatPoly& a, const QhatPoly& b);
bool qp_zero(const QhatPoly& a);
QhatPoly qp_shift(const QhatPoly& a, long k);  // multiply by qhat^k
Int qp_eval(const QhatPoly& a, const Int& value);
std::string qp_to_string(const QhatPoly& a);

/// Truncated series in the local variable u = N(p)^{-s} whose coefficients
/// are integer polynomials in q-hat (the residue norm, kept symbolic).
struct SeriesUQ {
  std::vector<QhatPoly> coeff;  // index m = power of u

  int trunc() const { return (int)coeff.size() - 1; }
  bool operator==(const SeriesUQ&) const = default;
};

/// Exponent of u_H(p^m) as a power of the residue norm: sum_i r_i(H) w_i(m).
long u_exponent(const Signature& h, unsigned p, long m);

/// u_H(p^m) = qhat^{sum_i r_i(H) w_i(m)}.
QhatPoly u_value(const Signature& h, unsigned p, long m);

/// b_H(p^m) = u_H(p^m) - u_H(p^{m-1}) for m >= 1, and 1 at m = 0.
QhatPoly b_local(const Signature& h, unsigned p, long m);

struct LocalFactor {
  SeriesUQ phi;
  SeriesUQ lambda;
  SeriesUQ psi;
  bool identity_ok = false;  // phi == lambda * psi, symbolically in qhat
};

/// Local Euler factor data truncated at u^M; asserts the shift identity
/// B_{k p^e + l} = U_{p^e}^k B_l for all indices in range.
LocalFactor local_factor(const Signature& sig, unsigned p, int M);

/// Expands Psi and verifies the cancellation and exponent bounds: the u^1
/// coefficient vanishes and every surviving monomial qhat^a u^l (l >= 1)
/// satisfies (1 + a)/l < alpha_p(G) - 1/(2p^e).
bool psi_exponent_check(const Signature& sig, unsigned p, int M);

struct GlobalSeriesOptions {
  int max_trunc = 64;
  unsigned max_q = 9;
};

/// Conductor-count series of F_q(T): coefficient c_n counts G-extensions
/// with conductor of degree n.
SeriesT global_series(unsigned q, const GroupDesc& g, int N,
                      const GlobalSeriesOptions& opt = {});

/// C(F,G;q^n) = sum_{k<=n} c_k.
Int count_function(unsigned q, const GroupDesc& g, int n,
                   const GlobalSeriesOptions& opt = {});
Int count_function(const SeriesT& series, int n);

struct DiagnosticRow {
  int residue = 0;
  std::vector<int> ns;
  std::vector<Int> counts;          // C(q^n)
  std::vector<double> rho;          // C(q^n) q^{-n alpha} n^{-(beta-1)}
  std::vector<double> plain_ratio;  // C(q^n) q^{-n alpha}
  double window_prev = 0.0;         // mean rho over (N/4, N/2]
  double window_last = 0.0;         // mean rho over (N/2, N]
  double rel_change = 0.0;
  bool plain_ratio_nondecreasing = false;
};

struct DiagnosticReport {
  int period = 1;
  Rational alpha;
  Int beta;
  std::vector<DiagnosticRow> rows;
};

DiagnosticReport asymptotic_diagnostic(unsigned q, const GroupDesc& g, int N,
                                       const GlobalSeriesOptions& opt = {});

}  // namespace asw
