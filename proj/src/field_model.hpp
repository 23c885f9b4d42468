#pragma once

#include <string>
#include <vector>

#include "pgroup.hpp"
#include "series.hpp"

namespace asw {

/// Table-based arithmetic for F_q with q = p^a, a <= 2. Elements are encoded
/// as 0..q-1; for a = 2 the element u*p + v stands for u*x + v in
/// F_p[x]/(x^2 + bx + c) for a fixed irreducible quadratic.
class Fq {
 public:
  explicit Fq(unsigned q);

  unsigned q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned degree() const { return a_; }

  unsigned add(unsigned x, unsigned y) const { return add_[x * q_ + y]; }
  unsigned sub(unsigned x, unsigned y) const { return add(x, neg_[y]); }
  unsigned neg(unsigned x) const { return neg_[x]; }
  unsigned mul(unsigned x, unsigned y) const { return mul_[x * q_ + y]; }
  unsigned inv(unsigned x) const;
  unsigned pow(unsigned x, unsigned long e) const;

 private:
  unsigned q_, p_, a_;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

/// Univariate polynomial over F_q, coefficients in ascending degree order,
/// normalized (no trailing zeros). The zero polynomial has empty coefficients.
struct Poly {
  std::vector<unsigned> c;

  bool zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for the zero polynomial
  unsigned lead() const { return c.back(); }
  unsigned coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[(size_t)i] : 0u; }

  bool operator==(const Poly&) const = default;
  bool operator<(const Poly& o) const { return c < o.c; }
};

Poly poly_trim(std::vector<unsigned> c);
Poly poly_add(const Fq& F, const Poly& a, const Poly& b);
Poly poly_sub(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mul(const Fq& F, const Poly& a, const Poly& b);
Poly poly_scale(const Fq& F, unsigned s, const Poly& a);
std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& a, const Poly& b);
Poly poly_mod(const Fq& F, const Poly& a, const Poly& b);
Poly poly_gcd(const Fq& F, Poly a, Poly b);
Poly poly_monic(const Fq& F, const Poly& a);
Poly poly_pow_mod(const Fq& F, Poly base, Int e, const Poly& mod);
bool poly_irreducible(const Fq& F, const Poly& a);

Poly poly_constant(unsigned v);
Poly poly_x();  // the polynomial T

std::string poly_to_string(const Poly& a);
Poly poly_parse(const Fq& F, const std::string& s);

/// All monic irreducible polynomials of the given degree.
std::vector<Poly> monic_irreducibles(const Fq& F, int degree);

bool is_prime_power(unsigned q, unsigned* p_out = nullptr, unsigned* a_out = nullptr);

/// Number of places of F_q(T) of degree d: q + 1 for d = 1 (the monic linear
/// polynomials plus the infinite place), else (1/d) sum_{k|d} mu(k) q^{d/k}.
Int place_count(unsigned q, int d);

/// Coefficients of the genus-0 zeta series 1/((1-t)(1-qt)) up to t^N.
SeriesT zeta_series(unsigned q, int N);

/// A place of F_q(T): a monic irreducible polynomial, or the infinite place.
struct PlaceDesc {
  bool infinite = false;
  Poly pi;  // monic irreducible; ignored when infinite

  int degree() const { return infinite ? 1 : pi.degree(); }
  bool operator==(const PlaceDesc&) const = default;
  bool operator<(const PlaceDesc& o) const {
    if (infinite != o.infinite) return infinite < o.infinite;
    return pi < o.pi;
  }
};

/// An effective divisor: finitely supported map place -> positive exponent.
struct DivisorDesc {
  std::vector<std::pair<PlaceDesc, int>> entries;  // sorted by place, exponents > 0

  int degree() const;
  bool trivial() const { return entries.empty(); }
  bool squareful() const;
};

DivisorDesc make_divisor(std::vector<std::pair<PlaceDesc, int>> entries);

}  // namespace asw
