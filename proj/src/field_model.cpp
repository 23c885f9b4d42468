#include "field_model.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace asw {

namespace {

// Coefficients (b, c) of an irreducible x^2 + bx + c over F_p.
std::pair<unsigned, unsigned> find_irreducible_quadratic(unsigned p) {
  for (unsigned b = 0; b < p; ++b)
    for (unsigned c = 0; c < p; ++c) {
      bool has_root = false;
      for (unsigned x = 0; x < p && !has_root; ++x)
        if ((x * x + b * x + c) % p == 0) has_root = true;
      if (!has_root) return {b, c};
    }
  fail(ErrorCode::InvalidArgument, "no irreducible quadratic found");
}

}  // namespace

Fq::Fq(unsigned q) : q_(q) {
  if (!is_prime_power(q, &p_, &a_) || a_ > 2)
    fail(ErrorCode::InvalidArgument,
         "q must be p or p^2 for the table-based field (got " + std::to_string(q) + ")");
  add_.resize((std::size_t)q_ * q_);
  mul_.resize((std::size_t)q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  if (a_ == 1) {
    for (unsigned x = 0; x < q_; ++x)
      for (unsigned y = 0; y < q_; ++y) {
        add_[x * q_ + y] = (x + y) % q_;
        mul_[x * q_ + y] = (x * y) % q_;
      }
  } else {
    auto [b, c] = find_irreducible_quadratic(p_);
    auto enc = [&](unsigned u, unsigned v) { return u * p_ + v; };
    for (unsigned x = 0; x < q_; ++x)
      for (unsigned y = 0; y < q_; ++y) {
        unsigned xu = x / p_, xv = x % p_, yu = y / p_, yv = y % p_;
        add_[x * q_ + y] = enc((xu + yu) % p_, (xv + yv) % p_);
        // (xu t + xv)(yu t + yv) with t^2 = -b t - c
        unsigned t2 = xu * yu % p_;
        unsigned t1 = (xu * yv + xv * yu) % p_;
        unsigned t0 = xv * yv % p_;
        t1 = (t1 + t2 * (p_ - b)) % p_;
        t0 = (t0 + t2 * (p_ - c)) % p_;
        mul_[x * q_ + y] = enc(t1, t0);
      }
  }
  for (unsigned x = 0; x < q_; ++x)
    for (unsigned y = 0; y < q_; ++y)
      if (add_[x * q_ + y] == 0) neg_[x] = y;
  for (unsigned x = 1; x < q_; ++x)
    for (unsigned y = 1; y < q_; ++y)
      if (mul_[x * q_ + y] == 1) inv_[x] = y;
}

unsigned Fq::inv(unsigned x) const {
  if (x == 0) fail(ErrorCode::InvalidArgument, "division by zero in F_q");
  return inv_[x];
}

unsigned Fq::pow(unsigned x, unsigned long e) const {
  unsigned r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Poly poly_trim(std::vector<unsigned> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return Poly{std::move(c)};
}

Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
  std::vector<unsigned> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff((int)i), b.coeff((int)i));
  return poly_trim(std::move(c));
}

Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
  std::vector<unsigned> c(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = F.sub(a.coeff((int)i), b.coeff((int)i));
  return poly_trim(std::move(c));
}

Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
  if (a.zero() || b.zero()) return {};
  std::vector<unsigned> c(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
  return poly_trim(std::move(c));
}

Poly poly_scale(const Fq& F, unsigned s, const Poly& a) {
  std::vector<unsigned> c(a.c);
  for (auto& x : c) x = F.mul(s, x);
  return poly_trim(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& a, const Poly& b) {
  if (b.zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<unsigned> rem(a.c);
  std::vector<unsigned> quot(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, 0);
  unsigned lead_inv = F.inv(b.lead());
  for (int i = (int)rem.size() - 1; i >= b.degree(); --i) {
    if (rem[(size_t)i] == 0) continue;
    unsigned f = F.mul(rem[(size_t)i], lead_inv);
    quot[(size_t)(i - b.degree())] = f;
    for (int j = 0; j <= b.degree(); ++j)
      rem[(size_t)(i - b.degree() + j)] =
          F.sub(rem[(size_t)(i - b.degree() + j)], F.mul(f, b.c[(size_t)j]));
  }
  return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

Poly poly_mod(const Fq& F, const Poly& a, const Poly& b) {
  return poly_divmod(F, a, b).second;
}

Poly poly_gcd(const Fq& F, Poly a, Poly b) {
  while (!b.zero()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.zero() ? a : poly_monic(F, a);
}

Poly poly_monic(const Fq& F, const Poly& a) {
  if (a.zero()) return a;
  return poly_scale(F, F.inv(a.lead()), a);
}

Poly poly_pow_mod(const Fq& F, Poly base, Int e, const Poly& mod) {
  Poly r = poly_constant(1);
  base = poly_mod(F, base, mod);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(F, poly_mul(F, r, base), mod);
    e /= 2;
    if (e > 0) base = poly_mod(F, poly_mul(F, base, base), mod);
  }
  return r;
}

Poly poly_constant(unsigned v) { return poly_trim({v}); }

Poly poly_x() { return Poly{{0, 1}}; }

namespace {

void all_monic(const Fq& F, int degree, std::vector<Poly>& out) {
  std::vector<unsigned> c(degree + 1, 0);
  c[(size_t)degree] = 1;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == degree) {
      out.push_back(Poly{c});
      return;
    }
    for (unsigned v = 0; v < F.q(); ++v) {
      c[(size_t)pos] = v;
      rec(pos + 1);
    }
    c[(size_t)pos] = 0;
  };
  rec(0);
}

}  // namespace

bool poly_irreducible(const Fq& F, const Poly& a) {
  int d = a.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  // trial division by monic polynomials up to half degree
  for (int e = 1; 2 * e <= d; ++e) {
    std::vector<Poly> divisors;
    all_monic(F, e, divisors);
    for (const Poly& b : divisors)
      if (poly_mod(F, a, b).zero()) return false;
  }
  return true;
}

std::vector<Poly> monic_irreducibles(const Fq& F, int degree) {
  std::vector<Poly> candidates, out;
  all_monic(F, degree, candidates);
  for (const Poly& a : candidates)
    if (poly_irreducible(F, a)) out.push_back(a);
  return out;
}

bool is_prime_power(unsigned q, unsigned* p_out, unsigned* a_out) {
  if (q < 2) return false;
  unsigned p = q;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  unsigned a = 0, v = q;
  while (v % p == 0) {
    v /= p;
    ++a;
  }
  if (v != 1) return false;
  if (p_out) *p_out = p;
  if (a_out) *a_out = a;
  return true;
}

Int place_count(unsigned q, int d) {
  if (d < 1) fail(ErrorCode::OutOfRange, "place_count: d must be >= 1");
  if (!is_prime_power(q)) fail(ErrorCode::InvalidArgument, "q must be a prime power");
  if (d == 1) return Int(q) + 1;
  // (1/d) sum_{k|d} mu(k) q^{d/k}
  Int sum = 0;
  for (int k = 1; k <= d; ++k) {
    if (d % k != 0) continue;
    int m = 1, kk = k;
    for (int f = 2; f * f <= kk; ++f) {
      if (kk % f != 0) continue;
      kk /= f;
      if (kk % f == 0) {
        m = 0;
        break;
      }
      m = -m;
    }
    if (kk > 1 && m != 0) m = -m;
    if (m == 0) continue;
    sum += Int(m) * pow_ui(q, (unsigned long)(d / k));
  }
  check(sum % d == 0, "necklace count must be an integer");
  return sum / d;
}

SeriesT zeta_series(unsigned q, int N) {
  if (N < 0) fail(ErrorCode::OutOfRange, "zeta_series: N must be >= 0");
  SeriesT z;
  z.c.assign(N + 1, 0);
  Int c = 1, qp = 1;
  for (int n = 0; n <= N; ++n) {
    z.c[(size_t)n] = c;  // sum_{k<=n} q^k
    qp *= q;
    c += qp;
  }
  return z;
}

std::string poly_to_string(const Poly& a) {
  if (a.zero()) return "0";
  std::string s;
  for (int i = a.degree(); i >= 0; --i) {
    unsigned v = a.coeff(i);
    if (v == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || v != 1) s += std::to_string(v);
    if (i >= 1) {
      if (v != 1) s += "*";
      s += "T";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Poly poly_parse(const Fq& F, const std::string& s) {
  // Accepts sums of terms like "T^3", "2*T", "T", "1"; '-' is allowed and
  // interpreted in F_q via negation.
  std::map<int, unsigned> coeffs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= s.size()) break;
    bool negate = false;
    if (!first || s[i] == '+' || s[i] == '-') {
      if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
        fail(ErrorCode::InvalidArgument, "polynomial parse error in '" + s + "'");
      negate = s[i] == '-';
      ++i;
      skip_ws();
    }
    first = false;
    unsigned long coef = 1;
    bool saw_digit = false;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
      if (!saw_digit) coef = 0;
      saw_digit = true;
      coef = coef * 10 + (unsigned long)(s[i] - '0');
      ++i;
    }
    skip_ws();
    if (i < s.size() && s[i] == '*') {
      ++i;
      skip_ws();
    }
    int deg = 0;
    if (i < s.size() && (s[i] == 'T' || s[i] == 't')) {
      ++i;
      deg = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip_ws();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i]))
          fail(ErrorCode::InvalidArgument, "polynomial parse error in '" + s + "'");
        deg = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
          deg = deg * 10 + (s[i] - '0');
          ++i;
        }
      }
    } else if (!saw_digit) {
      fail(ErrorCode::InvalidArgument, "polynomial parse error in '" + s + "'");
    }
    unsigned v = (unsigned)(coef % F.q());  // numeric literals are element codes
    if (negate) v = F.neg(v);
    coeffs[deg] = F.add(coeffs.count(deg) ? coeffs[deg] : 0u, v);
  }
  std::vector<unsigned> c;
  for (const auto& [d, v] : coeffs) {
    if ((std::size_t)d >= c.size()) c.resize((std::size_t)d + 1, 0);
    c[(size_t)d] = v;
  }
  return poly_trim(std::move(c));
}

int DivisorDesc::degree() const {
  int d = 0;
  for (const auto& [pl, m] : entries) d += m * pl.degree();
  return d;
}

bool DivisorDesc::squareful() const {
  for (const auto& [pl, m] : entries)
    if (m < 2) return false;
  return true;
}

DivisorDesc make_divisor(std::vector<std::pair<PlaceDesc, int>> entries) {
  for (const auto& [pl, m] : entries)
    if (m <= 0) fail(ErrorCode::InvalidArgument, "divisor exponents must be positive");
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i].first == entries[i + 1].first)
      fail(ErrorCode::InvalidArgument, "duplicate place in divisor");
  return DivisorDesc{std::move(entries)};
}

}  // namespace asw
