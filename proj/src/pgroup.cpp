#include "pgroup.hpp"

#include <algorithm>
#include <numeric>

namespace asw {

int GroupDesc::order_log() const {
  return std::accumulate(type.begin(), type.end(), 0);
}

Int GroupDesc::order() const { return pow_ui(p, (unsigned long)order_log()); }

int Signature::sum() const {
  return std::accumulate(ranks.begin(), ranks.end(), 0);
}

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int pow_ui(unsigned long base, unsigned long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroupDesc make_group(unsigned p, std::vector<int> type) {
  if (!is_prime(p)) fail(ErrorCode::NonPrime, "p = " + std::to_string(p) + " is not prime");
  for (int e : type)
    if (e < 1) fail(ErrorCode::NonPositiveExponent, "cyclic exponents must be positive");
  std::sort(type.begin(), type.end(), std::greater<int>());
  return GroupDesc{p, std::move(type)};
}

GroupDesc p_multiple(const GroupDesc& g, int i) {
  if (i < 0) fail(ErrorCode::OutOfRange, "p_multiple: i must be >= 0");
  GroupDesc r{g.p, {}};
  for (int e : g.type)
    if (e > i) r.type.push_back(e - i);
  return r;
}

Signature signature(const GroupDesc& g) {
  Signature s;
  for (int i = 1; i <= g.exponent(); ++i) {
    int ri = (int)std::count_if(g.type.begin(), g.type.end(),
                                [i](int e) { return e >= i; });
    s.ranks.push_back(ri);
  }
  return s;
}

GroupDesc group_from_signature(unsigned p, const Signature& sig) {
  for (size_t i = 0; i + 1 < sig.ranks.size(); ++i)
    if (sig.ranks[i] < sig.ranks[i + 1])
      fail(ErrorCode::InvalidArgument, "signature must be weakly decreasing");
  if (!sig.ranks.empty() && sig.ranks.back() <= 0)
    fail(ErrorCode::InvalidArgument, "signature entries must be positive");
  GroupDesc g{p, {}};
  int e = sig.length();
  for (int i = 1; i <= e; ++i) {
    int mult = sig.rank(i) - sig.rank(i + 1);
    for (int k = 0; k < mult; ++k) g.type.push_back(i);
  }
  std::sort(g.type.begin(), g.type.end(), std::greater<int>());
  return g;
}

long weight(unsigned p, int i, long l) {
  if (i < 1) fail(ErrorCode::OutOfRange, "weight: i must be >= 1");
  if (l < 0) fail(ErrorCode::OutOfRange, "weight: l must be >= 0");
  if (l == 0) return 0;
  Int pi1 = pow_ui(p, (unsigned long)(i - 1));
  Int pi = pi1 * (long)p;
  Int a = Int(l - 1) / pi1 - Int(l - 1) / pi;
  return a.get_si();
}

Rational alpha_p(const GroupDesc& g) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "alpha_p undefined for the trivial group");
  int e = g.exponent();
  Signature sig = signature(g);
  Int num = 1;
  for (int i = 1; i <= e; ++i)
    num += Int((long)g.p - 1) * pow_ui(g.p, (unsigned long)(e - i)) * sig.rank(i);
  Rational a(num, pow_ui(g.p, (unsigned long)e));
  a.canonicalize();
  return a;
}

namespace {

// Minimal f >= 0 such that p^f G is cyclic; equivalently the largest i with
// r_i(G) >= 2 (and 0 for cyclic G).
int cyclic_index(const GroupDesc& g) {
  Signature sig = signature(g);
  int f = 0;
  for (int i = 1; i <= sig.length(); ++i)
    if (sig.rank(i) >= 2) f = i;
  return f;
}

}  // namespace

InvariantReport invariants(const GroupDesc& g) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "invariants undefined for the trivial group");
  InvariantReport r;
  const unsigned p = g.p;
  const int e = g.exponent();
  Signature sig = signature(g);

  r.e = e;
  r.f = cyclic_index(g);
  r.alpha = alpha_p(g);
  r.beta = g.cyclic() ? pow_ui(p, (unsigned long)e) - 1
                      : pow_ui(p, (unsigned long)(e - r.f));

  // |p^i G| for i = 0..e
  std::vector<Int> sub(e + 1);
  for (int i = 0; i <= e; ++i) sub[i] = p_multiple(g, i).order();

  r.m_tilde = 0;
  for (int i = 0; i < e; ++i) {
    Rational term(sub[i] - sub[i + 1], pow_ui(p, (unsigned long)i));
    term.canonicalize();
    r.m_tilde += term;
  }

  r.a_p = r.alpha / r.m_tilde;
  r.a_p.canonicalize();

  Rational dden(g.order() * ((long)p - 1), (long)p);
  dden.canonicalize();
  r.d_p = r.alpha / dden;
  r.d_p.canonicalize();

  Int pg = sub[1];
  r.delta = Rational(pg - 1) / (r.m_tilde + Rational(pg - 1));
  r.delta.canonicalize();

  Int lnum = 0;
  for (int i = 1; i <= e; ++i)
    lnum += pow_ui(p, (unsigned long)(e - i)) * sig.rank(i);
  lnum *= (long)p - 1;
  Int lden = 0;
  for (int i = 0; i < e; ++i)
    lden += pow_ui(p, (unsigned long)(e - i)) * (sub[i] - sub[i + 1]);
  lden *= (long)p;
  r.local_disc_exp = Rational(lnum, lden);
  r.local_disc_exp.canonicalize();

  return r;
}

Rational epsilon_single(const GroupDesc& g, long l) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "epsilon undefined for the trivial group");
  if (l < 2) fail(ErrorCode::OutOfRange, "epsilon_single: l must be >= 2");
  Signature sig = signature(g);
  Int num = 1;
  for (int i = 1; i <= sig.length(); ++i)
    num += Int(sig.rank(i)) * weight(g.p, i, l);
  Rational eps = alpha_p(g) - Rational(num, l);
  eps.canonicalize();
  return eps;
}

Rational epsilon_multi(const GroupDesc& g, const std::vector<long>& ls) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "epsilon undefined for the trivial group");
  if (ls.size() < 2) fail(ErrorCode::OutOfRange, "epsilon_multi: need k >= 2 arguments");
  Int pe = pow_ui(g.p, (unsigned long)g.exponent());
  long lsum = 0;
  Signature sig = signature(g);
  Int num = 1;
  for (long l : ls) {
    if (l < 1 || Int(l) > pe - 1)
      fail(ErrorCode::OutOfRange, "epsilon_multi: arguments must satisfy 1 <= l <= p^e - 1");
    lsum += l;
    for (int i = 1; i <= sig.length(); ++i)
      num += Int(sig.rank(i)) * weight(g.p, i, l);
  }
  Rational eps = alpha_p(g) - Rational(num, lsum);
  eps.canonicalize();
  return eps;
}

bool alpha_gap_exceptional(const GroupDesc& g, const GroupDesc& h) {
  if (g.p != h.p) fail(ErrorCode::MismatchedCharacteristic, "groups have different p");
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "G must be nontrivial");
  Signature sg = signature(g), sh = signature(h);
  if (sg == sh) fail(ErrorCode::NotProper, "H must be a proper intermediate type");
  int e = g.exponent();
  // pG <= H <= G at signature level: r_i(G) >= r_i(H) >= r_{i+1}(G).
  for (int i = 1; i <= e; ++i) {
    if (!(sg.rank(i) >= sh.rank(i) && sh.rank(i) >= sg.rank(i + 1)))
      fail(ErrorCode::NotIntermediate, "signature is not intermediate between pG and G");
  }
  if (sh.length() > sg.length())
    fail(ErrorCode::NotIntermediate, "H exceeds the exponent of G");

  bool exceptional = sg.rank(e) == 1 && sh.rank(e) == 0;
  for (int i = 1; i < e && exceptional; ++i)
    if (sg.rank(i) != sh.rank(i)) exceptional = false;

  if (!h.trivial()) {
    Rational gap = alpha_p(g) - alpha_p(h);
    Rational bound(1, 2 * pow_ui(g.p, (unsigned long)e));
    bound.canonicalize();
    if (exceptional)
      check(gap == 0, "exceptional intermediate type must preserve alpha");
    else
      check(gap > bound, "alpha gap must exceed 1/(2p^e)");
  }
  return exceptional;
}

}  // namespace asw
