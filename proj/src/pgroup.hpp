#pragma once

#include <gmpxx.h>

#include <vector>

#include "errors.hpp"

namespace asw {

using Int = mpz_class;
using Rational = mpq_class;

/// Finite abelian p-group given by its cyclic type e_1 >= e_2 >= ... >= e_r >= 1,
/// i.e. the group prod_j Z/p^{e_j}. The empty type is the trivial group.
struct GroupDesc {
  unsigned p = 2;
  std::vector<int> type;

  bool trivial() const { return type.empty(); }
  bool cyclic() const { return type.size() <= 1; }
  int exponent() const { return type.empty() ? 0 : type.front(); }
  int order_log() const;
  Int order() const;

  bool operator==(const GroupDesc&) const = default;
};

/// p^i-ranks r_i = log_p [p^{i-1}G : p^iG], the conjugate partition of the
/// cyclic type. Entries beyond the stored length are implicitly zero.
struct Signature {
  std::vector<int> ranks;

  int rank(int i) const {  // 1-based
    return (i >= 1 && i <= (int)ranks.size()) ? ranks[i - 1] : 0;
  }
  int length() const { return (int)ranks.size(); }
  int sum() const;

  bool operator==(const Signature&) const = default;
  bool operator<(const Signature& o) const { return ranks < o.ranks; }
};

struct InvariantReport {
  int e = 0;
  int f = 0;
  Rational alpha;
  Int beta;
  Rational m_tilde;
  Rational a_p;
  Rational d_p;
  Rational delta;
  Rational local_disc_exp;
};

bool is_prime(unsigned n);

GroupDesc make_group(unsigned p, std::vector<int> type);

/// p^i G: cyclic type (e_j - i), keeping positive entries only.
GroupDesc p_multiple(const GroupDesc& g, int i);

Signature signature(const GroupDesc& g);

/// Recover the group from its signature (conjugate partition).
GroupDesc group_from_signature(unsigned p, const Signature& sig);

/// w_i(l) = floor((l-1)/p^{i-1}) - floor((l-1)/p^i), with w_i(0) = 0.
long weight(unsigned p, int i, long l);

InvariantReport invariants(const GroupDesc& g);

Rational alpha_p(const GroupDesc& g);

/// eps(l) = alpha_p(G) - (1 + sum_i r_i(G) w_i(l)) / l, for l >= 2.
Rational epsilon_single(const GroupDesc& g, long l);

/// eps(l_1,...,l_k) for k >= 2, each 1 <= l_j <= p^e - 1.
Rational epsilon_multi(const GroupDesc& g, const std::vector<long>& ls);

/// For a proper intermediate H (pG <= H <= G at signature level, H != G):
/// true iff r_e(G)=1, r_e(H)=0 and r_i(G)=r_i(H) for i<e, in which case
/// alpha_p(H) = alpha_p(G); otherwise the gap exceeds 1/(2p^e).
bool alpha_gap_exceptional(const GroupDesc& g, const GroupDesc& h);

Int pow_int(const Int& base, unsigned long exp);
Int pow_ui(unsigned long base, unsigned long exp);

}  // namespace asw
