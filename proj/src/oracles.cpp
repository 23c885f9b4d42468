#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace asw {

namespace {

void validate_place(const Fq& F, const Poly& pi) {
  if (pi.degree() < 1 || pi.lead() != 1 || !poly_irreducible(F, pi))
    fail(ErrorCode::InvalidArgument, "place must be a monic irreducible polynomial");
}

// All polynomials over F_q of degree < k, in lexicographic coefficient order.
std::vector<Poly> polys_below(unsigned q, int k) {
  std::vector<Poly> out;
  std::vector<unsigned> c((std::size_t)k, 0);
  for (;;) {
    out.push_back(poly_trim(c));
    int i = 0;
    while (i < k && ++c[(size_t)i] == q) c[(size_t)i++] = 0;
    if (i == k) break;
  }
  return out;
}

}  // namespace

OneUnitReport one_unit_group(unsigned q, const Poly& pi, int m) {
  unsigned p = 0;
  if (!is_prime_power(q, &p)) fail(ErrorCode::InvalidArgument, "q must be a prime power");
  Fq F(q);
  validate_place(F, pi);
  if (m < 1) fail(ErrorCode::OutOfRange, "m must be >= 1");
  int d = pi.degree();
  if (pow_ui(q, (unsigned long)(d * m)) > 65536)
    fail(ErrorCode::ResourceLimit, "residue ring larger than 2^16 elements");

  Poly mod = poly_constant(1);
  for (int i = 0; i < m; ++i) mod = poly_mul(F, mod, pi);

  std::set<Poly> units;
  for (const Poly& a : polys_below(q, d * (m - 1)))
    units.insert(poly_mod(F, poly_add(F, poly_constant(1), poly_mul(F, pi, a)), mod));

  OneUnitReport rep;
  rep.order = pow_ui(q, (unsigned long)(d * (m - 1)));
  check(Int((long)units.size()) == rep.order, "one-unit group has order N^{m-1}");

  Int norm = pow_ui(q, (unsigned long)d);
  rep.hasse_ok = true;
  int i = 1;
  while (units.size() > 1) {
    std::set<Poly> powered;
    for (const Poly& u : units) powered.insert(poly_pow_mod(F, u, Int(p), mod));
    Int index((unsigned long)(units.size() / powered.size()));
    check(index * (long)powered.size() == (long)units.size(), "index chain must divide");
    rep.indices.push_back(index);

    int r = 0;
    for (Int t = index; t > 1; t /= p) ++r;
    rep.sig.ranks.push_back(r);

    Int expected;
    mpz_pow_ui(expected.get_mpz_t(), norm.get_mpz_t(),
               (unsigned long)weight(p, i, m));
    if (index != expected) rep.hasse_ok = false;
    units = std::move(powered);
    ++i;
  }
  // beyond the chain all weights must vanish, else the formula fails too
  for (int j = i; j <= i + 2; ++j)
    if (weight(p, j, m) != 0) rep.hasse_ok = false;
  return rep;
}

Signature one_unit_signature(unsigned q, const Poly& pi, int m) {
  return one_unit_group(q, pi, m).sig;
}

bool hasse_check(unsigned q, const Poly& pi, int m) {
  return one_unit_group(q, pi, m).hasse_ok;
}

namespace {

void validate_asw_args(unsigned p) {
  if (p != 2 && p != 3)
    fail(ErrorCode::ResourceLimit, "Artin-Schreier oracle supports p in {2,3}");
}

// log_p of the number of Artin-Schreier classes with conductor dividing the
// divisor given as (place degree, exponent) pairs: dim V - dim W + 1 with
// V the partial-fraction space of pole order <= m_v - 1 and W the space of
// g with wp(g) = g^p - g landing in V.
long classes_dividing_log(unsigned p, const std::vector<std::pair<int, int>>& exps) {
  long a = 0, b = 0;
  for (const auto& [deg, m] : exps) {
    if (m <= 0) continue;
    a += (long)deg * (m - 1);
    b += (long)deg * ((m - 1) / (int)p);
  }
  return a - b + 1;
}

}  // namespace

Int asw_count(unsigned p, const DivisorDesc& m) {
  validate_asw_args(p);
  if (m.degree() > 12) fail(ErrorCode::ResourceLimit, "divisor degree must be <= 12");
  Fq F(p);
  for (const auto& [v, e] : m.entries) {
    if (!v.infinite) validate_place(F, v.pi);
    check(e > 0, "divisor exponents must be positive");
  }

  std::size_t s = m.entries.size();
  Int exact = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
    std::vector<std::pair<int, int>> exps;
    int sign = 1;
    for (std::size_t i = 0; i < s; ++i) {
      int e = m.entries[i].second - ((mask >> i) & 1u ? 1 : 0);
      if (mask >> i & 1u) sign = -sign;
      exps.emplace_back(m.entries[i].first.degree(), e);
    }
    exact += sign * pow_ui(p, (unsigned long)classes_dividing_log(p, exps));
  }

  if (m.trivial()) exact -= 1;  // the zero class
  check(exact >= 0 && exact % (p - 1) == 0,
        "class count must be a nonnegative multiple of p-1");
  return exact / (p - 1);
}

std::vector<DivisorDesc> effective_divisors(unsigned q, int max_degree,
                                            int min_exponent) {
  if (max_degree < 0 || min_exponent < 1)
    fail(ErrorCode::OutOfRange, "effective_divisors: bad arguments");
  Fq F(q);
  std::vector<PlaceDesc> places;
  places.push_back({true, {}});
  for (int d = 1; d * min_exponent <= max_degree; ++d)
    for (const Poly& pi : monic_irreducibles(F, d)) places.push_back({false, pi});

  std::vector<DivisorDesc> out;
  std::vector<std::pair<PlaceDesc, int>> cur;
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int budget) {
    if (i == places.size()) {
      out.push_back(make_divisor(cur));
      return;
    }
    walk(i + 1, budget);
    int d = places[i].degree();
    for (int e = min_exponent; e * d <= budget; ++e) {
      cur.emplace_back(places[i], e);
      walk(i + 1, budget - e * d);
      cur.pop_back();
    }
  };
  walk(0, max_degree);
  return out;
}

namespace {

Int asw_rank2_count(int n) {
  // reduced representatives over F_2: constant + sum_j a_j T^j (j odd) +
  // sum_pi sum_j c_j(T)/pi^j (j odd, deg c_j < deg pi); the pole order at a
  // place is the largest j with a nonzero coefficient and the conductor
  // exponent there is j + 1.
  Fq F(2);
  struct Term {
    std::size_t place;
    int order;
  };
  std::vector<int> place_deg{1};  // the infinite place
  std::vector<Term> basis;
  for (int j = 1; (j + 1) <= n; j += 2) basis.push_back({0, j});
  for (int d = 1; 2 * d <= n; ++d)
    for (std::size_t k = 0; k < monic_irreducibles(F, d).size(); ++k) {
      place_deg.push_back(d);
      std::size_t pl = place_deg.size() - 1;
      for (int j = 1; (j + 1) * d <= n; j += 2)
        for (int slot = 0; slot < d; ++slot) basis.push_back({pl, j});
    }

  std::size_t nb = basis.size();
  check(nb + 1 <= 24, "rank-2 oracle basis too large");

  // orders[c] = per-place max pole order of class c (-1 for no pole)
  std::vector<std::vector<int>> orders;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (nb + 1)); ++mask) {
    if (mask == 0) continue;  // skip only the zero class; bit nb is the constant
    std::vector<int> o(place_deg.size(), -1);
    for (std::size_t i = 0; i < nb; ++i)
      if (mask >> i & 1u) o[basis[i].place] = std::max(o[basis[i].place], basis[i].order);
    int deg = 0;
    for (std::size_t v = 0; v < o.size(); ++v)
      if (o[v] >= 0) deg += (o[v] + 1) * place_deg[v];
    if (deg <= n) orders.push_back(std::move(o));
  }

  // each 2-dimensional space of classes contains 3 unordered pairs of
  // distinct nonzero elements; its conductor is the pointwise maximum
  Int pairs = 0;
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      int deg = 0;
      for (std::size_t v = 0; v < place_deg.size(); ++v) {
        int o = std::max(orders[i][v], orders[j][v]);
        if (o >= 0) deg += (o + 1) * place_deg[v];
      }
      if (deg <= n) pairs += 1;
    }
  check(pairs % 3 == 0, "rank-2 pair count must be divisible by 3");
  return pairs / 3;
}

}  // namespace

Int asw_counting_function(unsigned p, int n, int rank) {
  validate_asw_args(p);
  if (n < 0) fail(ErrorCode::OutOfRange, "n must be >= 0");
  if (rank == 1) {
    if (n > 8) fail(ErrorCode::ResourceLimit, "rank-1 oracle supports n <= 8");
    Int total = 0;
    for (const DivisorDesc& m : effective_divisors(p, n, 2)) total += asw_count(p, m);
    return total;
  }
  if (rank == 2) {
    if (p != 2) fail(ErrorCode::ResourceLimit, "rank-2 oracle supports p = 2 only");
    if (n > 6) fail(ErrorCode::ResourceLimit, "rank-2 oracle supports n <= 6");
    return asw_rank2_count(n);
  }
  fail(ErrorCode::InvalidArgument, "rank must be 1 or 2");
}

}  // namespace asw
