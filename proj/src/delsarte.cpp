#include "delsarte.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace asw {

void SignaturePoly::add_term(Monomial m, const Rational& c) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(std::move(m), c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational SignaturePoly::evaluate(const std::vector<Int>& x) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= x.size())
        fail(ErrorCode::InvalidIndexVector, "index vector too short for monomial");
      term *= Rational(pow_int(x[i], (unsigned long)m[i]));
    }
    acc += term;
  }
  acc.canonicalize();
  return acc;
}

SignaturePoly SignaturePoly::scale_vars(const std::vector<Int>& factors) const {
  SignaturePoly r;
  for (const auto& [m, c] : terms_) {
    Rational scaled = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      Int f = i < factors.size() ? factors[i] : Int(1);
      scaled *= Rational(pow_int(f, (unsigned long)m[i]));
    }
    r.add_term(m, scaled);
  }
  return r;
}

SignaturePoly SignaturePoly::operator*(const SignaturePoly& o) const {
  SignaturePoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

SignaturePoly& SignaturePoly::operator/=(const Rational& d) {
  for (auto& [m, c] : terms_) {
    c /= d;
    c.canonicalize();
  }
  return *this;
}

ExplicitGroup::ExplicitGroup(GroupDesc desc, std::uint64_t max_order)
    : desc_(std::move(desc)) {
  std::uint64_t n = 1;
  for (int e : desc_.type) {
    std::uint64_t m = 1;
    for (int k = 0; k < e; ++k) m *= desc_.p;
    moduli_.push_back((std::uint32_t)m);
    n *= m;
    if (n > max_order)
      fail(ErrorCode::ResourceLimit, "explicit group exceeds the order bound");
  }
  n_ = (std::uint32_t)n;
}

std::uint32_t ExplicitGroup::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0, mult = 1;
  for (std::uint32_t m : moduli_) {
    std::uint32_t ca = a % m, cb = b % m;
    a /= m;
    b /= m;
    r += ((ca + cb) % m) * mult;
    mult *= m;
  }
  return r;
}

std::uint32_t ExplicitGroup::scalar(std::uint64_t k, std::uint32_t a) const {
  std::uint32_t r = 0, mult = 1;
  for (std::uint32_t m : moduli_) {
    std::uint32_t ca = a % m;
    a /= m;
    r += (std::uint32_t)((k * ca) % m) * mult;
    mult *= m;
  }
  return r;
}

std::uint32_t ExplicitGroup::generator(std::size_t j) const {
  std::uint32_t mult = 1;
  for (std::size_t i = 0; i < j; ++i) mult *= moduli_[i];
  return mult;
}

Signature ExplicitGroup::subgroup_signature(
    const std::vector<std::uint32_t>& elements) const {
  Signature sig;
  std::vector<std::uint32_t> cur(elements);
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  while (cur.size() > 1) {
    std::vector<std::uint32_t> next;
    next.reserve(cur.size());
    for (std::uint32_t x : cur) next.push_back(scalar(desc_.p, x));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::size_t index = cur.size() / next.size();
    int r = 0;
    while (index > 1) {
      index /= desc_.p;
      ++r;
    }
    sig.ranks.push_back(r);
    cur = std::move(next);
  }
  return sig;
}

std::vector<std::uint32_t> ExplicitGroup::extend_subgroup(
    const std::vector<std::uint32_t>& base, std::uint32_t extra) const {
  std::vector<bool> member(n_, false);
  for (std::uint32_t x : base) member[x] = true;
  std::vector<std::uint32_t> out(base);
  // <base, extra> = union of cosets base + k*extra
  std::uint32_t shift = extra;
  while (!member[shift]) {
    for (std::uint32_t x : base) {
      std::uint32_t y = add(x, shift);
      if (!member[y]) {
        member[y] = true;
        out.push_back(y);
      }
    }
    shift = add(shift, extra);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> ExplicitGroup::span(
    const std::vector<std::uint32_t>& gens) const {
  std::vector<std::uint32_t> cur{0};
  for (std::uint32_t g : gens) cur = extend_subgroup(cur, g);
  return cur;
}

std::vector<std::vector<std::uint32_t>> ExplicitGroup::all_subgroups() const {
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> queue{{0}};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<std::uint32_t> cur = queue[head];  // copy: queue may reallocate
    for (std::uint32_t a = 1; a < n_; ++a) {
      if (std::binary_search(cur.begin(), cur.end(), a)) continue;
      auto ext = extend_subgroup(cur, a);
      if (seen.insert(ext).second) queue.push_back(std::move(ext));
    }
  }
  return queue;
}

std::vector<Int> ExplicitGroup::index_vector() const {
  std::vector<Int> x;
  for (int r : signature(desc_).ranks) x.push_back(pow_ui(desc_.p, (unsigned long)r));
  return x;
}

Int mu_delsarte(const GroupDesc& a) {
  long r = (long)a.type.size();
  for (int e : a.type)
    if (e != 1) return 0;
  Int val = pow_ui(a.p, (unsigned long)(r * (r - 1) / 2));
  return (r % 2 == 0) ? val : -val;
}

namespace {

// Row-reduced echelon bases of the k-dimensional subspaces of F_p^n with the
// given pivot columns; each subspace is produced exactly once.
void enumerate_rref(unsigned p, int n, const std::vector<int>& pivots,
                    std::vector<std::vector<int>>& rows, std::size_t free_pos,
                    const std::vector<std::pair<int, int>>& free_cells,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  if (free_pos == free_cells.size()) {
    emit(rows);
    return;
  }
  auto [ri, ci] = free_cells[free_pos];
  for (unsigned v = 0; v < p; ++v) {
    rows[ri][ci] = (int)v;
    enumerate_rref(p, n, pivots, rows, free_pos + 1, free_cells, emit);
  }
  rows[ri][ci] = 0;
}

void for_each_subspace(unsigned p, int n,
                       const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  for (int k = 0; k <= n; ++k) {
    std::vector<int> pivots(k);
    // iterate over k-combinations of columns
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));
      std::vector<std::pair<int, int>> free_cells;
      for (int i = 0; i < k; ++i) {
        rows[i][comb[i]] = 1;
        for (int c = comb[i] + 1; c < n; ++c)
          if (std::find(comb.begin(), comb.end(), c) == comb.end())
            free_cells.emplace_back(i, c);
      }
      enumerate_rref(p, n, comb, rows, 0, free_cells, emit);
      // next combination
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
}

}  // namespace

SignaturePoly f_polynomial_factorized(const GroupDesc& g) {
  Signature sig = signature(g);
  SignaturePoly f;
  f.add_term({}, 1);
  for (int i = 1; i <= sig.length(); ++i) {
    int ri = sig.rank(i), ri1 = sig.rank(i + 1);
    SignaturePoly xi_pow;
    SignaturePoly::Monomial m(i, 0);
    m[i - 1] = ri1;
    xi_pow.add_term(m, 1);
    f = f * xi_pow;
    for (int j = ri1; j <= ri - 1; ++j) {
      SignaturePoly lin;
      SignaturePoly::Monomial mx(i, 0);
      mx[i - 1] = 1;
      lin.add_term(mx, 1);
      lin.add_term({}, -Rational(pow_ui(g.p, (unsigned long)j)));
      f = f * lin;
    }
  }
  return f;
}

SignaturePoly f_polynomial(const GroupDesc& g, const FPolynomialOptions& opt) {
  ExplicitGroup A(g, opt.max_order);
  Signature sig = signature(g);
  int r1 = sig.rank(1);

  // generators of pG inside the explicit realization
  std::vector<std::uint32_t> pg_gens;
  for (std::size_t j = 0; j < g.type.size(); ++j)
    pg_gens.push_back(A.scalar(g.p, A.generator(j)));

  SignaturePoly f;
  for_each_subspace(g.p, r1, [&](const std::vector<std::vector<int>>& rows) {
    std::vector<std::uint32_t> gens(pg_gens);
    for (const auto& row : rows) {
      std::uint32_t lift = 0;
      for (int j = 0; j < r1; ++j)
        lift = A.add(lift, A.scalar((std::uint64_t)row[j], A.generator(j)));
      gens.push_back(lift);
    }
    Signature sh = A.subgroup_signature(A.span(gens));
    long corank = r1 - (long)rows.size();  // G/H is (Z/p)^corank
    Int mu = pow_ui(g.p, (unsigned long)(corank * (corank - 1) / 2));
    if (corank % 2 != 0) mu = -mu;
    f.add_term(sh.ranks, Rational(mu));
  });

  check(f == f_polynomial_factorized(g),
        "f_G from subgroup enumeration disagrees with the factorized form");
  return f;
}

Int aut_order(const GroupDesc& g) {
  if (g.trivial()) return 1;
  std::vector<Int> xg;
  for (int r : signature(g).ranks) xg.push_back(pow_ui(g.p, (unsigned long)r));
  Rational a = f_polynomial_factorized(g).evaluate(xg);
  check(a.get_den() == 1 && a > 0, "|Aut(G)| must be a positive integer");
  return a.get_num();
}

CountsReport counts(const std::vector<Int>& x, const GroupDesc& g) {
  // validate: p-powers with weakly decreasing exponents
  long prev_log = -1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Int v = x[i];
    long lg = 0;
    while (v > 1) {
      if (v % (long)g.p != 0)
        fail(ErrorCode::InvalidIndexVector, "index vector entries must be powers of p");
      v /= (long)g.p;
      ++lg;
    }
    if (v != 1) fail(ErrorCode::InvalidIndexVector, "index vector entries must be positive");
    if (prev_log >= 0 && lg > prev_log)
      fail(ErrorCode::InvalidIndexVector, "index vector must be weakly decreasing");
    prev_log = lg;
  }

  Signature sig = signature(g);
  std::vector<Int> xx(x);
  while ((int)xx.size() < sig.length()) xx.push_back(1);

  CountsReport rep;
  rep.eta = 1;
  for (int i = 1; i <= sig.length(); ++i)
    rep.eta *= pow_int(xx[i - 1], (unsigned long)sig.rank(i));

  Rational eps = f_polynomial(g).evaluate(xx);
  check(eps.get_den() == 1, "epimorphism count must be an integer");
  rep.eps = eps.get_num();

  Int aut = aut_order(g);
  check(rep.eps % aut == 0, "kappa must be an integer (|Aut(G)| divides |Epi|)");
  rep.kappa = rep.eps / aut;
  return rep;
}

SignaturePoly e_polynomial(const GroupDesc& g) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "e(X) undefined for the trivial group");
  SignaturePoly e = f_polynomial(g).scale_vars({Int((long)g.p)});
  e /= Rational(aut_order(g));
  return e;
}

SignaturePoly global_weight_polynomial(const GroupDesc& g) {
  if (g.trivial()) fail(ErrorCode::TrivialGroup, "weights undefined for the trivial group");
  std::vector<Int> factors(signature(g).length(), Int((long)g.p));
  SignaturePoly w = f_polynomial(g).scale_vars(factors);
  w /= Rational(aut_order(g));
  return w;
}

Int brute_quotient_count(const ExplicitGroup& a, const GroupDesc& g) {
  if (a.desc().p != g.p)
    fail(ErrorCode::MismatchedCharacteristic, "A and G must share the prime p");
  Signature target = signature(g);
  Int count = 0;
  for (const auto& b : a.all_subgroups()) {
    // r_i(A/B) = log_p |p^{i-1}A + B| / |p^iA + B|
    Signature qsig;
    std::size_t prev_size = a.size();
    std::uint64_t pk = 1;
    while (prev_size > b.size()) {
      pk *= a.desc().p;
      std::vector<std::uint32_t> gens(b);
      for (std::size_t j = 0; j < a.desc().type.size(); ++j)
        gens.push_back(a.scalar(pk, a.generator(j)));
      std::size_t sz = a.span(gens).size();
      int r = 0;
      for (std::size_t ix = prev_size / sz; ix > 1; ix /= a.desc().p) ++r;
      qsig.ranks.push_back(r);
      prev_size = sz;
    }
    if (qsig == target) count += 1;
  }
  return count;
}

}  // namespace asw
