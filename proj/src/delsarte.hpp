#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pgroup.hpp"

namespace asw {

/// Multivariate polynomial in X_1..X_e with exact rational coefficients,
/// monomials indexed by signatures (exponent vectors, trailing zeros trimmed).
class SignaturePoly {
 public:
  using Monomial = std::vector<int>;

  void add_term(Monomial m, const Rational& c);
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Rational evaluate(const std::vector<Int>& x) const;

  /// Substitute X_i -> factor_i * X_i (factor 1 beyond the given length).
  SignaturePoly scale_vars(const std::vector<Int>& factors) const;

  SignaturePoly operator*(const SignaturePoly& o) const;
  SignaturePoly& operator/=(const Rational& d);

  bool operator==(const SignaturePoly&) const = default;

 private:
  std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

/// A finite abelian p-group with its elements realized as exponent tuples;
/// substrate for the brute-force subgroup oracles.
class ExplicitGroup {
 public:
  explicit ExplicitGroup(GroupDesc desc, std::uint64_t max_order = 1u << 12);

  const GroupDesc& desc() const { return desc_; }
  std::uint32_t size() const { return n_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t scalar(std::uint64_t k, std::uint32_t a) const;
  std::uint32_t generator(std::size_t j) const;  // unit vector in coordinate j

  /// Signature of the subgroup given by its full element list.
  Signature subgroup_signature(const std::vector<std::uint32_t>& elements) const;

  /// Closure of `base` (a subgroup element list) and one extra element.
  std::vector<std::uint32_t> extend_subgroup(const std::vector<std::uint32_t>& base,
                                             std::uint32_t extra) const;

  /// Closure of an arbitrary generating set.
  std::vector<std::uint32_t> span(const std::vector<std::uint32_t>& gens) const;

  /// All subgroups, each as a sorted element list (closure-based lattice walk).
  std::vector<std::vector<std::uint32_t>> all_subgroups() const;

  /// Index vector x_i(A) = [p^{i-1}A : p^iA] for i = 1..exponent.
  std::vector<Int> index_vector() const;

 private:
  GroupDesc desc_;
  std::vector<std::uint32_t> moduli_;  // p^{e_j}
  std::uint32_t n_ = 1;
};

/// Delsarte-Moebius function: (-1)^r p^{r(r-1)/2} on (Z/p)^r, else 0.
Int mu_delsarte(const GroupDesc& a);

struct FPolynomialOptions {
  std::uint64_t max_order = 1u << 12;
};

/// f_G(X) = sum_{pG <= H <= G} mu(G/H) X^{r(H)}, by enumerating the subgroups
/// H as subspaces of G/pG; cross-checked against Delsarte's factorized form.
SignaturePoly f_polynomial(const GroupDesc& g, const FPolynomialOptions& opt = {});

/// Expanded factorized form prod_i X_i^{r_{i+1}} prod_{j=r_{i+1}}^{r_i-1} (X_i - p^j).
SignaturePoly f_polynomial_factorized(const GroupDesc& g);

Int aut_order(const GroupDesc& g);

struct CountsReport {
  Int eta;    // |Hom(A,G)|
  Int eps;    // |Epi(A,G)|
  Int kappa;  // #subgroups of A with quotient G
};

/// eta/eps/kappa at an index vector x_i = [p^{i-1}A : p^iA] (entries beyond
/// the given length are implicitly 1).
CountsReport counts(const std::vector<Int>& x, const GroupDesc& g);

/// e(X) = f_G((p^{delta_{i,1}} X_i)_i) / |Aut(G)|.
SignaturePoly e_polynomial(const GroupDesc& g);

/// Weight polynomial for the genus-0 global series: f_G((p X_i)_i) / |Aut(G)|,
/// i.e. e(X) with each monomial additionally weighted by |pH|.
SignaturePoly global_weight_polynomial(const GroupDesc& g);

/// Number of subgroups B of A with A/B isomorphic to G, by brute force.
Int brute_quotient_count(const ExplicitGroup& a, const GroupDesc& g);

}  // namespace asw
