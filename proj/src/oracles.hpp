#pragma once

#include <vector>

#include "field_model.hpp"
#include "pgroup.hpp"

namespace asw {

struct OneUnitReport {
  Int order;                 // N(pi)^{m-1}
  std::vector<Int> indices;  // [U^{p^{i-1}} : U^{p^i}] until the chain hits 1
  Signature sig;             // r_i = log_p of the i-th index
  bool hasse_ok = false;     // indices match N(pi)^{w_i(m)}
};

/// Structure of the one-unit group (1 + pi R)/(1 + pi^m R) in R = F_q[T]/pi^m
/// by explicit element enumeration and p-th powering.
OneUnitReport one_unit_group(unsigned q, const Poly& pi, int m);

Signature one_unit_signature(unsigned q, const Poly& pi, int m);
bool hasse_check(unsigned q, const Poly& pi, int m);

/// Number of Z/p-extensions of F_p(T) with conductor exactly the given
/// divisor, by Artin-Schreier class-space dimensions and inclusion-exclusion
/// over the support.
Int asw_count(unsigned p, const DivisorDesc& m);

/// C(F_p(T), (Z/p)^rank; p^n): rank 1 sums asw_count over all effective
/// divisors of degree <= n; rank 2 (p = 2 only) counts 2-dimensional spaces
/// of Artin-Schreier classes by explicit reduced representatives.
Int asw_counting_function(unsigned p, int n, int rank);

/// All effective divisors of F_q(T) of degree <= max_degree whose exponents
/// are all >= min_exponent (places: the infinite one and monic irreducibles).
std::vector<DivisorDesc> effective_divisors(unsigned q, int max_degree,
                                            int min_exponent = 1);

}  // namespace asw
