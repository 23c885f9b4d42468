#pragma once

#include <vector>

#include "pgroup.hpp"

namespace asw {

/// Truncated power series in t = q^{-s} with exact integer coefficients;
/// coefficient c_n counts conductors of degree n.
struct SeriesT {
  std::vector<Int> c;  // c[0..N]

  int trunc() const { return (int)c.size() - 1; }

  bool operator==(const SeriesT&) const = default;
};

inline SeriesT mul_trunc(const SeriesT& a, const SeriesT& b, int n) {
  SeriesT r;
  r.c.assign(n + 1, 0);
  for (int i = 0; i <= std::min(n, a.trunc()); ++i) {
    if (a.c[i] == 0) continue;
    int jmax = std::min(n - i, b.trunc());
    for (int j = 0; j <= jmax; ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

inline SeriesT pow_trunc(const SeriesT& a, unsigned long e, int n) {
  SeriesT r;
  r.c.assign(n + 1, 0);
  r.c[0] = 1;
  SeriesT base = a;
  base.c.resize(n + 1);
  while (e > 0) {
    if (e & 1) r = mul_trunc(r, base, n);
    e >>= 1;
    if (e > 0) base = mul_trunc(base, base, n);
  }
  return r;
}

}  // namespace asw
