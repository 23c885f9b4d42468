#pragma once

#include <vector>

#include "pgroup.hpp"

namespace testutil {

// All weakly decreasing cyclic types with order_log <= max_log, exponent <=
// max_e and rank <= max_r, including the empty type.
inline std::vector<std::vector<int>> all_types(int max_log, int max_e, int max_r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int budget, int cap) -> void {
    out.push_back(cur);
    if ((int)cur.size() >= max_r) return;
    for (int e = std::min(cap, budget); e >= 1; --e) {
      cur.push_back(e);
      self(self, budget - e, e);
      cur.pop_back();
    }
  };
  rec(rec, max_log, max_e);
  return out;
}

inline std::vector<asw::GroupDesc> all_groups(unsigned p, int max_log, int max_e,
                                              int max_r) {
  std::vector<asw::GroupDesc> out;
  for (const auto& t : all_types(max_log, max_e, max_r))
    out.push_back(asw::make_group(p, t));
  return out;
}

}  // namespace testutil
