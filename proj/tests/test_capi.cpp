#include <doctest.h>

#include <json.hpp>

#include <string>

#include "aswdist.h"

using json = nlohmann::json;

namespace {

struct Json {
  asw_status st;
  json doc;
};

template <typename Fn>
Json call(Fn&& fn) {
  char* out = nullptr;
  asw_status st = fn(&out);
  REQUIRE(out != nullptr);
  json doc = json::parse(out);
  asw_string_free(out);
  return {st, doc};
}

}  // namespace

TEST_CASE("group lifecycle and errors") {
  asw_group* g = nullptr;
  CHECK(asw_group_new(4, nullptr, 0, &g) == ASW_ERR_NON_PRIME);
  CHECK(g == nullptr);
  int bad = 0;
  CHECK(asw_group_new(2, &bad, 1, &g) == ASW_ERR_NON_POSITIVE_EXPONENT);
  int type[] = {1, 2};
  REQUIRE(asw_group_new(2, type, 2, &g) == ASW_OK);
  auto r = call([&](char** o) { return asw_group_invariants(g, o); });
  CHECK(r.st == ASW_OK);
  CHECK(r.doc["type"] == json::array({2, 1}));
  CHECK(r.doc["alpha"] == "3/2");
  CHECK(r.doc["beta"] == "2");
  CHECK(r.doc["order"] == "8");
  asw_group_free(g);
  CHECK(std::string(asw_status_name(ASW_ERR_RESOURCE_LIMIT)) == "resource_limit");
}

TEST_CASE("delsarte and series reports") {
  int type[] = {1};
  asw_group* g = nullptr;
  REQUIRE(asw_group_new(2, type, 1, &g) == ASW_OK);
  auto d = call([&](char** o) { return asw_delsarte(g, "2,2", o); });
  CHECK(d.st == ASW_OK);
  CHECK(d.doc["aut_order"] == "1");
  CHECK(d.doc["counts"]["kappa"] == "1");
  auto s = call([&](char** o) { return asw_global_series(g, 2, 4, o); });
  CHECK(s.st == ASW_OK);
  CHECK(s.doc["coefficients"] ==
        json::array({"1", "0", "6", "0", "24"}));
  CHECK(s.doc["counting_function"][4] == "31");
  auto bad = call([&](char** o) { return asw_global_series(g, 3, 4, o); });
  CHECK(bad.st == ASW_ERR_MISMATCHED_CHARACTERISTIC);
  CHECK(bad.doc.contains("error"));
  auto lf = call([&](char** o) { return asw_local_factor(g, 8, o); });
  CHECK(lf.st == ASW_OK);
  CHECK(lf.doc["identity_ok"] == true);
  asw_group_free(g);
}

TEST_CASE("oracle and compare reports") {
  auto u = call([&](char** o) { return asw_oracle_unit(2, "T", 5, o); });
  CHECK(u.st == ASW_OK);
  CHECK(u.doc["signature"] == json::array({2, 1, 1}));
  CHECK(u.doc["hasse_ok"] == true);

  auto c = call([&](char** o) { return asw_oracle_asw_count(2, "T:4", o); });
  CHECK(c.st == ASW_OK);
  CHECK(c.doc["count"] == "4");
  auto c2 = call(
      [&](char** o) { return asw_oracle_asw_count(2, "T:2;inf:2", o); });
  CHECK(c2.st == ASW_OK);
  CHECK(c2.doc["degree"] == 4);

  int type[] = {1};
  asw_group* g = nullptr;
  REQUIRE(asw_group_new(2, type, 1, &g) == ASW_OK);
  int equal = 0;
  auto cmp = call([&](char** o) { return asw_compare(g, 2, 6, &equal, o); });
  CHECK(cmp.st == ASW_OK);
  CHECK(equal == 1);
  CHECK(cmp.doc["all_equal"] == true);
  CHECK(cmp.doc["rows"][6]["verdict"] == "equal");
  asw_group_free(g);
}

TEST_CASE("bounds reports") {
  int type[] = {2};
  asw_group* g = nullptr;
  REQUIRE(asw_group_new(2, type, 1, &g) == ASW_OK);
  auto b = call([&](char** o) { return asw_bounds_disc(g, 3, o); });
  CHECK(b.st == ASW_OK);
  CHECK(b.doc["bound"] == "8");
  int degs[] = {1};
  int exps[] = {3};
  auto n = call([&](char** o) { return asw_bounds_norm(g, degs, exps, 1, o); });
  CHECK(n.st == ASW_OK);
  CHECK(n.doc["bound"] == "8");
  auto s = call([&](char** o) { return asw_bounds_summary(g, o); });
  CHECK(s.st == ASW_OK);
  CHECK(s.doc["lower"] == "2/7");
  CHECK(s.doc["conjecture"] == "2/5");
  CHECK(s.doc["upper"] == "1/2");
  auto z = call([&](char** o) { return asw_bounds_zseries(2, 2, 4, o); });
  CHECK(z.st == ASW_OK);
  CHECK(z.doc["coefficients"][4] == "24");
  asw_group_free(g);
}
