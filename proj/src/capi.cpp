#include "aswdist.h"

#include <json.hpp>

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "bounds.hpp"
#include "delsarte.hpp"
#include "errors.hpp"
#include "euler_engine.hpp"
#include "field_model.hpp"
#include "oracles.hpp"
#include "pgroup.hpp"

using json = nlohmann::ordered_json;

struct asw_group {
  asw::GroupDesc desc;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

asw_status status_of(asw::ErrorCode c) {
  switch (c) {
    case asw::ErrorCode::InvalidArgument: return ASW_ERR_INVALID_ARGUMENT;
    case asw::ErrorCode::NonPrime: return ASW_ERR_NON_PRIME;
    case asw::ErrorCode::NonPositiveExponent: return ASW_ERR_NON_POSITIVE_EXPONENT;
    case asw::ErrorCode::TrivialGroup: return ASW_ERR_TRIVIAL_GROUP;
    case asw::ErrorCode::OutOfRange: return ASW_ERR_OUT_OF_RANGE;
    case asw::ErrorCode::NotIntermediate: return ASW_ERR_NOT_INTERMEDIATE;
    case asw::ErrorCode::NotProper: return ASW_ERR_NOT_PROPER;
    case asw::ErrorCode::InvalidIndexVector: return ASW_ERR_INVALID_INDEX_VECTOR;
    case asw::ErrorCode::ResourceLimit: return ASW_ERR_RESOURCE_LIMIT;
    case asw::ErrorCode::MismatchedCharacteristic: return ASW_ERR_MISMATCHED_CHARACTERISTIC;
    case asw::ErrorCode::TruncationTooSmall: return ASW_ERR_TRUNCATION_TOO_SMALL;
    case asw::ErrorCode::TruncationTooLarge: return ASW_ERR_TRUNCATION_TOO_LARGE;
    case asw::ErrorCode::NonSquarefulConductor: return ASW_ERR_NON_SQUAREFUL_CONDUCTOR;
    case asw::ErrorCode::InsufficientData: return ASW_ERR_INSUFFICIENT_DATA;
    case asw::ErrorCode::InternalCheckFailed: return ASW_ERR_INTERNAL_CHECK_FAILED;
  }
  return ASW_ERR_UNKNOWN;
}

std::string rat_str(const asw::Rational& r) {
  asw::Rational c = r;
  c.canonicalize();
  return c.get_str();
}

json series_json(const asw::SeriesT& s) {
  json a = json::array();
  for (const asw::Int& c : s.c) a.push_back(c.get_str());
  return a;
}

json qhat_series_json(const asw::SeriesUQ& s) {
  json a = json::array();
  for (const asw::QhatPoly& c : s.coeff) {
    json p = json::array();
    for (const asw::Int& v : c) p.push_back(v.get_str());
    a.push_back(p);
  }
  return a;
}

json sigpoly_json(const asw::SignaturePoly& p) {
  json a = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    json t;
    t["monomial"] = mono;
    t["coeff"] = rat_str(coeff);
    a.push_back(t);
  }
  return a;
}

json group_json(const asw::GroupDesc& g) {
  json j;
  j["p"] = g.p;
  j["type"] = g.type;
  return j;
}

// Runs fn() -> json, serializes it (or a JSON error object) into *out_json.
template <typename Fn>
asw_status run_report(char** out_json, Fn&& fn) {
  if (!out_json) return ASW_ERR_INVALID_ARGUMENT;
  *out_json = nullptr;
  asw_status st = ASW_OK;
  json doc;
  try {
    doc = fn();
  } catch (const asw::Error& e) {
    st = status_of(e.code());
    doc = {{"error", asw_status_name(st)}, {"message", e.what()}};
  } catch (const std::exception& e) {
    st = ASW_ERR_UNKNOWN;
    doc = {{"error", asw_status_name(st)}, {"message", e.what()}};
  }
  *out_json = dup_string(doc.dump(2));
  return *out_json ? st : ASW_ERR_UNKNOWN;
}

const asw::GroupDesc& need_group(const asw_group* g) {
  if (!g) asw::fail(asw::ErrorCode::InvalidArgument, "null group handle");
  return g->desc;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

asw::DivisorDesc parse_divisor(unsigned q, const char* text) {
  if (!text) asw::fail(asw::ErrorCode::InvalidArgument, "null divisor string");
  asw::Fq F(q);
  std::vector<std::pair<asw::PlaceDesc, int>> entries;
  for (const std::string& part : split(text, ';')) {
    if (part.empty()) continue;
    auto colon = part.rfind(':');
    if (colon == std::string::npos)
      asw::fail(asw::ErrorCode::InvalidArgument, "divisor entries are place:exp");
    std::string place = part.substr(0, colon);
    int exp = 0;
    try {
      exp = std::stoi(part.substr(colon + 1));
    } catch (const std::exception&) {
      asw::fail(asw::ErrorCode::InvalidArgument, "bad divisor exponent");
    }
    asw::PlaceDesc v;
    if (place == "inf") {
      v.infinite = true;
    } else {
      v.pi = asw::poly_parse(F, place);
    }
    entries.emplace_back(v, exp);
  }
  return asw::make_divisor(std::move(entries));
}

}  // namespace

extern "C" {

const char* asw_status_name(asw_status s) {
  switch (s) {
    case ASW_OK: return "ok";
    case ASW_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ASW_ERR_NON_PRIME: return "non_prime";
    case ASW_ERR_NON_POSITIVE_EXPONENT: return "non_positive_exponent";
    case ASW_ERR_TRIVIAL_GROUP: return "trivial_group";
    case ASW_ERR_OUT_OF_RANGE: return "out_of_range";
    case ASW_ERR_NOT_INTERMEDIATE: return "not_intermediate";
    case ASW_ERR_NOT_PROPER: return "not_proper";
    case ASW_ERR_INVALID_INDEX_VECTOR: return "invalid_index_vector";
    case ASW_ERR_RESOURCE_LIMIT: return "resource_limit";
    case ASW_ERR_MISMATCHED_CHARACTERISTIC: return "mismatched_characteristic";
    case ASW_ERR_TRUNCATION_TOO_SMALL: return "truncation_too_small";
    case ASW_ERR_TRUNCATION_TOO_LARGE: return "truncation_too_large";
    case ASW_ERR_NON_SQUAREFUL_CONDUCTOR: return "non_squareful_conductor";
    case ASW_ERR_INSUFFICIENT_DATA: return "insufficient_data";
    case ASW_ERR_INTERNAL_CHECK_FAILED: return "internal_check_failed";
    case ASW_ERR_UNKNOWN: break;
  }
  return "unknown";
}

asw_status asw_group_new(unsigned p, const int* type, size_t type_len,
                         asw_group** out) {
  if (!out) return ASW_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  try {
    std::vector<int> t(type, type + type_len);
    *out = new asw_group{asw::make_group(p, std::move(t))};
    return ASW_OK;
  } catch (const asw::Error& e) {
    return status_of(e.code());
  } catch (const std::exception&) {
    return ASW_ERR_UNKNOWN;
  }
}

void asw_group_free(asw_group* g) { delete g; }

asw_status asw_group_invariants(const asw_group* g, char** out_json) {
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    asw::InvariantReport inv = asw::invariants(desc);
    json j = group_json(desc);
    j["order"] = desc.order().get_str();
    j["signature"] = asw::signature(desc).ranks;
    j["e"] = inv.e;
    j["f"] = inv.f;
    j["alpha"] = rat_str(inv.alpha);
    j["beta"] = inv.beta.get_str();
    j["m_tilde"] = rat_str(inv.m_tilde);
    j["a_p"] = rat_str(inv.a_p);
    j["d_p"] = rat_str(inv.d_p);
    j["delta"] = rat_str(inv.delta);
    j["local_disc_exp"] = rat_str(inv.local_disc_exp);
    return j;
  });
}

asw_status asw_delsarte(const asw_group* g, const char* index_csv,
                        char** out_json) {
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    json j = group_json(desc);
    j["f_polynomial"] = sigpoly_json(asw::f_polynomial(desc));
    j["e_polynomial"] = sigpoly_json(asw::e_polynomial(desc));
    j["aut_order"] = asw::aut_order(desc).get_str();
    if (index_csv) {
      std::vector<asw::Int> x;
      for (const std::string& part : split(index_csv, ','))
        x.emplace_back(part);
      asw::CountsReport c = asw::counts(x, desc);
      json cj;
      cj["hom"] = c.eta.get_str();
      cj["epi"] = c.eps.get_str();
      cj["kappa"] = c.kappa.get_str();
      j["counts"] = cj;
    }
    return j;
  });
}

asw_status asw_local_factor(const asw_group* g, int trunc, char** out_json) {
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    asw::LocalFactor lf = asw::local_factor(asw::signature(desc), desc.p, trunc);
    json j = group_json(desc);
    j["trunc"] = trunc;
    j["phi"] = qhat_series_json(lf.phi);
    j["lambda"] = qhat_series_json(lf.lambda);
    j["psi"] = qhat_series_json(lf.psi);
    j["identity_ok"] = lf.identity_ok;
    return j;
  });
}

asw_status asw_global_series(const asw_group* g, unsigned q, int trunc,
                             char** out_json) {
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    asw::SeriesT s = asw::global_series(q, desc, trunc);
    json j = group_json(desc);
    j["q"] = q;
    j["trunc"] = trunc;
    j["coefficients"] = series_json(s);
    json counts = json::array();
    for (int n = 0; n <= trunc; ++n)
      counts.push_back(asw::count_function(s, n).get_str());
    j["counting_function"] = counts;
    return j;
  });
}

asw_status asw_diagnose(const asw_group* g, unsigned q, int trunc,
                        char** out_json) {
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    asw::DiagnosticReport rep = asw::asymptotic_diagnostic(q, desc, trunc);
    json j = group_json(desc);
    j["q"] = q;
    j["trunc"] = trunc;
    j["period"] = rep.period;
    j["alpha"] = rat_str(rep.alpha);
    j["beta"] = rep.beta.get_str();
    json rows = json::array();
    for (const asw::DiagnosticRow& r : rep.rows) {
      json rj;
      rj["residue"] = r.residue;
      rj["n"] = r.ns;
      json counts = json::array();
      for (const asw::Int& c : r.counts) counts.push_back(c.get_str());
      rj["counts"] = counts;
      rj["rho"] = r.rho;
      rj["plain_ratio"] = r.plain_ratio;
      rj["window_prev"] = r.window_prev;
      rj["window_last"] = r.window_last;
      rj["rel_change"] = r.rel_change;
      rj["plain_ratio_nondecreasing"] = r.plain_ratio_nondecreasing;
      rows.push_back(rj);
    }
    j["rows"] = rows;
    return j;
  });
}

asw_status asw_bounds_disc(const asw_group* g, long f_exp, char** out_json) {
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    json j = group_json(desc);
    j["f_exp"] = f_exp;
    j["bound"] = asw::disc_exponent_bound(desc, f_exp).get_str();
    return j;
  });
}

asw_status asw_bounds_norm(const asw_group* g, const int* degs,
                           const int* exps, size_t len, char** out_json) {
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    if (len > 0 && (!degs || !exps))
      asw::fail(asw::ErrorCode::InvalidArgument, "null conductor arrays");
    std::vector<std::pair<int, int>> cond;
    for (size_t i = 0; i < len; ++i) cond.emplace_back(degs[i], exps[i]);
    json j = group_json(desc);
    json cj = json::array();
    for (const auto& [d, e] : cond) cj.push_back({{"deg", d}, {"exp", e}});
    j["conductor"] = cj;
    j["bound"] = asw::disc_norm_bound_deg(desc, cond).get_str();
    return j;
  });
}

asw_status asw_bounds_summary(const asw_group* g, char** out_json) {
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    asw::ExponentSummary s = asw::exponent_summary(desc);
    json j = group_json(desc);
    j["lower"] = rat_str(s.lower);
    j["conjecture"] = rat_str(s.conjecture);
    j["upper"] = rat_str(s.upper);
    return j;
  });
}

asw_status asw_bounds_zseries(unsigned q, unsigned p, int trunc,
                              char** out_json) {
  return run_report(out_json, [&] {
    asw::SeriesT s = asw::z_series_cyclic_p(q, p, trunc);
    json j;
    j["q"] = q;
    j["p"] = p;
    j["trunc"] = trunc;
    j["coefficients"] = series_json(s);
    return j;
  });
}

asw_status asw_oracle_unit(unsigned q, const char* pi, int m, char** out_json) {
  return run_report(out_json, [&] {
    if (!pi) asw::fail(asw::ErrorCode::InvalidArgument, "null place string");
    asw::Fq F(q);
    asw::Poly place = asw::poly_parse(F, pi);
    asw::OneUnitReport rep = asw::one_unit_group(q, place, m);
    json j;
    j["q"] = q;
    j["pi"] = asw::poly_to_string(place);
    j["m"] = m;
    j["order"] = rep.order.get_str();
    json idx = json::array();
    for (const asw::Int& i : rep.indices) idx.push_back(i.get_str());
    j["indices"] = idx;
    j["signature"] = rep.sig.ranks;
    j["hasse_ok"] = rep.hasse_ok;
    return j;
  });
}

asw_status asw_oracle_asw_count(unsigned p, const char* divisor,
                                char** out_json) {
  return run_report(out_json, [&] {
    asw::DivisorDesc m = parse_divisor(p, divisor);
    json j;
    j["p"] = p;
    json dj = json::array();
    for (const auto& [v, e] : m.entries)
      dj.push_back({{"place", v.infinite ? "inf" : asw::poly_to_string(v.pi)},
                    {"exp", e}});
    j["divisor"] = dj;
    j["degree"] = m.degree();
    j["count"] = asw::asw_count(p, m).get_str();
    return j;
  });
}

asw_status asw_oracle_asw_counting(unsigned p, int n, int rank,
                                   char** out_json) {
  return run_report(out_json, [&] {
    json j;
    j["p"] = p;
    j["n"] = n;
    j["rank"] = rank;
    j["count"] = asw::asw_counting_function(p, n, rank).get_str();
    return j;
  });
}

asw_status asw_compare(const asw_group* g, unsigned q, int trunc,
                       int* out_equal, char** out_json) {
  if (out_equal) *out_equal = 0;
  return run_report(out_json, [&] {
    const asw::GroupDesc& desc = need_group(g);
    for (int e : desc.type)
      if (e != 1)
        asw::fail(asw::ErrorCode::InvalidArgument,
                  "compare supports elementary abelian groups only");
    int rank = (int)desc.type.size();
    if (rank < 1 || rank > 2)
      asw::fail(asw::ErrorCode::InvalidArgument, "compare supports rank 1 or 2");
    if (q != desc.p)
      asw::fail(asw::ErrorCode::MismatchedCharacteristic,
                "the oracle requires q = p");

    asw::SeriesT s = asw::global_series(q, desc, trunc);
    json rows = json::array();
    bool all_equal = true;
    for (int n = 0; n <= trunc; ++n) {
      asw::Int engine = asw::count_function(s, n);
      asw::Int oracle = asw::asw_counting_function(desc.p, n, rank);
      bool eq = engine == oracle;
      all_equal = all_equal && eq;
      rows.push_back({{"n", n},
                      {"engine", engine.get_str()},
                      {"oracle", oracle.get_str()},
                      {"verdict", eq ? "equal" : "mismatch"}});
    }
    if (out_equal) *out_equal = all_equal ? 1 : 0;
    json j = group_json(desc);
    j["q"] = q;
    j["trunc"] = trunc;
    j["rows"] = rows;
    j["all_equal"] = all_equal;
    return j;
  });
}

void asw_string_free(char* s) { std::free(s); }

}  // extern "C"
