// Command-line front end; all computation goes through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "aswdist.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputeError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerificationFailure = 3;

struct GroupHandle {
  asw_group* g = nullptr;
  ~GroupHandle() { asw_group_free(g); }
};

std::vector<int> parse_type(const std::string& csv) {
  std::vector<int> type;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) type.push_back(std::stoi(part));
  return type;
}

std::string cell_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) {
      if (!s.empty()) s += ' ';
      s += cell_of(e);
    }
    return s;
  }
  return v.dump();
}

// CSV rendering: a "rows" array becomes a table; a coefficient list becomes
// (n, c_n[, C_n]) rows; anything else becomes key,value lines.
void print_csv(const json& doc) {
  if (doc.contains("rows") && doc["rows"].is_array() && !doc["rows"].empty()) {
    const json& rows = doc["rows"];
    std::string header;
    for (const auto& [k, v] : rows.front().items()) {
      (void)v;
      if (!header.empty()) header += ',';
      header += k;
    }
    std::printf("%s\n", header.c_str());
    for (const auto& row : rows) {
      std::string line;
      for (const auto& [k, v] : row.items()) {
        (void)k;
        if (!line.empty()) line += ',';
        line += cell_of(v);
      }
      std::printf("%s\n", line.c_str());
    }
    return;
  }
  if (doc.contains("coefficients")) {
    bool with_counts = doc.contains("counting_function");
    std::printf("n,coefficient%s\n", with_counts ? ",counting_function" : "");
    const json& c = doc["coefficients"];
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (with_counts)
        std::printf("%zu,%s,%s\n", n, cell_of(c[n]).c_str(),
                    cell_of(doc["counting_function"][n]).c_str());
      else
        std::printf("%zu,%s\n", n, cell_of(c[n]).c_str());
    }
    return;
  }
  std::printf("key,value\n");
  for (const auto& [k, v] : doc.items())
    std::printf("%s,%s\n", k.c_str(), cell_of(v).c_str());
}

// Prints the report (stdout on success, stderr on error) and returns the
// process exit code; `verify_key`, when set, downgrades a false boolean in
// the report to the verification-failure exit code.
int finish(asw_status st, char** out_ptr, const std::string& format,
           const char* verify_key = nullptr) {
  char* out = *out_ptr;
  std::unique_ptr<char, decltype(&asw_string_free)> guard(out, asw_string_free);
  if (st != ASW_OK) {
    std::fprintf(stderr, "%s\n", out ? out : asw_status_name(st));
    return kExitComputeError;
  }
  json doc = json::parse(out);
  if (format == "csv")
    print_csv(doc);
  else
    std::printf("%s\n", doc.dump(2).c_str());
  if (verify_key && doc.contains(verify_key) && doc[verify_key].is_boolean() &&
      !doc[verify_key].get<bool>())
    return kExitVerificationFailure;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conductor statistics of abelian p-extensions of F_q(T)"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  unsigned p = 2, q = 2;
  std::string group_csv, index_csv, pi_str = "T", divisor_str;
  int trunc = 16, m = 2, n = 4, rank = 1;
  long f_exp = 0;
  std::string conductor_csv;

  auto add_group_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "Group prime")->required();
    cmd->add_option("--group", group_csv,
                    "Cyclic type e1,e2,... (weakly decreasing)")
        ->required();
  };

  CLI::App* c_group = app.add_subcommand("group", "Group invariants");
  add_group_flags(c_group);

  CLI::App* c_delsarte = app.add_subcommand("delsarte", "Subgroup counting data");
  add_group_flags(c_delsarte);
  c_delsarte->add_option("--index", index_csv,
                         "Index vector x1,x2,... for hom/epi/kappa counts");

  CLI::App* c_local = app.add_subcommand("local-factor", "Local Euler factor");
  add_group_flags(c_local);
  c_local->add_option("--trunc", trunc, "Truncation order in u");

  CLI::App* c_series = app.add_subcommand("series", "Global conductor series");
  add_group_flags(c_series);
  c_series->add_option("--q", q, "Constant field size")->required();
  c_series->add_option("--trunc", trunc, "Truncation degree");

  CLI::App* c_diag = app.add_subcommand("diagnose", "Asymptotic diagnostic");
  add_group_flags(c_diag);
  c_diag->add_option("--q", q, "Constant field size")->required();
  c_diag->add_option("--trunc", trunc, "Truncation degree");

  CLI::App* c_oracle = app.add_subcommand("oracle", "Brute-force oracles");
  c_oracle->require_subcommand(1);
  CLI::App* c_unit = c_oracle->add_subcommand("unit", "One-unit group structure");
  c_unit->add_option("--q", q, "Constant field size")->required();
  c_unit->add_option("--pi", pi_str, "Monic irreducible place polynomial")
      ->capture_default_str();
  c_unit->add_option("--m", m, "Modulus exponent")->required();
  CLI::App* c_asw = c_oracle->add_subcommand("asw", "Artin-Schreier enumeration");
  c_asw->add_option("--p", p, "Characteristic (= q)")->required();
  c_asw->add_option("--divisor", divisor_str,
                    "Conductor divisor place:exp;place:exp (place 'inf' allowed)");
  c_asw->add_option("--n", n, "Degree bound for the counting function");
  c_asw->add_option("--rank", rank, "1 for Z/p, 2 for (Z/p)^2");

  CLI::App* c_bounds = app.add_subcommand("bounds", "Discriminant bounds");
  c_bounds->require_subcommand(1);
  CLI::App* c_disc = c_bounds->add_subcommand("disc", "Local exponent bound");
  add_group_flags(c_disc);
  c_disc->add_option("--f-exp", f_exp, "Conductor exponent")->required();
  CLI::App* c_norm = c_bounds->add_subcommand("norm", "Degree norm bound");
  add_group_flags(c_norm);
  c_norm->add_option("--conductor", conductor_csv,
                     "Conductor as deg:exp,deg:exp,...")
      ->required();
  CLI::App* c_summary = c_bounds->add_subcommand("summary", "X-exponent summary");
  add_group_flags(c_summary);
  CLI::App* c_zseries =
      c_bounds->add_subcommand("zseries", "Discriminant series for Z/p");
  c_zseries->add_option("--q", q, "Constant field size")->required();
  c_zseries->add_option("--p", p, "Prime")->required();
  c_zseries->add_option("--trunc", trunc, "Truncation degree");

  CLI::App* c_compare = app.add_subcommand("compare", "Engine vs oracle table");
  add_group_flags(c_compare);
  c_compare->add_option("--q", q, "Constant field size (= p)")->required();
  c_compare->add_option("--trunc", trunc, "Degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  GroupHandle gh;
  auto make_group = [&]() -> int {
    std::vector<int> type;
    try {
      type = parse_type(group_csv);
    } catch (const std::exception&) {
      std::fprintf(stderr, "bad --group value\n");
      return kExitUsage;
    }
    asw_status st = asw_group_new(p, type.data(), type.size(), &gh.g);
    if (st != ASW_OK) {
      std::fprintf(stderr, "bad group: %s\n", asw_status_name(st));
      return kExitUsage;
    }
    return kExitOk;
  };

  char* out = nullptr;
  if (c_group->parsed()) {
    if (int rc = make_group()) return rc;
    return finish(asw_group_invariants(gh.g, &out), &out, format);
  }
  if (c_delsarte->parsed()) {
    if (int rc = make_group()) return rc;
    return finish(
        asw_delsarte(gh.g, index_csv.empty() ? nullptr : index_csv.c_str(), &out),
        &out, format);
  }
  if (c_local->parsed()) {
    if (int rc = make_group()) return rc;
    return finish(asw_local_factor(gh.g, trunc, &out), &out, format, "identity_ok");
  }
  if (c_series->parsed()) {
    if (int rc = make_group()) return rc;
    return finish(asw_global_series(gh.g, q, trunc, &out), &out, format);
  }
  if (c_diag->parsed()) {
    if (int rc = make_group()) return rc;
    return finish(asw_diagnose(gh.g, q, trunc, &out), &out, format);
  }
  if (c_unit->parsed())
    return finish(asw_oracle_unit(q, pi_str.c_str(), m, &out), &out, format,
                  "hasse_ok");
  if (c_asw->parsed()) {
    if (c_asw->count("--divisor"))
      return finish(asw_oracle_asw_count(p, divisor_str.c_str(), &out), &out,
                    format);
    return finish(asw_oracle_asw_counting(p, n, rank, &out), &out, format);
  }
  if (c_disc->parsed()) {
    if (int rc = make_group()) return rc;
    return finish(asw_bounds_disc(gh.g, f_exp, &out), &out, format);
  }
  if (c_norm->parsed()) {
    if (int rc = make_group()) return rc;
    std::vector<int> degs, exps;
    std::stringstream ss(conductor_csv);
    std::string part;
    while (std::getline(ss, part, ',')) {
      auto colon = part.find(':');
      if (colon == std::string::npos) {
        std::fprintf(stderr, "bad --conductor value\n");
        return kExitUsage;
      }
      try {
        degs.push_back(std::stoi(part.substr(0, colon)));
        exps.push_back(std::stoi(part.substr(colon + 1)));
      } catch (const std::exception&) {
        std::fprintf(stderr, "bad --conductor value\n");
        return kExitUsage;
      }
    }
    return finish(
        asw_bounds_norm(gh.g, degs.data(), exps.data(), degs.size(), &out), &out,
        format);
  }
  if (c_summary->parsed()) {
    if (int rc = make_group()) return rc;
    return finish(asw_bounds_summary(gh.g, &out), &out, format);
  }
  if (c_zseries->parsed())
    return finish(asw_bounds_zseries(q, p, trunc, &out), &out, format);
  if (c_compare->parsed()) {
    if (int rc = make_group()) return rc;
    int equal = 0;
    int rc = finish(asw_compare(gh.g, q, trunc, &equal, &out), &out, format);
    if (rc == kExitOk && !equal) return kExitVerificationFailure;
    return rc;
  }
  return kExitUsage;
}
