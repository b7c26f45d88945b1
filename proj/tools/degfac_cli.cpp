// Command-line front end: factor, divides, pseudo-quotient, resultant, pit,
// verify. Exit codes: 0 success, 2 parse error, 3 resource budget exceeded,
// 4 verification failure.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "degfac/batch_eval.hpp"
#include "degfac/divres.hpp"
#include "degfac/engine.hpp"
#include "degfac/error.hpp"
#include "degfac/formula.hpp"
#include "degfac/poly_text.hpp"

#ifdef DEGFAC_HAVE_OPENMP
#include <omp.h>
#endif

using nlohmann::json;
using namespace degfac;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitResource = 3;
constexpr int kExitVerify = 4;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw df_error(errc::parse, "cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& s) {
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{';
  }
  return false;
}

// Reads a polynomial from text or, when the content is a formula document,
// expands the formula under the term budget.
SparsePoly load_poly(const std::string& path, const std::string& kind,
                     long term_budget) {
  std::string text = read_input(path);
  bool formula = kind == "formula" || (kind == "auto" && looks_like_json(text));
  if (formula) return expand(parse_formula(text), term_budget);
  return parse_poly(text);
}

int exit_code_for(const df_error& e) {
  switch (e.code()) {
    case errc::parse:
      return kExitParse;
    case errc::resource:
      return kExitResource;
    default:
      return 1;
  }
}

json factor_report_json(const FactorReport& rep, const std::string& mode, int degree) {
  json factors = json::array();
  for (const auto& e : rep.factors.entries)
    factors.push_back({{"poly", print_poly(e.poly)}, {"multiplicity", e.multiplicity}});
  return json{{"schema_version", 1},
              {"command", "factor"},
              {"degree", degree},
              {"mode", mode},
              {"factors", factors},
              {"complete_product", rep.complete_product},
              {"stats",
               {{"directions", rep.stats.directions},
                {"shifts", rep.stats.shifts},
                {"lifts", rep.stats.lifts},
                {"candidates", rep.stats.candidates},
                {"restarts", rep.stats.restarts}}}};
}

void emit(const json& j, const std::string& format) {
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // text rendering: one "key: value" line per top-level entry, stable order
  for (auto it = j.begin(); it != j.end(); ++it)
    std::cout << it.key() << ": " << it.value().dump() << "\n";
}

int cmd_factor(const std::string& input, const std::string& kind, int degree,
               std::string mode, long delta_budget, const std::string& format,
               bool randomized, long term_budget) {
  SparsePoly f = load_poly(input, kind, term_budget);
  EngineConfig cfg;
  cfg.d = degree;
  cfg.term_budget = term_budget;
  cfg.randomized = randomized;
  if (mode.empty()) {
    mode = f.arity() <= 3 ? "guaranteed" : "budgeted";
    if (mode == "budgeted")
      std::cerr << "note: defaulting to budgeted mode (delta budget " << delta_budget
                << ") for " << f.arity() << " variables; pass --mode guaranteed to override\n";
  }
  cfg.mode = mode == "guaranteed" ? SearchMode::guaranteed : SearchMode::budgeted;
  cfg.delta_budget = delta_budget;
  FactorReport rep = factor_low_degree(f, cfg);
  emit(factor_report_json(rep, mode, degree), format);
  return kExitOk;
}

int cmd_divides(const std::string& fpath, const std::string& gpath,
                const std::string& kind, const std::string& format, long term_budget) {
  SparsePoly f = load_poly(fpath, kind, term_budget);
  SparsePoly g = load_poly(gpath, kind, term_budget);
  if (g.is_zero()) throw df_error(errc::parse, "divides: divisor is zero");
  if (g.arity() < f.arity()) g = g.extend_arity(f.arity());
  if (f.arity() < g.arity()) f = f.extend_arity(g.arity());
  ExactPit pit;
  bool d = divides(f, g, pit);
  json out{{"schema_version", 1}, {"command", "divides"}, {"divides", d}};
  if (d && !f.is_zero()) {
    auto q = lex_divide(f, g);
    if (q) out["quotient"] = print_poly(*q);
  }
  emit(out, format);
  return kExitOk;
}

int cmd_pseudo_quotient(const std::string& fpath, const std::string& gpath,
                        const std::string& kind, const std::string& format,
                        long term_budget) {
  SparsePoly f = load_poly(fpath, kind, term_budget);
  SparsePoly g = load_poly(gpath, kind, term_budget);
  if (g.arity() < f.arity()) g = g.extend_arity(f.arity());
  if (f.arity() < g.arity()) f = f.extend_arity(g.arity());
  PseudoQuotient pq = pseudo_quotient(f, g);
  emit(json{{"schema_version", 1},
            {"command", "pseudo-quotient"},
            {"quotient", print_poly(pq.q)},
            {"beta", pq.beta.str()},
            {"deg_f", pq.df},
            {"deg_g", pq.dg}},
       format);
  return kExitOk;
}

int cmd_resultant(const std::string& gpath, const std::string& hpath, int var,
                  const std::string& kind, const std::string& format,
                  long term_budget) {
  SparsePoly g = load_poly(gpath, kind, term_budget);
  SparsePoly h = load_poly(hpath, kind, term_budget);
  int arity = std::max(g.arity(), h.arity());
  g = g.extend_arity(arity);
  h = h.extend_arity(arity);
  require(var >= 1 && var <= arity, errc::parse, "resultant: variable index out of range");
  SparsePoly r = sylvester_resultant(g, h, var - 1);
  emit(json{{"schema_version", 1},
            {"command", "resultant"},
            {"variable", var},
            {"resultant", print_poly(r)}},
       format);
  return kExitOk;
}

int cmd_pit(const std::string& path, const std::string& kind,
            const std::string& format, long term_budget) {
  SparsePoly p = load_poly(path, kind, term_budget);
  ExactPit pit;
  bool zero = pit.is_zero(p);
  json out{{"schema_version", 1}, {"command", "pit"}, {"zero", zero}};
  if (!zero) {
    auto pt = pit.find_nonzero_point(p, std::max(0, p.degree()));
    if (pt) {
      json coords = json::array();
      for (const auto& c : *pt) coords.push_back(c.str());
      out["witness"] = coords;
    }
  }
  emit(out, format);
  return kExitOk;
}

int cmd_verify(const std::string& report_path, const std::string& fpath,
               const std::string& kind, bool deep, long term_budget) {
  SparsePoly f = load_poly(fpath, kind, term_budget);
  json rep;
  try {
    rep = json::parse(read_input(report_path));
  } catch (const json::parse_error& e) {
    throw df_error(errc::parse, std::string("report JSON: ") + e.what());
  }
  if (!rep.contains("factors") || !rep["factors"].is_array())
    throw df_error(errc::parse, "report is missing the factors array");
  int failures = 0;
  int accounted = 0;
  SparsePoly rest = f;
  for (const auto& entry : rep["factors"]) {
    SparsePoly g = parse_poly(entry.at("poly").get<std::string>());
    int e = entry.at("multiplicity").get<int>();
    if (g.arity() < f.arity()) g = g.extend_arity(f.arity());
    int got = 0;
    SparsePoly r = f;
    while (true) {
      auto q = lex_divide(r, g);
      if (!q) break;
      r = *q;
      ++got;
    }
    if (got != e) {
      std::cerr << "verify: claimed multiplicity " << e << " for "
                << entry.at("poly").get<std::string>() << " but exact division gives "
                << got << "\n";
      ++failures;
      continue;
    }
    accounted += e * g.degree();
    for (int k = 0; k < e; ++k) {
      auto q = lex_divide(rest, g);
      if (!q) break;
      rest = *q;
    }
  }
  if (rep.contains("complete_product")) {
    bool claimed = rep["complete_product"].get<bool>();
    bool actual = accounted == f.degree();
    if (claimed != actual) {
      std::cerr << "verify: complete_product flag disagrees with the degree count\n";
      ++failures;
    }
  }
  if (deep && failures == 0 && rep.contains("degree") && rest.degree() >= 1) {
    EngineConfig cfg;
    cfg.d = rep["degree"].get<int>();
    cfg.randomized = true;  // fresh search order for the independent re-check
    FactorReport re = factor_low_degree(rest, cfg);
    if (!re.factors.entries.empty()) {
      std::cerr << "verify: cofactor still has " << re.factors.entries.size()
                << " low degree factor(s)\n";
      ++failures;
    }
  }
  if (failures > 0) return kExitVerify;
  std::cout << "verify: ok\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic low degree factorization over Q"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string kind = "auto";
  std::string format = "json";
  long term_budget = 8000000;
  int threads = 0;
  app.add_option("--input", kind, "input kind: auto|sparse|formula")
      ->check(CLI::IsMember({"auto", "sparse", "formula"}));
  app.add_option("--format", format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--term-budget", term_budget, "sparsity cap for intermediates");
  app.add_option("--threads", threads, "worker threads for evaluation kernels");

  auto* factor = app.add_subcommand("factor", "all irreducible factors of degree <= d");
  std::string f_input;
  int degree = 1;
  std::string mode;
  long delta_budget = 10000;
  bool randomized = false;
  factor->add_option("input", f_input, "polynomial file, formula file, or -")->required();
  factor->add_option("--degree", degree, "factor degree bound d")->required();
  factor->add_option("--mode", mode, "guaranteed|budgeted (default by variable count)")
      ->check(CLI::IsMember({"guaranteed", "budgeted"}));
  factor->add_option("--delta-budget", delta_budget, "shift points per direction");
  factor->add_flag("--randomized", randomized,
                   "randomize the shift search order (non-deterministic)");

  auto* divides_cmd = app.add_subcommand("divides", "does g divide f");
  std::string d_f, d_g;
  divides_cmd->add_option("f", d_f)->required();
  divides_cmd->add_option("g", d_g)->required();

  auto* pq_cmd = app.add_subcommand("pseudo-quotient", "truncated series quotient of f by g");
  std::string q_f, q_g;
  pq_cmd->add_option("f", q_f)->required();
  pq_cmd->add_option("g", q_g)->required();

  auto* res_cmd = app.add_subcommand("resultant", "Sylvester resultant in one variable");
  std::string r_g, r_h;
  int r_var = 1;
  res_cmd->add_option("p", r_g)->required();
  res_cmd->add_option("q", r_h)->required();
  res_cmd->add_option("--var", r_var, "1-based variable index")->required();

  auto* pit_cmd = app.add_subcommand("pit", "is the polynomial identically zero");
  std::string p_in;
  pit_cmd->add_option("input", p_in)->required();

  auto* verify_cmd = app.add_subcommand("verify", "re-check a factor report");
  std::string v_report, v_f;
  bool v_deep = false;
  verify_cmd->add_option("report", v_report)->required();
  verify_cmd->add_option("f", v_f)->required();
  verify_cmd->add_flag("--deep", v_deep, "also re-factor the remaining cofactor");

  CLI11_PARSE(app, argc, argv);

#ifdef DEGFAC_HAVE_OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (*factor)
      return cmd_factor(f_input, kind, degree, mode, delta_budget, format, randomized,
                        term_budget);
    if (*divides_cmd) return cmd_divides(d_f, d_g, kind, format, term_budget);
    if (*pq_cmd) return cmd_pseudo_quotient(q_f, q_g, kind, format, term_budget);
    if (*res_cmd) return cmd_resultant(r_g, r_h, r_var, kind, format, term_budget);
    if (*pit_cmd) return cmd_pit(p_in, kind, format, term_budget);
    if (*verify_cmd) return cmd_verify(v_report, v_f, kind, v_deep, term_budget);
  } catch (const df_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
