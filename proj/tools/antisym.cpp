// Command-line front end for the antisymmetric-state bound calculators.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 solver failure.

#include "antisym/antisym.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using antisym::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

// One line of output; the same rows feed the text, CSV and JSON renderers.
struct Row {
  std::string quantity;
  std::string n;
  std::string d;
  std::optional<Rational> exact;
  std::optional<Rational> scale;  // value = scale * log2(exact)
  std::optional<double> value;
  std::string text;  // used when there is no numeric value
  std::string ref;
};

std::string row_decimal(const Row& r) {
  if (r.value) return format_double(*r.value);
  if (r.exact) return antisym::to_decimal(*r.exact);
  return r.text;
}

Row exact_row(std::string quantity, std::string n, std::string d, Rational v, std::string ref) {
  Row r{std::move(quantity), std::move(n), std::move(d), std::move(v), std::nullopt, std::nullopt, {}, std::move(ref)};
  return r;
}

Row report_row(const antisym::BoundReport& b) {
  Row r;
  r.quantity = b.name;
  r.n = b.parameter("n").value_or("");
  r.d = b.parameter("d").value_or("");
  r.exact = b.exact_core;
  r.scale = b.log_scale;
  r.value = b.log2_value;
  r.ref = b.provenance;
  if (auto k = b.parameter("k")) r.ref += " (k=" + *k + ")";
  return r;
}

struct Output {
  std::string command;
  json parameters = json::object();
  std::vector<Row> rows;
  json extra = json::object();
  std::vector<std::string> notes;  // text mode only
  int exit_code = 0;
};

json exact_json(const Rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}, {"decimal", antisym::to_decimal(q)}};
}

std::string render_json(const Output& out) {
  json doc;
  doc["command"] = out.command;
  doc["parameters"] = out.parameters;
  json rows = json::array();
  for (const auto& r : out.rows) {
    json j;
    j["quantity"] = r.quantity;
    j["n"] = r.n;
    j["d"] = r.d;
    j["exact"] = r.exact ? exact_json(*r.exact) : json(nullptr);
    if (r.scale) j["log2_scale"] = exact_json(*r.scale);
    if (r.value) j["value"] = *r.value;
    if (!r.text.empty()) j["text"] = r.text;
    j["ref"] = r.ref;
    rows.push_back(std::move(j));
  }
  doc["results"] = std::move(rows);
  for (const auto& [k, v] : out.extra.items()) doc[k] = v;
  return doc.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string render_csv(const Output& out) {
  std::ostringstream os;
  os << "quantity,n,d,exact_num,exact_den,decimal,paper_ref\n";
  for (const auto& r : out.rows) {
    os << csv_field(r.quantity) << ',' << csv_field(r.n) << ',' << csv_field(r.d) << ','
       << (r.exact ? r.exact->get_num().get_str() : "") << ',' << (r.exact ? r.exact->get_den().get_str() : "") << ','
       << csv_field(row_decimal(r)) << ',' << csv_field(r.ref) << '\n';
  }
  return os.str();
}

std::string render_text(const Output& out) {
  std::vector<std::array<std::string, 6>> cells;
  cells.push_back({"quantity", "n", "d", "exact", "value", "note"});
  for (const auto& r : out.rows) {
    std::string exact;
    if (r.exact) {
      exact = antisym::to_string(*r.exact);
      if (r.scale) exact = antisym::to_string(*r.scale) + "*log2(" + exact + ")";
    }
    cells.push_back({r.quantity, r.n, r.d, exact, row_decimal(r), r.ref});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << out.command << "\n";
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < 6; ++c) {
      std::string cell = row[c];
      if (c + 1 < 6) cell.resize(width[c], ' ');
      line += cell;
      if (c + 1 < 6) line += "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  }
  for (const auto& note : out.notes) os << note << "\n";
  return os.str();
}

std::optional<int> parse_dimension(int d, bool dinf) {
  if (dinf) return std::nullopt;
  return d;
}

Rational parse_rational(const std::string& text, const char* flag) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw UsageError(std::string(flag) + " expects a rational such as 1/2, got '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_text(const Rational& q) { return antisym::to_string(q); }

// ---------------------------------------------------------------------------
// Commands

Output cmd_squashed(int d, bool all_k) {
  if (d < 3) throw UsageError("--d must be at least 3");
  Output out;
  out.command = "squashed";
  out.parameters = {{"d", d}, {"all_k", all_k}};
  const auto sq = antisym::squashed_upper(d);
  out.rows.push_back(report_row(sq.report));
  out.extra["argmin_k"] = sq.argmin_k;
  if (all_k) {
    json table = json::array();
    for (const auto& row : sq.table) {
      Row r = exact_row("CMI ratio", "", std::to_string(d), row.ratio, "k=" + std::to_string(row.k));
      r.scale = Rational(1);
      r.value = row.bits;
      out.rows.push_back(std::move(r));
      table.push_back({{"k", row.k}, {"ratio", exact_json(row.ratio)}, {"bits", row.bits}});
    }
    out.extra["cmi_table"] = std::move(table);
  }
  out.notes.push_back("argmin k = " + std::to_string(sq.argmin_k));
  return out;
}

antisym::ZetaForm parse_form(const std::string& s) {
  return s == "truncated2" ? antisym::ZetaForm::truncated2 : antisym::ZetaForm::full3;
}

antisym::TdVariant parse_td(const std::string& s) {
  if (s == "printed") return antisym::TdVariant::printed;
  if (s == "projector") return antisym::TdVariant::projector;
  return antisym::TdVariant::derived;
}

Output cmd_lp_zeta(unsigned n, std::optional<int> d, const std::string& form_name, const std::string& parity_name,
                   const std::string& td_name) {
  if (n == 0) throw UsageError("--n must be positive");
  const auto form = parse_form(form_name);
  const auto parity = parity_name == "even" ? antisym::Parity::even_211 : antisym::Parity::none;
  const auto td = parse_td(td_name);
  antisym::SymLP lp = antisym::build_zeta(n, d, parity, form, td);  // validates the combination

  Output out;
  out.command = "lp zeta";
  out.parameters = {{"n", n}, {"d", antisym::dimension_label(d)}, {"form", form_name}, {"parity", parity_name},
                    {"td", td_name}};
  antisym::ZetaResult res = [&] {
    try {
      return antisym::solve_symmetric_lp(std::move(lp));
    } catch (const std::logic_error& e) {
      throw SolverError(e.what());
    } catch (const std::runtime_error& e) {
      throw SolverError(e.what());
    }
  }();
  const std::string ns = std::to_string(n);
  const std::string ds = antisym::dimension_label(d);
  out.rows.push_back(exact_row("zeta", ns, ds, res.value, "PPT purity LP optimum"));
  Row ec = exact_row("E_C lower", ns, ds, res.value, "-(1/n) log2 zeta");
  ec.scale = antisym::make_rational(-1, long(n));
  ec.value = -antisym::log2(res.value) / n;
  out.rows.push_back(std::move(ec));
  Row er = exact_row("E_R lower", ns, ds, res.value, "-(1/2n) log2 zeta");
  er.scale = antisym::make_rational(-1, 2 * long(n));
  er.value = -antisym::log2(res.value) / (2.0 * n);
  out.rows.push_back(std::move(er));

  Rational dual_value = 0;
  for (std::size_t i = 0; i < res.solution.y.size(); ++i) dual_value += res.solution.y[i] * res.lp.to_problem().rhs[i];
  out.extra["variables"] = res.lp.types.size();
  out.extra["constraints"] = res.lp.rows.size();
  out.extra["pivots"] = res.solution.pivots;
  out.extra["dual_value"] = exact_json(dual_value);
  out.extra["strong_duality"] = dual_value == res.value;
  out.notes.push_back("variables " + std::to_string(res.lp.types.size()) + ", constraint types " +
                      std::to_string(res.lp.rows.size()) + ", pivots " + std::to_string(res.solution.pivots));
  out.notes.push_back(std::string("dual certificate value ") + rational_text(dual_value) +
                      (dual_value == res.value ? " (equal to primal)" : " (MISMATCH)"));
  return out;
}

Output cmd_lp_dual(unsigned n, const std::string& beta_text, const std::string& gamma_text, bool solve) {
  if (n == 0) throw UsageError("--n must be positive");
  const Rational beta = beta_text.empty() ? antisym::make_rational(1, 2) : parse_rational(beta_text, "--beta");
  const Rational gamma =
      gamma_text.empty() ? antisym::pow(antisym::make_rational(1, 2), n) : parse_rational(gamma_text, "--gamma");
  if (sgn(beta) < 0 || beta >= 1) throw UsageError("--beta must lie in [0, 1)");

  const auto ad = antisym::analytic_dual(n, beta, gamma);
  Output out;
  out.command = "lp dual";
  out.parameters = {{"n", n}, {"beta", rational_text(beta)}, {"gamma", rational_text(gamma)}};
  const std::string ns = std::to_string(n);
  out.rows.push_back(exact_row("z", ns, "inf", ad.z, "dual objective at delta_k = gamma beta^(n-k)"));
  Row feas;
  feas.quantity = "feasible";
  feas.n = ns;
  feas.d = "inf";
  feas.text = ad.feasible ? "true" : "false";
  feas.ref = "all symmetrized dual constraints checked exactly";
  out.rows.push_back(feas);
  for (unsigned k = 0; k <= n; ++k) out.rows.push_back(exact_row("delta_" + std::to_string(k), ns, "inf", ad.delta[k], ""));

  json delta = json::array();
  for (const auto& v : ad.delta) delta.push_back(exact_json(v));
  out.extra["delta"] = std::move(delta);
  out.extra["z"] = exact_json(ad.z);
  out.extra["feasible"] = ad.feasible;
  out.extra["identity_holds"] = ad.identity_holds;
  out.extra["argmax_m"] = ad.argmax_m;
  out.notes.push_back(std::string("feasible: ") + (ad.feasible ? "true" : "false") +
                      ", closed-form identity: " + (ad.identity_holds ? "holds" : "fails"));

  if (solve) {
    try {
      const auto opt = antisym::solve_dual(n);
      out.rows.push_back(exact_row("dual optimum", ns, "inf", opt.value, "min z over all dual feasible points"));
      out.extra["dual_optimum"] = exact_json(opt.value);
    } catch (const std::runtime_error& e) {
      throw SolverError(e.what());
    }
  }
  return out;
}

Output cmd_verify(int d, const std::string& level_name) {
  if (d < 3 || d > 7) throw UsageError("verify rep supports 3 <= d <= 7");
  const auto level = level_name == "full" ? antisym::VerifyLevel::full : antisym::VerifyLevel::fast;
  const auto rep = antisym::verify_representation(d, level);
  Output out;
  out.command = "verify rep";
  out.parameters = {{"d", d}, {"level", level_name}};
  json checks = json::array();
  for (const auto& c : rep.checks) {
    Row r;
    r.quantity = c.name;
    r.d = std::to_string(d);
    r.text = c.passed ? "pass" : "FAIL";
    r.ref = c.detail;
    out.rows.push_back(std::move(r));
    checks.push_back({{"name", c.name}, {"passed", c.passed}});
  }
  if (rep.overlaps) {
    json table = json::array();
    for (antisym::OverlapRow row : antisym::kAllOverlapRows) {
      const std::string label = row == antisym::OverlapRow::q        ? "Q/2"
                                : row == antisym::OverlapRow::p_tilde ? "P~+Q/2"
                                                                       : "Psi";
      for (std::size_t c = 0; c < rep.overlaps->columns.size(); ++c) {
        const Rational& v = rep.overlaps->at(row, c);
        const std::string col = antisym::irrep_name(rep.overlaps->columns[c]);
        out.rows.push_back(exact_row("overlap " + label + " " + col, "", std::to_string(d), v, "tr rho_y^Gamma X"));
        table.push_back({{"row", label}, {"column", col}, {"value", exact_json(v)}});
      }
    }
    out.extra["overlap_table"] = std::move(table);
  }
  out.extra["checks"] = std::move(checks);
  out.extra["passed"] = rep.passed();
  if (const auto* f = rep.first_failure()) {
    std::cerr << "verification failed: " << f->name << "\n";
    out.exit_code = kExitVerify;
  }
  out.notes.push_back(rep.passed() ? "all checks passed" : "verification FAILED");
  return out;
}

Output cmd_bounds(int d, unsigned n) {
  if (d < 3) throw UsageError("--d must be at least 3");
  if (n == 0) throw UsageError("--n must be positive");
  using antisym::BoundMode;
  Output out;
  out.command = "bounds";
  out.parameters = {{"d", d}, {"n", n}};
  try {
    const auto sq = antisym::squashed_upper(d);
    out.rows.push_back(report_row(sq.report));
    out.rows.push_back(report_row(antisym::ec_lower(n, std::nullopt, BoundMode::analytic)));
    out.rows.push_back(report_row(antisym::ec_lower(n, std::nullopt, BoundMode::lp)));
    out.rows.push_back(report_row(antisym::ec_lower(n, d, BoundMode::lp)));
    out.rows.push_back(report_row(antisym::er_lower(n, std::nullopt, BoundMode::analytic)));
    out.rows.push_back(report_row(antisym::er_lower(n, std::nullopt, BoundMode::lp)));
    out.rows.push_back(report_row(antisym::er_lower(n, d, BoundMode::lp)));
    out.rows.push_back(report_row(antisym::er_ppt_contrast(d)));
  } catch (const antisym::domain_error&) {
    throw;
  } catch (const std::logic_error& e) {
    throw SolverError(e.what());
  } catch (const std::runtime_error& e) {
    throw SolverError(e.what());
  }
  return out;
}

Output cmd_purity(int d, unsigned n, unsigned restarts, unsigned iters, std::uint64_t seed) {
  if (d < 3) throw UsageError("--d must be at least 3");
  const auto res = antisym::purity_seesaw(n, d, restarts, iters, seed);
  const Rational zeta = antisym::solve_zeta(n, d).value;
  const bool sandwich = res.value <= antisym::to_double(zeta) + 1e-6;
  Output out;
  out.command = "purity";
  out.parameters = {{"d", d}, {"n", n}, {"restarts", restarts}, {"iters", iters}, {"seed", seed}};
  Row p;
  p.quantity = "see-saw purity";
  p.n = std::to_string(n);
  p.d = std::to_string(d);
  p.value = res.value;
  p.ref = "lower bound on max purity";
  out.rows.push_back(p);
  out.rows.push_back(exact_row("zeta", std::to_string(n), std::to_string(d), zeta, "LP upper bound on max purity"));
  json per = json::array();
  for (double v : res.per_restart) per.push_back(v);
  out.extra["per_restart"] = std::move(per);
  out.extra["sandwich_ok"] = sandwich;
  out.notes.push_back(std::string("sandwich purity <= zeta + 1e-6: ") + (sandwich ? "ok" : "VIOLATED"));
  if (!sandwich) out.exit_code = kExitVerify;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact bounds for the antisymmetric state"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string out_file;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out_file, "Write results to FILE instead of standard output");

  // squashed
  auto* sq = app.add_subcommand("squashed", "Antisymmetric-extension upper bound on E_sq and K_D");
  int sq_d = 0;
  bool all_k = false;
  sq->add_option("--d", sq_d, "Local dimension")->required();
  sq->add_flag("--all-k", all_k, "Print the CMI ratio for every k");

  // lp zeta / lp dual
  auto* lp = app.add_subcommand("lp", "Purity linear programmes");
  lp->require_subcommand(1);
  lp->fallthrough();
  auto* zeta = lp->add_subcommand("zeta", "Solve the symmetry-reduced purity LP");
  zeta->fallthrough();
  unsigned z_n = 0;
  int z_d = 0;
  bool z_dinf = false;
  std::string z_form = "full3";
  std::string z_parity = "none";
  std::string z_td = "derived";
  zeta->add_option("--n", z_n, "Number of copies")->required();
  auto* z_d_opt = zeta->add_option("--d", z_d, "Local dimension");
  auto* z_dinf_opt = zeta->add_flag("--dinf", z_dinf, "Use the d = infinity constraint matrix");
  z_d_opt->excludes(z_dinf_opt);
  zeta->add_option("--form", z_form)->check(CLI::IsMember({"full3", "truncated2"}));
  zeta->add_option("--parity", z_parity)->check(CLI::IsMember({"none", "even"}));
  zeta->add_option("--td", z_td, "Variant of T_d")->check(CLI::IsMember({"derived", "printed", "projector"}));

  auto* dual = lp->add_subcommand("dual", "Analytic dual point delta_k = gamma beta^(n-k)");
  dual->fallthrough();
  unsigned du_n = 0;
  std::string beta;
  std::string gamma;
  bool du_solve = false;
  dual->add_option("--n", du_n, "Number of copies")->required();
  dual->add_option("--beta", beta, "Rational beta in [0,1), default 1/2");
  dual->add_option("--gamma", gamma, "Rational gamma, default 2^-n");
  dual->add_flag("--solve", du_solve, "Also solve the dual LP exactly");

  // verify rep
  auto* verify = app.add_subcommand("verify", "Exact self-checks");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* rep = verify->add_subcommand("rep", "Representation-theoretic identities at dimension d");
  rep->fallthrough();
  int v_d = 0;
  std::string level = "fast";
  rep->add_option("--d", v_d, "Local dimension (3..7)")->required();
  rep->add_option("--level", level)->check(CLI::IsMember({"fast", "full"}));

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Consolidated bound table");
  bounds->fallthrough();
  int b_d = 0;
  unsigned b_n = 0;
  bounds->add_option("--d", b_d, "Local dimension")->required();
  bounds->add_option("--n", b_n, "Number of copies for the LP bounds")->required();

  // purity
  auto* purity = app.add_subcommand("purity", "See-saw lower bound on the maximal purity");
  purity->fallthrough();
  int p_d = 0;
  unsigned p_n = 0;
  unsigned restarts = 10;
  unsigned iters = 500;
  std::uint64_t seed = 1;
  purity->add_option("--d", p_d, "Local dimension")->required();
  purity->add_option("--n", p_n, "Number of copies")->required();
  purity->add_option("--restarts", restarts)->check(CLI::PositiveNumber);
  purity->add_option("--iters", iters)->check(CLI::PositiveNumber);
  purity->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Output out;
  try {
    if (*sq) {
      out = cmd_squashed(sq_d, all_k);
    } else if (*zeta) {
      const bool has_d = z_d_opt->count() > 0;
      out = cmd_lp_zeta(z_n, parse_dimension(z_d, !has_d || z_dinf), z_form, z_parity, z_td);
    } else if (*dual) {
      out = cmd_lp_dual(du_n, beta, gamma, du_solve);
    } else if (*rep) {
      out = cmd_verify(v_d, level);
    } else if (*bounds) {
      out = cmd_bounds(b_d, b_n);
    } else if (*purity) {
      out = cmd_purity(p_d, p_n, restarts, iters, seed);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const antisym::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const antisym::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }

  const std::string text = format == "json" ? render_json(out) : format == "csv" ? render_csv(out) : render_text(out);
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "error: cannot write " << out_file << "\n";
      return kExitUsage;
    }
    f << text;
  }
  return out.exit_code;
}
