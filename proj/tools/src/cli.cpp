#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "polyconst/cli.hpp"
#include "polyconst/constants.hpp"
#include "polyconst/oracle.hpp"

namespace polyconst::cli {

namespace {

Cell exponent_cell(const ExtendedExponent& e) { return to_string(e); }

Cell opt_cell(const std::optional<double>& v) {
  if (v) return *v;
  return {};
}

Table constant_table(const std::string& label, const std::string& q, const std::string& p,
                     const ConstantResult& r) {
  Table t;
  t.columns = {"q", "p", label, "argmax", "method", "notes"};
  t.rows.push_back({q, p, r.value, opt_cell(r.attaining_parameter), to_string(r.method), r.notes});
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence constants of polynomial norms on R^2", "polyconst"};
  app.require_subcommand(1);

  std::string format = "text";
  bool full = false;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("--full", full, "Print 17 significant digits");
  app.fallthrough();

  std::string q_text, p_text;
  int scan = ScanConfig{}.scan_points;
  double tol = ScanConfig{}.refine_tol;
  int grid = 64, m = 2, points = 100;
  double from = 0.0, to = 1.0, fig_p = 0.0;
  std::string name;
  std::size_t samples = 10000;
  std::uint64_t seed = 1;

  auto* big = app.add_subcommand("K", "K_{2,q,p}");
  big->add_option("--q", q_text)->required();
  big->add_option("--p", p_text)->required();
  big->add_option("--scan", scan, "Scan nodes")->capture_default_str();
  big->add_option("--tol", tol, "Golden-section bracket tolerance")->capture_default_str();

  auto* little = app.add_subcommand("k", "k_{2,q,p} for q in {1, inf}");
  little->add_option("--q", q_text)->required();
  little->add_option("--p", p_text)->required();

  auto* kest = app.add_subcommand("k-est", "Grid estimate of k_{2,q,p} for 1 < q < inf");
  kest->add_option("--q", q_text)->required();
  kest->add_option("--p", p_text)->required();
  kest->add_option("--grid", grid)->capture_default_str();

  auto* hl = app.add_subcommand("hl", "Hardy-Littlewood constant for degree 2");
  hl->add_option("--p", p_text)->required();

  auto* pp = app.add_subcommand("phi-psi", "Phi(p) and Psi(p) for p >= 4");
  pp->add_option("--p", p_text)->required();

  auto* base = app.add_subcommand("baseline", "Baseline lower bound");
  base->add_option("--m", m)->required();
  base->add_option("--p", p_text)->required();

  auto* pow = app.add_subcommand("power-bound", "Power lower bound of degree 2m at p = 4m");
  pow->add_option("--m", m)->required();

  auto* d5 = app.add_subcommand("degree5", "Degree-5 ratios at p = 10");

  auto* table = app.add_subcommand("table", "Reproduce a named table");
  table->add_option("--name", name)
      ->required()
      ->check(CLI::IsMember({"k-table", "K-table", "remark-q12", "remark-p24", "remark-p4inf", "hl-powers", "phi-psi",
                             "degree5"}));

  auto* fig = app.add_subcommand("figure", "Figure data as (parameter, value) rows");
  fig->add_option("--name", name)->required()->check(CLI::IsMember({"phi-psi-diff", "f-curves"}));
  fig->add_option("--from", from);
  fig->add_option("--to", to);
  fig->add_option("--points", points)->capture_default_str();
  fig->add_option("--p", fig_p, "f-curves: single p in (2, 4]");

  auto* verify = app.add_subcommand("verify", "Random sandwich check k <= |P|_q <= K");
  verify->add_option("--q", q_text)->required();
  verify->add_option("--p", p_text)->required();
  verify->add_option("--samples", samples)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  const Format fmt = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Text;

  try {
    Table t;
    if (big->parsed()) {
      ScanConfig cfg{scan, tol, ScanConfig{}.refine_iters_max};
      cfg.validate();
      const auto q = parse_exponent(q_text);
      const auto p = parse_exponent(p_text);
      t = constant_table("K", to_string(q), to_string(p), big_K(q, p, cfg));
    } else if (little->parsed()) {
      const auto q = parse_exponent(q_text);
      const auto p = parse_exponent(p_text);
      t = constant_table("k", to_string(q), to_string(p), little_k(q, p));
    } else if (kest->parsed()) {
      const auto q = parse_exponent(q_text);
      const auto p = parse_exponent(p_text);
      t = constant_table("k_upper", to_string(q), to_string(p), estimate_little_k(q, p, grid));
    } else if (hl->parsed()) {
      const auto p = parse_exponent(p_text);
      const auto r = hl_constant(p);
      t.columns = {"p", "q", "value", "argmax", "notes"};
      t.rows.push_back({exponent_cell(p), exponent_cell(hl_exponent(p)), r.value, opt_cell(r.attaining_parameter),
                        r.notes});
    } else if (pp->parsed()) {
      const double p = parse_real(p_text);
      const auto r = phi_psi(p);
      t.columns = {"p", "phi", "psi", "psi_minus_phi", "phi_argmax", "psi_argmax"};
      t.rows.push_back({p, r.phi, r.psi, r.psi - r.phi, r.phi_argmax, r.psi_argmax});
    } else if (base->parsed()) {
      const double p = parse_real(p_text);
      t.columns = {"m", "p", "bound"};
      t.rows.push_back({static_cast<double>(m), p, baseline_bound(m, p)});
    } else if (pow->parsed()) {
      const auto r = power_lower_bound(m);
      t.columns = {"m", "degree", "per_degree_ratio", "log_value", "alpha"};
      t.rows.push_back({static_cast<double>(m), static_cast<double>(2 * m), r.scaled->per_degree_ratio(),
                        r.scaled->log_magnitude, opt_cell(r.attaining_parameter)});
    } else if (d5->parsed()) {
      t = make_table("degree5");
    } else if (table->parsed()) {
      t = make_table(name);
    } else if (fig->parsed()) {
      if (name == "f-curves" && fig->count("--p") == 0) fig_p = 0.0;
      else if (name == "f-curves" && !(fig_p > 0.0)) throw std::invalid_argument("f-curves needs 2 < p <= 4");
      t = make_figure(name, from, to, points, fig_p);
    } else if (verify->parsed()) {
      const auto q = parse_exponent(q_text);
      const auto p = parse_exponent(p_text);
      const auto rep = sandwich_check(q, p, samples, seed);
      t.columns = {"q", "p", "samples", "seed", "passed", "max_violation", "tolerance", "empirical_min",
                   "empirical_max", "worst_case", "notes"};
      t.rows.push_back({to_string(q), to_string(p), static_cast<double>(rep.checked), std::to_string(rep.seed),
                        std::string(rep.passed ? "yes" : "no"), rep.max_violation, rep.tolerance, rep.empirical_min,
                        rep.empirical_max, rep.worst_case, rep.notes});
      write_table(out, t, fmt, full);
      return rep.passed ? 0 : 3;
    }
    write_table(out, t, fmt, full);
    return 0;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace polyconst::cli
