#include "exppairs/applications.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace exppairs {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

void print_search(const std::string& title, const ReportRow& row, bool stats) {
  std::cout << title << "\n";
  if (!row.result.feasible) {
    std::cout << "  infeasible: no generated pair satisfies the constraints\n";
  } else {
    std::cout << "  value    = " << row.value_display << "\n";
    if (row.result.witness_word)
      std::cout << "  word     = " << to_string(*row.result.witness_word) << "\n";
    if (row.result.witness_pair) {
      const auto& p = *row.result.witness_pair;
      std::cout << "  pair     = (" << to_string(p.k) << ", " << to_string(p.l) << ")"
                << (p.eps ? " +eps" : "") << "\n";
    }
    std::cout << "  bounds   = [" << to_decimal(row.result.lower_bound, 12) << ", "
              << to_decimal(row.result.value, 12) << "]"
              << (row.result.attained ? " (attained)" : "") << "\n";
    if (row.word_value)
      std::cout << "  reference word " << *row.reference_word << " evaluates to "
                << to_decimal(*row.word_value, 10) << "\n";
    if (!row.note.empty()) std::cout << "  note     = " << row.note << "\n";
  }
  if (stats) {
    std::cout << "  calls    = " << row.result.stats.total_calls() << " total\n";
    const auto& per = row.result.stats.calls_per_depth;
    for (std::size_t d = 0; d < per.size(); ++d)
      if (per[d] != 0) std::cout << "    depth " << d << ": " << per[d] << "\n";
  }
  std::cout << machine_line(row) << "\n";
}

int finish(const ReportRow& row) {
  return row.result.feasible ? kExitOk : kExitInfeasible;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"exponent-pair optimization toolkit"};
  app.require_subcommand(1);

  std::string config_path, mode = "rigorous", tol, plot_path, initial = "(1/6,2/3)";
  int depth = -1, jobs = 1, gen_depth = 6, thm_r = 5;
  long xa = 1, xb = 2;
  std::string mu_sigma_text = "3/5", thm_name = "thm4", table_kind;
  bool stats = false, use_hull = false;

  auto add_search_opts = [&](CLI::App* cmd) {
    cmd->add_option("--depth", depth, "maximum recursion depth");
    cmd->add_option("--tol", tol, "tolerance as an exact rational, e.g. 1/1000000000");
    cmd->add_flag("--stats", stats, "print per-depth call counts");
  };

  auto* opt_cmd = app.add_subcommand("optimize", "run the search from a JSON config");
  opt_cmd->add_option("--config", config_path, "JSON config file")->required();
  opt_cmd->add_option("--mode", mode, "rigorous|greedy")
      ->check(CLI::IsMember({"rigorous", "greedy"}));
  opt_cmd->add_flag("--hull", use_hull, "optimize over the hull approximation");
  add_search_opts(opt_cmd);

  auto* xi_cmd = app.add_subcommand("xi", "congruence divisor exponent Xi(a,b)");
  xi_cmd->add_option("--a", xa, "first exponent")->required();
  xi_cmd->add_option("--b", xb, "second exponent")->required();
  xi_cmd->add_flag("--hull", use_hull, "refine over the hull approximation");
  add_search_opts(xi_cmd);

  auto* mu_cmd = app.add_subcommand("mu", "zeta growth exponent bound mu(sigma)");
  mu_cmd->add_option("--sigma", mu_sigma_text, "sigma in [1/2,1], e.g. 3/5")->required();
  add_search_opts(mu_cmd);

  auto* delta_cmd = app.add_subcommand("delta", "asymmetric divisor exponent Delta(a,b)");
  delta_cmd->add_option("--a", xa, "first exponent")->required();
  delta_cmd->add_option("--b", xb, "second exponent")->required();
  add_search_opts(delta_cmd);

  auto* thm_cmd = app.add_subcommand("thm", "closed-form theorem values");
  thm_cmd->add_option("--name", thm_name, "thm4|thm5|thm6")
      ->check(CLI::IsMember({"thm4", "thm5", "thm6"}))
      ->required();
  thm_cmd->add_option("--r", thm_r, "parameter r")->required();

  auto* gen_cmd = app.add_subcommand("generations", "enumerate or plot generations");
  gen_cmd->add_option("--initial", initial, "catalog label or literal pair like 1/6,2/3");
  gen_cmd->add_option("--depth", gen_depth, "generation depth")->required();
  gen_cmd->add_option("--plot", plot_path, "write an SVG to this path");

  auto* table_cmd = app.add_subcommand("table", "reproduce the xi / mu tables");
  table_cmd->add_option("kind", table_kind, "xi|mu")
      ->check(CLI::IsMember({"xi", "mu"}))
      ->required();
  table_cmd->add_option("--jobs", jobs, "parallel rows");
  table_cmd->add_option("--tol", tol, "tolerance for xi rows");
  table_cmd->add_option("--depth", depth, "depth for xi rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    SearchConfig cfg;
    if (depth > 0) cfg.max_depth = depth;
    if (!tol.empty()) cfg.tolerance = parse_rational(tol);

    if (opt_cmd->parsed()) {
      ParsedConfig parsed = parse_config(read_file(config_path));
      if (depth > 0) parsed.config.max_depth = depth;
      if (!tol.empty()) parsed.config.tolerance = parse_rational(tol);
      if (mode == "greedy") parsed.config.mode = SearchMode::greedy;
      ReportRow row;
      row.label = "optimize";
      if (use_hull)
        row.result = optimize_hull(parsed.objective, parsed.constraints, parsed.config);
      else if (parsed.config.mode == SearchMode::greedy)
        row.result = greedy_optimize(parsed.objective, parsed.constraints, parsed.config);
      else
        row.result = optimize(parsed.objective, parsed.constraints, parsed.config);
      if (row.result.feasible)
        row.value_display = row.result.attained ? to_string(row.result.value)
                                                : to_decimal(row.result.value, 12);
      print_search(row.label, row, stats);
      return finish(row);
    }

    if (xi_cmd->parsed()) {
      ReportRow row = xi(XiSpec{xa, xb}, cfg, use_hull);
      print_search(row.label, row, stats);
      return finish(row);
    }

    if (mu_cmd->parsed()) {
      ReportRow row = mu_sigma(MuSpec{parse_rational(mu_sigma_text)}, cfg);
      print_search(row.label, row, stats);
      return finish(row);
    }

    if (delta_cmd->parsed()) {
      ReportRow row = delta_two(DivisorTwoSpec{xa, xb}, cfg);
      print_search(row.label, row, stats);
      return finish(row);
    }

    if (thm_cmd->parsed()) {
      if (thm_name == "thm4") {
        Thm4Result res = thm4_alpha(thm_r);
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(thm_r));
        std::cout << "Delta(1,2^" << thm_r << ") exponent\n"
                  << "  alpha    = " << to_string(res.alpha) << " = "
                  << to_decimal(res.alpha, 12) << "\n"
                  << "  bound    = alpha < 1/" << to_string(Integer(p + thm_r))
                  << " holds (checked exactly)\n"
                  << "  witness  = " << to_string(res.word) << " = (" << to_string(res.pair.k)
                  << ", " << to_string(res.pair.l) << ")\n";
        std::cout << "value=" << to_string(res.alpha) << " word=" << to_string(res.word)
                  << " attained=true calls=-\n";
      } else if (thm_name == "thm5") {
        Thm5Result res = thm5_alpha(thm_r);
        std::cout << "Delta(3,2^" << thm_r << ") exponent\n"
                  << "  alpha    = " << to_string(res.alpha) << " = "
                  << to_decimal(res.alpha, 12) << "\n"
                  << "  witness  = " << to_string(res.word) << "\n"
                  << "  note     = " << res.note << "\n";
        std::cout << "value=" << to_string(res.alpha) << " word=" << to_string(res.word)
                  << " attained=true calls=-\n";
      } else {
        Thm6Result res = thm6_theta(thm_r);
        std::cout << "theta(1,2^" << thm_r << ",2^" << thm_r << ")\n"
                  << "  value    = " << to_string(res.theta) << " = "
                  << to_decimal(res.theta, 12) << "\n"
                  << "  bound    = value < 1/(2^" << thm_r << "+1) "
                  << (res.below_bound ? "holds" : "FAILS") << "\n"
                  << "  witness with trailing B A^2: (" << to_string(res.pair_b_a_a.k) << ", "
                  << to_string(res.pair_b_a_a.l) << ")\n"
                  << "  witness with trailing (BA)^2: (" << to_string(res.pair_ba_ba.k) << ", "
                  << to_string(res.pair_ba_ba.l) << ")\n"
                  << "  consistency: " << res.consistency << "\n";
        std::cout << "value=" << to_string(res.theta) << " word=- attained=true calls=-\n";
      }
      return kExitOk;
    }

    if (gen_cmd->parsed()) {
      std::string label = initial;
      if (!label.empty() && label.front() != '(' && label.find(',') != std::string::npos)
        label = "(" + label + ")";
      ExponentPair start = resolve_initial(label);
      if (!plot_path.empty()) {
        plot_generations_file(start, gen_depth, plot_path);
        long points = gen_depth == 0 ? 1 : (2L << gen_depth) - 2;
        std::cout << "wrote " << plot_path << " with " << points << " points\n";
        return kExitOk;
      }
      Generation gen = generation(start, gen_depth, label);
      for (const auto& [word, pair] : gen.entries)
        std::cout << to_string(word) << " = (" << to_string(pair.k) << ", "
                  << to_string(pair.l) << ")\n";
      return kExitOk;
    }

    if (table_cmd->parsed()) {
      SearchConfig tcfg;
      if (depth > 0) tcfg.max_depth = depth;
      if (!tol.empty()) tcfg.tolerance = parse_rational(tol);
      std::vector<ReportRow> rows =
          table_kind == "xi" ? table_xi(tcfg, jobs) : table_mu(tcfg, jobs);
      bool all_feasible = true;
      for (const auto& row : rows) {
        std::cout << row.label << ": ";
        std::cout << (row.result.feasible ? row.value_display : "infeasible");
        if (row.result.witness_word && row.result.feasible)
          std::cout << "  at " << to_string(*row.result.witness_word);
        if (row.word_value)
          std::cout << "  (reference word value " << to_decimal(*row.word_value, 10) << ")";
        std::cout << "  [" << row.result.stats.total_calls() << " calls]\n";
        std::cout << machine_line(row) << "\n";
        all_feasible = all_feasible && row.result.feasible;
      }
      return all_feasible ? kExitOk : kExitInfeasible;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace exppairs
