// fuzzytopo command line tool. Talks to the library through the public C API
// only; all computation lives behind libfuzzytopo.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzytopo/fuzzytopo.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;    // validation problems: flags, files, parsing
constexpr int kExitRuntime = 2;  // everything else

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { ft_string_free(s); }
  std::string str() const { return s == nullptr ? std::string() : s; }
};

struct GraphGuard {
  ft_graph* g = nullptr;
  ~GraphGuard() { ft_graph_free(g); }
};

int exit_code_for(ft_status status) {
  switch (status) {
    case FT_OK:
      return kExitOk;
    case FT_ERROR_INVALID_ARGUMENT:
    case FT_ERROR_PARSE:
    case FT_ERROR_IO:
      return kExitUsage;
    default:
      return kExitRuntime;
  }
}

int report_error(ft_status status) {
  std::cerr << "error: " << ft_last_error() << "\n";
  return exit_code_for(status);
}

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitRuntime;
  }
  out << text;
  return kExitOk;
}

ft_index index_from_name(const std::string& name) {
  if (name == "so") return FT_INDEX_SOMBOR;
  if (name == "so_alpha") return FT_INDEX_SOMBOR_ALPHA;
  if (name == "m1") return FT_INDEX_ZAGREB_M1;
  if (name == "m2") return FT_INDEX_ZAGREB_M2;
  if (name == "randic") return FT_INDEX_RANDIC;
  if (name == "nirmala") return FT_INDEX_NIRMALA;
  throw CLI::ValidationError("--index", "unknown index '" + name + "'");
}

ft_family family_from_name(const std::string& name) {
  if (name == "path") return FT_FAMILY_PATH;
  if (name == "star") return FT_FAMILY_STAR;
  if (name == "cycle") return FT_FAMILY_CYCLE;
  if (name == "complete") return FT_FAMILY_COMPLETE;
  throw CLI::ValidationError("--family", "unknown family '" + name + "'");
}

std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fuzzytopo: fuzzy degree-based topological indices, closed-form family "
      "values, extremal support searches and bound verification.\n"
      "Environment: FUZZYTOPO_THREADS caps worker threads (0 or unset = "
      "auto)."};
  app.require_subcommand(1);

  // ---- compute ----
  auto* compute = app.add_subcommand(
      "compute", "Evaluate an index on a graph file (text format: 'n <count>', "
                 "'v <id> <nu>', 'e <u> <v> <mu>')");
  std::string graph_path, index_name = "so";
  double alpha = 2.0;
  bool show_terms = false;
  compute->add_option("--graph", graph_path, "graph file")->required();
  compute->add_option("--index", index_name,
                      "so|so_alpha|m1|m2|randic|nirmala (default so)");
  compute->add_option("--alpha", alpha, "exponent for so_alpha (>= 1)");
  compute->add_flag("--terms", show_terms, "print the per-edge terms");

  // ---- family ----
  auto* family_cmd = app.add_subcommand(
      "family", "Build a standard family and print it in the graph text format");
  std::string family_name = "path", custom_spec, family_out;
  int family_n = 10;
  double family_m = 1.0;
  family_cmd->add_option("--family", family_name, "path|star|cycle|complete")
      ->required();
  family_cmd->add_option("--n", family_n, "order")->required();
  family_cmd->add_option("--m", family_m, "fuzzy size (uniform scheme)");
  family_cmd->add_option("--custom", custom_spec,
                         "comma-separated memberships, one per edge in "
                         "construction order (overrides --m)");
  family_cmd->add_option("--output", family_out, "write to file (default stdout)");

  // ---- tables and figures ----
  std::string table_out;
  auto* table1 = app.add_subcommand(
      "table1", "CSV comparing computed uniform-scheme Sombor values against "
                "the published reference table (orders 6..50, m_mu 0.5 and 1)");
  table1->add_option("--output", table_out, "write to file (default stdout)");
  auto* table2 = app.add_subcommand(
      "table2", "CSV comparing SO, M1, R, N per family at n=10, m_mu=1 "
                "against the published reference table");
  table2->add_option("--output", table_out, "write to file (default stdout)");
  auto* figures = app.add_subcommand(
      "figures", "Long-format CSV (figure,family,n,index,value) behind the "
                 "three comparison figures");
  figures->add_option("--output", table_out, "write to file (default stdout)");

  // ---- search ----
  auto* search = app.add_subcommand(
      "search", "Enumerate supports of a class, optimize memberships on each "
                "at fixed fuzzy size, rank the optima");
  std::string search_class = "tree", search_dir = "max", search_out, report_out;
  int search_n = 6;
  double search_m = 1.0;
  std::string search_index = "so";
  double search_alpha = 2.0;
  ft_optimizer_config opt_cfg;
  ft_optimizer_config_init(&opt_cfg);
  unsigned long long seed_opt = opt_cfg.seed;
  search->add_option("--class", search_class,
                     "tree (n 2..12) | unicyclic (3..9) | connected (3..7)");
  search->add_option("--n", search_n, "order")->required();
  search->add_option("--m", search_m, "fuzzy size");
  search->add_option("--index", search_index, "objective index (default so)");
  search->add_option("--alpha", search_alpha, "exponent for so_alpha");
  search->add_option("--direction", search_dir, "min|max")->required();
  search->add_option("--output", search_out, "CSV file (default stdout)");
  search->add_option("--report", report_out, "also write the text report here");
  search->add_option("--eps", opt_cfg.epsilon_min, "membership lower bound");
  search->add_option("--grid-resolution", opt_cfg.grid_resolution,
                     "grid points per free dimension");
  search->add_option("--steps", opt_cfg.gradient_steps, "gradient steps");
  search->add_option("--step-size", opt_cfg.step_size, "initial step size");
  search->add_option("--restarts", opt_cfg.restarts, "gradient restarts");
  search->add_option("--tolerance", opt_cfg.tolerance, "convergence tolerance");
  search->add_option("--seed", seed_opt, "restart seed");

  // ---- verify ----
  auto* verify = app.add_subcommand(
      "verify", "Check one of the recorded bounds. Modes: random (instance "
                "stream), extremal (search against the predicted winner), "
                "sweep (family grid margins)");
  std::string claim, verify_mode = "random", verify_out, sweep_family = "cycle";
  int samples = 100, n_min = 3, n_max = 10;
  unsigned long long verify_seed = 1;
  double verify_m = 1.0, verify_alpha = 2.0;
  std::string reading_m = "m_mu";
  std::string sweep_orders = "6,8,10,12,15,20,25,30,40,50";
  std::string sweep_sizes = "0.5,1";
  verify->add_option("--claim", claim, std::string("one of:\n") + ft_claim_names())
      ->required();
  verify->add_option("--mode", verify_mode, "random|extremal|sweep");
  verify->add_option("--samples", samples, "random instances");
  verify->add_option("--n-min", n_min, "smallest order");
  verify->add_option("--n-max", n_max, "largest order");
  verify->add_option("--seed", verify_seed, "instance stream seed");
  verify->add_option("--m", verify_m, "fuzzy size (extremal mode)");
  verify->add_option("--alpha", verify_alpha, "exponent for the alpha claims");
  verify->add_option("--reading-m", reading_m,
                     "m_mu|edges: how the bounds read the symbol m");
  verify->add_option("--family", sweep_family, "family for sweep mode");
  verify->add_option("--orders", sweep_orders, "sweep orders, comma separated");
  verify->add_option("--sizes", sweep_sizes, "sweep fuzzy sizes, comma separated");
  verify->add_option("--output", verify_out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      GraphGuard g;
      if (ft_status s = ft_graph_parse_file(graph_path.c_str(), &g.g))
        return report_error(s);
      ft_index index = index_from_name(index_name);
      double value = 0.0;
      if (ft_status s = ft_index_value(g.g, index, alpha, &value))
        return report_error(s);
      std::cout << "index=" << index_name << " value=" << fixed4(value)
                << " full=" << full(value) << "\n";
      if (show_terms) {
        int cap = std::max(ft_graph_order(g.g), ft_graph_edge_count(g.g));
        std::vector<double> terms(static_cast<std::size_t>(cap) + 1, 0.0);
        int count = 0;
        if (ft_status s = ft_index_terms(g.g, index, alpha, terms.data(), &count))
          return report_error(s);
        bool per_vertex = index == FT_INDEX_ZAGREB_M1;
        for (int i = 0; i < count; ++i) {
          if (per_vertex) {
            std::cout << "term vertex=" << i;
          } else {
            int u = 0, v = 0;
            double mu = 0.0;
            ft_graph_edge(g.g, i, &u, &v, &mu);
            std::cout << "term edge=" << u << "-" << v;
          }
          std::cout << " value=" << full(terms[static_cast<std::size_t>(i)])
                    << "\n";
        }
      }
      return kExitOk;
    }

    if (family_cmd->parsed()) {
      GraphGuard g;
      ft_status s = FT_OK;
      if (!custom_spec.empty()) {
        std::vector<double> memberships;
        std::stringstream ss(custom_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) memberships.push_back(std::stod(tok));
        s = ft_family_build_custom(family_from_name(family_name), family_n,
                                   memberships.data(),
                                   static_cast<int>(memberships.size()), &g.g);
      } else {
        s = ft_family_build(family_from_name(family_name), family_n, family_m,
                            &g.g);
      }
      if (s != FT_OK) return report_error(s);
      StringGuard text;
      if (ft_status s2 = ft_graph_format(g.g, &text.s)) return report_error(s2);
      return write_output(text.str(), family_out);
    }

    if (table1->parsed() || table2->parsed() || figures->parsed()) {
      StringGuard csv;
      ft_status s = table1->parsed()   ? ft_table1_csv(&csv.s)
                    : table2->parsed() ? ft_table2_csv(&csv.s)
                                       : ft_figures_csv(&csv.s);
      if (s != FT_OK) return report_error(s);
      return write_output(csv.str(), table_out);
    }

    if (search->parsed()) {
      opt_cfg.seed = seed_opt;
      StringGuard csv, report;
      if (ft_status s = ft_search(search_class.c_str(), search_n, search_m,
                                  index_from_name(search_index), search_alpha,
                                  search_dir.c_str(), &opt_cfg, &csv.s,
                                  &report.s))
        return report_error(s);
      int code = write_output(csv.str(), search_out);
      if (code != kExitOk) return code;
      if (!report_out.empty()) {
        code = write_output(report.str(), report_out);
        if (code != kExitOk) return code;
      } else if (!search_out.empty()) {
        std::cout << report.str();
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      int read_m_as_edges = reading_m == "edges" ? 1 : 0;
      if (reading_m != "m_mu" && reading_m != "edges") {
        std::cerr << "error: --reading-m must be m_mu or edges\n";
        return kExitUsage;
      }
      StringGuard csv, summary;
      ft_status s = FT_OK;
      if (verify_mode == "random") {
        s = ft_claim_verify_random(claim.c_str(), samples, n_min, n_max,
                                   verify_seed, verify_alpha, read_m_as_edges,
                                   &csv.s, &summary.s);
      } else if (verify_mode == "extremal") {
        s = ft_claim_verify_extremal(claim.c_str(), n_min, n_max, verify_m,
                                     verify_alpha, &opt_cfg, &csv.s, &summary.s);
      } else if (verify_mode == "sweep") {
        std::vector<int> orders;
        std::vector<double> sizes;
        std::stringstream so(sweep_orders), sm(sweep_sizes);
        std::string tok;
        while (std::getline(so, tok, ',')) orders.push_back(std::stoi(tok));
        while (std::getline(sm, tok, ',')) sizes.push_back(std::stod(tok));
        s = ft_claim_margin_sweep(claim.c_str(), family_from_name(sweep_family),
                                  orders.data(), static_cast<int>(orders.size()),
                                  sizes.data(), static_cast<int>(sizes.size()),
                                  read_m_as_edges, &csv.s);
      } else {
        std::cerr << "error: --mode must be random, extremal or sweep\n";
        return kExitUsage;
      }
      if (s != FT_OK) return report_error(s);
      // CSV goes to --output when given (sweep mode prints it to stdout
      // otherwise); the human summary always lands on stdout.
      if (!verify_out.empty()) {
        int code = write_output(csv.str(), verify_out);
        if (code != kExitOk) return code;
      } else if (summary.s == nullptr) {
        std::cout << csv.str();
      }
      if (summary.s != nullptr) std::cout << summary.str();
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
