#include "fuzzytopo/fuzzytopo.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "claims.hpp"
#include "enumerate.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "indices.hpp"
#include "optimize.hpp"
#include "search.hpp"
#include "tables.hpp"

struct ft_graph {
  fuzzytopo::FuzzyGraph g;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ft_status fail(ft_status code, const std::string& message) {
  t_last_error = message;
  return code;
}

template <typename Fn>
ft_status guarded(Fn&& fn) {
  try {
    fn();
    return FT_OK;
  } catch (const fuzzytopo::ParseError& e) {
    return fail(FT_ERROR_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(FT_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(FT_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(FT_ERROR_INTERNAL, e.what());
  }
}

ft_status require(bool ok, const char* message) {
  return ok ? FT_OK : fail(FT_ERROR_INVALID_ARGUMENT, message);
}

fuzzytopo::IndexKind kind_of(ft_index index, double alpha) {
  switch (index) {
    case FT_INDEX_SOMBOR:
      return fuzzytopo::IndexKind::sombor();
    case FT_INDEX_SOMBOR_ALPHA:
      return fuzzytopo::IndexKind::sombor_alpha(alpha);
    case FT_INDEX_ZAGREB_M1:
      return fuzzytopo::IndexKind::zagreb_m1();
    case FT_INDEX_ZAGREB_M2:
      return fuzzytopo::IndexKind::zagreb_m2();
    case FT_INDEX_RANDIC:
      return fuzzytopo::IndexKind::randic();
    case FT_INDEX_NIRMALA:
      return fuzzytopo::IndexKind::nirmala();
  }
  throw std::invalid_argument("unknown index enum value");
}

fuzzytopo::Family family_of(ft_family family) {
  switch (family) {
    case FT_FAMILY_PATH:
      return fuzzytopo::Family::Path;
    case FT_FAMILY_STAR:
      return fuzzytopo::Family::Star;
    case FT_FAMILY_CYCLE:
      return fuzzytopo::Family::Cycle;
    case FT_FAMILY_COMPLETE:
      return fuzzytopo::Family::Complete;
  }
  throw std::invalid_argument("unknown family enum value");
}

fuzzytopo::OptimizerConfig optimizer_of(const ft_optimizer_config* cfg) {
  fuzzytopo::OptimizerConfig out;
  if (cfg != nullptr) {
    out.epsilon_min = cfg->epsilon_min;
    out.grid_resolution = cfg->grid_resolution;
    out.gradient_steps = cfg->gradient_steps;
    out.step_size = cfg->step_size;
    out.restarts = cfg->restarts;
    out.tolerance = cfg->tolerance;
    out.seed = cfg->seed;
  }
  return out;
}

}  // namespace

extern "C" {

const char* ft_version(void) { return "1.0.0"; }

const char* ft_last_error(void) { return t_last_error.c_str(); }

void ft_string_free(char* s) { std::free(s); }

ft_status ft_graph_new(int n, ft_graph** out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  if (ft_status s = require(n >= 0, "vertex count must be >= 0")) return s;
  return guarded([&] { *out = new ft_graph{fuzzytopo::FuzzyGraph(n)}; });
}

ft_status ft_graph_clone(const ft_graph* g, ft_graph** out) {
  if (ft_status s = require(g != nullptr && out != nullptr, "NULL argument"))
    return s;
  return guarded([&] { *out = new ft_graph{g->g}; });
}

void ft_graph_free(ft_graph* g) { delete g; }

ft_status ft_graph_add_edge(ft_graph* g, int u, int v, double mu) {
  if (ft_status s = require(g != nullptr, "graph is NULL")) return s;
  return guarded([&] { g->g.add_edge(u, v, mu); });
}

ft_status ft_graph_set_vertex_membership(ft_graph* g, int v, double nu) {
  if (ft_status s = require(g != nullptr, "graph is NULL")) return s;
  return guarded([&] { g->g.set_vertex_membership(v, nu); });
}

int ft_graph_order(const ft_graph* g) { return g == nullptr ? 0 : g->g.order(); }

int ft_graph_edge_count(const ft_graph* g) {
  return g == nullptr ? 0 : g->g.edge_count();
}

ft_status ft_graph_edge(const ft_graph* g, int index, int* u, int* v,
                        double* mu) {
  if (ft_status s = require(g != nullptr, "graph is NULL")) return s;
  if (ft_status s = require(index >= 0 && index < g->g.edge_count(),
                            "edge index out of range"))
    return s;
  const auto& e = g->g.edges()[static_cast<std::size_t>(index)];
  if (u != nullptr) *u = e.u;
  if (v != nullptr) *v = e.v;
  if (mu != nullptr) *mu = e.mu;
  return FT_OK;
}

ft_status ft_graph_vertex_membership(const ft_graph* g, int v, double* nu) {
  if (ft_status s = require(g != nullptr && nu != nullptr, "NULL argument"))
    return s;
  return guarded([&] { *nu = g->g.vertex_membership(v); });
}

ft_status ft_graph_validate(const ft_graph* g, int* violation_count,
                            char** violations) {
  if (ft_status s = require(g != nullptr, "graph is NULL")) return s;
  return guarded([&] {
    auto found = fuzzytopo::validate(g->g);
    if (violation_count != nullptr) {
      *violation_count = static_cast<int>(found.size());
    }
    if (violations != nullptr) {
      std::string text;
      for (const auto& v : found) {
        if (!text.empty()) text += '\n';
        text += v.message;
      }
      *violations = dup_string(text);
    }
  });
}

ft_status ft_graph_degrees(const ft_graph* g, double* degrees) {
  if (ft_status s = require(g != nullptr && degrees != nullptr, "NULL argument"))
    return s;
  return guarded([&] {
    auto profile = fuzzytopo::degree_profile(g->g);
    for (std::size_t i = 0; i < profile.degrees.size(); ++i) {
      degrees[i] = profile.degrees[i];
    }
  });
}

ft_status ft_graph_profile(const ft_graph* g, double* size, double* delta_min,
                           double* delta_max, double* edge_degree_max) {
  if (ft_status s = require(g != nullptr, "graph is NULL")) return s;
  return guarded([&] {
    auto profile = fuzzytopo::degree_profile(g->g);
    if (size != nullptr) *size = profile.size;
    if (delta_min != nullptr) *delta_min = profile.delta_min;
    if (delta_max != nullptr) *delta_max = profile.delta_max;
    if (edge_degree_max != nullptr) *edge_degree_max = profile.edge_degree_max;
  });
}

ft_status ft_graph_scale(const ft_graph* g, double t, ft_graph** out) {
  if (ft_status s = require(g != nullptr && out != nullptr, "NULL argument"))
    return s;
  return guarded(
      [&] { *out = new ft_graph{fuzzytopo::scale_memberships(g->g, t)}; });
}

ft_status ft_graph_crisp_support(const ft_graph* g, ft_graph** out) {
  if (ft_status s = require(g != nullptr && out != nullptr, "NULL argument"))
    return s;
  return guarded([&] { *out = new ft_graph{fuzzytopo::crisp_support(g->g)}; });
}

ft_status ft_graph_random(int n, double edge_probability,
                          unsigned long long seed, ft_graph** out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] {
    *out = new ft_graph{fuzzytopo::random_fuzzy_graph(n, edge_probability, seed)};
  });
}

ft_status ft_graph_parse(const char* text, ft_graph** out) {
  if (ft_status s = require(text != nullptr && out != nullptr, "NULL argument"))
    return s;
  return guarded([&] { *out = new ft_graph{fuzzytopo::parse_graph(text)}; });
}

ft_status ft_graph_parse_file(const char* path, ft_graph** out) {
  if (ft_status s = require(path != nullptr && out != nullptr, "NULL argument"))
    return s;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(FT_ERROR_IO, std::string("cannot open '") + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return guarded([&] { *out = new ft_graph{fuzzytopo::parse_graph(buf.str())}; });
}

ft_status ft_graph_format(const ft_graph* g, char** out) {
  if (ft_status s = require(g != nullptr && out != nullptr, "NULL argument"))
    return s;
  return guarded([&] { *out = dup_string(fuzzytopo::format_graph(g->g)); });
}

ft_status ft_index_value(const ft_graph* g, ft_index index, double alpha,
                         double* out) {
  if (ft_status s = require(g != nullptr && out != nullptr, "NULL argument"))
    return s;
  return guarded([&] { *out = fuzzytopo::index_value(g->g, kind_of(index, alpha)); });
}

ft_status ft_index_terms(const ft_graph* g, ft_index index, double alpha,
                         double* terms, int* count) {
  if (ft_status s = require(g != nullptr && terms != nullptr && count != nullptr,
                            "NULL argument"))
    return s;
  return guarded([&] {
    auto value = fuzzytopo::index_value_with_terms(g->g, kind_of(index, alpha));
    for (std::size_t i = 0; i < value.terms.size(); ++i) terms[i] = value.terms[i];
    *count = static_cast<int>(value.terms.size());
  });
}

ft_status ft_sombor_gradient(const ft_graph* g, double* gradient) {
  if (ft_status s = require(g != nullptr && gradient != nullptr, "NULL argument"))
    return s;
  return guarded([&] {
    auto grad = fuzzytopo::sombor_gradient(g->g);
    for (std::size_t i = 0; i < grad.size(); ++i) gradient[i] = grad[i];
  });
}

ft_status ft_family_build(ft_family family, int n, double m_mu,
                          ft_graph** out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] {
    fuzzytopo::FamilySpec spec;
    spec.family = family_of(family);
    spec.n = n;
    spec.m_mu = m_mu;
    *out = new ft_graph{fuzzytopo::build(spec)};
  });
}

ft_status ft_family_build_custom(ft_family family, int n,
                                 const double* memberships, int count,
                                 ft_graph** out) {
  if (ft_status s = require(out != nullptr && memberships != nullptr,
                            "NULL argument"))
    return s;
  if (ft_status s = require(count >= 0, "negative membership count")) return s;
  return guarded([&] {
    fuzzytopo::FamilySpec spec;
    spec.family = family_of(family);
    spec.n = n;
    spec.custom.assign(memberships, memberships + count);
    spec.m_mu = 0.0;
    for (double mu : spec.custom) spec.m_mu += mu;
    *out = new ft_graph{fuzzytopo::build(spec)};
  });
}

ft_status ft_family_closed_form(ft_family family, int n, double m_mu,
                                double* out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded(
      [&] { *out = fuzzytopo::closed_form_sombor(family_of(family), n, m_mu); });
}

ft_status ft_star_alpha_bound(int n, double p, double alpha, double* out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded(
      [&] { *out = fuzzytopo::closed_form_star_alpha(n, p, alpha); });
}

ft_status ft_count_trees(int n, int* out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] {
    *out = static_cast<int>(fuzzytopo::enumerate_trees(n).size());
  });
}

ft_status ft_count_unicyclic(int n, int* out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] {
    *out = static_cast<int>(fuzzytopo::enumerate_unicyclic(n).size());
  });
}

ft_status ft_count_connected(int n, int* out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] {
    *out = static_cast<int>(fuzzytopo::enumerate_connected(n).size());
  });
}

void ft_optimizer_config_init(ft_optimizer_config* cfg) {
  if (cfg == nullptr) return;
  fuzzytopo::OptimizerConfig defaults;
  cfg->epsilon_min = defaults.epsilon_min;
  cfg->grid_resolution = defaults.grid_resolution;
  cfg->gradient_steps = defaults.gradient_steps;
  cfg->step_size = defaults.step_size;
  cfg->restarts = defaults.restarts;
  cfg->tolerance = defaults.tolerance;
  cfg->seed = defaults.seed;
}

ft_status ft_search(const char* graph_class, int n, double m_mu,
                    ft_index index, double alpha, const char* direction,
                    const ft_optimizer_config* cfg, char** csv, char** report) {
  if (ft_status s = require(graph_class != nullptr && direction != nullptr,
                            "NULL argument"))
    return s;
  return guarded([&] {
    fuzzytopo::SearchTask task;
    task.graph_class = fuzzytopo::graph_class_from_string(graph_class);
    task.n = n;
    task.m_mu = m_mu;
    task.index = kind_of(index, alpha);
    task.direction = fuzzytopo::direction_from_string(direction);
    task.optimizer = optimizer_of(cfg);
    auto result = fuzzytopo::extremal_search(task);
    if (csv != nullptr) *csv = dup_string(result.to_csv());
    if (report != nullptr) *report = dup_string(result.to_report());
  });
}

const char* ft_claim_names(void) {
  static const std::string names = [] {
    std::string out;
    for (auto id : fuzzytopo::all_claims()) {
      if (!out.empty()) out += '\n';
      out += fuzzytopo::claim_name(id);
    }
    return out;
  }();
  return names.c_str();
}

ft_status ft_claim_check(const char* claim, const ft_graph* g, double alpha,
                         int read_m_as_edge_count, char** csv) {
  if (ft_status s = require(claim != nullptr && g != nullptr && csv != nullptr,
                            "NULL argument"))
    return s;
  return guarded([&] {
    fuzzytopo::ClaimOptions options;
    options.alpha = alpha;
    options.read_m_as_edge_count = read_m_as_edge_count != 0;
    std::pair<std::string, fuzzytopo::FuzzyGraph> instance{"instance", g->g};
    auto report = fuzzytopo::verify_instances(
        fuzzytopo::claim_from_string(claim), {&instance, 1}, options);
    *csv = dup_string(report.to_csv());
  });
}

ft_status ft_claim_verify_random(const char* claim, int samples, int n_min,
                                 int n_max, unsigned long long seed,
                                 double alpha, int read_m_as_edge_count,
                                 char** csv, char** summary) {
  if (ft_status s = require(claim != nullptr, "claim is NULL")) return s;
  return guarded([&] {
    fuzzytopo::ClaimOptions options;
    options.alpha = alpha;
    options.read_m_as_edge_count = read_m_as_edge_count != 0;
    auto report = fuzzytopo::verify_random(fuzzytopo::claim_from_string(claim),
                                           samples, n_min, n_max, seed, options);
    if (csv != nullptr) *csv = dup_string(report.to_csv());
    if (summary != nullptr) *summary = dup_string(report.summary());
  });
}

ft_status ft_claim_verify_extremal(const char* claim, int n_min, int n_max,
                                   double m_mu, double alpha,
                                   const ft_optimizer_config* cfg, char** csv,
                                   char** summary) {
  if (ft_status s = require(claim != nullptr, "claim is NULL")) return s;
  return guarded([&] {
    fuzzytopo::ClaimOptions options;
    options.alpha = alpha;
    auto report = fuzzytopo::verify_extremal(fuzzytopo::claim_from_string(claim),
                                             n_min, n_max, m_mu, options,
                                             optimizer_of(cfg));
    if (csv != nullptr) *csv = dup_string(report.to_csv());
    if (summary != nullptr) *summary = dup_string(report.summary());
  });
}

ft_status ft_claim_margin_sweep(const char* claim, ft_family family,
                                const int* orders, int order_count,
                                const double* sizes, int size_count,
                                int read_m_as_edge_count, char** csv) {
  if (ft_status s = require(claim != nullptr && orders != nullptr &&
                                sizes != nullptr && csv != nullptr,
                            "NULL argument"))
    return s;
  if (ft_status s = require(order_count > 0 && size_count > 0,
                            "empty sweep grid"))
    return s;
  return guarded([&] {
    fuzzytopo::ClaimOptions options;
    options.read_m_as_edge_count = read_m_as_edge_count != 0;
    *csv = dup_string(fuzzytopo::margin_sweep_csv(
        fuzzytopo::claim_from_string(claim), family_of(family),
        {orders, static_cast<std::size_t>(order_count)},
        {sizes, static_cast<std::size_t>(size_count)}, options));
  });
}

ft_status ft_table1_csv(char** out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] { *out = dup_string(fuzzytopo::tables::table1_csv()); });
}

ft_status ft_table2_csv(char** out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] { *out = dup_string(fuzzytopo::tables::table2_csv()); });
}

ft_status ft_figures_csv(char** out) {
  if (ft_status s = require(out != nullptr, "out is NULL")) return s;
  return guarded([&] { *out = dup_string(fuzzytopo::tables::figures_csv()); });
}

}  // extern "C"
