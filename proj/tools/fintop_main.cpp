// Command-line front end for the finite-space workbench. Talks to the core
// exclusively through the C API in fintop.h.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fintop.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int exit_code_for(fintop_status st) {
  switch (st) {
    case FINTOP_OK: return kExitOk;
    case FINTOP_ERR_BUDGET: return kExitBudget;
    case FINTOP_ERR_PARSE:
    case FINTOP_ERR_USAGE:
    case FINTOP_ERR_UNKNOWN_NAME:
    case FINTOP_ERR_VALIDATION: return kExitUsage;
    default: return kExitUsage;
  }
}

int report_error(fintop_status st) {
  std::cerr << "error: " << fintop_last_error() << "\n";
  return exit_code_for(st);
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  ok = true;
  return buf.str();
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { fintop_string_free(s); }
};

struct ModelGuard {
  fintop_model* m = nullptr;
  ~ModelGuard() { fintop_model_free(m); }
};

struct SpaceGuard {
  fintop_space* s = nullptr;
  ~SpaceGuard() { fintop_space_free(s); }
};

struct MapGuard {
  fintop_map* m = nullptr;
  ~MapGuard() { fintop_map_free(m); }
};

struct ContextGuard {
  fintop_context* c = nullptr;
  ~ContextGuard() { fintop_context_free(c); }
};

int load_model(const std::string& path, ModelGuard& model) {
  bool ok = false;
  std::string text = read_file(path, ok);
  if (!ok) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  fintop_status st = fintop_model_parse(text.c_str(), &model.m);
  if (st != FINTOP_OK) return report_error(st);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite topological space workbench"};
  app.require_subcommand(1);

  std::string file, format = "text";
  int n_max = 0, bound = 0;
  long long budget = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text or records");
    cmd->add_option("--bound", bound, "search bound for pushout/closure sweeps");
    cmd->add_option("--budget", budget, "largest constructible space, in points");
  };

  // check: parse and validate a model file
  auto* check = app.add_subcommand("check", "parse and validate a model file");
  check->add_option("file", file)->required();
  add_common(check);

  // pushout
  std::string map1, map2;
  auto* push = app.add_subcommand("pushout", "pushout of two maps with a shared domain");
  push->add_option("file", file)->required();
  push->add_option("map1", map1)->required();
  push->add_option("map2", map2)->required();
  add_common(push);

  // closure
  std::string ctx_name, map_name, op = "reg";
  auto* clo = app.add_subcommand("closure", "closure of an embedding in a context");
  clo->add_option("file", file)->required();
  clo->add_option("--context", ctx_name, "context declared in the model")->required();
  clo->add_option("--map", map_name, "embedding declared in the model")->required();
  clo->add_option("--operator", op, "reg or ort");
  add_common(clo);

  // inj
  std::string space_name;
  bool orthogonal = false;
  auto* inj = app.add_subcommand("inj", "injectivity of a space along a map");
  inj->add_option("file", file)->required();
  inj->add_option("--space", space_name, "the object tested for injectivity")->required();
  inj->add_option("--map", map_name, "the map tested along")->required();
  inj->add_flag("--orthogonal", orthogonal, "test orthogonality instead");
  add_common(inj);

  // monad
  int carrier = 0;
  auto* mon = app.add_subcommand("monad", "dualization monad sizes and laws");
  mon->add_option("file", file)->required();
  mon->add_option("--space", space_name, "the dualizing object")->required();
  mon->add_option("--n", carrier, "carrier size")->required();
  add_common(mon);

  // verify
  std::string suite;
  bool list_suites = false;
  auto* ver = app.add_subcommand("verify", "run a named verification suite");
  ver->add_option("--suite", suite, "suite name");
  ver->add_flag("--list", list_suites, "list available suites");
  ver->add_option("--n-max", n_max, "sweep size bound");
  add_common(ver);

  // export-dot
  auto* dot = app.add_subcommand("export-dot", "specialization order as a DOT graph");
  dot->add_option("file", file)->required();
  dot->add_option("space", space_name)->required();
  add_common(dot);

  CLI11_PARSE(app, argc, argv);

  if (check->parsed()) {
    ModelGuard model;
    int rc = load_model(file, model);
    if (rc != kExitOk) return rc;
    std::cout << "ok: " << fintop_model_space_count(model.m) << " spaces, "
              << fintop_model_map_count(model.m) << " maps, "
              << fintop_model_context_count(model.m) << " contexts\n";
    return kExitOk;
  }

  if (push->parsed()) {
    ModelGuard model;
    int rc = load_model(file, model);
    if (rc != kExitOk) return rc;
    MapGuard f, g;
    fintop_status st = fintop_model_map(model.m, map1.c_str(), &f.m);
    if (st != FINTOP_OK) return report_error(st);
    st = fintop_model_map(model.m, map2.c_str(), &g.m);
    if (st != FINTOP_OK) return report_error(st);
    SpaceGuard w;
    MapGuard left, right;
    st = fintop_pushout(f.m, g.m, &w.s, &left.m, &right.m);
    if (st != FINTOP_OK) return report_error(st);
    StringGuard ws, ls, rs;
    fintop_space_render(w.s, "W", &ws.s);
    fintop_map_render(left.m, "left", &ls.s);
    fintop_map_render(right.m, "right", &rs.s);
    std::cout << ws.s << "\n" << ls.s << "\n" << rs.s << "\n";
    return kExitOk;
  }

  if (clo->parsed()) {
    ModelGuard model;
    int rc = load_model(file, model);
    if (rc != kExitOk) return rc;
    ContextGuard ctx;
    fintop_status st = fintop_model_context(model.m, ctx_name.c_str(), &ctx.c);
    if (st != FINTOP_OK) return report_error(st);
    MapGuard m;
    st = fintop_model_map(model.m, map_name.c_str(), &m.m);
    if (st != FINTOP_OK) return report_error(st);
    MapGuard closure, dense;
    int is_dense = 0, is_closed = 0;
    st = (op == "ort")
             ? fintop_orthogonal_closure(ctx.c, m.m, &closure.m, &dense.m, &is_dense, &is_closed)
             : fintop_regular_closure(ctx.c, m.m, &closure.m, &dense.m, &is_dense, &is_closed);
    if (st != FINTOP_OK) return report_error(st);
    StringGuard cs;
    fintop_map_render(closure.m, "closure", &cs.s);
    std::cout << cs.s << "\n"
              << "dense=" << (is_dense ? "true" : "false")
              << " closed=" << (is_closed ? "true" : "false") << "\n";
    return kExitOk;
  }

  if (inj->parsed()) {
    ModelGuard model;
    int rc = load_model(file, model);
    if (rc != kExitOk) return rc;
    SpaceGuard a;
    fintop_status st = fintop_model_space(model.m, space_name.c_str(), &a.s);
    if (st != FINTOP_OK) return report_error(st);
    MapGuard m;
    st = fintop_model_map(model.m, map_name.c_str(), &m.m);
    if (st != FINTOP_OK) return report_error(st);
    int verdict = 0;
    st = orthogonal ? fintop_orthogonal_along(a.s, m.m, &verdict)
                    : fintop_injective_along(a.s, m.m, &verdict);
    if (st != FINTOP_OK) return report_error(st);
    std::cout << (orthogonal ? "orthogonal" : "injective") << "=" << (verdict ? "true" : "false")
              << "\n";
    return kExitOk;
  }

  if (mon->parsed()) {
    ModelGuard model;
    int rc = load_model(file, model);
    if (rc != kExitOk) return rc;
    SpaceGuard a;
    fintop_status st = fintop_model_space(model.m, space_name.c_str(), &a.s);
    if (st != FINTOP_OK) return report_error(st);
    long long t = 0, tt = 0;
    st = fintop_monad_counts(a.s, carrier, budget, &t, &tt);
    if (st != FINTOP_OK) return report_error(st);
    StringGuard rep;
    int ok = 0;
    st = fintop_monad_verify(a.s, carrier, budget, &rep.s, &ok);
    if (st != FINTOP_OK) return report_error(st);
    std::cout << "T(" << carrier << ")=" << t << " T(T(" << carrier << "))=" << tt << "\n"
              << rep.s << "laws=" << (ok ? "pass" : "fail") << "\n";
    return ok ? kExitOk : kExitFailures;
  }

  if (ver->parsed()) {
    if (list_suites) {
      for (int i = 0; i < fintop_suite_count(); ++i) std::cout << fintop_suite_name(i) << "\n";
      return kExitOk;
    }
    if (suite.empty()) {
      std::cerr << "error: --suite NAME or --list required\n";
      return kExitUsage;
    }
    fintop_report* raw = nullptr;
    fintop_status st = fintop_suite_run(suite.c_str(), n_max, bound, budget, &raw);
    if (st != FINTOP_OK) return report_error(st);
    StringGuard text;
    fintop_status rst = fintop_report_render(raw, format.c_str(), &text.s);
    if (rst != FINTOP_OK) {
      fintop_report_free(raw);
      return report_error(rst);
    }
    std::cout << text.s;
    int pass = 0, failcount = 0, skipped = 0;
    fintop_report_counts(raw, &pass, &failcount, &skipped);
    fintop_report_free(raw);
    return failcount == 0 ? kExitOk : kExitFailures;
  }

  if (dot->parsed()) {
    ModelGuard model;
    int rc = load_model(file, model);
    if (rc != kExitOk) return rc;
    SpaceGuard s;
    fintop_status st = fintop_model_space(model.m, space_name.c_str(), &s.s);
    if (st != FINTOP_OK) return report_error(st);
    StringGuard out;
    st = fintop_export_dot(s.s, space_name.c_str(), &out.s);
    if (st != FINTOP_OK) return report_error(st);
    std::cout << out.s;
    return kExitOk;
  }

  return kExitUsage;
}
