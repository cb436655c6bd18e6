#include "fintop.h"

#include <cstring>
#include <string>

#include "fintop/cat.hpp"
#include "fintop/closure.hpp"
#include "fintop/hom.hpp"
#include "fintop/model.hpp"
#include "fintop/monad.hpp"
#include "fintop/report.hpp"
#include "fintop/suites.hpp"

using namespace fintop;

struct fintop_space {
  FinSpace v;
};
struct fintop_map {
  CMap v;
};
struct fintop_model {
  Model v;
};
struct fintop_context {
  Subcategory v;
};
struct fintop_report {
  SuiteReport v;
};

namespace {

thread_local std::string g_last_error;

fintop_status status_of(const Error& e) {
  switch (e.code()) {
    case Errc::syntax_error:
      return FINTOP_ERR_PARSE;
    case Errc::missing_empty_or_full:
    case Errc::not_closed_under_union:
    case Errc::not_closed_under_intersection:
    case Errc::not_reflexive:
    case Errc::not_transitive:
    case Errc::continuity_violation:
    case Errc::invalid_argument:
      return FINTOP_ERR_VALIDATION;
    case Errc::size_budget_exceeded:
      return FINTOP_ERR_BUDGET;
    case Errc::bound_exceeded:
      return FINTOP_ERR_BOUND;
    case Errc::not_an_embedding:
      return FINTOP_ERR_NOT_EMBEDDING;
    case Errc::not_parallel:
    case Errc::not_composable:
      return FINTOP_ERR_NOT_PARALLEL;
    case Errc::not_in_subcategory:
      return FINTOP_ERR_NOT_IN_SUBCATEGORY;
    case Errc::unknown_space:
    case Errc::unknown_map:
    case Errc::unknown_context:
    case Errc::unknown_suite:
      return FINTOP_ERR_UNKNOWN_NAME;
    case Errc::internal_error:
      return FINTOP_ERR_INTERNAL;
  }
  return FINTOP_ERR_INTERNAL;
}

template <typename F>
fintop_status guarded(F&& fn) {
  try {
    fn();
    return FINTOP_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FINTOP_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fintop_status usage_error(const char* what) {
  g_last_error = what;
  return FINTOP_ERR_USAGE;
}

}  // namespace

extern "C" {

const char* fintop_version(void) { return "1.0.0"; }

const char* fintop_last_error(void) { return g_last_error.c_str(); }

void fintop_string_free(char* s) { delete[] s; }

/* models ------------------------------------------------------------ */

fintop_status fintop_model_parse(const char* text, fintop_model** out) {
  if (!text || !out) return usage_error("null argument");
  return guarded([&] { *out = new fintop_model{parse_model(text)}; });
}

void fintop_model_free(fintop_model* m) { delete m; }

fintop_status fintop_model_serialize(const fintop_model* m, char** out) {
  if (!m || !out) return usage_error("null argument");
  return guarded([&] { *out = dup_string(serialize(m->v)); });
}

fintop_status fintop_model_space(const fintop_model* m, const char* name, fintop_space** out) {
  if (!m || !name || !out) return usage_error("null argument");
  return guarded([&] {
    const NamedSpace* s = m->v.find_space(name);
    if (!s) fail(Errc::unknown_space, std::string("no space named '") + name + "'");
    *out = new fintop_space{s->space};
  });
}

fintop_status fintop_model_map(const fintop_model* m, const char* name, fintop_map** out) {
  if (!m || !name || !out) return usage_error("null argument");
  return guarded([&] {
    const NamedMap* f = m->v.find_map(name);
    if (!f) fail(Errc::unknown_map, std::string("no map named '") + name + "'");
    *out = new fintop_map{f->map};
  });
}

fintop_status fintop_model_context(const fintop_model* m, const char* name, fintop_context** out) {
  if (!m || !name || !out) return usage_error("null argument");
  return guarded([&] {
    const NamedContext* c = m->v.find_context(name);
    if (!c) fail(Errc::unknown_context, std::string("no context named '") + name + "'");
    *out = new fintop_context{c->ctx};
  });
}

int fintop_model_space_count(const fintop_model* m) { return m ? int(m->v.spaces.size()) : 0; }
int fintop_model_map_count(const fintop_model* m) { return m ? int(m->v.maps.size()) : 0; }
int fintop_model_context_count(const fintop_model* m) { return m ? int(m->v.contexts.size()) : 0; }

/* spaces ------------------------------------------------------------ */

fintop_status fintop_space_new(int n_points, int n_opens, const int* open_offsets,
                               const int* open_points, fintop_space** out) {
  if (!out || (n_opens > 0 && (!open_offsets || !open_points))) return usage_error("null argument");
  return guarded([&] {
    std::vector<Mask> opens;
    for (int i = 0; i < n_opens; ++i) {
      Mask m = 0;
      for (int j = open_offsets[i]; j < open_offsets[i + 1]; ++j) {
        if (open_points[j] < 0 || open_points[j] >= 64)
          fail(Errc::invalid_argument, "point out of range");
        m |= Mask(1) << open_points[j];
      }
      opens.push_back(m);
    }
    *out = new fintop_space{FinSpace::from_opens(n_points, opens)};
  });
}

void fintop_space_free(fintop_space* s) { delete s; }

int fintop_space_points(const fintop_space* s) { return s ? s->v.points() : -1; }

int fintop_space_leq(const fintop_space* s, int x, int y) {
  if (!s || x < 0 || y < 0 || x >= s->v.points() || y >= s->v.points()) return -1;
  return s->v.leq(x, y) ? 1 : 0;
}

fintop_status fintop_space_opens_count(const fintop_space* s, long long* out) {
  if (!s || !out) return usage_error("null argument");
  return guarded([&] { *out = (long long)s->v.opens().size(); });
}

fintop_status fintop_space_classify(const fintop_space* s, int* t0, int* discrete, int* indiscrete,
                                    int* zero_dimensional) {
  if (!s) return usage_error("null argument");
  return guarded([&] {
    SpaceClass c = s->v.classify();
    if (t0) *t0 = c.t0;
    if (discrete) *discrete = c.discrete;
    if (indiscrete) *indiscrete = c.indiscrete;
    if (zero_dimensional) *zero_dimensional = c.zero_dimensional;
  });
}

fintop_status fintop_space_canonical(const fintop_space* s, fintop_space** out) {
  if (!s || !out) return usage_error("null argument");
  return guarded([&] { *out = new fintop_space{canonical_form(s->v)}; });
}

int fintop_space_equal(const fintop_space* a, const fintop_space* b) {
  if (!a || !b) return -1;
  return a->v == b->v ? 1 : 0;
}

fintop_status fintop_space_render(const fintop_space* s, const char* name, char** out) {
  if (!s || !name || !out) return usage_error("null argument");
  return guarded([&] { *out = dup_string(serialize_space(name, s->v)); });
}

fintop_status fintop_export_dot(const fintop_space* s, const char* name, char** out) {
  if (!s || !name || !out) return usage_error("null argument");
  return guarded([&] { *out = dup_string(export_dot(s->v, name)); });
}

/* maps -------------------------------------------------------------- */

fintop_status fintop_map_new(const fintop_space* dom, const fintop_space* cod, const int* table,
                             fintop_map** out) {
  if (!dom || !cod || !out || (dom->v.points() > 0 && !table)) return usage_error("null argument");
  return guarded([&] {
    std::vector<Pt> t(table, table + dom->v.points());
    *out = new fintop_map{CMap(dom->v, cod->v, std::move(t))};
  });
}

void fintop_map_free(fintop_map* m) { delete m; }

int fintop_map_apply(const fintop_map* m, int point) {
  if (!m || point < 0 || point >= m->v.dom().points()) return -1;
  return m->v(point);
}

int fintop_map_is_embedding(const fintop_map* m) { return m ? (is_embedding(m->v) ? 1 : 0) : -1; }

fintop_status fintop_map_render(const fintop_map* m, const char* name, char** out) {
  if (!m || !name || !out) return usage_error("null argument");
  return guarded([&] { *out = dup_string(serialize_map(name, "dom", "cod", m->v)); });
}

fintop_status fintop_map_dom(const fintop_map* m, fintop_space** out) {
  if (!m || !out) return usage_error("null argument");
  return guarded([&] { *out = new fintop_space{m->v.dom()}; });
}

fintop_status fintop_map_cod(const fintop_map* m, fintop_space** out) {
  if (!m || !out) return usage_error("null argument");
  return guarded([&] { *out = new fintop_space{m->v.cod()}; });
}

/* contexts ----------------------------------------------------------- */

fintop_status fintop_context_builtin(const char* name, fintop_context** out) {
  if (!name || !out) return usage_error("null argument");
  return guarded([&] { *out = new fintop_context{builtin_context(name)}; });
}

fintop_status fintop_context_hull(const fintop_space* a, fintop_context** out) {
  if (!a || !out) return usage_error("null argument");
  return guarded([&] { *out = new fintop_context{Subcategory::hull_of(a->v)}; });
}

void fintop_context_free(fintop_context* c) { delete c; }

/* categorical operations ---------------------------------------------- */

fintop_status fintop_pushout(const fintop_map* f, const fintop_map* g, fintop_space** w,
                             fintop_map** left, fintop_map** right) {
  if (!f || !g) return usage_error("null argument");
  return guarded([&] {
    Cospan c = pushout(f->v, g->v);
    if (w) *w = new fintop_space{c.left.cod()};
    if (left) *left = new fintop_map{c.left};
    if (right) *right = new fintop_map{c.right};
  });
}

namespace {

fintop_status closure_common(const fintop_context* ctx, const fintop_map* m, bool regular,
                             fintop_map** closure, fintop_map** dense_part, int* is_dense,
                             int* is_closed) {
  if (!ctx || !m) return usage_error("null argument");
  return guarded([&] {
    ClosureResult r = regular ? regular_closure(ctx->v, m->v) : orthogonal_closure(ctx->v, m->v);
    if (closure) *closure = new fintop_map{r.closure};
    if (dense_part) *dense_part = new fintop_map{r.dense_part};
    if (is_dense) *is_dense = r.is_dense;
    if (is_closed) *is_closed = r.is_closed;
  });
}

}  // namespace

fintop_status fintop_regular_closure(const fintop_context* ctx, const fintop_map* m,
                                     fintop_map** closure, fintop_map** dense_part, int* is_dense,
                                     int* is_closed) {
  return closure_common(ctx, m, true, closure, dense_part, is_dense, is_closed);
}

fintop_status fintop_orthogonal_closure(const fintop_context* ctx, const fintop_map* m,
                                        fintop_map** closure, fintop_map** dense_part,
                                        int* is_dense, int* is_closed) {
  return closure_common(ctx, m, false, closure, dense_part, is_dense, is_closed);
}

fintop_status fintop_injective_along(const fintop_space* a, const fintop_map* f, int* out) {
  if (!a || !f || !out) return usage_error("null argument");
  return guarded([&] { *out = injective_along(a->v, f->v) ? 1 : 0; });
}

fintop_status fintop_orthogonal_along(const fintop_space* a, const fintop_map* f, int* out) {
  if (!a || !f || !out) return usage_error("null argument");
  return guarded([&] { *out = orthogonal_along(a->v, f->v) ? 1 : 0; });
}

namespace {

Budget budget_with_points(long long points) {
  Budget b;
  if (points > 0) b.max_points = int(points);
  return b;
}

}  // namespace

fintop_status fintop_monad_counts(const fintop_space* a, int n, long long budget_points,
                                  long long* t_size, long long* tt_size) {
  if (!a) return usage_error("null argument");
  return guarded([&] {
    MonadInstance mi = monad_at(a->v, n, budget_with_points(budget_points));
    if (t_size) *t_size = (long long)mi.t_elements.size();
    if (tt_size) *tt_size = (long long)mi.mult.size();
  });
}

fintop_status fintop_monad_verify(const fintop_space* a, int n, long long budget_points,
                                  char** report_text, int* ok) {
  if (!a) return usage_error("null argument");
  return guarded([&] {
    Budget budget = budget_with_points(budget_points);
    MonadInstance mi = monad_at(a->v, n, budget);
    MonadReport rep = verify_monad(mi, budget);
    if (ok) *ok = rep.clean() ? 1 : 0;
    if (report_text) {
      std::string out = rep.subject + "\n";
      for (const auto& law : rep.laws) {
        out += "law " + law.law + " [" + law.method + "] checked=" + std::to_string(law.checked) +
               " violations=" + std::to_string(law.violations.size()) +
               (law.skipped ? " skipped" : "") + "\n";
      }
      *report_text = dup_string(out);
    }
  });
}

/* suites -------------------------------------------------------------- */

int fintop_suite_count(void) { return int(suite_names().size()); }

const char* fintop_suite_name(int index) {
  static thread_local std::string name;
  auto names = suite_names();
  if (index < 0 || index >= int(names.size())) return nullptr;
  name = names[std::size_t(index)];
  return name.c_str();
}

fintop_status fintop_suite_run(const char* name, int n_max, int bound, long long budget_points,
                               fintop_report** out) {
  if (!name || !out) return usage_error("null argument");
  return guarded([&] {
    SuiteOptions opts;
    opts.n_max = n_max;
    opts.bound = bound;
    if (budget_points > 0) opts.budget.max_points = int(budget_points);
    *out = new fintop_report{run_suite(name, opts)};
  });
}

void fintop_report_free(fintop_report* r) { delete r; }

fintop_status fintop_report_render(const fintop_report* r, const char* format, char** out) {
  if (!r || !format || !out) return usage_error("null argument");
  return guarded([&] { *out = dup_string(render(r->v, format)); });
}

void fintop_report_counts(const fintop_report* r, int* pass, int* fail, int* skipped) {
  if (!r) return;
  if (pass) *pass = int(r->v.passed());
  if (fail) *fail = int(r->v.failed());
  if (skipped) *skipped = int(r->v.skipped());
}

}  // extern "C"
