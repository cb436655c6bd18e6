#include <doctest.h>

#include <cstring>
#include <string>

#include "fintop.h"

namespace {

const char* kModel =
    "space S { points 2; opens {} {1} {0 1} }\n"
    "space P { points 1; opens {} {0} }\n"
    "map m : P -> S { 0->0 }\n"
    "context C = builtin(sob)\n";

struct Str {
  char* s = nullptr;
  ~Str() { fintop_string_free(s); }
};

}  // namespace

TEST_CASE("version and error plumbing") {
  CHECK(fintop_version() != nullptr);
  fintop_model* m = nullptr;
  CHECK(fintop_model_parse("space X {", &m) == FINTOP_ERR_PARSE);
  CHECK(std::strlen(fintop_last_error()) > 0);
  CHECK(fintop_model_parse(nullptr, &m) == FINTOP_ERR_USAGE);
}

TEST_CASE("model access") {
  fintop_model* m = nullptr;
  REQUIRE(fintop_model_parse(kModel, &m) == FINTOP_OK);
  CHECK(fintop_model_space_count(m) == 2);
  CHECK(fintop_model_map_count(m) == 1);
  CHECK(fintop_model_context_count(m) == 1);

  Str text;
  REQUIRE(fintop_model_serialize(m, &text.s) == FINTOP_OK);
  fintop_model* again = nullptr;
  REQUIRE(fintop_model_parse(text.s, &again) == FINTOP_OK);
  CHECK(fintop_model_space_count(again) == 2);
  fintop_model_free(again);

  fintop_space* s = nullptr;
  REQUIRE(fintop_model_space(m, "S", &s) == FINTOP_OK);
  CHECK(fintop_space_points(s) == 2);
  CHECK(fintop_space_leq(s, 0, 1) == 1);
  CHECK(fintop_space_leq(s, 1, 0) == 0);
  long long opens = 0;
  CHECK(fintop_space_opens_count(s, &opens) == FINTOP_OK);
  CHECK(opens == 3);
  int t0 = 0, disc = 0, ind = 0, zd = 0;
  CHECK(fintop_space_classify(s, &t0, &disc, &ind, &zd) == FINTOP_OK);
  CHECK(t0 == 1);
  CHECK(zd == 0);

  fintop_space* unknown = nullptr;
  CHECK(fintop_model_space(m, "nope", &unknown) == FINTOP_ERR_UNKNOWN_NAME);

  fintop_space_free(s);
  fintop_model_free(m);
}

TEST_CASE("space and map construction") {
  // the Sierpinski space out of flattened opens
  int offsets[] = {0, 0, 1, 3};
  int points[] = {1, 0, 1};
  fintop_space* s = nullptr;
  REQUIRE(fintop_space_new(2, 3, offsets, points, &s) == FINTOP_OK);
  CHECK(fintop_space_points(s) == 2);

  // validation failures surface as status codes
  int bad_offsets[] = {0, 1};
  int bad_points[] = {0};
  fintop_space* bad = nullptr;
  CHECK(fintop_space_new(2, 1, bad_offsets, bad_points, &bad) == FINTOP_ERR_VALIDATION);

  fintop_space* canon = nullptr;
  REQUIRE(fintop_space_canonical(s, &canon) == FINTOP_OK);
  fintop_space* canon2 = nullptr;
  REQUIRE(fintop_space_canonical(canon, &canon2) == FINTOP_OK);
  CHECK(fintop_space_equal(canon, canon2) == 1);
  fintop_space_free(canon2);

  int tab[] = {0};
  fintop_space* pt = nullptr;
  int pt_offsets[] = {0, 0, 1};
  int pt_points[] = {0};
  REQUIRE(fintop_space_new(1, 2, pt_offsets, pt_points, &pt) == FINTOP_OK);
  fintop_map* incl = nullptr;
  REQUIRE(fintop_map_new(pt, s, tab, &incl) == FINTOP_OK);
  CHECK(fintop_map_is_embedding(incl) == 1);
  CHECK(fintop_map_apply(incl, 0) == 0);

  Str render;
  CHECK(fintop_map_render(incl, "m", &render.s) == FINTOP_OK);
  CHECK(std::string(render.s).find("map m") == 0);

  // pushing the inclusion out along itself: the cokernel pair carrier
  fintop_space* w = nullptr;
  fintop_map *left = nullptr, *right = nullptr;
  REQUIRE(fintop_pushout(incl, incl, &w, &left, &right) == FINTOP_OK);
  CHECK(fintop_space_points(w) == 3);

  // closure of the inclusion in the sober context
  fintop_context* sob = nullptr;
  REQUIRE(fintop_context_builtin("sob", &sob) == FINTOP_OK);
  fintop_map *closure = nullptr, *dense = nullptr;
  int is_dense = -1, is_closed = -1;
  REQUIRE(fintop_regular_closure(sob, incl, &closure, &dense, &is_dense, &is_closed) == FINTOP_OK);
  CHECK(is_closed == 1);
  CHECK(is_dense == 0);

  int verdict = -1;
  REQUIRE(fintop_injective_along(s, incl, &verdict) == FINTOP_OK);
  CHECK(verdict == 1);

  long long t = 0, tt = 0;
  REQUIRE(fintop_monad_counts(s, 1, 0, &t, &tt) == FINTOP_OK);
  CHECK(t == 3);
  CHECK(tt == 20);
  Str monad_report;
  int ok = 0;
  REQUIRE(fintop_monad_verify(s, 1, 0, &monad_report.s, &ok) == FINTOP_OK);
  CHECK(ok == 1);
  // a starved budget rejects the construction instead of attempting it
  CHECK(fintop_monad_counts(s, 2, 16, &t, &tt) == FINTOP_ERR_BUDGET);

  fintop_context* hull = nullptr;
  REQUIRE(fintop_context_hull(s, &hull) == FINTOP_OK);
  fintop_context_free(hull);

  Str dot;
  REQUIRE(fintop_export_dot(s, "S", &dot.s) == FINTOP_OK);
  CHECK(std::string(dot.s).find("digraph \"S\"") == 0);

  fintop_map_free(closure);
  fintop_map_free(dense);
  fintop_context_free(sob);
  fintop_map_free(left);
  fintop_map_free(right);
  fintop_space_free(w);
  fintop_map_free(incl);
  fintop_space_free(pt);
  fintop_space_free(canon);
  fintop_space_free(s);
}

TEST_CASE("suite access") {
  CHECK(fintop_suite_count() >= 12);
  CHECK(fintop_suite_name(0) != nullptr);
  CHECK(fintop_suite_name(-1) == nullptr);

  fintop_report* rep = nullptr;
  REQUIRE(fintop_suite_run("enumeration-golden-counts", 3, 0, 0, &rep) == FINTOP_OK);
  int pass = 0, fail = 0, skipped = 0;
  fintop_report_counts(rep, &pass, &fail, &skipped);
  CHECK(pass > 0);
  CHECK(fail == 0);
  Str text, records;
  CHECK(fintop_report_render(rep, "text", &text.s) == FINTOP_OK);
  CHECK(std::string(text.s).find("suite enumeration-golden-counts") == 0);
  CHECK(fintop_report_render(rep, "records", &records.s) == FINTOP_OK);
  CHECK(std::string(records.s).find("{\"") == 0);
  CHECK(fintop_report_render(rep, "yaml", &text.s) == FINTOP_ERR_VALIDATION);
  fintop_report_free(rep);

  fintop_report* none = nullptr;
  CHECK(fintop_suite_run("no-such-suite", 0, 0, 0, &none) == FINTOP_ERR_UNKNOWN_NAME);
}
