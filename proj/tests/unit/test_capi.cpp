#include "support.hpp"

#include "pushpull/pushpull.h"

#include <string>

using testing_support::read_text;

namespace {

struct Text {
  char* s = nullptr;
  ~Text() { pp_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

}  // namespace

TEST_CASE("polytope handle lifecycle") {
  pp_polytope* p = nullptr;
  REQUIRE(pp_polytope_from_json(read_text("trapezoid.json").c_str(), &p) == PP_OK);
  size_t dim = 0, np = 0;
  CHECK(pp_polytope_dim(p, &dim) == PP_OK);
  CHECK(pp_polytope_param_count(p, &np) == PP_OK);
  CHECK(dim == 2);
  CHECK(np == 4);
  Text vol, at;
  CHECK(pp_polytope_volume(p, &vol.s) == PP_OK);
  CHECK(vol.str() == "a * b + 1/2 * b^2");
  CHECK(pp_polytope_volume_at_reference(p, &at.s) == PP_OK);
  CHECK(at.str() == "5/2");
  size_t h[4] = {0, 0, 0, 0}, len = 0;
  CHECK(pp_polytope_hilbert(p, h, 4, &len) == PP_OK);
  CHECK(len == 3);
  CHECK(h[1] == 2);
  CHECK(pp_polytope_hilbert(p, h, 2, &len) == PP_INPUT_ERROR);
  pp_polytope_free(p);
}

TEST_CASE("canonical JSON re-parses") {
  pp_polytope* p = nullptr;
  REQUIRE(pp_polytope_from_json(read_text("unit_cube.json").c_str(), &p) == PP_OK);
  Text out;
  REQUIRE(pp_polytope_canonical_json(p, &out.s) == PP_OK);
  pp_polytope* q = nullptr;
  CHECK(pp_polytope_from_json(out.s, &q) == PP_OK);
  Text vol;
  CHECK(pp_polytope_volume_at_reference(q, &vol.s) == PP_OK);
  CHECK(vol.str() == "1");
  pp_polytope_free(q);
  pp_polytope_free(p);
}

TEST_CASE("errors map to status codes") {
  pp_polytope* p = nullptr;
  CHECK(pp_polytope_from_json("{not json", &p) == PP_INPUT_ERROR);
  CHECK(std::string(pp_last_error()).find("json") != std::string::npos);
  CHECK(pp_polytope_from_json("{\"dim\": 2}", &p) == PP_INPUT_ERROR);
  CHECK(pp_polytope_from_json(nullptr, &p) == PP_INPUT_ERROR);
  CHECK(pp_polytope_from_json("{}", nullptr) == PP_INPUT_ERROR);
  Text out;
  CHECK(pp_fflv_report("{\"lambdas\": [0, 2, 1]}", &out.s) == PP_INPUT_ERROR);
  CHECK(pp_pushpull_verify("{\"base\": {}}", 0, &out.s) == PP_INPUT_ERROR);
}

TEST_CASE("push-pull report through the C interface") {
  Text out;
  CHECK(pp_pushpull_verify(read_text("trapezoid_truncation.json").c_str(), 0, &out.s) == PP_OK);
  auto j = pushpull::Json::parse(out.str());
  CHECK(j["report"]["passed"].get<bool>());
  CHECK(j.contains("polytope"));
}

TEST_CASE("reports are deterministic") {
  Text a, b;
  CHECK(pp_gk_report(read_text("gk_a2_121.json").c_str(), 5, 7, &a.s) == PP_OK);
  CHECK(pp_gk_report(read_text("gk_a2_121.json").c_str(), 5, 7, &b.s) == PP_OK);
  CHECK(a.str() == b.str());
}
